"""Spectra computed entirely in the compact (rank-indexed) domain.

Column k of the spectrum basis is the compact spectrum of the
elementary function of rank k.  Because spectra of rotation-symmetric
functions are again rotation symmetric, these columns are well defined,
and the spectrum of any rotation-compact vector c is the mod-p weighted
sum of columns, sum_j c[j] * column[j].  The same weighted sum applied
to a compact spectrum returns the original compact vector (the
transform is self-inverse), so one operation serves both directions.

A basis depends only on (p, n); it is memoized in-process and can be
persisted to a small JSON file so command-line calls never recompute
it.
"""

import json
import os
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import DomainError, ParseError
from .orbits import (
    ROTATION,
    CompactVector,
    build_orbit_table,
    classify,
    compress,
    elementary_function,
    expand,
)
from .transform import rmf_transform

__all__ = [
    "SpectrumBasis",
    "build_basis",
    "compact_spectrum",
    "sum_and_classify",
    "basis_to_json",
    "basis_from_json",
    "load_or_build_basis",
]


class SpectrumBasis:
    """Compact spectra of all elementary functions for one (p, n).

    ``columns[k]`` is a rotation-kind CompactVector; ``matrix`` stacks
    them as columns of a read-only int64 array for fast weighted sums.
    """

    __slots__ = ("p", "n", "columns", "matrix")

    def __init__(self, p, n, columns):
        columns = tuple(columns)
        size = len(build_orbit_table(p, n))
        if len(columns) != size:
            raise DomainError(
                f"expected {size} columns for p={p}, n={n}, got {len(columns)}"
            )
        for c in columns:
            if (c.p, c.n, c.kind) != (p, n, ROTATION):
                raise DomainError("basis columns must be rotation compacts")
        matrix = np.array([c.values for c in columns], dtype=np.int64).T
        matrix.flags.writeable = False
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __len__(self):
        return len(self.columns)

    def __eq__(self, other):
        if not isinstance(other, SpectrumBasis):
            return NotImplemented
        return (self.p, self.n) == (other.p, other.n) and self.columns == other.columns


@lru_cache(maxsize=None)
def build_basis(p, n):
    """Compute the basis once per (p, n): transform and compress each
    elementary function."""
    table = build_orbit_table(p, n)
    columns = tuple(
        compress(rmf_transform(elementary_function(p, n, k)), table)
        for k in range(len(table))
    )
    return SpectrumBasis(p, n, columns)


def compact_spectrum(c, basis):
    """Compact spectrum of a rotation-compact vector via the basis.

    Equals compress(rmf_transform(expand(c))) but never leaves the
    compact domain.  Applying it twice returns c.
    """
    if not isinstance(c, CompactVector) or c.kind != ROTATION:
        raise DomainError("compact_spectrum needs a rotation-kind CompactVector")
    if (c.p, c.n) != (basis.p, basis.n):
        raise DomainError(
            f"compact vector (p={c.p}, n={c.n}) does not match "
            f"basis (p={basis.p}, n={basis.n})"
        )
    s = (basis.matrix @ np.asarray(c.values, dtype=np.int64)) % c.p
    return CompactVector(c.p, c.n, ROTATION, tuple(int(v) for v in s))


def sum_and_classify(a, b):
    """Entrywise mod-p sum of two rotation compacts, plus the symmetry
    class of the summed function.

    The sum of two rotation-symmetric functions is always at least
    rotation symmetric, and collapses to fully symmetric when paired
    orbits over the same digit multiset end up with equal values.
    """
    for c in (a, b):
        if not isinstance(c, CompactVector) or c.kind != ROTATION:
            raise DomainError("sum_and_classify needs rotation-kind CompactVectors")
    if (a.p, a.n) != (b.p, b.n):
        raise DomainError(
            f"operands disagree: (p={a.p}, n={a.n}) vs (p={b.p}, n={b.n})"
        )
    total = CompactVector(
        a.p, a.n, ROTATION, tuple((x + y) % a.p for x, y in zip(a.values, b.values))
    )
    return total, classify(expand(total))


_SCHEMA = "mvf-rmf/1"


def basis_to_json(basis):
    """JSON-ready dict with columns in rank order."""
    return {
        "schema": _SCHEMA,
        "p": basis.p,
        "n": basis.n,
        "columns": [list(c.values) for c in basis.columns],
    }


def basis_from_json(obj):
    """Inverse of basis_to_json; a missing or foreign schema tag is rejected."""
    try:
        p, n, columns = obj["p"], obj["n"], obj["columns"]
    except (KeyError, TypeError):
        raise ParseError("basis JSON needs keys p, n, columns") from None
    schema = obj.get("schema", _SCHEMA)
    if schema != _SCHEMA:
        raise ParseError(f"unsupported schema {schema!r}")
    cols = tuple(CompactVector(p, n, ROTATION, tuple(col)) for col in columns)
    return SpectrumBasis(p, n, cols)


def default_cache_dir():
    """Cache directory: RMFSYM_CACHE_DIR if set, else ~/.cache/rmfsym."""
    env = os.environ.get("RMFSYM_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "rmfsym"


def load_or_build_basis(p, n, cache_dir=None):
    """Basis for (p, n), served from a JSON cache file when possible.

    An unreadable or stale cache file is silently rebuilt and
    overwritten; passing cache_dir=None skips the disk entirely (the
    in-process memo still applies).
    """
    if cache_dir is None:
        return build_basis(p, n)
    cache_dir = Path(cache_dir)
    path = cache_dir / f"basis-p{p}-n{n}.json"
    if path.exists():
        try:
            with open(path, encoding="utf-8") as fh:
                cached = basis_from_json(json.load(fh))
            if (cached.p, cached.n) == (p, n):
                return cached
        except (OSError, ValueError):
            pass
    basis = build_basis(p, n)
    cache_dir.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".json.tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(basis_to_json(basis), fh)
    os.replace(tmp, path)
    return basis
