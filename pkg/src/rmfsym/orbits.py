"""Orbits of argument assignments under cyclic shifts or all permutations.

The cyclic-shift group partitions the p**n assignments into orbits
("cycles").  Each orbit is named by its representative, the
lexicographically smallest member, and orbits are ranked 0,1,2,... in
lexicographic order of their representatives.  A function constant on
every cyclic orbit is rotation symmetric and can be stored compactly as
one value per rank; a function constant on every orbit of the full
symmetric group (equivalently, on every multiset of digits) is
symmetric and compresses further, to one value per sorted digit tuple.

Rotation machinery is defined for n > 2 only; two cyclically distinct
orderings of the same digits first appear there.
"""

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from .domain import ValueVector, assignment_of, check_assignment, check_radix, index_of
from .errors import DomainError, NotCompressibleError, UnsupportedArityError

__all__ = [
    "ROTATION",
    "FULL_SYMMETRIC",
    "SymmetryClass",
    "Orbit",
    "OrbitTable",
    "CompactVector",
    "rotate",
    "orbit_of",
    "build_orbit_table",
    "build_symmetric_table",
    "orbit_count",
    "kappa",
    "classify",
    "compress",
    "expand",
    "elementary_function",
]

# Compact-vector kinds.
ROTATION = "rotation"
FULL_SYMMETRIC = "full-symmetric"


class SymmetryClass(enum.Enum):
    """Strongest symmetry a function exhibits.

    SYMMETRIC functions are also rotation symmetric;
    STRICTLY_ROTATION_SYMMETRIC means constant on cyclic orbits but not
    on all permutations.
    """

    SYMMETRIC = "symmetric"
    STRICTLY_ROTATION_SYMMETRIC = "rotation-symmetric"
    NONE = "none"


@dataclass(frozen=True)
class Orbit:
    """One orbit: its representative and all members.

    For the cyclic action the members are listed as successive left
    shifts of the representative; for the full symmetric group they are
    listed lexicographically.
    """

    representative: tuple
    members: tuple

    def __len__(self):
        return len(self.members)


class OrbitTable:
    """The orbit partition of all assignments for one (p, n, kind).

    ``orbits`` is ordered by representative, so the position of an
    orbit is its rank.  ``rank_of`` maps every flat assignment index to
    the rank of its orbit; ``representative_indices`` holds the flat
    index of each representative, in rank order.  Immutable once built;
    construction is cached per (p, n, kind).
    """

    __slots__ = ("p", "n", "kind", "orbits", "rank_of", "representative_indices")

    def __init__(self, p, n, kind, orbits, rank_of):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "orbits", tuple(orbits))
        object.__setattr__(self, "rank_of", tuple(rank_of))
        object.__setattr__(
            self,
            "representative_indices",
            tuple(index_of(o.representative, p) for o in self.orbits),
        )

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __len__(self):
        return len(self.orbits)

    def rank_of_assignment(self, digits):
        """Rank of the orbit containing the given assignment."""
        return self.rank_of[index_of(tuple(digits), self.p)]

    def representatives(self):
        return [o.representative for o in self.orbits]


def rotate(digits, shift):
    """Left cyclic shift: the digit at position k moves to k - shift mod n."""
    a = tuple(digits)
    n = len(a)
    if n == 0:
        raise DomainError("assignment needs at least one digit")
    s = shift % n
    return a[s:] + a[:s]


def _cycle_members(start):
    """Successive left shifts of ``start`` until it recurs."""
    members = [start]
    cur = rotate(start, 1)
    while cur != start:
        members.append(cur)
        cur = rotate(cur, 1)
    return members


def orbit_of(digits, p):
    """The cyclic orbit of one assignment, anchored at its representative."""
    a = tuple(digits)
    check_assignment(a, p)
    rep = min(_cycle_members(a))
    return Orbit(rep, tuple(_cycle_members(rep)))


def _check_rotation_arity(n):
    if n <= 2:
        raise UnsupportedArityError(
            f"rotation symmetry needs more than two arguments, got n={n}"
        )


@lru_cache(maxsize=None)
def build_orbit_table(p, n):
    """All cyclic orbits for (p, n), ranked by representative.

    Scanning flat indices in order makes every first-unseen assignment
    the lexicographic minimum of its orbit, so representatives come out
    already sorted.
    """
    check_radix(p)
    _check_rotation_arity(n)
    size = p**n
    rank_of = [-1] * size
    orbits = []
    for i in range(size):
        if rank_of[i] >= 0:
            continue
        rep = assignment_of(i, p, n)
        members = _cycle_members(rep)
        rank = len(orbits)
        for m in members:
            rank_of[index_of(m, p)] = rank
        orbits.append(Orbit(rep, tuple(members)))
    return OrbitTable(p, n, ROTATION, orbits, rank_of)


@lru_cache(maxsize=None)
def build_symmetric_table(p, n):
    """Orbits of the full symmetric group: one per multiset of digits.

    Representatives are the sorted (non-decreasing) tuples; members are
    listed lexicographically.  The orbit count is kappa(p, n).
    """
    check_radix(p)
    if n < 1:
        raise DomainError(f"argument count must be >= 1, got {n}")
    size = p**n
    groups = {}
    for i in range(size):
        a = assignment_of(i, p, n)
        groups.setdefault(tuple(sorted(a)), []).append(a)
    rank_of = [-1] * size
    orbits = []
    for rep in sorted(groups):
        members = groups[rep]
        rank = len(orbits)
        for m in members:
            rank_of[index_of(m, p)] = rank
        orbits.append(Orbit(rep, tuple(members)))
    return OrbitTable(p, n, FULL_SYMMETRIC, orbits, rank_of)


def orbit_count(p, n):
    """Number of cyclic orbits of (Z_p)^n, i.e. the rotation compact length."""
    return len(build_orbit_table(p, n))


def kappa(p, n):
    """Length of the fully symmetric compact vector: C(n + p - 1, n)."""
    check_radix(p)
    if n < 1:
        raise DomainError(f"argument count must be >= 1, got {n}")
    return math.comb(n + p - 1, n)


@dataclass(frozen=True)
class CompactVector:
    """One function value per orbit, in rank order.

    ``kind`` tells which group the ranks refer to: ROTATION (cyclic
    orbits) or FULL_SYMMETRIC (multiset classes, length kappa).
    """

    p: int
    n: int
    kind: str
    values: tuple

    def __post_init__(self):
        check_radix(self.p)
        if self.kind not in (ROTATION, FULL_SYMMETRIC):
            raise DomainError(f"unknown compact kind {self.kind!r}")
        if self.kind == ROTATION:
            _check_rotation_arity(self.n)
            expected = orbit_count(self.p, self.n)
        else:
            if self.n < 1:
                raise DomainError(f"argument count must be >= 1, got {self.n}")
            expected = kappa(self.p, self.n)
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != expected:
            raise DomainError(
                f"expected {expected} entries for p={self.p}, n={self.n}, "
                f"kind={self.kind}, got {len(values)}"
            )
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.p:
                raise DomainError(f"value {v!r} is outside 0..{self.p - 1}")

    def __len__(self):
        return len(self.values)


def _table_for(c):
    if c.kind == ROTATION:
        return build_orbit_table(c.p, c.n)
    return build_symmetric_table(c.p, c.n)


def classify(f):
    """Strongest symmetry class of a truth table.

    For n <= 2 only SYMMETRIC and NONE can be reported, since rotation
    symmetry is not defined there.
    """
    if not isinstance(f, ValueVector):
        raise DomainError(f"expected a ValueVector, got {type(f).__name__}")
    if _constant_on(f, build_symmetric_table(f.p, f.n)):
        return SymmetryClass.SYMMETRIC
    if f.n > 2 and _constant_on(f, build_orbit_table(f.p, f.n)):
        return SymmetryClass.STRICTLY_ROTATION_SYMMETRIC
    return SymmetryClass.NONE


def _constant_on(f, table):
    return _first_violation(f, table) is None


def _first_violation(f, table):
    """Representative of the first orbit where f is not constant, else None."""
    values = f.values
    reps = table.representative_indices
    for i, r in enumerate(table.rank_of):
        if values[i] != values[reps[r]]:
            return table.orbits[r].representative
    return None


def compress(f, table):
    """Compact vector of f with respect to an orbit table.

    f must be constant on every orbit of the table; the entry at rank r
    is f's value on orbit r.
    """
    if f.p != table.p or f.n != table.n:
        raise DomainError(
            f"table is for p={table.p}, n={table.n}; "
            f"function has p={f.p}, n={f.n}"
        )
    bad = _first_violation(f, table)
    if bad is not None:
        raise NotCompressibleError(
            f"function is not constant on the orbit of {bad}", representative=bad
        )
    entries = tuple(f.values[i] for i in table.representative_indices)
    return CompactVector(f.p, f.n, table.kind, entries)


def expand(c, table=None):
    """Full truth table of a compact vector: f(a) = c[rank_of(a)]."""
    if table is None:
        table = _table_for(c)
    if (c.p, c.n, c.kind) != (table.p, table.n, table.kind):
        raise DomainError(
            f"compact vector (p={c.p}, n={c.n}, kind={c.kind}) does not match "
            f"table (p={table.p}, n={table.n}, kind={table.kind})"
        )
    values = tuple(c.values[r] for r in table.rank_of)
    return ValueVector(c.p, c.n, values)


def elementary_function(p, n, k):
    """Indicator of cyclic orbit k: value 1 on its members, 0 elsewhere."""
    table = build_orbit_table(p, n)
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k < len(table):
        raise DomainError(
            f"rank {k!r} is outside 0..{len(table) - 1} for p={p}, n={n}"
        )
    values = tuple(1 if r == k else 0 for r in table.rank_of)
    return ValueVector(p, n, values)
