"""The Reed-Muller-Fourier transform over Z_p.

The basic p x p matrix has entries (-1)**j * C(i, j) mod p.  It is
lower triangular, has an all-ones first column, and is its own inverse
mod p.  The n-argument transform is its n-fold Kronecker power; the
fast path never materializes that matrix but applies the basic matrix
along each mixed-radix axis in turn, costing O(n * p**(n+1))
multiply-adds instead of O(p**(2n)).

Binomial coefficients are produced by the additive Pascal recurrence
carried out mod p, which stays valid when p is composite (modular
inverses need not exist there).
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _backend
from .domain import ValueVector, check_radix
from .errors import DomainError, MatrixSizeError

__all__ = [
    "DENSE_SIZE_CAP",
    "RmfMatrix",
    "ArgPermutation",
    "basic_matrix",
    "transform_matrix",
    "rmf_transform",
    "apply_arg_permutation",
]

# Largest p**n for which transform_matrix will materialize the dense
# matrix by default; callers may raise it explicitly.
DENSE_SIZE_CAP = 4096


@lru_cache(maxsize=None)
def _basic_rows(p):
    """Rows of the basic matrix as nested tuples, entries already mod p."""
    check_radix(p)
    pascal = [1] + [0] * (p - 1)
    rows = []
    for i in range(p):
        if i > 0:
            pascal = [
                (pascal[j] + (pascal[j - 1] if j > 0 else 0)) % p
                for j in range(p)
            ]
        rows.append(
            tuple(
                pascal[j] if j % 2 == 0 else (-pascal[j]) % p for j in range(p)
            )
        )
    return tuple(rows)


@lru_cache(maxsize=None)
def _basic_flat(p):
    """Row-major flattened basic matrix, for the kernels."""
    return [e for row in _basic_rows(p) for e in row]


class RmfMatrix:
    """Dense p**n x p**n transform matrix mod p.

    ``rows`` is a read-only int64 array.  Lower triangular; first
    column all ones; for n = 1 the diagonal entry (i, i) is (-1)**i
    mod p.
    """

    __slots__ = ("p", "n", "rows")

    def __init__(self, p, n, rows):
        check_radix(p)
        arr = np.asarray(rows, dtype=np.int64)
        size = p**n
        if arr.shape != (size, size):
            raise DomainError(
                f"expected a {size}x{size} matrix for p={p}, n={n}, "
                f"got shape {arr.shape}"
            )
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", arr)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        if not isinstance(other, RmfMatrix):
            return NotImplemented
        return (
            self.p == other.p
            and self.n == other.n
            and np.array_equal(self.rows, other.rows)
        )

    def __repr__(self):
        return f"RmfMatrix(p={self.p}, n={self.n})"

    def row_lists(self):
        """Rows as plain nested lists (JSON-friendly)."""
        return self.rows.tolist()

    def apply(self, f):
        """Dense matrix-vector product mod p; the slow reference route."""
        if f.p != self.p or f.n != self.n:
            raise DomainError(
                f"matrix is for p={self.p}, n={self.n}; "
                f"vector has p={f.p}, n={f.n}"
            )
        out = (self.rows @ np.asarray(f.values, dtype=np.int64)) % self.p
        return ValueVector(f.p, f.n, tuple(int(v) for v in out))


def basic_matrix(p):
    """The p x p basic transform matrix."""
    return RmfMatrix(p, 1, _basic_rows(p))


def transform_matrix(p, n, max_size=DENSE_SIZE_CAP):
    """n-fold Kronecker power of the basic matrix, reduced mod p.

    Refuses to materialize anything larger than max_size rows; the fast
    rmf_transform covers those sizes without the dense matrix.
    """
    check_radix(p)
    if n < 1:
        raise DomainError(f"argument count must be >= 1, got {n}")
    if p**n > max_size:
        raise MatrixSizeError(
            f"p**n = {p ** n} exceeds the dense cap {max_size}; "
            "use rmf_transform, which never builds the matrix"
        )
    base = np.array(_basic_rows(p), dtype=np.int64)
    rows = base
    for _ in range(n - 1):
        rows = np.kron(rows, base) % p
    return RmfMatrix(p, n, rows)


def rmf_transform(f):
    """Spectrum of a truth table; self-inverse, computed by the fast path.

    Applies the basic matrix along each of the n axes in order (first
    axis first; the result does not depend on the order).
    """
    if not isinstance(f, ValueVector):
        raise DomainError(f"expected a ValueVector, got {type(f).__name__}")
    out = _backend.rmf_apply(list(f.values), f.p, f.n, _basic_flat(f.p))
    return ValueVector(f.p, f.n, tuple(out))


@dataclass(frozen=True)
class ArgPermutation:
    """A bijection on the n argument positions (0-based).

    mapping[k] is the position whose digit lands at position k, so
    applying the permutation to an assignment a yields
    (a[mapping[0]], ..., a[mapping[n-1]]).
    """

    n: int
    mapping: tuple

    def __post_init__(self):
        mapping = tuple(self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if self.n < 1:
            raise DomainError(f"argument count must be >= 1, got {self.n}")
        if sorted(mapping) != list(range(self.n)):
            raise DomainError(
                f"mapping {mapping!r} is not a bijection on 0..{self.n - 1}"
            )

    @classmethod
    def identity(cls, n):
        return cls(n, tuple(range(n)))

    @classmethod
    def transposition(cls, n, i, j):
        """Swap positions i and j, fix the rest."""
        mapping = list(range(n))
        mapping[i], mapping[j] = mapping[j], mapping[i]
        return cls(n, tuple(mapping))

    @classmethod
    def cyclic_shift(cls, n, shift):
        """The permutation matching rotate(a, shift)."""
        return cls(n, tuple((k + shift) % n for k in range(n)))

    def apply_to(self, digits):
        a = tuple(digits)
        if len(a) != self.n:
            raise DomainError(
                f"assignment has {len(a)} digits, permutation expects {self.n}"
            )
        return tuple(a[self.mapping[k]] for k in range(self.n))

    def adjacent_transpositions(self):
        """Positions k of adjacent swaps (k, k+1) that compose to this
        permutation when applied to a function in list order.

        A diagnostic: any permutation acts as a cascade of neighbour
        swaps, so each commutation fact reduces to the two-argument
        case.  Obtained by bubble-sorting the mapping to the identity.
        """
        remaining = list(self.mapping)
        swaps = []
        changed = True
        while changed:
            changed = False
            for k in range(self.n - 1):
                if remaining[k] > remaining[k + 1]:
                    remaining[k], remaining[k + 1] = remaining[k + 1], remaining[k]
                    swaps.append(k)
                    changed = True
        return tuple(swaps)


def apply_arg_permutation(f, perm):
    """Truth table of the function with permuted arguments.

    g's value at assignment a equals f's value at perm.apply_to(a).
    With a cyclic shift this leaves rotation-symmetric functions
    unchanged.
    """
    if not isinstance(f, ValueVector):
        raise DomainError(f"expected a ValueVector, got {type(f).__name__}")
    if perm.n != f.n:
        raise DomainError(
            f"permutation is on {perm.n} positions, function has {f.n}"
        )
    # Axis shuffle on the reshaped table; transpose wants the inverse of
    # mapping to realize out[a] = in[perm.apply_to(a)].
    arr = np.asarray(f.values, dtype=np.int64).reshape((f.p,) * f.n)
    inverse = np.argsort(perm.mapping)
    g = np.transpose(arr, axes=inverse).reshape(-1)
    return ValueVector(f.p, f.n, tuple(int(v) for v in g))
