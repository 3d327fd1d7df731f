"""Radix-p domain arithmetic: assignments, flat indexing, value vectors.

A p-valued function of n arguments is stored as a flat vector of p**n
values in mixed-radix order with the first argument most significant.
Printing the vector as p rows of p**(n-1) columns therefore gives the
usual map whose rows are indexed by x1 and whose columns run over
x2..xn.

All arithmetic is exact integer arithmetic mod p; the radix does not
have to be prime.
"""

from dataclasses import dataclass

from .errors import DomainError, ParseError

__all__ = [
    "ValueVector",
    "check_radix",
    "check_assignment",
    "index_of",
    "assignment_of",
    "parse_values",
    "serialize_values",
    "parse_value_vector",
    "serialize_value_vector",
    "map_rows",
    "value_vector_to_json",
    "value_vector_from_json",
]


def check_radix(p):
    """Raise DomainError unless p is an integer radix >= 2."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise DomainError(f"radix must be an integer >= 2, got {p!r}")


def check_assignment(digits, p):
    """Raise DomainError unless every digit lies in 0..p-1 and n >= 1."""
    check_radix(p)
    if len(digits) < 1:
        raise DomainError("assignment needs at least one digit")
    for k, d in enumerate(digits):
        if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < p:
            raise DomainError(
                f"digit {d!r} at position {k} is outside 0..{p - 1}"
            )


def index_of(digits, p):
    """Flat index of an assignment, first digit most significant."""
    check_assignment(digits, p)
    i = 0
    for d in digits:
        i = i * p + d
    return i


def assignment_of(i, p, n):
    """Inverse of index_of: the digit tuple encoding flat index i."""
    check_radix(p)
    if n < 1:
        raise DomainError(f"argument count must be >= 1, got {n}")
    size = p**n
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < size:
        raise DomainError(f"index {i!r} is outside 0..{size - 1}")
    digits = [0] * n
    for k in range(n - 1, -1, -1):
        digits[k] = i % p
        i //= p
    return tuple(digits)


@dataclass(frozen=True)
class ValueVector:
    """Full truth table of a p-valued function of n arguments.

    values[i] is the function value at assignment_of(i, p, n).
    Immutable; safe to share across threads.
    """

    p: int
    n: int
    values: tuple

    def __post_init__(self):
        check_radix(self.p)
        if self.n < 1:
            raise DomainError(f"argument count must be >= 1, got {self.n}")
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.p**self.n:
            raise DomainError(
                f"expected {self.p ** self.n} values for p={self.p}, "
                f"n={self.n}, got {len(values)}"
            )
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.p:
                raise DomainError(f"value {v!r} is outside 0..{self.p - 1}")

    def __len__(self):
        return len(self.values)

    def value_at(self, digits):
        """Function value at an assignment given as a digit sequence."""
        digits = tuple(digits)
        if len(digits) != self.n:
            raise DomainError(
                f"assignment has {len(digits)} digits, expected {self.n}"
            )
        return self.values[index_of(digits, self.p)]


def parse_values(text, p, count):
    """Parse a string of ``count`` values, each in 0..p-1.

    For p <= 10 the values are contiguous digit characters (whitespace
    is ignored); for larger radices they are comma-separated integers.
    """
    check_radix(p)
    out = []
    if p <= 10:
        for pos, ch in enumerate(text):
            if ch.isspace():
                continue
            if not ch.isdigit():
                raise ParseError(
                    f"invalid character {ch!r} at position {pos}", position=pos
                )
            d = int(ch)
            if d >= p:
                raise ParseError(
                    f"digit {d} at position {pos} is outside 0..{p - 1}",
                    position=pos,
                )
            out.append(d)
    else:
        stripped = text.strip()
        tokens = stripped.split(",") if stripped else []
        for pos, token in enumerate(tokens):
            token = token.strip()
            try:
                d = int(token)
            except ValueError:
                raise ParseError(
                    f"invalid token {token!r} at position {pos}", position=pos
                ) from None
            if not 0 <= d < p:
                raise ParseError(
                    f"value {d} at position {pos} is outside 0..{p - 1}",
                    position=pos,
                )
            out.append(d)
    if len(out) != count:
        raise ParseError(f"expected {count} values, got {len(out)}")
    return tuple(out)


def serialize_values(values, p):
    """Inverse of parse_values: contiguous digits for p <= 10, else CSV."""
    check_radix(p)
    if p <= 10:
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def parse_value_vector(text, p, n):
    """Parse a full truth table (p**n values) into a ValueVector."""
    if n < 1:
        raise DomainError(f"argument count must be >= 1, got {n}")
    return ValueVector(p, n, parse_values(text, p, p**n))


def serialize_value_vector(vv):
    """Text form of a ValueVector; parse_value_vector inverts it."""
    return serialize_values(vv.values, vv.p)


def map_rows(vv):
    """The truth table as p rows (x1 value) of p**(n-1) columns (x2..xn)."""
    width = vv.p ** (vv.n - 1)
    return [
        list(vv.values[r * width : (r + 1) * width]) for r in range(vv.p)
    ]


def value_vector_to_json(vv):
    """JSON-ready dict: {"p": ..., "n": ..., "values": [...]}."""
    return {"p": vv.p, "n": vv.n, "values": list(vv.values)}


def value_vector_from_json(obj):
    """Inverse of value_vector_to_json; extra keys are ignored."""
    try:
        p, n, values = obj["p"], obj["n"], obj["values"]
    except (KeyError, TypeError):
        raise ParseError("value-vector JSON needs keys p, n, values") from None
    if not isinstance(values, (list, tuple)):
        raise ParseError("values must be a list")
    return ValueVector(p, n, tuple(values))
