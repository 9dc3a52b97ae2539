"""Linear fractional maps over Q and the y-class witness ring.

A map z -> (az+b)/(cz+d) is stored projectively: integer entries with
gcd 1 and the first nonzero entry positive, so equality is plain tuple
equality.  The order-3 generator is y: z -> (z-1)/z.

Witnesses (c, d) stand for the matrix d*I + c*Y, i.e. the map
z -> ((c+d)z - c)/(cz + d).  Because Y^2 = Y - I these matrices form the
commutative ring Q[Y], which has no zero divisors (t^2 - t + 1 has no
rational root), so composition and inversion stay inside the family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact_arith import DomainError, RationalLike, as_rational


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ExtendedRational = Union[Fraction, _Infinity]


def _projective_normalize(entries) -> tuple[int, ...]:
    qs = [as_rational(e) for e in entries]
    if all(q == 0 for q in qs):
        raise DomainError("all entries are zero")
    den = math.lcm(*(q.denominator for q in qs))
    ints = [int(q * den) for q in qs]
    g = math.gcd(*ints)
    first = next(v for v in ints if v != 0)
    if first < 0:
        g = -g
    return tuple(v // g for v in ints)


class MoebiusMap:
    """z -> (az+b)/(cz+d) with nonzero determinant, up to scale."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: RationalLike, b: RationalLike, c: RationalLike, d: RationalLike):
        a, b, c, d = _projective_normalize((a, b, c, d))
        if a * d - b * c == 0:
            raise DomainError(f"singular map ({a},{b},{c},{d}): determinant is zero")
        self.a, self.b, self.c, self.d = a, b, c, d

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __eq__(self, other) -> bool:
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"MoebiusMap{self.entries}"

    def __str__(self) -> str:
        return f"(({self.a})z+({self.b}))/(({self.c})z+({self.d}))"

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        return compose(self, other)

    def __call__(self, z) -> ExtendedRational:
        return apply_ext(self, z)


IDENTITY = MoebiusMap(1, 0, 0, 1)


def y_generator() -> MoebiusMap:
    return MoebiusMap(1, -1, 1, 0)


def compose(f: MoebiusMap, g: MoebiusMap) -> MoebiusMap:
    """The map z -> f(g(z))."""
    a1, b1, c1, d1 = f.entries
    a2, b2, c2, d2 = g.entries
    return MoebiusMap(
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
    )


def inverse(f: MoebiusMap) -> MoebiusMap:
    a, b, c, d = f.entries
    return MoebiusMap(d, -b, -c, a)


def apply_ext(f: MoebiusMap, z) -> ExtendedRational:
    """Evaluate ``f`` on Q plus the point at infinity.

    f(INF) = a/c (INF when c = 0); a pole of f maps to INF.
    """
    a, b, c, d = f.entries
    if z is INF:
        return INF if c == 0 else Fraction(a, c)
    z = as_rational(z)
    den = c * z + d
    if den == 0:
        return INF
    return (a * z + b) / den


def is_rational_detector(a: RationalLike, b: RationalLike, c: RationalLike, d: RationalLike) -> bool:
    """True when (a*alpha+b)/(c*alpha+d) is a rational number, i.e. ad = bc."""
    a, b, c, d = (as_rational(v) for v in (a, b, c, d))
    if a == b == c == d == 0:
        raise DomainError("all entries are zero")
    return a * d - b * c == 0


@dataclass(frozen=True)
class ClassWitness:
    """Coprime integer pair (c, d) != (0, 0), with d > 0 or (d == 0 and c > 0).

    Passing an unnormalized pair is allowed; it is rescaled on construction.
    """

    c: int
    d: int

    def __post_init__(self):
        c, d = int(self.c), int(self.d)
        if c == 0 and d == 0:
            raise DomainError("witness (0, 0) is not allowed")
        g = math.gcd(c, d)
        if d < 0 or (d == 0 and c < 0):
            g = -g
        object.__setattr__(self, "c", c // g)
        object.__setattr__(self, "d", d // g)

    @classmethod
    def parse(cls, text: str) -> "ClassWitness":
        c, sep, d = text.replace("−", "-").partition(":")
        if not sep:
            raise ValueError(f"witness must look like 'c:d', got {text!r}")
        return cls(int(c), int(d))

    @property
    def height(self) -> int:
        return max(abs(self.c), abs(self.d))

    def __str__(self) -> str:
        return f"{self.c}:{self.d}"


IDENTITY_WITNESS = ClassWitness(0, 1)


def witness_to_map(w: ClassWitness) -> MoebiusMap:
    """d*I + c*Y, i.e. z -> ((c+d)z - c)/(cz + d)."""
    return MoebiusMap(w.c + w.d, -w.c, w.c, w.d)


def witness_det(w: ClassWitness) -> int:
    # c^2 + cd + d^2 is positive definite
    return w.c * w.c + w.c * w.d + w.d * w.d


def witness_compose(w1: ClassWitness, w2: ClassWitness) -> ClassWitness:
    """Product (d1 + c1 Y)(d2 + c2 Y) reduced with Y^2 = Y - I."""
    c = w1.c * w2.d + w2.c * w1.d + w1.c * w2.c
    d = w1.d * w2.d - w1.c * w2.c
    assert (c, d) != (0, 0), "zero divisor in Q[Y]"
    return ClassWitness(c, d)


def witness_inverse(w: ClassWitness) -> ClassWitness:
    # adjugate of d*I + c*Y is (c+d)*I - c*Y
    return ClassWitness(-w.c, w.c + w.d)


def witnesses_up_to(height: int):
    """Normalized witnesses with max(|c|, |d|) <= height.

    Ordered by height, then |c|, |d|, nonnegative c first.
    """
    out = []
    for c in range(-height, height + 1):
        for d in range(0, height + 1):
            if (c, d) == (0, 0) or math.gcd(c, d) != 1:
                continue
            if d == 0 and c < 0:
                continue
            out.append(ClassWitness(c, d))
    out.sort(key=lambda w: (w.height, abs(w.c), abs(w.d), w.c < 0))
    return out
