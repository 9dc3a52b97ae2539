"""Arithmetic in Q(alpha) = Q[x]/(x^3 - k x^2 + (k-3) x + 1).

Elements are coefficient triples over the power basis {1, alpha, alpha^2},
always fully reduced.  Minimal polynomials come from two independent
routes: the characteristic polynomial of the multiplication operator
(:func:`minpoly_oracle`, the ground truth) and the explicit rational
expressions in a, b, c, d, k for an element (a alpha + b)/(c alpha + d)
(:func:`minpoly_closed_form`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Union

from .exact_arith import (
    DomainError,
    RationalLike,
    RatPolynomial,
    as_rational,
    format_rational,
    poly_gcdex,
    rational_roots,
)
from .moebius import MoebiusMap


def family_poly(k: RationalLike) -> RatPolynomial:
    """x^3 - k x^2 + (k-3) x + 1."""
    k = as_rational(k)
    return RatPolynomial([1, k - 3, -k, 1])


class ConsistencyError(AssertionError):
    """A closed-form formula disagreed with its independent oracle."""


@dataclass(frozen=True)
class FieldSpec:
    """The cubic field cut out by the family polynomial at parameter ``k``.

    Raises DomainError when the polynomial has a rational root, since the
    quotient ring is then not a field.
    """

    k: Fraction
    poly: RatPolynomial = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        k = as_rational(self.k)
        object.__setattr__(self, "k", k)
        f = family_poly(k)
        object.__setattr__(self, "poly", f)
        if rational_roots(f):
            raise DomainError(f"k = {k} is degenerate: x^3 - kx^2 + (k-3)x + 1 has a rational root")

    def element(self, x0: RationalLike = 0, x1: RationalLike = 0, x2: RationalLike = 0) -> "FieldElement":
        return FieldElement(self, (x0, x1, x2))

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    @property
    def alpha(self) -> "FieldElement":
        return self.element(0, 1)

    @cached_property
    def sigma_alpha(self) -> "FieldElement":
        # image of alpha under the order-3 automorphism, (alpha - 1)/alpha
        return (self.alpha - 1) * self.alpha.inv()

    def reduce(self, p: RatPolynomial) -> "FieldElement":
        r = p % self.poly
        return FieldElement(self, (r[0], r[1], r[2]))

    def parse(self, text: str) -> "FieldElement":
        return parse_element(self, text)


class FieldElement:
    """x0 + x1*alpha + x2*alpha^2 in a fixed :class:`FieldSpec`."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        cs = tuple(as_rational(c) for c in coeffs)
        if len(cs) != 3:
            raise ValueError("a field element needs exactly three coefficients")
        self.spec = spec
        self.coeffs = cs

    def as_poly(self) -> RatPolynomial:
        return RatPolynomial(self.coeffs)

    def _lift(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise DomainError("elements belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.spec, (other, 0, 0))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, (x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, (-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.spec.reduce(self.as_poly() * other.as_poly())

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out, base = self.spec.one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.coeffs == (Fraction(other), 0, 0)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.spec, self.coeffs))

    def __repr__(self) -> str:
        return f"FieldElement(k={self.spec.k}, {format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return self.coeffs[1] == 0 and self.coeffs[2] == 0

    def inv(self) -> "FieldElement":
        """Multiplicative inverse by extended Euclid against the modulus."""
        if self.is_zero():
            raise DomainError("zero has no inverse")
        s, _, g = poly_gcdex(self.as_poly(), self.spec.poly)
        assert g == RatPolynomial([1]), "modulus is not irreducible"
        return self.spec.reduce(s)

    def conj(self) -> "FieldElement":
        """Image under the automorphism alpha -> (alpha - 1)/alpha."""
        x0, x1, x2 = self.coeffs
        s = self.spec.sigma_alpha
        return x0 + x1 * s + x2 * (s * s)

    def mult_matrix(self) -> list[list[Fraction]]:
        """Matrix of v -> self*v on {1, alpha, alpha^2}; column j is self*alpha^j."""
        cols = [(self * FieldElement(self.spec, e)).coeffs for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        return [[cols[j][i] for j in range(3)] for i in range(3)]

    def minpoly(self) -> RatPolynomial:
        return minpoly_oracle(self)

    def trace(self) -> Fraction:
        return -minpoly_oracle(self)[2]

    def norm(self) -> Fraction:
        return -minpoly_oracle(self)[0]


def minpoly_oracle(u: FieldElement) -> RatPolynomial:
    """Characteristic polynomial of multiplication by ``u``.

    This is the minimal polynomial when u is irrational and (x - u)^3 when
    u is rational.
    """
    m = u.mult_matrix()
    tr = m[0][0] + m[1][1] + m[2][2]
    minors = (
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2] - m[1][2] * m[2][1]
    )
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return RatPolynomial([-det, minors, -tr, 1])


@dataclass(frozen=True)
class MoebiusElement:
    """The field element (a alpha + b)/(c alpha + d), entries projectively normalized."""

    spec: FieldSpec
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        m = MoebiusMap(self.a, self.b, self.c, self.d)
        for name, v in zip("abcd", m.entries):
            object.__setattr__(self, name, v)

    @classmethod
    def from_map(cls, spec: FieldSpec, m: MoebiusMap) -> "MoebiusElement":
        return cls(spec, *m.entries)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


MoebiusLike = Union[MoebiusElement, tuple]


def _as_moebius(m: MoebiusLike, spec: FieldSpec | None = None) -> MoebiusElement:
    if isinstance(m, MoebiusElement):
        return m
    if isinstance(m, MoebiusMap):
        return MoebiusElement.from_map(spec, m)
    return MoebiusElement(spec, *m)


def basis_coefficients(m: MoebiusElement) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Integers (a1, b1, c1, d1) with element = (a1 alpha^2 + b1 alpha + c1)/d1."""
    a, b, c, d = m.entries
    k = m.spec.k
    det_t = b * c - d * a
    a1 = -c * det_t
    b1 = (c * k + d) * det_t
    c1 = a * c**2 - b * c**2 * k + 3 * b * c**2 - b * d * c * k - d**2 * b
    d1 = -(c**2) * k * d + 3 * c**2 * d - d**2 * c * k - d**3 + c**3
    return Fraction(a1), Fraction(b1), Fraction(c1), Fraction(d1)


def from_moebius(m: MoebiusLike, spec: FieldSpec | None = None) -> FieldElement:
    """Power-basis form of (a alpha + b)/(c alpha + d) via the explicit coefficients."""
    m = _as_moebius(m, spec)
    a1, b1, c1, d1 = basis_coefficients(m)
    # d1 = -Norm(c alpha + d), nonzero in a field
    assert d1 != 0, "vanishing norm for a nonzero element"
    return FieldElement(m.spec, (c1 / d1, b1 / d1, a1 / d1))


def from_moebius_by_division(m: MoebiusLike, spec: FieldSpec | None = None) -> FieldElement:
    m = _as_moebius(m, spec)
    alpha = m.spec.alpha
    return (m.a * alpha + m.b) * (m.c * alpha + m.d).inv()


def minpoly_closed_form(m: MoebiusLike, spec: FieldSpec | None = None) -> RatPolynomial:
    """Minimal polynomial of (a alpha + b)/(c alpha + d) from the explicit formula.

    z^3 + z^2 * A/D - z * B/D + C/D, with A, B, C, D polynomials in a, b, c, d, k.
    """
    m = _as_moebius(m, spec)
    a, b, c, d = m.entries
    k = m.spec.k
    if a * d - b * c == 0:
        raise DomainError("determinant is zero: the element is rational")
    den = -(c**2) * k * d + 3 * c**2 * d - d**2 * c * k - d**3 + c**3
    assert den != 0, "vanishing denominator under an irreducible modulus"
    sq = (
        2 * b * d * c * k + 3 * d**2 * b + b * c**2 * k - 3 * a * c**2 - 3 * b * c**2
        + k * d**2 * a + 2 * c * k * d * a - 6 * c * d * a
    )
    lin = (
        -3 * c * a**2 + c * b**2 * k - 6 * c * b * a + 2 * c * b * k * a + 2 * b * d * k * a
        + a**2 * k * d + 3 * d * b**2 - 3 * a**2 * d
    )
    const = -3 * b * a**2 + b**3 + b**2 * k * a + b * k * a**2 - a**3
    return RatPolynomial([const / den, -lin / den, sq / den, 1])


def checked_minpoly(m: MoebiusLike, spec: FieldSpec | None = None) -> RatPolynomial:
    """Closed-form minimal polynomial, cross-checked against the oracle.

    Raises ConsistencyError, carrying both polynomials, on disagreement.
    """
    m = _as_moebius(m, spec)
    closed = minpoly_closed_form(m)
    oracle = minpoly_oracle(from_moebius_by_division(m))
    if closed != oracle:
        raise ConsistencyError(
            f"closed-form minimal polynomial disagrees with oracle for {m.entries}, k={m.spec.k}:\n"
            f"  closed form: {closed}\n  oracle:      {oracle}"
        )
    return closed


def format_element(u: FieldElement) -> str:
    x0, x1, x2 = u.coeffs
    out = format_rational(x0)
    for c, sym in ((x1, "A"), (x2, "A^2")):
        sign = "-" if c < 0 else "+"
        out += f" {sign} {format_rational(abs(c))}*{sym}"
    return out


_TERM_RE = re.compile(r"([+-])?([0-9]+(?:/[0-9]+)?)?(\*?A(?:\^([0-9]+))?)?")


def parse_element(spec: FieldSpec, text: str) -> FieldElement:
    """Parse ``"x0 + x1*A + x2*A^2"``; terms may be omitted or repeated."""
    if re.search(r"[\w/^*]\s+[\w/^*]", text):
        raise ValueError(f"missing operator in {text!r}")
    s = re.sub(r"\s+", "", text.replace("−", "-"))
    if not s:
        raise ValueError("empty element")
    coeffs = [Fraction(0)] * 3
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse element {text!r} at offset {pos}")
        if pos > 0 and m.group(1) is None:
            raise ValueError(f"missing sign between terms in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3) is None:
            power = 0
        else:
            if m.group(3).startswith("*") and m.group(2) is None:
                raise ValueError(f"dangling '*' in {text!r}")
            power = int(m.group(4)) if m.group(4) else 1
        if power > 2:
            raise ValueError("powers of A above 2 are not in reduced form")
        coeffs[power] += sign * coef
        pos = m.end()
    return FieldElement(spec, coeffs)
