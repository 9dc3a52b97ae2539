"""Exact rational scalars and dense univariate polynomials over Q.

Scalars are :class:`fractions.Fraction`; the polynomial type keeps its
coefficients lowest degree first and never stores a trailing zero.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


def parse_rational(text: RationalLike) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a normalized Fraction.

    Unreduced input and a negative denominator are accepted; the Unicode
    minus sign is treated as ``-``.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    m = _RATIONAL_RE.match(text.replace("−", "-"))
    if m is None:
        raise ValueError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def as_rational(x: RationalLike) -> Fraction:
    return parse_rational(x) if isinstance(x, str) else Fraction(x)


class RatPolynomial:
    """Immutable dense polynomial with rational coefficients.

    >>> p = RatPolynomial([1, 0, -3, 1])
    >>> str(p)
    'x^3 - 3*x^2 + 1'
    >>> p(3)
    Fraction(1, 1)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike], lead: RationalLike = 1) -> "RatPolynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> "RatPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise DomainError("the zero polynomial has no degree")
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == RatPolynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"RatPolynomial({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial(-c for c in self._coeffs)

    def __add__(self, other) -> "RatPolynomial":
        other = _coerce(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return RatPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "RatPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RatPolynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "RatPolynomial":
        other = _coerce(other)
        if not self._coeffs or not other._coeffs:
            return RatPolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPolynomial":
        if n < 0:
            raise DomainError("negative power of a polynomial")
        out, base = RatPolynomial([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other) -> tuple["RatPolynomial", "RatPolynomial"]:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            q = rem[i] / lead
            if q == 0:
                continue
            quot[i - dq] = q
            for j, b in enumerate(other._coeffs):
                rem[i - dq + j] -= q * b
        return RatPolynomial(quot), RatPolynomial(rem[:dq])

    def __floordiv__(self, other) -> "RatPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "RatPolynomial":
        return divmod(self, other)[1]

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, as_rational(x))

    def monic(self) -> "RatPolynomial":
        return self * (1 / self.leading)

    def derivative(self) -> "RatPolynomial":
        return RatPolynomial(i * c for i, c in enumerate(self._coeffs) if i > 0)


def _coerce(x) -> RatPolynomial:
    if isinstance(x, RatPolynomial):
        return x
    return RatPolynomial([x])


def poly_eval(p: RatPolynomial, x: Fraction) -> Fraction:
    """Horner evaluation, exact."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_gcdex(a: RatPolynomial, b: RatPolynomial) -> tuple[RatPolynomial, RatPolynomial, RatPolynomial]:
    """Extended Euclid: returns ``(s, t, g)`` with ``s*a + t*b == g``, g monic."""
    r0, r1 = a, b
    s0, s1 = RatPolynomial([1]), RatPolynomial()
    t0, t1 = RatPolynomial(), RatPolynomial([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return s0, t0, r0
    scale = 1 / r0.leading
    return s0 * scale, t0 * scale, r0 * scale


def primitive_integer_form(p: RatPolynomial) -> tuple[tuple[int, ...], Fraction]:
    """Write ``p = scale * q`` with q integral, of content 1 and positive lead.

    Returns the coefficients of q (lowest degree first) and ``scale``, which
    is positive unless p has a negative leading coefficient.
    """
    if p.is_zero():
        raise DomainError("primitive form of the zero polynomial")
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    content = math.gcd(*ints)
    if ints[-1] < 0:
        content = -content
    q = tuple(c // content for c in ints)
    return q, Fraction(content, den)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _int_eval(q: Sequence[int], num: int, den: int) -> int:
    # den^deg * q(num/den), kept integral
    deg = len(q) - 1
    acc = 0
    for i, c in enumerate(q):
        acc += c * num**i * den ** (deg - i)
    return acc


def _deflate(q: Sequence[int], num: int, den: int) -> list[int]:
    # synthetic division of integer q by (den*x - num); exact by Gauss's lemma
    out = [0] * (len(q) - 1)
    rem = list(q)
    for i in range(len(rem) - 1, 0, -1):
        coef, r = divmod(rem[i], den)
        if r:
            raise ArithmeticError("inexact deflation")
        out[i - 1] = coef
        rem[i] -= coef * den
        rem[i - 1] += coef * num
    if rem[0] != 0:
        raise ArithmeticError("inexact deflation")
    return out


def rational_roots(p: RatPolynomial) -> list[tuple[Fraction, int]]:
    """All rational roots of ``p`` with multiplicities, ascending.

    Candidates ``num/den`` come from divisors of the trailing and leading
    coefficients of the primitive integer form; each hit is deflated out
    and the search repeated on the quotient.
    """
    if p.is_zero():
        raise DomainError("rational roots of the zero polynomial")
    q, _ = primitive_integer_form(p)
    q = list(q)
    found: dict[Fraction, int] = {}
    while len(q) > 1 and q[0] == 0:
        q.pop(0)
        found[Fraction(0)] = found.get(Fraction(0), 0) + 1
    while len(q) > 1:
        hit = None
        for den in _divisors(q[-1]):
            for num_abs in _divisors(q[0]):
                if math.gcd(num_abs, den) != 1:
                    continue
                for num in (num_abs, -num_abs):
                    if _int_eval(q, num, den) == 0:
                        hit = (num, den)
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            break
        num, den = hit
        q = _deflate(q, num, den)
        r = Fraction(num, den)
        found[r] = found.get(r, 0) + 1
    return sorted(found.items())


def cubic_discriminant(p: RatPolynomial) -> Fraction:
    """Discriminant of ``a x^3 + b x^2 + c x + d``."""
    if p.is_zero() or p.degree != 3:
        raise DomainError("cubic_discriminant needs a degree-3 polynomial")
    d, c, b, a = p.coeffs
    return 18 * a * b * c * d - 4 * b**3 * d + b**2 * c**2 - 4 * a * c**3 - 27 * a**2 * d**2


def rational_sqrt(x: RationalLike) -> Optional[Fraction]:
    """Nonnegative rational square root of ``x``, or None if there is none."""
    x = as_rational(x)
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None
