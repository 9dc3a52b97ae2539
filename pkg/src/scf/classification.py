"""Parameter-level questions about the family x^3 - k x^2 + (k-3) x + 1.

T(c, d, k) gives the parameter of the image of a root under the witness
map z -> ((c+d)z - c)/(cz + d).  Two parameters define the same field
exactly when one is carried to the other by some witness; deciding that
reduces to finding rational roots of a single cubic in t = c/d.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath

from .cubic_field import FieldSpec, MoebiusElement, family_poly, from_moebius, minpoly_oracle
from .exact_arith import (
    DomainError,
    RationalLike,
    RatPolynomial,
    as_rational,
    cubic_discriminant,
    rational_roots,
    rational_sqrt,
)
from .moebius import ClassWitness, witness_to_map, witnesses_up_to

__all__ = [
    "Classification",
    "EquivalenceResult",
    "approx_roots",
    "classify",
    "degenerate_param",
    "discriminant_k",
    "equivalent",
    "family_poly",
    "orbit",
    "transform_param",
    "verify_witness",
    "witness_cubic",
]

WitnessLike = Union[ClassWitness, tuple]


def _witness(w: WitnessLike) -> ClassWitness:
    return w if isinstance(w, ClassWitness) else ClassWitness(*w)


# Numerator and denominator of T, homogeneous cubics in (c, d).  They are
# written generically so they also accept RatPolynomial arguments.
def _t_num(c, d, k):
    return 9 * d**2 * c + c**3 * k + 9 * c**2 * d - 3 * d**2 * c * k - k * d**3


def _t_den(c, d, k):
    return -(c**2) * k * d + 3 * c**2 * d - d**2 * c * k - d**3 + c**3


def discriminant_k(k: RationalLike) -> Fraction:
    return cubic_discriminant(family_poly(k))


@dataclass(frozen=True)
class Classification:
    """Either ``"degenerate"`` (three rational roots) or ``"generating"``."""

    tag: str
    roots: Optional[tuple[Fraction, ...]] = None
    discriminant: Optional[Fraction] = None
    sqrt_discriminant: Optional[Fraction] = None

    @property
    def is_degenerate(self) -> bool:
        return self.tag == "degenerate"


def classify(k: RationalLike) -> Classification:
    k = as_rational(k)
    roots = rational_roots(family_poly(k))
    if roots:
        flat = tuple(r for r, mult in roots for _ in range(mult))
        assert len(flat) == 3, "a cubic with one rational root splits over Q here"
        return Classification("degenerate", roots=flat)
    disc = discriminant_k(k)
    root = rational_sqrt(disc)
    assert root is not None and disc > 0, "discriminant is not a positive square"
    return Classification("generating", discriminant=disc, sqrt_discriminant=root)


def degenerate_param(p: int, q: int) -> Fraction:
    """The parameter whose family polynomial has the rational root p/q."""
    p, q = int(p), int(q)
    if p == 0 or q == 0 or p == q:
        raise DomainError(f"need p != 0, q != 0, p != q; got p={p}, q={q}")
    return Fraction(p**3 - 3 * p * q**2 + q**3, q * p * (p - q))


def transform_param(w: WitnessLike, k: RationalLike) -> Fraction:
    """T(c, d, k): the parameter of ((c+d)alpha - c)/(c alpha + d)."""
    w = _witness(w)
    k = as_rational(k)
    den = _t_den(w.c, w.d, k)
    if den == 0:
        raise DomainError(f"witness {w} is degenerate at k = {k}")
    return _t_num(w.c, w.d, k) / den


def witness_cubic(k: RationalLike, k2: RationalLike) -> RatPolynomial:
    """P(t) = N(t, 1) - k2 * D(t, 1), whose rational roots t = c/d are witnesses.

    Degree 3 with leading coefficient k - k2 when k != k2; otherwise degree 2
    with leading coefficient k^2 - 3k + 9 > 0.
    """
    k, k2 = as_rational(k), as_rational(k2)
    t = RatPolynomial([0, 1])
    one = RatPolynomial([1])
    p = _t_num(t, one, k) - k2 * _t_den(t, one, k)
    if k != k2:
        assert not p.is_zero() and p.degree == 3 and p.leading == k - k2, "witness cubic degree"
    else:
        lead = k * k - 3 * k + 9
        assert not p.is_zero() and p.degree == 2 and p.leading == lead and lead > 0, "witness cubic degree"
    return p


def _order_key(w: ClassWitness):
    return (w.height, abs(w.c), abs(w.d), w.c < 0)


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    witnesses: tuple[ClassWitness, ...]

    def __bool__(self) -> bool:
        return self.equivalent


def equivalent(k: RationalLike, k2: RationalLike) -> EquivalenceResult:
    """Decide whether k2 = T(c, d, k) for some witness, listing every witness.

    Finite witnesses come from rational roots of :func:`witness_cubic`; the
    pair (1, 0), i.e. t at infinity, qualifies exactly when k == k2.
    """
    k, k2 = as_rational(k), as_rational(k2)
    p = witness_cubic(k, k2)
    found = []
    for t, _ in rational_roots(p):
        if _t_den(t, 1, k) == 0:
            continue
        found.append(ClassWitness(t.numerator, t.denominator))
    if k == k2:
        found.append(ClassWitness(1, 0))
    found.sort(key=_order_key)
    return EquivalenceResult(bool(found), tuple(found))


def verify_witness(k: RationalLike, k2: RationalLike, w: WitnessLike) -> bool:
    """Symbolic check: the image of alpha under w satisfies the k2 family polynomial."""
    spec = FieldSpec(as_rational(k))
    u = from_moebius(MoebiusElement.from_map(spec, witness_to_map(_witness(w))))
    return minpoly_oracle(u) == family_poly(k2)


def _transform_chunk(args):
    k, pairs = args
    return [transform_param(ClassWitness(c, d), k) for c, d in pairs]


def orbit(k: RationalLike, height: int, workers: Optional[int] = None) -> list[tuple[Fraction, ClassWitness]]:
    """Distinct T(w, k) over witnesses of height <= ``height``.

    Each value is paired with the first witness reaching it in height order;
    the list is sorted by (denominator, numerator).  With ``workers`` the
    T evaluations are spread over a process pool; the result is identical.
    """
    k = as_rational(k)
    FieldSpec(k)
    if height < 1:
        raise DomainError("height must be a positive integer")
    ws = witnesses_up_to(height)
    if workers and workers > 1 and len(ws) > 1:
        size = math.ceil(len(ws) / workers)
        chunks = [(k, [(w.c, w.d) for w in ws[i:i + size]]) for i in range(0, len(ws), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = [v for part in pool.map(_transform_chunk, chunks) for v in part]
    else:
        values = [transform_param(w, k) for w in ws]
    seen: dict[Fraction, ClassWitness] = {}
    for w, v in zip(ws, values):
        seen.setdefault(v, w)
    return sorted(seen.items(), key=lambda kv: (kv[0].denominator, kv[0].numerator))


def _mpf(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def approx_roots(k: RationalLike, digits: int = 15) -> tuple:
    """The three real roots, largest first, via the trigonometric formula.

    Each returned ``mpmath.mpf`` satisfies |f_k(r)| < 10**-digits.
    """
    k = as_rational(k)
    FieldSpec(k)
    if digits < 1:
        raise DomainError("digits must be positive")
    f = family_poly(k)
    dps = digits + 15
    while True:
        with mpmath.workdps(dps):
            kk = _mpf(k)
            b, c, e = -kk, kk - 3, mpmath.mpf(1)
            p = c - b**2 / 3
            q = 2 * b**3 / 27 - b * c / 3 + e
            amp = 2 * mpmath.sqrt(-p / 3)
            theta = mpmath.acos((3 * q / (2 * p)) * mpmath.sqrt(-3 / p)) / 3
            roots = sorted(
                (amp * mpmath.cos(theta - 2 * mpmath.pi * j / 3) - b / 3 for j in range(3)),
                reverse=True,
            )
            tol = mpmath.mpf(10) ** (-digits)
            if all(abs(mpmath.polyval([_mpf(x) for x in reversed(f.coeffs)], r)) < tol for r in roots):
                return tuple(roots)
        dps *= 2
