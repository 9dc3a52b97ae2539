"""Differential checks of the closed-form formulas against independent oracles.

Used by ``scf selftest``.  Functions under test are looked up through their
modules at call time so a patched (corrupted) formula is actually exercised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import classification as _classify
from . import cubic_field as _field
from . import moebius as _moebius
from .exact_arith import RatPolynomial, rational_roots, rational_sqrt


def random_irreducible_k(rng: random.Random, bound: int = 20) -> Fraction:
    """Random n/m with |n|, |m| <= bound whose family polynomial is irreducible."""
    while True:
        m = rng.randint(1, bound) * rng.choice((1, -1))
        k = Fraction(rng.randint(-bound, bound), m)
        if not rational_roots(_field.family_poly(k)):
            return k


def random_moebius(rng: random.Random, bound: int = 50) -> tuple[int, int, int, int]:
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if a * d - b * c != 0:
            return a, b, c, d


def random_witness(rng: random.Random, bound: int = 50) -> _moebius.ClassWitness:
    while True:
        c, d = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if (c, d) != (0, 0):
            return _moebius.ClassWitness(c, d)


def random_element(rng: random.Random, spec: _field.FieldSpec, bound: int = 20) -> _field.FieldElement:
    return spec.element(*(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(3)))


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


def _run(name: str, body: Callable[[], Iterator[str | None]]) -> CheckResult:
    n = 0
    try:
        for failure in body():
            n += 1
            if failure:
                return CheckResult(name, False, n, failure)
    except Exception as exc:  # any crash of a formula under test is a failure
        return CheckResult(name, False, n, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, True, n)


def check_golden() -> Iterator[str | None]:
    K = _field.FieldSpec(3)
    for w, want in (((2, 3), Fraction(-51, 73)), ((1, 2), Fraction(3, 19))):
        got = _classify.transform_param(w, 3)
        yield None if got == want else f"T{w} at k=3 gave {got}, want {want}"
    for m, want in (
        ((5, -2, 2, 3), RatPolynomial([1, Fraction(-270, 73), Fraction(51, 73), 1])),
        ((3, -1, 1, 2), RatPolynomial([1, Fraction(-54, 19), Fraction(-3, 19), 1])),
    ):
        got = _field.minpoly_closed_form(_field.MoebiusElement(K, *m))
        yield None if got == want else f"minpoly{m} at k=3 gave {got}, want {want}"


def check_basis_formula(rng: random.Random, n: int) -> Iterator[str | None]:
    for _ in range(n):
        k = random_irreducible_k(rng)
        m = _field.MoebiusElement(_field.FieldSpec(k), *random_moebius(rng))
        got, want = _field.from_moebius(m), _field.from_moebius_by_division(m)
        yield None if got == want else f"basis form of {m.entries} at k={k}: {got} != {want}"


def check_minpoly_formula(rng: random.Random, n: int) -> Iterator[str | None]:
    for _ in range(n):
        k = random_irreducible_k(rng)
        m = _field.MoebiusElement(_field.FieldSpec(k), *random_moebius(rng))
        got = _field.minpoly_closed_form(m)
        want = _field.minpoly_oracle(_field.from_moebius_by_division(m))
        yield None if got == want else f"minpoly of {m.entries} at k={k}: {got} != {want}"


def check_witness_laws(rng: random.Random, n: int) -> Iterator[str | None]:
    T = _classify.transform_param
    for _ in range(n):
        k = random_irreducible_k(rng)
        w1, w2 = random_witness(rng), random_witness(rng)
        k1 = T(w1, k)
        if T(_moebius.witness_inverse(w1), k1) != k:
            yield f"inverse law fails for {w1} at k={k}"
            continue
        lhs = T(w2, k1)
        rhs = T(_moebius.witness_compose(w1, w2), k)
        yield None if lhs == rhs else f"composition law fails for {w1}, {w2} at k={k}"


def check_witness_ring(bound: int = 5) -> Iterator[str | None]:
    pairs = [(c, d) for c in range(-bound, bound + 1) for d in range(-bound, bound + 1) if (c, d) != (0, 0)]
    for c1, d1 in pairs:
        w1 = _moebius.ClassWitness(c1, d1)
        m1 = _moebius.witness_to_map(w1)
        for c2, d2 in pairs:
            w2 = _moebius.ClassWitness(c2, d2)
            got = _moebius.witness_to_map(_moebius.witness_compose(w1, w2))
            want = _moebius.compose(m1, _moebius.witness_to_map(w2))
            yield None if got == want else f"{w1} o {w2}: {got} != {want}"


def check_trace_identity(rng: random.Random, n: int) -> Iterator[str | None]:
    for _ in range(n):
        k = random_irreducible_k(rng)
        w = random_witness(rng)
        spec = _field.FieldSpec(k)
        u = _field.from_moebius(_field.MoebiusElement.from_map(spec, _moebius.witness_to_map(w)))
        t = _classify.transform_param(w, k)
        yield None if u.trace() == t else f"trace {u.trace()} != T = {t} for {w} at k={k}"


def check_discriminant(rng: random.Random, n: int) -> Iterator[str | None]:
    for _ in range(n):
        k = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
        disc = _classify.discriminant_k(k)
        if disc != (k * k - 3 * k + 9) ** 2:
            yield f"discriminant at k={k} is {disc}"
            continue
        cls = _classify.classify(k)
        if not cls.is_degenerate and rational_sqrt(cls.discriminant) is None:
            yield f"no rational square root of the discriminant at k={k}"
            continue
        yield None


def run_all(seed: int = 0, samples: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)
    return [
        _run("golden values", check_golden),
        _run("basis formula vs division", lambda: check_basis_formula(rng, samples)),
        _run("closed-form minpoly vs oracle", lambda: check_minpoly_formula(rng, samples)),
        _run("inverse and composition laws of T", lambda: check_witness_laws(rng, samples)),
        _run("witness ring vs matrix product", check_witness_ring),
        _run("trace equals T", lambda: check_trace_identity(rng, samples)),
        _run("discriminant law", lambda: check_discriminant(rng, samples)),
    ]
