"""Command-line interface: ``scf <verb> ...``.

Exit codes: 0 success, 2 usage or parse error, 3 domain error,
4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import selftest as _selftest
from .classification import (
    approx_roots,
    classify,
    degenerate_param,
    equivalent,
    orbit,
    transform_param,
    verify_witness,
)
from .cubic_field import (
    ConsistencyError,
    FieldSpec,
    MoebiusElement,
    basis_coefficients,
    checked_minpoly,
    from_moebius,
    from_moebius_by_division,
)
from .exact_arith import DomainError, format_rational, parse_rational
from .moebius import ClassWitness, witness_inverse

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 2, 3, 4
DEFAULT_MAX_HEIGHT = 64


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reads ``-51/73`` as a positional, not a flag."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _integer(text: str) -> int:
    try:
        return int(text.replace("−", "-"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _positive(text: str) -> int:
    n = _integer(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="scf", description="Exact computations for simplest cubic fields.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="degenerate or field-generating parameter")
    p.add_argument("k", type=_rational)

    p = sub.add_parser("transform", parents=[common], help="k' = T(c, d, k)")
    p.add_argument("c", type=_integer)
    p.add_argument("d", type=_integer)
    p.add_argument("k", type=_rational)

    p = sub.add_parser("equiv", parents=[common], help="do k and k2 give the same field?")
    p.add_argument("k", type=_rational)
    p.add_argument("k2", type=_rational)

    p = sub.add_parser("orbit", parents=[common], help="parameters reachable with bounded witnesses")
    p.add_argument("k", type=_rational)
    p.add_argument("--height", type=_positive, default=3)
    p.add_argument("--parallel", action="store_true")

    for verb, text in (("minpoly", "minimal polynomial of (aA+b)/(cA+d)"), ("basis", "power-basis form of (aA+b)/(cA+d)")):
        p = sub.add_parser(verb, parents=[common], help=text)
        for name in "abcd":
            p.add_argument(name, type=_integer)
        p.add_argument("k", type=_rational)

    p = sub.add_parser("roots", parents=[common], help="roots of the family polynomial")
    p.add_argument("k", type=_rational)
    p.add_argument("--digits", type=_positive, default=20)

    p = sub.add_parser("degenerate", parents=[common], help="parameter with rational root p/q")
    p.add_argument("p", type=_integer)
    p.add_argument("q", type=_integer)

    p = sub.add_parser("selftest", parents=[common], help="run the differential formula checks")
    p.add_argument("--seed", type=_integer, default=0)
    p.add_argument("--samples", type=_positive, default=200)
    return parser


def _fmt(x) -> str:
    return format_rational(x)


def _emit(out, args, payload: dict, text: str) -> None:
    if args.json:
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text + "\n")


def _cmd_classify(args, out) -> int:
    res = classify(args.k)
    if res.is_degenerate:
        roots = [_fmt(r) for r in res.roots]
        _emit(out, args, {"class": "degenerate", "roots": roots}, f"degenerate: rational roots {', '.join(roots)}")
    else:
        disc, root = _fmt(res.discriminant), _fmt(res.sqrt_discriminant)
        _emit(
            out, args,
            {"class": "generating", "discriminant": disc, "sqrt_discriminant": root},
            f"generating: discriminant {disc} = ({root})^2",
        )
    return EXIT_OK


def _cmd_transform(args, out) -> int:
    w = ClassWitness(args.c, args.d)
    k2 = transform_param(w, args.k)
    _emit(out, args, {"k": _fmt(args.k), "witness": str(w), "k_prime": _fmt(k2)}, _fmt(k2))
    return EXIT_OK


def _cmd_equiv(args, out) -> int:
    res = equivalent(args.k, args.k2)
    fwd = [str(w) for w in res.witnesses]
    rev = [str(witness_inverse(w)) for w in res.witnesses]
    if res.equivalent:
        text = f"equivalent\n  {_fmt(args.k)} -> {_fmt(args.k2)}: {', '.join(fwd)}\n  {_fmt(args.k2)} -> {_fmt(args.k)}: {', '.join(rev)}"
    else:
        text = "not equivalent"
    _emit(out, args, {"equivalent": res.equivalent, "witnesses": fwd, "reverse_witnesses": rev}, text)
    return EXIT_OK


def _cmd_orbit(args, out) -> int:
    cap = int(os.environ.get("SCF_MAX_HEIGHT", DEFAULT_MAX_HEIGHT))
    if args.height > cap:
        raise _UsageError(f"scf orbit: error: --height {args.height} exceeds SCF_MAX_HEIGHT={cap}")
    workers = (os.cpu_count() or 2) if args.parallel else None
    for k2, w in orbit(args.k, args.height, workers=workers):
        if args.json:
            ok = verify_witness(args.k, k2, w)
            out.write(json.dumps({"k": _fmt(k2), "witness": str(w), "verified": ok}) + "\n")
        else:
            out.write(f"{_fmt(k2)}\t{w}\n")
    return EXIT_OK


def _cmd_minpoly(args, out) -> int:
    m = MoebiusElement(FieldSpec(args.k), args.a, args.b, args.c, args.d)
    poly = checked_minpoly(m)
    _emit(
        out, args,
        {"polynomial": str(poly), "coefficients": [_fmt(c) for c in poly.coeffs], "verified": True},
        str(poly),
    )
    return EXIT_OK


def _cmd_basis(args, out) -> int:
    m = MoebiusElement(FieldSpec(args.k), args.a, args.b, args.c, args.d)
    u = from_moebius(m)
    direct = from_moebius_by_division(m)
    if u != direct:
        raise ConsistencyError(f"basis formula gives {u}, direct division gives {direct}")
    a1, b1, c1, d1 = basis_coefficients(m)
    _emit(
        out, args,
        {
            "element": str(u),
            "coefficients": [_fmt(c) for c in u.coeffs],
            "a1": _fmt(a1), "b1": _fmt(b1), "c1": _fmt(c1), "d1": _fmt(d1),
        },
        str(u),
    )
    return EXIT_OK


def _cmd_roots(args, out) -> int:
    res = classify(args.k)
    if res.is_degenerate:
        roots = [_fmt(r) for r in sorted(res.roots, reverse=True)]
        _emit(out, args, {"exact": True, "roots": roots}, "\n".join(roots))
        return EXIT_OK
    import mpmath

    roots = [mpmath.nstr(r, args.digits) for r in approx_roots(args.k, args.digits)]
    _emit(out, args, {"exact": False, "digits": args.digits, "roots": roots}, "\n".join(roots))
    return EXIT_OK


def _cmd_degenerate(args, out) -> int:
    k = degenerate_param(args.p, args.q)
    _emit(out, args, {"p": args.p, "q": args.q, "k": _fmt(k)}, _fmt(k))
    return EXIT_OK


def _cmd_selftest(args, out) -> int:
    results = _selftest.run_all(seed=args.seed, samples=args.samples)
    ok = all(r.passed for r in results)
    if args.json:
        out.write(json.dumps({
            "passed": ok,
            "basis_reading": "a1*A^2 + b1*A + c1",
            "checks": [{"name": r.name, "passed": r.passed, "cases": r.cases, "detail": r.detail} for r in results],
        }) + "\n")
    else:
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.name} ({r.cases} cases)"
            out.write(line + (f": {r.detail}" if r.detail else "") + "\n")
        if ok:
            out.write("basis numerator read as a1*A^2 + b1*A + c1: validated\n")
    return EXIT_OK if ok else EXIT_INTERNAL


_COMMANDS = {
    "classify": _cmd_classify,
    "transform": _cmd_transform,
    "equiv": _cmd_equiv,
    "orbit": _cmd_orbit,
    "minpoly": _cmd_minpoly,
    "basis": _cmd_basis,
    "roots": _cmd_roots,
    "degenerate": _cmd_degenerate,
    "selftest": _cmd_selftest,
}


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.verb](args, out)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    except ConsistencyError as exc:
        err.write(f"internal consistency failure: {exc}\n")
        return EXIT_INTERNAL
    except AssertionError as exc:
        err.write(f"internal consistency failure: {exc}\n")
        return EXIT_INTERNAL
    except DomainError as exc:
        err.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
