"""Exact computations for the simplest cubic fields x^3 - k x^2 + (k-3) x + 1."""

from .classification import (
    Classification,
    EquivalenceResult,
    approx_roots,
    classify,
    degenerate_param,
    discriminant_k,
    equivalent,
    orbit,
    transform_param,
    verify_witness,
    witness_cubic,
)
from .cubic_field import (
    ConsistencyError,
    FieldElement,
    FieldSpec,
    MoebiusElement,
    checked_minpoly,
    family_poly,
    from_moebius,
    from_moebius_by_division,
    minpoly_closed_form,
    minpoly_oracle,
)
from .exact_arith import (
    DomainError,
    RatPolynomial,
    cubic_discriminant,
    format_rational,
    parse_rational,
    poly_eval,
    primitive_integer_form,
    rational_roots,
    rational_sqrt,
)
from .moebius import (
    INF,
    ClassWitness,
    MoebiusMap,
    apply_ext,
    compose,
    inverse,
    is_rational_detector,
    witness_compose,
    witness_inverse,
    witness_to_map,
    y_generator,
)

__version__ = "0.1.0"
