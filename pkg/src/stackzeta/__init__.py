"""Exact Kapranov zeta functions and power structures on motivic classes.

The Grothendieck ring of algebraic stacks is the localization of the ring of
varieties at L and at L^n - 1 for all n >= 1; every class here is an exact
fraction in L with a structured denominator.  On top of that sit the
Kapranov zeta function as a pre-lambda structure, the power structures it
induces, the Hodge-Deligne realization with effectiveness refutation, and a
verification suite that checks each identity two independent ways.
"""

from .errors import (
    DomainError,
    ElaborationError,
    InternalConsistencyError,
    NonInvertibleError,
    ParseError,
    ResourceLimitError,
    StackZetaError,
)
from .laurent import IntLaurent, L
from .motivic import (
    DenomForm,
    HDRealization,
    MotivicClass,
    bgl_class,
    gl_class,
    grassmannian_class,
)
from .multipoly import MultiPoly
from .partitions import Partition, partitions_of
from .power import (
    AxiomReport,
    AxiomSample,
    LambdaProvider,
    axiom_suite,
    binomial_series,
    lambda_factorize,
    opposite_provider,
    opposite_series,
    power,
)
from .rfunctions import (
    block_distinct_oracle,
    block_distinct_sum,
    distinct_exponent_oracle,
    distinct_exponent_sum,
    distinct_exponent_sum_taylor,
)
from .series import Ring, TruncatedSeries, hd_ring, motivic_ring
from .hodge import (
    EFFECTIVE_CANDIDATE,
    INCONCLUSIVE,
    NOT_EFFECTIVE,
    CounterexampleReport,
    EffectivenessResult,
    check_class_effectiveness,
    check_polynomial_effectiveness,
    curve_opposite_counterexample,
    hd_opposite_provider,
    hd_provider,
    hd_zeta,
    stack_power_counterexample,
)
from .zeta import (
    FormalSigma,
    FuncEqReport,
    PrefixReport,
    check_functional_equation,
    formal_ring,
    infinite_product_prefix,
    motivic_provider,
    opposite_zeta,
    sym_power,
    zeta_formal,
    zeta_from_sigma,
    zeta_of_polynomial,
    zeta_series,
)
from .expr import parse_class, parse_poly, parse_series
from .verify import (
    VerificationReport,
    verify_axioms,
    verify_distinct_sum,
    verify_grassmannian,
    verify_zeta_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "AxiomSample",
    "CounterexampleReport",
    "DenomForm",
    "DomainError",
    "EFFECTIVE_CANDIDATE",
    "EffectivenessResult",
    "ElaborationError",
    "FormalSigma",
    "FuncEqReport",
    "HDRealization",
    "INCONCLUSIVE",
    "IntLaurent",
    "InternalConsistencyError",
    "L",
    "LambdaProvider",
    "MotivicClass",
    "MultiPoly",
    "NOT_EFFECTIVE",
    "NonInvertibleError",
    "ParseError",
    "Partition",
    "PrefixReport",
    "ResourceLimitError",
    "Ring",
    "StackZetaError",
    "TruncatedSeries",
    "VerificationReport",
    "axiom_suite",
    "bgl_class",
    "binomial_series",
    "block_distinct_oracle",
    "block_distinct_sum",
    "check_class_effectiveness",
    "check_functional_equation",
    "check_polynomial_effectiveness",
    "curve_opposite_counterexample",
    "distinct_exponent_oracle",
    "distinct_exponent_sum",
    "distinct_exponent_sum_taylor",
    "formal_ring",
    "gl_class",
    "grassmannian_class",
    "hd_opposite_provider",
    "hd_provider",
    "hd_ring",
    "hd_zeta",
    "infinite_product_prefix",
    "lambda_factorize",
    "motivic_provider",
    "motivic_ring",
    "opposite_provider",
    "opposite_series",
    "opposite_zeta",
    "parse_class",
    "parse_poly",
    "parse_series",
    "partitions_of",
    "power",
    "stack_power_counterexample",
    "sym_power",
    "verify_axioms",
    "verify_distinct_sum",
    "verify_grassmannian",
    "verify_zeta_closed_form",
    "zeta_formal",
    "zeta_from_sigma",
    "zeta_of_polynomial",
    "zeta_series",
]
