"""Exact arithmetic for best k-term unit-fraction underapproximations.

The package revolves around one fact: among all nondecreasing integer
tuples b1 <= ... <= bk (terms at least 2) whose reciprocals sum to less
than 1, the Sylvester prefix 2, 3, 7, 43, ... attains the unique maximum
sum, namely 1 minus the reciprocal of the running product. Everything is
computed with exact rationals; no floating point is used anywhere.

Capabilities: validated denominator tuples and their aggregates
(:mod:`efrac.rationals`), the Sylvester sequence and its shortfall
identity (:mod:`efrac.sylvester`), prefix-product majorization with an
exact Muirhead checker (:mod:`efrac.majorization`), greedy and
exhaustive optimality search (:mod:`efrac.search`), recursive proof
certificates with an independent validator (:mod:`efrac.certificates`),
and the ``ef`` command line (:mod:`efrac.cli`).
"""

from .certificates import (
    Empty,
    InequalityCertificate,
    ProductDeficit,
    Split,
    ValidationResult,
    build_certificate,
    chain_from_ell,
    largest_ell,
    quick_strict_check,
    validate_certificate,
)
from .errors import (
    CapExceeded,
    ChainViolated,
    DepthCapExceeded,
    EfracError,
    HypothesesViolated,
    InvalidInstance,
    InvalidTuple,
    LengthMismatch,
    NotSorted,
    ParseError,
    PreconditionProductDeficit,
    SumNotBelowOne,
    TermTooSmall,
    VerificationFailed,
)
from .majorization import (
    MajorizationInstance,
    MuirheadInstance,
    PropositionCounterexample,
    augment,
    brute_force_prop_search,
    check_hypotheses,
    majorizes,
    normalize_scale,
    prefix_dominates,
    random_instance,
    sum_dominates,
    symmetric_sum,
)
from .rationals import (
    ONE,
    ZERO,
    DenominatorTuple,
    Rational,
    format_rational,
    format_terms,
    normalized_tuple,
    parse_rational,
    parse_terms,
    product,
    sum_reciprocals,
    validate_tuple,
)
from .search import (
    OptimalityReport,
    SearchProblem,
    best_tuples,
    greedy_underapprox,
    verify_theorem,
)
from .sylvester import SylvesterPrefix, shortfall_identity_check, sylvester

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "ChainViolated",
    "DenominatorTuple",
    "DepthCapExceeded",
    "EfracError",
    "Empty",
    "HypothesesViolated",
    "InequalityCertificate",
    "InvalidInstance",
    "InvalidTuple",
    "LengthMismatch",
    "MajorizationInstance",
    "MuirheadInstance",
    "NotSorted",
    "ONE",
    "OptimalityReport",
    "ParseError",
    "PreconditionProductDeficit",
    "ProductDeficit",
    "PropositionCounterexample",
    "Rational",
    "SearchProblem",
    "Split",
    "SumNotBelowOne",
    "SylvesterPrefix",
    "TermTooSmall",
    "ValidationResult",
    "VerificationFailed",
    "ZERO",
    "augment",
    "best_tuples",
    "brute_force_prop_search",
    "build_certificate",
    "chain_from_ell",
    "check_hypotheses",
    "format_rational",
    "format_terms",
    "greedy_underapprox",
    "largest_ell",
    "majorizes",
    "normalize_scale",
    "normalized_tuple",
    "parse_rational",
    "parse_terms",
    "prefix_dominates",
    "product",
    "quick_strict_check",
    "random_instance",
    "shortfall_identity_check",
    "sum_dominates",
    "sum_reciprocals",
    "sylvester",
    "symmetric_sum",
    "validate_certificate",
    "validate_tuple",
    "verify_theorem",
]
