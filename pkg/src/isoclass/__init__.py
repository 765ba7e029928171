"""Decide for which extension degrees k two ordinary elliptic curves over
the same prime field have isomorphic groups of F_(q^k)-rational points.

The answer is always periodic in k; `iso_pattern` returns the modulus and
the allowed residues, `gcd_criterion` / `valuation_criterion` give slow
per-k ground truth, and the enumeration oracle checks everything against
actual group structures for small fields.
"""

from .curve import (
    DEFAULT_BOUND,
    CapacityError,
    Curve,
    GroupStructure,
    SingularCurveError,
    curve_from_ints,
)
from .endoring import (
    DivisionPolySet,
    conductor,
    conductor_bruteforce,
    division_polys,
    scalar_action_test,
)
from .field import (
    ExtField,
    NotInvertibleError,
    PrimeField,
    find_irreducible,
    is_prime,
    legendre,
)
from .isomorphy import (
    ComparisonInput,
    IsoPattern,
    PrimeAnalysis,
    gcd_criterion,
    iso_pattern,
    nasty_reduce,
    not_iso_at_prime,
    pattern_eval,
    predicted_group_structure,
    prime_set,
    valuation_criterion,
)
from .quadorder import (
    FrobeniusData,
    OrderElem,
    SupersingularError,
    binom_valuation,
    factorize,
    frobenius_from_trace,
    lte,
    mult_order,
    squarefree_decompose,
    vp,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BOUND",
    "CapacityError",
    "ComparisonInput",
    "Curve",
    "DivisionPolySet",
    "ExtField",
    "FrobeniusData",
    "GroupStructure",
    "IsoPattern",
    "NotInvertibleError",
    "OrderElem",
    "PrimeAnalysis",
    "PrimeField",
    "SingularCurveError",
    "SupersingularError",
    "binom_valuation",
    "conductor",
    "conductor_bruteforce",
    "curve_from_ints",
    "division_polys",
    "factorize",
    "find_irreducible",
    "frobenius_from_trace",
    "gcd_criterion",
    "is_prime",
    "iso_pattern",
    "legendre",
    "lte",
    "mult_order",
    "nasty_reduce",
    "not_iso_at_prime",
    "pattern_eval",
    "predicted_group_structure",
    "prime_set",
    "scalar_action_test",
    "squarefree_decompose",
    "valuation_criterion",
    "vp",
    "__version__",
]
