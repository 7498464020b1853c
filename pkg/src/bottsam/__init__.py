"""Exact torus-equivariant cohomology of Bott-Samelson varieties.

Restriction classes indexed by galleries, their products and localization
integrals, the ordinary-cohomology quotient, and Schubert-class values by
subword sums — all over exact rational arithmetic for any finite-type
Cartan matrix.
"""

from .errors import (
    BottsamError,
    CapExceeded,
    IndexOutOfRange,
    InvalidCartan,
    LengthMismatch,
    NotDivisible,
    NotFiniteType,
    NotInSpan,
    NotLongestWord,
    NotReducedGallery,
    NotReducedWord,
    RankMismatch,
    ResidualDenominator,
    WordMismatch,
    ZeroForm,
)
from .rootsystem import (
    BUILTIN_CARTAN,
    CartanSpec,
    RootSystem,
    SimpleWord,
    Weight,
    WeylElement,
    build_root_system,
    format_word,
    parse_word,
)
from .polyring import (
    LinearCombFraction,
    Polynomial,
    divide_exact,
    format_polynomial,
    fraction_sum,
    fraction_to_polynomial,
    parse_polynomial,
    weyl_act,
)
from .bott_samelson import (
    BSWord,
    CohClass,
    Gallery,
    RestrictionFn,
    expand,
    gallery_leq,
    integrate,
    multiply,
    multiply_generator,
)
from .ordinary import (
    OrdinaryClass,
    Relation,
    evaluate_at_origin,
    ordinary_multiply,
    relations,
)
from .schubert import (
    BilleyQuery,
    beta_sequence,
    billey,
    check_billey_identity,
    fiber,
    reduced_word_of_gallery,
)

__version__ = "0.1.0"

__all__ = [
    "BottsamError",
    "CapExceeded",
    "IndexOutOfRange",
    "InvalidCartan",
    "LengthMismatch",
    "NotDivisible",
    "NotFiniteType",
    "NotInSpan",
    "NotLongestWord",
    "NotReducedGallery",
    "NotReducedWord",
    "RankMismatch",
    "ResidualDenominator",
    "WordMismatch",
    "ZeroForm",
    "BUILTIN_CARTAN",
    "CartanSpec",
    "RootSystem",
    "SimpleWord",
    "Weight",
    "WeylElement",
    "build_root_system",
    "format_word",
    "parse_word",
    "LinearCombFraction",
    "Polynomial",
    "divide_exact",
    "format_polynomial",
    "fraction_sum",
    "fraction_to_polynomial",
    "parse_polynomial",
    "weyl_act",
    "BSWord",
    "CohClass",
    "Gallery",
    "RestrictionFn",
    "expand",
    "gallery_leq",
    "integrate",
    "multiply",
    "multiply_generator",
    "OrdinaryClass",
    "Relation",
    "evaluate_at_origin",
    "ordinary_multiply",
    "relations",
    "BilleyQuery",
    "beta_sequence",
    "billey",
    "check_billey_identity",
    "fiber",
    "reduced_word_of_gallery",
]
