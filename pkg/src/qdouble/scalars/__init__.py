"""Exact coefficient arithmetic: Q(v), Q(zeta_m) and Q with a specialized q."""

from .cyclo import Cyclo
from .modes import (
    SYMBOLIC,
    CyclotomicQ,
    FieldMode,
    RationalQ,
    SymbolicV,
    VanishingDenominator,
    parse_mode,
)
from .qcomb import (
    in_localized_A,
    is_laurent,
    qbinomial,
    qfactorial,
    qint,
    scalar_from_json,
    scalar_to_json,
    scalar_to_text,
    specialize,
)
from .ratfunc import RatFunc, format_laurent

__all__ = [
    "Cyclo", "CyclotomicQ", "FieldMode", "RatFunc", "RationalQ", "SYMBOLIC", "SymbolicV",
    "VanishingDenominator", "format_laurent", "in_localized_A", "is_laurent", "parse_mode",
    "qbinomial", "qfactorial", "qint", "scalar_from_json", "scalar_to_json", "scalar_to_text",
    "specialize",
]
