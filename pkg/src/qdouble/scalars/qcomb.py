"""Quantum integers, factorials, Gaussian binomials and ring-membership tests."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import flint

from .cyclo import Cyclo
from .modes import SYMBOLIC, CyclotomicQ, FieldMode, RationalQ, SymbolicV, VanishingDenominator
from .ratfunc import RatFunc

_V2_MINUS_1 = flint.fmpz_poly([-1, 0, 1])


def qint(n: int, mode: FieldMode = SYMBOLIC, step: int = 1):
    """[n] = (q^n - q^-n)/(q - q^-1); ``step`` replaces q by q**step."""
    if n < 0:
        raise ValueError("qint expects n >= 0")
    if step == 1:
        return mode.qint(n)
    return (mode.qpow(step * n) - mode.qpow(-step * n)) / (mode.qpow(step) - mode.qpow(-step))


def qfactorial(n: int, mode: FieldMode = SYMBOLIC, step: int = 1):
    if n < 0:
        raise ValueError("qfactorial expects n >= 0")
    out = mode.one
    for i in range(1, n + 1):
        out = out * qint(i, mode, step)
    return out


def _signed_qint(n: int, mode: FieldMode, step: int):
    if n >= 0:
        return qint(n, mode, step)
    return -qint(-n, mode, step)


def qbinomial(m: int, n: int, mode: FieldMode = SYMBOLIC, step: int = 1):
    """Gaussian binomial coefficient [m over n].

    For ``m >= n >= 0`` this is ``[m]!/([n]![m-n]!)``; otherwise the product
    ``prod_{i=1}^{n} [m-i+1]/[i]`` is used, which stays a Laurent polynomial
    for negative ``m`` and vanishes for ``0 <= m < n``.
    """
    if n < 0:
        raise ValueError("qbinomial expects n >= 0")
    if not isinstance(mode, SymbolicV):
        # Laurent in v, so specializing never divides by zero
        return specialize(_symbolic_qbinomial(m, n, step), mode)
    return _symbolic_qbinomial(m, n, step)


@lru_cache(maxsize=None)
def _symbolic_qbinomial(m: int, n: int, step: int):
    mode = SYMBOLIC
    if n == 0:
        return mode.one
    if m >= n:
        return qfactorial(m, mode, step) / (qfactorial(n, mode, step) * qfactorial(m - n, mode, step))
    num = mode.one
    den = mode.one
    for i in range(1, n + 1):
        num = num * _signed_qint(m - i + 1, mode, step)
        den = den * qint(i, mode, step)
    return num / den


def _require_symbolic(x):
    if not isinstance(x, RatFunc):
        raise TypeError("membership tests are only defined for symbolic scalars")


def is_laurent(x) -> bool:
    """True iff ``x`` lies in Z[v, v^-1]."""
    _require_symbolic(x)
    return x.is_laurent()


def in_localized_A(x) -> bool:
    """True iff ``x`` lies in Z[v, v^-1, (v - v^-1)^-1]."""
    _require_symbolic(x)
    den = x.den
    while not den.is_one():
        quo, rem = divmod(den, _V2_MINUS_1)
        if not rem.is_zero():
            return False
        den = quo
    return True


def specialize(x, target: FieldMode):
    """Image of a symbolic scalar under v -> q of ``target``."""
    _require_symbolic(x)
    if isinstance(target, SymbolicV):
        return x
    try:
        return x.evaluate(target.q, target.one)
    except ZeroDivisionError as exc:
        raise VanishingDenominator(f"denominator of {x} vanishes at q of {target.describe()}") from exc


def scalar_to_text(x) -> str:
    return str(x)


def scalar_to_json(x):
    if isinstance(x, RatFunc):
        return {
            "terms": [[e, c] for e, c in sorted(x.num_terms().items(), reverse=True)],
            "den": [[e, c] for e, c in sorted(x.den_terms().items(), reverse=True)],
        }
    if isinstance(x, Cyclo):
        return {"cyclotomic": x.m, "coeffs": [str(c) for c in x.coefficients()]}
    if isinstance(x, (int, Fraction)):
        return {"rational": str(Fraction(x))}
    raise TypeError(f"not a scalar: {x!r}")


def scalar_from_json(obj, mode: FieldMode):
    if "terms" in obj:
        num = RatFunc.laurent({int(e): int(c) for e, c in obj["terms"]})
        den = RatFunc.laurent({int(e): int(c) for e, c in obj.get("den", [[0, 1]])})
        return mode.coerce(num / den) if isinstance(mode, SymbolicV) else specialize(num / den, mode)
    if "rational" in obj:
        return mode.coerce(Fraction(obj["rational"]))
    if "cyclotomic" in obj:
        if not isinstance(mode, CyclotomicQ) or mode.m != int(obj["cyclotomic"]):
            raise ValueError("cyclotomic scalar does not match the field mode")
        poly = flint.fmpq_poly([flint.fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in obj["coeffs"]])
        return Cyclo(mode.m, poly)
    raise ValueError(f"unrecognized scalar JSON {obj!r}")


__all__ = [
    "qint", "qfactorial", "qbinomial", "is_laurent", "in_localized_A", "specialize",
    "scalar_to_text", "scalar_to_json", "scalar_from_json", "RationalQ",
]
