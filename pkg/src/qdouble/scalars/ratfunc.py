"""Rational functions in one variable ``v`` with integer coefficients.

An element is stored as ``v**val * num / den`` where ``num`` and ``den`` are
integer polynomials (``flint.fmpz_poly``) in ``v`` with

* ``num(0) != 0`` (unless the element is zero) and ``den(0) != 0``,
* ``gcd(num, den) == 1`` in ``Z[v]`` (content included),
* the leading coefficient of ``den`` positive.

Under these rules every element has exactly one representation, so equality
and hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import flint

_P = flint.fmpz_poly
_ONE = _P([1])
_ZERO = _P([])


def _valuation(p: flint.fmpz_poly) -> int:
    if p.is_zero():
        return 0
    k = 0
    while p[k] == 0:
        k += 1
    return k


class RatFunc:
    """Element of Q(v), kept in lowest terms over Z[v].

    Plain ints and Fractions coerce automatically, so ``2 * x + 1`` works.
    """

    __slots__ = ("val", "num", "den", "_hash")

    def __init__(self, val: int, num: flint.fmpz_poly, den: flint.fmpz_poly = _ONE):
        self.val = val
        self.num = num
        self.den = den
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def make(cls, val: int, num, den=_ONE) -> "RatFunc":
        """Canonicalize ``v**val * num / den`` (arbitrary Z[v] inputs)."""
        if num.is_zero():
            return ZERO
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        k = _valuation(num)
        if k:
            num = num.right_shift(k)
            val += k
        k = _valuation(den)
        if k:
            den = den.right_shift(k)
            val -= k
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
            if den.leading_coefficient() < 0:
                num = -num
                den = -den
        return cls(val, num, den)

    @classmethod
    def from_int(cls, n) -> "RatFunc":
        if isinstance(n, Fraction):
            if n.denominator == 1:
                return cls.from_int(n.numerator)
            return cls.make(0, _P([n.numerator]), _P([n.denominator]))
        n = int(n)
        if n == 0:
            return ZERO
        if n == 1:
            return ONE
        return cls(0, _P([n]), _ONE)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "RatFunc":
        """``c * v**k``."""
        if c == 0:
            return ZERO
        return cls(k, _P([c]), _ONE)

    @classmethod
    def laurent(cls, terms: dict[int, int]) -> "RatFunc":
        """Build from a sparse ``{exponent: coefficient}`` mapping."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo = min(terms)
        coeffs = [0] * (max(terms) - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        return cls.make(lo, _P(coeffs))

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def num_terms(self) -> dict[int, int]:
        """Sparse Laurent terms of ``v**val * num``."""
        return {i + self.val: int(c) for i, c in enumerate(self.num.coeffs()) if c != 0}

    def den_terms(self) -> dict[int, int]:
        return {i: int(c) for i, c in enumerate(self.den.coeffs()) if c != 0}

    def terms(self) -> dict[int, int]:
        """Laurent terms; only valid when :meth:`is_laurent` holds."""
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num_terms()

    def as_monomial(self):
        """Return ``(c, k)`` if the element equals ``c * v**k``, else ``None``."""
        if self.den.is_one() and self.num.degree() == 0:
            return int(self.num[0]), self.val
        return None

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        k = min(self.val, other.val)
        a = self.num.left_shift(self.val - k) if self.val > k else self.num
        b = other.num.left_shift(other.val - k) if other.val > k else other.num
        if self.den == other.den:
            return RatFunc.make(k, a + b, self.den)
        return RatFunc.make(k, a * other.den + b * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        if not self:
            return self
        return RatFunc(self.val, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self or not other:
            return ZERO
        val = self.val + other.val
        if self.den.is_one() and other.den.is_one():
            return RatFunc(val, self.num * other.num, _ONE)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g = n1.gcd(d2)
        if not g.is_one():
            n1, d2 = n1 // g, d2 // g
        g = n2.gcd(d1)
        if not g.is_one():
            n2, d1 = n2 // g, d1 // g
        num, den = n1 * n2, d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc(val, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc(-self.val, num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        if self.den.is_one() and self.num.degree() == 0:
            return RatFunc(self.val * n, self.num ** n, _ONE)
        return RatFunc(self.val * n, self.num ** n, self.den ** n)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.val == other.val and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.val, tuple(int(c) for c in self.num.coeffs()),
                               tuple(int(c) for c in self.den.coeffs())))
        return self._hash

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, q, one=1):
        """Substitute ``v -> q`` in any commutative ring supporting ``+ * /``.

        Raises ``ZeroDivisionError`` if the denominator vanishes at ``q``.
        """
        den = _horner(self.den.coeffs(), q, one)
        if not den:
            raise ZeroDivisionError("denominator vanishes at the specialization point")
        num = _horner(self.num.coeffs(), q, one)
        if self.val >= 0:
            scale = q ** self.val if self.val else one
        else:
            scale = (one / q) ** (-self.val)
        return num * scale / den

    # -- printing -----------------------------------------------------------

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        return format_ratfunc(self)


def _horner(coeffs, x, one):
    acc = one * 0
    for c in reversed(coeffs):
        acc = acc * x + int(c)
    return acc


def format_laurent(terms: dict[int, int], compact: bool = False) -> str:
    """Canonical Laurent string, highest power first: ``v^2 + 2 + v^-2``."""
    if not terms:
        return "0"
    plus, minus = (" + ", " - ") if not compact else ("+", "-")
    out = []
    for i, e in enumerate(sorted(terms, reverse=True)):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = str(c)
        else:
            var = "v" if e == 1 else f"v^{e}"
            body = var if c == 1 else f"{c}*{var}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append((minus if sign == "-" else plus) + body)
    return "".join(out)


def format_ratfunc(x: RatFunc) -> str:
    if x.is_laurent():
        return format_laurent(x.num_terms())
    num = format_laurent(x.num_terms(), compact=True)
    if len(x.num_terms()) > 1:
        num = f"({num})"
    return f"{num}/({format_laurent(x.den_terms(), compact=True)})"


ZERO = RatFunc(0, _ZERO, _ONE)
ONE = RatFunc(0, _ONE, _ONE)
V = RatFunc(1, _ONE, _ONE)


@lru_cache(maxsize=None)
def v_power(k: int) -> RatFunc:
    return RatFunc.monomial(k)
