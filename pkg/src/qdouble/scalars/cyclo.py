"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are rational polynomials in ``zeta`` reduced modulo the m-th
cyclotomic polynomial, so each element has a unique representative of degree
below ``phi(m)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import flint

_Q = flint.fmpq_poly


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> flint.fmpq_poly:
    return _Q(flint.fmpz_poly.cyclotomic(m))


class Cyclo:
    """An element of Q(zeta_m)."""

    __slots__ = ("m", "poly", "_hash")

    def __init__(self, m: int, poly: flint.fmpq_poly, reduced: bool = False):
        self.m = m
        self.poly = poly if reduced else poly % cyclotomic_polynomial(m)
        self._hash = None

    @classmethod
    def zeta(cls, m: int, e: int = 1) -> "Cyclo":
        e %= m
        return cls(m, _Q([0] * e + [1]))

    @classmethod
    def from_int(cls, m: int, n) -> "Cyclo":
        if isinstance(n, Fraction):
            n = flint.fmpq(n.numerator, n.denominator)
        return cls(m, _Q([n]), reduced=True)

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.m != self.m:
                raise ValueError(f"mixing Q(zeta_{self.m}) and Q(zeta_{other.m})")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_int(self.m, other)
        return NotImplemented

    def __bool__(self):
        return not self.poly.is_zero()

    def is_zero(self):
        return self.poly.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo(self.m, self.poly + other.poly, reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.m, -self.poly, reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo(self.m, self.poly - other.poly, reduced=True)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo(self.m, other.poly - self.poly, reduced=True)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo(self.m, self.poly * other.poly)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        g, s, _ = self.poly.xgcd(cyclotomic_polynomial(self.m))
        # g is a nonzero constant because Phi_m is irreducible
        return Cyclo(self.m, s / g[0])

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
        result = Cyclo.from_int(self.m, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_int(self.m, other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self.m == other.m and self.poly == other.poly

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, tuple(str(c) for c in self.poly.coeffs())))
        return self._hash

    def coefficients(self) -> list[Fraction]:
        out = []
        for c in self.poly.coeffs():
            c = flint.fmpq(c)
            out.append(Fraction(int(c.p), int(c.q)))
        return out

    def __repr__(self):
        return f"Cyclo({self.m}, {self})"

    def __str__(self):
        coeffs = self.coefficients()
        pieces = []
        for e in range(len(coeffs) - 1, -1, -1):
            c = coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = str(c)
            else:
                var = "z" if e == 1 else f"z^{e}"
                body = var if c == 1 else f"{c}*{var}"
            if not pieces:
                pieces.append(("-" if sign == "-" else "") + body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces) or "0"
