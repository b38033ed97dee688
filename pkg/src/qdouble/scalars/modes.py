"""Coefficient fields.

A field mode fixes where scalars live and what the quantum parameter ``q``
is.  All algebra code is written against the small interface shared by the
three modes: ``one``, ``zero``, ``q``, ``qpow(n)``, ``coerce(x)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclo import Cyclo
from .ratfunc import ONE, ZERO, RatFunc, v_power


class VanishingDenominator(ZeroDivisionError):
    """A denominator specializes to zero at the chosen value of q."""


class FieldMode:
    kind: str = ""
    is_root_of_unity = False

    def coerce(self, x):
        raise NotImplementedError

    def __call__(self, x):
        return self.coerce(x)

    @property
    def qinv(self):
        return self.qpow(-1)

    def qint(self, n: int):
        """Balanced quantum integer (q^n - q^-n)/(q - q^-1)."""
        return self._qint(n)

    def describe(self) -> str:
        raise NotImplementedError


class SymbolicV(FieldMode):
    """Q(v): rational functions in the indeterminate v."""

    kind = "symbolic"

    def __init__(self):
        self.one = ONE
        self.zero = ZERO
        self.q = v_power(1)

    def coerce(self, x) -> RatFunc:
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into Q(v)")

    def qpow(self, n: int) -> RatFunc:
        return v_power(n)

    @lru_cache(maxsize=None)
    def _qint(self, n: int) -> RatFunc:
        # [n] = v^(n-1) + v^(n-3) + ... + v^(1-n) as an exact Laurent polynomial
        if n == 0:
            return ZERO
        sign = 1 if n > 0 else -1
        m = abs(n)
        return RatFunc.laurent({m - 1 - 2 * i: sign for i in range(m)})

    def __eq__(self, other):
        return isinstance(other, SymbolicV)

    def __hash__(self):
        return hash("SymbolicV")

    def __repr__(self):
        return "SymbolicV()"

    def describe(self):
        return "symbolic"


class RationalQ(FieldMode):
    """The rationals with q a fixed nonzero rational, q^2 != 1."""

    kind = "rational"

    def __init__(self, q):
        q = Fraction(q)
        if q == 0 or q * q == 1:
            raise ValueError(f"q must be nonzero with q^2 != 1, got {q}")
        self.q = q
        self.one = Fraction(1)
        self.zero = Fraction(0)

    def coerce(self, x) -> Fraction:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def qpow(self, n: int) -> Fraction:
        return self.q ** n

    def _qint(self, n: int) -> Fraction:
        q = self.q
        return (q ** n - q ** -n) / (q - 1 / q)

    def __eq__(self, other):
        return isinstance(other, RationalQ) and other.q == self.q

    def __hash__(self):
        return hash(("RationalQ", self.q))

    def __repr__(self):
        return f"RationalQ({self.q})"

    def describe(self):
        return f"rational:{self.q}"


class CyclotomicQ(FieldMode):
    """Q(zeta_m) with q = zeta_m^e, subject to q^2 != 1."""

    kind = "cyclotomic"
    is_root_of_unity = True

    def __init__(self, m: int, e: int = 1):
        if m < 1:
            raise ValueError("cyclotomic order must be positive")
        e %= m
        if (2 * e) % m == 0:
            raise ValueError(f"q = zeta_{m}^{e} has q^2 = 1")
        self.m = m
        self.e = e
        self.one = Cyclo.from_int(m, 1)
        self.zero = Cyclo.from_int(m, 0)
        self.q = Cyclo.zeta(m, e)
        self._powers = {}

    def coerce(self, x) -> Cyclo:
        if isinstance(x, Cyclo):
            if x.m != self.m:
                raise ValueError("element of a different cyclotomic field")
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclo.from_int(self.m, x)
        raise TypeError(f"cannot coerce {x!r} into Q(zeta_{self.m})")

    def qpow(self, n: int) -> Cyclo:
        k = (n * self.e) % self.m
        p = self._powers.get(k)
        if p is None:
            p = self._powers[k] = Cyclo.zeta(self.m, k)
        return p

    def zeta(self, k: int = 1) -> Cyclo:
        return Cyclo.zeta(self.m, k)

    def _qint(self, n: int) -> Cyclo:
        q = self.q
        return (self.qpow(n) - self.qpow(-n)) / (q - self.qpow(-1))

    @property
    def q_order(self) -> int:
        from math import gcd
        return self.m // gcd(self.m, self.e)

    @property
    def q2_order(self) -> int:
        """Multiplicative order of q^2."""
        from math import gcd
        return self.m // gcd(self.m, 2 * self.e)

    def __eq__(self, other):
        return isinstance(other, CyclotomicQ) and (other.m, other.e) == (self.m, self.e)

    def __hash__(self):
        return hash(("CyclotomicQ", self.m, self.e))

    def __repr__(self):
        return f"CyclotomicQ({self.m}, {self.e})"

    def describe(self):
        return f"cyclotomic:{self.m}:{self.e}"


SYMBOLIC = SymbolicV()


def parse_mode(text: str) -> FieldMode:
    """Parse ``symbolic``, ``rational:<q>`` or ``cyclotomic:<m>:<e>``."""
    parts = text.strip().split(":")
    if parts[0] == "symbolic" and len(parts) == 1:
        return SYMBOLIC
    if parts[0] == "rational" and len(parts) == 2:
        return RationalQ(Fraction(parts[1]))
    if parts[0] == "cyclotomic" and len(parts) in (2, 3):
        e = int(parts[2]) if len(parts) == 3 else 1
        return CyclotomicQ(int(parts[1]), e)
    raise ValueError(f"unknown mode {text!r}")
