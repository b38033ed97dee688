"""Coproduct, counit and antipode of D_q and U_q.

Tensor elements store tuples of normal monomials; multiplication is
leg-wise.  Powers ``Delta(E^a)``, ``Delta(F^b)``, ``S(E^a)`` and ``S(F^b)`` are
memoized per field and algebra.
"""

from __future__ import annotations

from typing import Callable

from .pbw import DQ, UQ, ONE_MONO, PBWElement, _acc, format_monomial, format_sum, mono_product
from .scalars import FieldMode, scalar_from_json, scalar_to_json


class TensorElement:
    """Sparse sum of scalars times tuples of normal monomials."""

    __slots__ = ("legs", "algebra", "field", "terms")

    def __init__(self, terms: dict, legs: int, algebra: str, field: FieldMode):
        self.legs = legs
        self.algebra = algebra
        self.field = field
        self.terms = {}
        for k, c in terms.items():
            if len(k) != legs:
                raise ValueError("leg count mismatch")
            _acc(self.terms, k, c)

    @classmethod
    def pure(cls, *elements: PBWElement) -> "TensorElement":
        """The tensor product of the given elements."""
        first = elements[0]
        out = {(): first.field.one}
        for x in elements:
            nxt: dict = {}
            for k, c in out.items():
                for m, cm in x.terms.items():
                    _acc(nxt, k + (m,), c * cm)
            out = nxt
        return cls(out, len(elements), first.algebra, first.field)

    def _like(self, terms):
        out = TensorElement.__new__(TensorElement)
        out.legs, out.algebra, out.field, out.terms = self.legs, self.algebra, self.field, terms
        return out

    def _check(self, other):
        if (other.legs, other.algebra, other.field) != (self.legs, self.algebra, self.field):
            raise ValueError("incompatible tensor elements")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, c)
        return self._like(t)

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if not s:
            return self._like({})
        return self._like({k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                prods = [mono_product(m1, m2, self.algebra, self.field) for m1, m2 in zip(k1, k2)]
                acc = {(): c1 * c2}
                for p in prods:
                    nxt: dict = {}
                    for k, c in acc.items():
                        for m, cm in p.items():
                            _acc(nxt, k + (m,), c * cm)
                    acc = nxt
                for k, c in acc.items():
                    _acc(out, k, c)
        return self._like(out)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.legs, self.algebra, self.field, self.terms) == (other.legs, other.algebra, other.field, other.terms)

    def __hash__(self):
        return hash((self.legs, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def map_legs(self, *maps: Callable[[PBWElement], object], out_legs: int | None = None) -> "TensorElement":
        """Apply linear maps leg by leg; each map returns a PBWElement (or a scalar to drop that leg)."""
        if len(maps) != self.legs:
            raise ValueError("need one map per leg")
        out: dict = {}
        algebra = self.algebra
        for key, coef in self.terms.items():
            acc = {(): coef}
            for m, f in zip(key, maps):
                img = f(PBWElement({m: self.field.one}, self.algebra, self.field))
                nxt: dict = {}
                if isinstance(img, PBWElement):
                    algebra = img.algebra
                    for k, c in acc.items():
                        for mm, cm in img.terms.items():
                            _acc(nxt, k + (mm,), c * cm)
                else:
                    for k, c in acc.items():
                        _acc(nxt, k, c * img)
                acc = nxt
            for k, c in acc.items():
                _acc(out, k, c)
        if out:
            out_legs = len(next(iter(out)))
        elif out_legs is None:
            out_legs = self.legs
        return TensorElement(out, out_legs, algebra, self.field)

    def multiply_legs(self) -> PBWElement:
        """The multiplication map applied to all legs in order."""
        out: dict = {}
        for key, coef in self.terms.items():
            acc = {ONE_MONO: coef}
            for m in key:
                nxt: dict = {}
                for am, ac in acc.items():
                    for pm, pc in mono_product(am, m, self.algebra, self.field).items():
                        _acc(nxt, pm, ac * pc)
                acc = nxt
            for k, c in acc.items():
                _acc(out, k, c)
        return PBWElement(out, self.algebra, self.field)

    def sorted_terms(self):
        from .pbw import _mono_key
        return sorted(self.terms.items(), key=lambda t: tuple(_mono_key(m) for m in t[0]), reverse=True)

    def __str__(self):
        return format_sum((c, "[" + " (x) ".join(format_monomial(m, self.algebra) or "1" for m in k) + "]")
                          for k, c in self.sorted_terms())

    def __repr__(self):
        return f"TensorElement({self})"

    def to_json(self) -> dict:
        def mono(m):
            return list(m) if self.algebra == DQ else [m[0], m[1], m[3]]
        return {
            "legs": self.legs,
            "algebra": self.algebra,
            "terms": [{"monos": [mono(m) for m in k], "coeff": scalar_to_json(c)} for k, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj, field: FieldMode) -> "TensorElement":
        algebra = obj.get("algebra", DQ)
        terms = {}
        for t in obj["terms"]:
            key = tuple(tuple(m) if algebra == DQ else (m[0], m[1], 0, m[2]) for m in t["monos"])
            _acc(terms, key, scalar_from_json(t["coeff"], field))
        return cls(terms, obj["legs"], algebra, field)


Tensor3Element = TensorElement


# ---------------------------------------------------------------------------


class _HopfCache:
    def __init__(self, algebra: str, field: FieldMode):
        self.algebra = algebra
        self.field = field
        self.delta_e = {0: self._unit2()}
        self.delta_f = {0: self._unit2()}
        self.s_e = {0: PBWElement.scalar(1, algebra, field)}
        self.s_f = {0: PBWElement.scalar(1, algebra, field)}
        self.sinv_e = {0: PBWElement.scalar(1, algebra, field)}
        self.sinv_f = {0: PBWElement.scalar(1, algebra, field)}
        self.delta_mono: dict = {}
        self._sinv_gens = None

    def _unit2(self):
        return TensorElement({(ONE_MONO, ONE_MONO): self.field.one}, 2, self.algebra, self.field)

    def gen(self, a=0, c=0, d=0, b=0, coeff=None):
        if self.algebra == UQ and d:
            c, d = c + d, 0
        return PBWElement.monomial(a, c, d, b, coeff=coeff, algebra=self.algebra, field=self.field)

    # generator values
    def delta_gen(self, name):
        one = self.field.one
        kt_inv = (0, 0, -1, 0) if self.algebra == DQ else (0, -1, 0, 0)
        if name == "E":
            terms = {((1, 0, 0, 0), ONE_MONO): one, ((0, 1, 0, 0), (1, 0, 0, 0)): one}
        elif name == "F":
            terms = {((0, 0, 0, 1), kt_inv): one, (ONE_MONO, (0, 0, 0, 1)): one}
        else:
            raise KeyError(name)
        return TensorElement(terms, 2, self.algebra, self.field)

    def delta_power(self, which: str, n: int) -> TensorElement:
        table = self.delta_e if which == "E" else self.delta_f
        if n not in table:
            table[n] = self.delta_power(which, n - 1) * self.delta_gen(which)
        return table[n]

    def antipode_gen(self, name: str) -> PBWElement:
        if name == "E":
            return -(self.gen(c=-1) * self.gen(a=1))                    # -K^-1 E
        if name == "F":
            kt = self.gen(d=1) if self.algebra == DQ else self.gen(c=1)
            return -(self.gen(b=1) * kt)                                # -F Kt
        raise KeyError(name)

    def sinv_gen(self, name: str) -> PBWElement:
        """S^-1 on E, F, derived from S: S^2(g) = lambda g, so S^-1(g) = lambda^-1 S(g)."""
        if self._sinv_gens is None:
            vals = {}
            for g in ("E", "F"):
                base = self.gen(a=1) if g == "E" else self.gen(b=1)
                s2 = antipode(antipode(base))
                ((mono, lam),) = s2.terms.items()
                assert mono == next(iter(base.terms)), "S^2 must rescale generators"
                vals[g] = self.antipode_gen(g).scale(self.field.one / lam)
            self._sinv_gens = vals
        return self._sinv_gens[name]

    def s_power(self, which: str, n: int, inverse: bool) -> PBWElement:
        if inverse:
            table = self.sinv_e if which == "E" else self.sinv_f
        else:
            table = self.s_e if which == "E" else self.s_f
        if n not in table:
            g = self.sinv_gen(which) if inverse else self.antipode_gen(which)
            # anti-multiplicative: S(g^n) = S(g) S(g^(n-1))
            table[n] = g * self.s_power(which, n - 1, inverse)
        return table[n]


_CACHES: dict = {}


def _cache(algebra: str, field: FieldMode) -> _HopfCache:
    key = (algebra, field)
    c = _CACHES.get(key)
    if c is None:
        c = _CACHES[key] = _HopfCache(algebra, field)
    return c


def _mono_coproduct(h: _HopfCache, m: tuple) -> TensorElement:
    got = h.delta_mono.get(m)
    if got is not None:
        return got
    a, c, d, b = m
    g = (0, c, d, 0)
    grouplike = TensorElement({(g, g): h.field.one}, 2, h.algebra, h.field)
    out = h.delta_power("E", a) * grouplike * h.delta_power("F", b)
    h.delta_mono[m] = out
    return out


def coproduct(x: PBWElement) -> TensorElement:
    """Delta, extended multiplicatively from the generators."""
    h = _cache(x.algebra, x.field)
    out: dict = {}
    for m, coef in x.terms.items():
        for k, c in _mono_coproduct(h, m).terms.items():
            _acc(out, k, coef * c)
    return TensorElement(out, 2, x.algebra, x.field)


def coproduct2(x: PBWElement) -> TensorElement:
    """(Delta (x) id) Delta."""
    h = _cache(x.algebra, x.field)
    out: dict = {}
    for (m1, m2), coef in coproduct(x).terms.items():
        for (p1, p2), c in _mono_coproduct(h, m1).terms.items():
            _acc(out, (p1, p2, m2), coef * c)
    return TensorElement(out, 3, x.algebra, x.field)


def coproduct2_right(x: PBWElement) -> TensorElement:
    """(id (x) Delta) Delta, for coassociativity checks."""
    h = _cache(x.algebra, x.field)
    out: dict = {}
    for (m1, m2), coef in coproduct(x).terms.items():
        for (p1, p2), c in _mono_coproduct(h, m2).terms.items():
            _acc(out, (m1, p1, p2), coef * c)
    return TensorElement(out, 3, x.algebra, x.field)


def counit(x: PBWElement):
    total = x.field.zero
    for (a, c, d, b), coef in x.terms.items():
        if a == 0 and b == 0:
            total = total + coef
    return total


def antipode(x: PBWElement, power: int = 1) -> PBWElement:
    """S (power=1) or its inverse (power=-1), as an anti-algebra map."""
    if power not in (1, -1):
        raise ValueError("power must be +1 or -1")
    h = _cache(x.algebra, x.field)
    inverse = power == -1
    out = PBWElement({}, x.algebra, x.field)
    for (a, c, d, b), coef in x.terms.items():
        # S(E^a K^c Kt^d F^b) = S(F)^b S(Kt)^d S(K)^c S(E)^a
        g = h.gen(c=-c, d=-d)
        term = h.s_power("F", b, inverse) * g * h.s_power("E", a, inverse)
        out = out + term.scale(coef)
    return out


def apply_pi_tensor(t: TensorElement) -> TensorElement:
    from .pbw import project_pi
    return t.map_legs(*([project_pi] * t.legs))


def _leg_product(t: TensorElement, first, second) -> PBWElement:
    """m o (first (x) second) on a two-leg tensor."""
    out = PBWElement({}, t.algebra, t.field)
    for (m1, m2), c in t.terms.items():
        x1 = PBWElement({m1: t.field.one}, t.algebra, t.field)
        x2 = PBWElement({m2: t.field.one}, t.algebra, t.field)
        out = out + (first(x1) * second(x2)).scale(c)
    return out


def check_hopf_axioms(x: PBWElement, y: PBWElement | None = None) -> dict:
    """Coassociativity, counit, antipode and (with y) the multiplicativity identities."""
    one = PBWElement.scalar(x.field.one, x.algebra, x.field)
    eps_one = one.scale(counit(x))
    ident = lambda z: z
    as_scalar = lambda z: one.scale(counit(z))
    d = coproduct(x)
    rep = {
        "coassociative": coproduct2(x) == coproduct2_right(x),
        "counit_left": _leg_product(d, as_scalar, ident) == x,
        "counit_right": _leg_product(d, ident, as_scalar) == x,
        "antipode_left": _leg_product(d, antipode, ident) == eps_one,
        "antipode_right": _leg_product(d, ident, antipode) == eps_one,
        "antipode_inverse": antipode(antipode(x), -1) == x and antipode(antipode(x, -1)) == x,
    }
    if y is not None:
        rep["coproduct_multiplicative"] = coproduct(x * y) == coproduct(x) * coproduct(y)
        rep["antipode_antimultiplicative"] = antipode(x * y) == antipode(y) * antipode(x)
        rep["counit_multiplicative"] = counit(x * y) == counit(x) * counit(y)
    return rep


__all__ = [
    "TensorElement", "Tensor3Element", "coproduct", "coproduct2", "coproduct2_right",
    "counit", "antipode", "apply_pi_tensor", "check_hopf_axioms",
]
