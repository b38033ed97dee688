"""The finite quotient of D_q at a root of unity and its pairing.

With q^2 a primitive d-th root of unity the elements E^d, F^d, K^d - 1 and
Kt^d - 1 generate a Hopf ideal.  The quotient has basis E^a K^b Kt^c F^e
(all exponents below d); products are computed in D_q and then reduced.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg as la
from .hopf import coproduct
from .pairing import lower, pair, upper
from .pbw import DQ, UQ, PBWElement, _acc, mono_product
from .rep import ModuleError, WeightModule, check_relations, simple, z0_module
from .scalars import CyclotomicQ, FieldMode


class TaftError(ValueError):
    pass


def taft_field(d: int, q_order: int | None = None) -> CyclotomicQ:
    """Default q = zeta_(2d); ``q_order=d`` picks q = zeta_d (d odd)."""
    if d < 2:
        raise TaftError("d must be at least 2")
    order = q_order or 2 * d
    f = CyclotomicQ(order, 1)
    _check_field(d, f)
    return f


def _check_field(d: int, field: FieldMode) -> None:
    if not isinstance(field, CyclotomicQ):
        raise TaftError("a cyclotomic field is required")
    if field.q2_order != d:
        raise TaftError(f"q^2 has order {field.q2_order}, expected {d}")


def reduce_mod_ideal(x: PBWElement, d: int) -> PBWElement:
    """Image in the quotient: kill E^(>=d), F^(>=d); K, Kt exponents modulo d."""
    out: dict = {}
    for (a, c, dd, b), coef in x.terms.items():
        if a >= d or b >= d:
            continue
        key = (a, c % d, dd % d, b) if x.algebra == DQ else (a, c % d, 0, b)
        _acc(out, key, coef)
    return PBWElement(out, x.algebra, x.field)


@dataclass
class TaftDouble:
    d: int
    field: CyclotomicQ

    def __post_init__(self):
        _check_field(self.d, self.field)
        self._table: dict = {}

    @property
    def dimension(self) -> int:
        return len(self.basis())

    def basis(self) -> list:
        r = range(self.d)
        return list(itertools.product(r, r, r, r))

    def element(self, mono, coeff=1) -> PBWElement:
        a, c, dd, b = mono
        return PBWElement.monomial(a, c, dd, b, coeff=coeff, algebra=DQ, field=self.field)

    def reduce(self, x: PBWElement) -> PBWElement:
        return reduce_mod_ideal(x, self.d)

    def structure_constants(self, m1, m2) -> dict:
        key = (m1, m2)
        hit = self._table.get(key)
        if hit is None:
            prod = PBWElement(mono_product(m1, m2, DQ, self.field), DQ, self.field)
            hit = self._table[key] = dict(self.reduce(prod).terms)
        return hit

    def multiply(self, x: PBWElement, y: PBWElement) -> PBWElement:
        x, y = self.reduce(x), self.reduce(y)
        out: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                for m, c in self.structure_constants(m1, m2).items():
                    _acc(out, m, c1 * c2 * c)
        return PBWElement(out, DQ, self.field)

    def power(self, x: PBWElement, n: int) -> PBWElement:
        out = self.element((0, 0, 0, 0))
        for _ in range(n):
            out = self.multiply(out, x)
        return out

    def generators(self) -> dict:
        f = self.field
        return {"E": self.element((1, 0, 0, 0)), "F": self.element((0, 0, 0, 1)),
                "K": self.element((0, 1, 0, 0)), "Kt": self.element((0, 0, 1, 0)),
                "Kinv": self.element((0, self.d - 1, 0, 0)), "Ktinv": self.element((0, 0, self.d - 1, 0))}

    def check_relations(self) -> dict:
        """Relations of D_q evaluated with the quotient's structure constants."""
        g = self.generators()
        f = self.field
        mul = self.multiply
        one = self.element((0, 0, 0, 0))
        q2, qm2 = f.qpow(2), f.qpow(-2)
        rep = {
            "KE": mul(g["K"], g["E"]) == mul(g["E"], g["K"]).scale(q2),
            "KF": mul(g["K"], g["F"]) == mul(g["F"], g["K"]).scale(qm2),
            "KtE": mul(g["Kt"], g["E"]) == mul(g["E"], g["Kt"]).scale(q2),
            "KtF": mul(g["Kt"], g["F"]) == mul(g["F"], g["Kt"]).scale(qm2),
            "KKinv": mul(g["K"], g["Kinv"]) == one,
            "KtKtinv": mul(g["Kt"], g["Ktinv"]) == one,
            "KKt": mul(g["K"], g["Kt"]) == mul(g["Kt"], g["K"]),
            "EF": mul(g["E"], g["F"]) - mul(g["F"], g["E"])
                  == (g["K"] - g["Ktinv"]).scale(f.one / (f.q - f.qinv)),
            "E^d": not self.power(g["E"], self.d),
            "F^d": not self.power(g["F"], self.d),
            "K^d": self.power(g["K"], self.d) == one,
            "Kt^d": self.power(g["Kt"], self.d) == one,
        }
        return {"relations": rep, "pass": all(rep.values())}

    def check_associativity(self, triples) -> bool:
        for x, y, z in triples:
            if self.multiply(self.multiply(x, y), z) != self.multiply(x, self.multiply(y, z)):
                return False
        return True


def build_taft_double(d: int, field: FieldMode | None = None) -> TaftDouble:
    return TaftDouble(d, field if field is not None else taft_field(d))


def ideal_generators(d: int, field: FieldMode) -> dict:
    one = PBWElement.monomial(field=field)
    return {
        "E^d": PBWElement.monomial(a=d, field=field),
        "F^d": PBWElement.monomial(b=d, field=field),
        "K^d-1": PBWElement.monomial(c=d, field=field) - one,
        "Kt^d-1": PBWElement.monomial(d=d, field=field) - one,
    }


def hopf_ideal_check(d: int, field: FieldMode | None = None) -> dict:
    """Delta of each ideal generator vanishes once both legs are reduced."""
    field = field if field is not None else taft_field(d)
    out = {}
    for name, x in ideal_generators(d, field).items():
        t = coproduct(x)
        reduced: dict = {}
        for (m1, m2), c in t.terms.items():
            r1 = reduce_mod_ideal(PBWElement({m1: field.one}, t.algebra, field), d)
            r2 = reduce_mod_ideal(PBWElement({m2: field.one}, t.algebra, field), d)
            for n1, c1 in r1.terms.items():
                for n2, c2 in r2.terms.items():
                    _acc(reduced, (n1, n2), c * c1 * c2)
        out[name] = not reduced
    return out


# ---------------------------------------------------------------------------
# pairing at a root of unity
# ---------------------------------------------------------------------------


def _check_root(field: FieldMode):
    if not field.is_root_of_unity:
        raise TaftError("radical and Gram computations are for root-of-unity modes")


def radical_membership(x: PBWElement, d: int, field: FieldMode | None = None) -> bool:
    """True iff x pairs to zero with every F^a K^b (or E^a K^b for a lower x).

    K exponents only matter modulo d, and E/F degrees up to the degree of x.
    """
    field = field if field is not None else x.field
    _check_root(field)
    if x.algebra != UQ:
        raise TaftError("radical membership is for Borel elements of U_q")
    top = max([max(m[0], m[3]) for m in x.terms] + [d - 1])
    is_up = all(m[3] == 0 for m in x.terms)
    is_low = all(m[0] == 0 for m in x.terms)
    if not (is_up or is_low):
        raise TaftError("element is not in either Borel half")
    for a in range(top + 1):
        for b in range(d):
            if is_up and pair(x, lower({(a, b): 1}, field)):
                return False
            if is_low and pair(upper({(a, b): 1}, field), x):
                return False
    return True


@dataclass
class GramMatrix:
    d: int
    field: FieldMode
    index: list          # (a, b) labels for rows (E^a K^b) and columns (F^a K^b)
    matrix: list

    def block(self, a: int, a2: int) -> list:
        rows = [i for i, (x, _) in enumerate(self.index) if x == a]
        cols = [j for j, (x, _) in enumerate(self.index) if x == a2]
        return [[self.matrix[i][j] for j in cols] for i in rows]

    def to_json(self) -> list:
        return [[str(c) for c in row] for row in self.matrix]


def gram_matrix(d: int, field: FieldMode | None = None) -> GramMatrix:
    field = field if field is not None else taft_field(d)
    _check_root(field)
    idx = [(a, b) for a in range(d) for b in range(d)]
    M = [[pair(upper({r: 1}, field), lower({c: 1}, field)) for c in idx] for r in idx]
    return GramMatrix(d, field, idx, M)


def block_structure_ok(G: GramMatrix) -> bool:
    d = G.d
    return all(la.is_zero(G.block(a, a2)) for a in range(d) for a2 in range(d) if a != a2)


def vandermonde_form_ok(G: GramMatrix) -> bool:
    """Each diagonal block is c * q^(-2ab) q^(2ab') * (q^(2b))^(b'), a Vandermonde matrix up to scaling."""
    f, d = G.field, G.d
    for a in range(d):
        B = G.block(a, a)
        c = B[0][0]
        if not c:
            return False
        for b in range(d):
            for b2 in range(d):
                want = c * f.qpow(-2 * a * b + 2 * a * b2) * f.qpow(2 * b) ** b2
                if B[b][b2] != want:
                    return False
    return True


def determinant(G: GramMatrix):
    return la.det_bareiss(G.matrix, G.field)


def nondegenerate(G: GramMatrix) -> bool:
    return bool(determinant(G))


# ---------------------------------------------------------------------------
# simple modules of the quotient
# ---------------------------------------------------------------------------


def kills_ideal(M: WeightModule, d: int) -> dict:
    f = M.field
    E_ok = la.is_zero(la.mat_pow(M.E, d, f))
    F_ok = la.is_zero(la.mat_pow(M.F, d, f))
    K_ok = all(w ** d == f.one for w in M.k_weights)
    Kt_ok = all(w ** d == f.one for w in M.kt_weights)
    return {"E^d": E_ok, "F^d": F_ok, "K^d-1": K_ok, "Kt^d-1": Kt_ok}


def is_simple_brute_force(M: WeightModule) -> bool:
    """Simplicity of a weight module whose joint weight spaces are one-dimensional.

    Every submodule is then spanned by basis vectors, so M is simple iff the
    E/F-closure of each basis vector is everything.
    """
    weights = list(zip(M.k_weights, M.kt_weights))
    if len(set(weights)) != len(weights):
        raise ModuleError("brute-force simplicity needs one-dimensional weight spaces")
    n = M.dim
    for start in range(n):
        seen = {start}
        todo = [start]
        while todo:
            j = todo.pop()
            for mat in (M.E, M.F):
                for i in range(n):
                    if mat[i][j] and i not in seen:
                        seen.add(i)
                        todo.append(i)
        if len(seen) != n:
            return False
    return True


@dataclass
class InventoryEntry:
    label: str
    module: WeightModule
    relations_ok: bool
    ideal: dict
    simple: bool | None


def simple_inventory(d: int, field: FieldMode | None = None, lambdas=(), roots=None) -> list:
    """L_z(n, +-) for n < d and Z-family members at the sample parameters.

    Without explicit roots the L-modules use s = sign * q^(-n), the root for
    which K^d and Kt^d act trivially; the Z-family then uses s = 1.
    """
    field = field if field is not None else taft_field(d)
    _check_field(d, field)
    out = []

    def add(label, M):
        simple_flag = is_simple_brute_force(M) if d <= 3 else None
        out.append(InventoryEntry(label, M, check_relations(M)["pass"], kills_ideal(M, d), simple_flag))

    for sign in (1, -1):
        sg = "+" if sign > 0 else "-"
        for n in range(d):
            for s in (roots if roots is not None else [field.qpow(-n) * sign]):
                add(f"L(n={n},{sg},s={s})", simple(s, n, sign, field))
        for s in (roots if roots is not None else [field.one]):
            for lam in lambdas:
                add(f"Z0({sg},s={s},lam={lam})", z0_module(s, sign, lam, d, field))
    return out
