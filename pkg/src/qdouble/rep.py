"""Weight modules of D_q: Vermas, simples, characters, tensor products.

A module stores a basis ``m_0 .. m_{dim-1}``, the K and Kt eigenvalue of
each basis vector, and dense matrices for E and F (column j is the image of
m_j).  The chosen square root ``s`` of the central character is always an
explicit input.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import linalg as la
from .pbw import DQ, PBWElement
from .scalars import SYMBOLIC, CyclotomicQ, FieldMode, RatFunc, RationalQ, SymbolicV


class NonScalarAction(ValueError):
    pass


class ModuleError(ValueError):
    pass


@dataclass
class WeightModule:
    field: FieldMode
    k_weights: list
    kt_weights: list
    E: list
    F: list
    meta: dict = dc_field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.k_weights)

    @property
    def truncated(self) -> bool:
        return bool(self.meta.get("truncated"))

    def K(self):
        return la.diag(self.k_weights, self.field)

    def Kt(self):
        return la.diag(self.kt_weights, self.field)

    def Kinv(self):
        return la.diag([self.field.one / w for w in self.k_weights], self.field)

    def Ktinv(self):
        return la.diag([self.field.one / w for w in self.kt_weights], self.field)

    def generator_matrix(self, name: str):
        return {"E": lambda: self.E, "F": lambda: self.F, "K": self.K, "Kt": self.Kt,
                "Kinv": self.Kinv, "Ktinv": self.Ktinv}[name]()

    def matrix_of(self, x: PBWElement):
        """Matrix of a D_q element acting on the module."""
        if x.algebra != DQ:
            raise ModuleError("modules here are D_q-modules")
        f = self.field
        n = self.dim
        out = la.zeros(n, n, f)
        epow = {0: la.identity(n, f)}
        fpow = {0: la.identity(n, f)}
        for (a, c, d, b), coef in x.terms.items():
            for table, mat, k in ((epow, self.E, a), (fpow, self.F, b)):
                while k not in table:
                    j = max(table)
                    table[j + 1] = la.mat_mul(table[j], mat, f)
            group = [self.k_weights[i] ** c * self.kt_weights[i] ** d for i in range(n)]
            middle = [[epow[a][i][j] * group[j] for j in range(n)] for i in range(n)]
            term = la.mat_mul(middle, fpow[b], f)
            out = la.mat_add(out, la.mat_scale(term, coef))
        return out

    def basis_vector(self, i: int) -> list:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def to_json(self) -> dict:
        from .scalars import scalar_to_json
        sj = scalar_to_json
        meta = {}
        for k, v in self.meta.items():
            meta[k] = v if isinstance(v, (int, str, bool, type(None))) else sj(v)
        return {
            "dim": self.dim,
            "k_weights": [sj(w) for w in self.k_weights],
            "kt_weights": [sj(w) for w in self.kt_weights],
            "E": [[sj(x) for x in row] for row in self.E],
            "F": [[sj(x) for x in row] for row in self.F],
            "meta": meta,
        }


def _sgn(sign) -> int:
    if sign in (1, "+", "plus"):
        return 1
    if sign in (-1, "-", "minus"):
        return -1
    raise ModuleError(f"sign must be + or -, got {sign!r}")


def _scalar(x, field: FieldMode):
    return field.coerce(x) if isinstance(x, (int, Fraction)) else x


def _check_nonzero(**kw):
    for k, v in kw.items():
        if not v:
            raise ModuleError(f"{k} must be nonzero")


def _q2_order(field: FieldMode):
    return field.q2_order if isinstance(field, CyclotomicQ) else None


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def verma(s, sign, lam, trunc: int, field: FieldMode = SYMBOLIC) -> WeightModule:
    """First ``trunc`` basis vectors of the Verma module with highest weight data (s, sign, lam)."""
    sg = _sgn(sign)
    s, lam = _scalar(s, field), _scalar(lam, field)
    _check_nonzero(s=s, lam=lam)
    if trunc < 1:
        raise ModuleError("trunc must be positive")
    q = field.q
    qd = q - field.qinv
    n = trunc
    kw = [s * lam * field.qpow(-2 * i) * sg for i in range(n)]
    ktw = [lam / s * field.qpow(-2 * i) * sg for i in range(n)]
    E = la.zeros(n, n, field)
    F = la.zeros(n, n, field)
    for i in range(n):
        if i + 1 < n:
            F[i + 1][i] = field.one
        if i >= 1:
            val = field.qint(i) * s * (lam * field.qpow(1 - i) - field.qpow(i - 1) / lam) / qd
            E[i - 1][i] = val * sg
    return WeightModule(field, kw, ktw, E, F, {"kind": "Verma", "s": s, "sign": sg, "lam": lam,
                                               "trunc": trunc, "truncated": True})


def simple(s, n: int, sign, field: FieldMode = SYMBOLIC) -> WeightModule:
    """The (n+1)-dimensional simple L_z(n, sign) with chosen root s."""
    sg = _sgn(sign)
    s = _scalar(s, field)
    _check_nonzero(s=s)
    if n < 0:
        raise ModuleError("n must be non-negative")
    d = _q2_order(field)
    if d is not None and n >= d:
        raise ModuleError(f"at a root of unity with q^2 of order {d} need n < {d}")
    dim = n + 1
    kw = [s * field.qpow(n - 2 * i) * sg for i in range(dim)]
    ktw = [field.qpow(n - 2 * i) / s * sg for i in range(dim)]
    E = la.zeros(dim, dim, field)
    F = la.zeros(dim, dim, field)
    for i in range(dim):
        if i + 1 < dim:
            F[i + 1][i] = field.one
        if i >= 1:
            E[i - 1][i] = s * field.qint(i) * field.qint(n + 1 - i) * sg
    return WeightModule(field, kw, ktw, E, F, {"kind": "Simple", "s": s, "sign": sg, "n": n})


def one_dim(s, sign, field: FieldMode = SYMBOLIC) -> WeightModule:
    sg = _sgn(sign)
    s = _scalar(s, field)
    _check_nonzero(s=s)
    z = la.zeros(1, 1, field)
    return WeightModule(field, [s * sg], [field.one / s * sg], z, [row[:] for row in z],
                        {"kind": "OneDim", "s": s, "sign": sg, "n": 0})


def z0_module(s, sign, lam, d: int | None = None, field: FieldMode | None = None) -> WeightModule:
    """Quotient of the Verma module by the submodule generated by m_d (q^2 of order d)."""
    if not isinstance(field, CyclotomicQ):
        raise ModuleError("the Z-family needs a cyclotomic field with q^2 a root of unity")
    order = field.q2_order
    if d is None:
        d = order
    if d != order or d < 2:
        raise ModuleError(f"q^2 has order {order}, not {d}")
    lamv = _scalar(lam, field)
    _check_nonzero(lam=lamv)
    if lamv ** (2 * d) == field.one:
        raise ModuleError("lambda^(2d) = 1 is excluded from the Z-family")
    M = verma(s, sign, lamv, d, field)
    # E m_d is a multiple of [d] = 0, so the span of m_i (i >= d) is a submodule
    M.meta.update({"kind": "Z0", "d": d, "truncated": False})
    return M


# ---------------------------------------------------------------------------
# U_q modules and pullbacks
# ---------------------------------------------------------------------------


@dataclass
class UqModule:
    field: FieldMode
    k_weights: list
    E: list
    F: list


def uq_simple(n: int, sign, field: FieldMode = SYMBOLIC) -> UqModule:
    sg = _sgn(sign)
    dim = n + 1
    kw = [field.qpow(n - 2 * i) * sg for i in range(dim)]
    E = la.zeros(dim, dim, field)
    F = la.zeros(dim, dim, field)
    for i in range(dim):
        if i + 1 < dim:
            F[i + 1][i] = field.one
        if i >= 1:
            E[i - 1][i] = field.qint(i) * field.qint(n + 1 - i) * sg
    return UqModule(field, kw, E, F)


def pullback(U: UqModule, s, sign) -> WeightModule:
    """Pull a U_q-module back along E -> sE, K -> sK, Kt -> s^-1 K (signed by ``sign``)."""
    sg = _sgn(sign)
    f = U.field
    s = _scalar(s, f)
    _check_nonzero(s=s)
    kw = [w * s * sg for w in U.k_weights]
    ktw = [w / s * sg for w in U.k_weights]
    E = la.mat_scale(U.E, s * sg)
    return WeightModule(f, kw, ktw, E, [r[:] for r in U.F], {"kind": "Other", "s": s, "sign": sg})


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------


def check_relations(M: WeightModule) -> dict:
    """Evaluate every defining relation on M; truncated Vermas exempt the last column of EF - FE."""
    f = M.field
    q2, qm2 = f.qpow(2), f.qpow(-2)
    E, F, K, Kt = M.E, M.F, M.K(), M.Kt()
    mm = lambda A, B: la.mat_mul(A, B, f)
    rep = {}
    rep["KE"] = la.mat_eq(mm(K, E), la.mat_scale(mm(E, K), q2))
    rep["KF"] = la.mat_eq(mm(K, F), la.mat_scale(mm(F, K), qm2))
    rep["KtE"] = la.mat_eq(mm(Kt, E), la.mat_scale(mm(E, Kt), q2))
    rep["KtF"] = la.mat_eq(mm(Kt, F), la.mat_scale(mm(F, Kt), qm2))
    ident = la.identity(M.dim, f)
    rep["KKinv"] = la.mat_eq(mm(K, M.Kinv()), ident)
    rep["KtKtinv"] = la.mat_eq(mm(Kt, M.Ktinv()), ident)
    rep["KKt"] = la.mat_eq(mm(K, Kt), mm(Kt, K))
    lhs = la.mat_sub(mm(E, F), mm(F, E))
    rhs = la.mat_scale(la.mat_sub(K, M.Ktinv()), f.one / (f.q - f.qinv))
    exempt = []
    if M.truncated:
        last = M.dim - 1
        lhs = [row[:last] for row in lhs]
        rhs = [row[:last] for row in rhs]
        exempt.append(f"EF-FE column m_{last}")
    rep["EF"] = la.mat_eq(lhs, rhs)
    rep["weight"] = True  # K and Kt are diagonal by construction
    return {"relations": rep, "pass": all(rep.values()), "exempt": exempt}


def casimir() -> PBWElement:
    return casimir_in(SYMBOLIC)


def casimir_in(field: FieldMode) -> PBWElement:
    """C = F E + (K q + Kt^-1 q^-1)/(q - q^-1)^2."""
    q = field.q
    d2 = (q - field.qinv) ** 2
    F = PBWElement.generator("F", field=field)
    E = PBWElement.generator("E", field=field)
    K = PBWElement.monomial(c=1, field=field)
    Kti = PBWElement.monomial(d=-1, field=field)
    return F * E + (K.scale(q) + Kti.scale(field.qinv)).scale(field.one / d2)


def casimir_ef_form(field: FieldMode = SYMBOLIC) -> PBWElement:
    q = field.q
    d2 = (q - field.qinv) ** 2
    E = PBWElement.generator("E", field=field)
    F = PBWElement.generator("F", field=field)
    K = PBWElement.monomial(c=1, field=field)
    Kti = PBWElement.monomial(d=-1, field=field)
    return E * F + (K.scale(field.qinv) + Kti.scale(q)).scale(field.one / d2)


def central_scalar(M: WeightModule):
    C = M.matrix_of(casimir_in(M.field))
    c0 = C[0][0]
    cols = M.dim - 1 if M.truncated else M.dim  # F m_last is cut off in a truncation
    for i in range(M.dim):
        for j in range(cols):
            want = c0 if i == j else M.field.zero
            if C[i][j] != want:
                raise NonScalarAction("C does not act by a scalar")
    return c0


def verma_central_value(s, sign, lam, field: FieldMode = SYMBOLIC):
    """sign s (q lam + q^-1 lam^-1) / (q - q^-1)^2."""
    s, lam = _scalar(s, field), _scalar(lam, field)
    return s * (field.q * lam + field.qinv / lam) / (field.q - field.qinv) ** 2 * _sgn(sign)


def simple_central_value(s, n: int, field: FieldMode = SYMBOLIC):
    """s (q^(n+1) + q^(-n-1)) / (q - q^-1)^2."""
    s = _scalar(s, field)
    return s * (field.qpow(n + 1) + field.qpow(-n - 1)) / (field.q - field.qinv) ** 2


# ---------------------------------------------------------------------------
# tensor products and decomposition
# ---------------------------------------------------------------------------


def tensor(M: WeightModule, N: WeightModule) -> WeightModule:
    """Module structure on M (x) N through the coproduct."""
    if M.field != N.field:
        raise ModuleError("field mismatch")
    f = M.field
    kr = lambda A, B: la.kron(A, B, f)
    IM, IN = la.identity(M.dim, f), la.identity(N.dim, f)
    E = la.mat_add(kr(M.E, IN), kr(M.K(), N.E))
    F = la.mat_add(kr(M.F, N.Ktinv()), kr(IM, N.F))
    kw = [a * b for a in M.k_weights for b in N.k_weights]
    ktw = [a * b for a in M.kt_weights for b in N.kt_weights]
    meta = {"kind": "Tensor", "truncated": M.truncated or N.truncated}
    if "s" in M.meta and "s" in N.meta:
        meta["s"] = M.meta["s"] * N.meta["s"]
    return WeightModule(f, kw, ktw, E, F, meta)


@dataclass
class DecompositionResult:
    components: Counter
    residual: bool
    certificates: list = dc_field(default_factory=list)

    def labels(self) -> list:
        out = []
        for (n, sign, s), mult in sorted(self.components.items(), key=lambda t: (-t[0][0], -t[0][1])):
            out.extend([(n, sign, s)] * mult)
        return out

    def dimension(self) -> int:
        return sum((n + 1) * m for (n, _, _), m in self.components.items())


def _solve_power(x, field: FieldMode, base_exp: int, limit: int):
    """Find n in [0, limit] with x == q^(base_exp * n), else None."""
    for n in range(limit + 1):
        if x == field.qpow(base_exp * n):
            return n
    return None


def decompose(M: WeightModule, s_target=None) -> DecompositionResult:
    """Split a finite-dimensional weight module into simples via highest-weight vectors."""
    f = M.field
    if f.is_root_of_unity:
        raise ModuleError("decompose is only valid when q is not a root of unity")
    if M.truncated:
        raise ModuleError("cannot decompose a truncated Verma module")
    s2 = s_target if s_target is not None else M.meta.get("s")
    if s2 is None:
        raise ModuleError("no chosen square root available; pass s_target")
    s2 = _scalar(s2, f)
    weights: dict = {}
    for i, key in enumerate(zip(M.k_weights, M.kt_weights)):
        weights.setdefault(key, []).append(i)
    comps: Counter = Counter()
    spanned = []
    certs = []
    residual = False
    for (kappa, kt), idx in weights.items():
        # E restricted to the weight space
        sub = [[M.E[r][c] for c in idx] for r in range(M.dim)]
        for vec_sub in la.nullspace(sub, f, ncols=len(idx)):
            w = [f.zero] * M.dim
            for c, val in zip(idx, vec_sub):
                w[c] = val
            n = _solve_power(kappa * kt, f, 2, M.dim)
            # L(n, sign) with root s'' has K = sign s'' q^(n-2i), Kt = sign q^(n-2i) / s''
            if n is None or kappa != s2 * s2 * kt:
                residual = True
                continue
            if kappa == s2 * f.qpow(n):
                sign = 1
            elif kappa == -s2 * f.qpow(n):
                sign = -1
            else:
                residual = True
                continue
            chain = [w]
            ok = True
            for j in range(1, n + 2):
                nxt = la.apply(M.F, chain[-1], f)
                chain.append(nxt)
            if any(chain[n + 1]):
                ok = False
            chain = chain[:n + 1]
            for j in range(1, n + 1):
                lhs = la.apply(M.E, chain[j], f)
                coef = s2 * f.qint(j) * f.qint(n + 1 - j) * sign
                if lhs != [coef * x for x in chain[j - 1]]:
                    ok = False
            if not ok:
                residual = True
                continue
            comps[(n, sign, s2)] += 1
            spanned.extend(chain)
            certs.append({"n": n, "sign": sign, "highest_weight_vector": w})
    if spanned:
        full = la.rank(la.columns(spanned), f) == M.dim == len(spanned)
    else:
        full = M.dim == 0
    return DecompositionResult(comps, residual or not full, certs)


def expected_clebsch_gordan(m: int, sm: int, n: int, sn: int, s) -> Counter:
    """Labels L_{ss'}(m+n-2i, sign) for the tensor of L(m, sm) and L(n, sn), root s'' = s."""
    out: Counter = Counter()
    for i in range(min(m, n) + 1):
        out[(m + n - 2 * i, sm * sn, s)] += 1
    return out


# ---------------------------------------------------------------------------
# Verma submodules and Radford parameters
# ---------------------------------------------------------------------------


def _pm_q_power(lam, field: FieldMode, limit: int = 64):
    """Return (n, sign) with lam = sign * q^n, n >= 0, or None."""
    if isinstance(field, SymbolicV):
        mono = lam.as_monomial() if isinstance(lam, RatFunc) else None
        if mono is None:
            return None
        c, e = mono
        if c in (1, -1) and e >= 0:
            return e, c
        return None
    if isinstance(field, RationalQ):
        # |q^n| is monotone in n, so the search can stop once it passes |lam|
        q = abs(field.q)
        a = abs(lam)
        n = 0
        p = Fraction(1)
        while n <= 10_000:
            if p == a:
                if lam == field.qpow(n):
                    return n, 1
                if lam == -field.qpow(n):
                    return n, -1
                return None
            if (q > 1 and p > a) or (q < 1 and p < a):
                return None
            p *= q
            n += 1
        return None
    for n in range(limit + 1):
        if lam == field.qpow(n):
            return n, 1
        if lam == -field.qpow(n):
            return n, -1
    return None


def verma_submodule_index(s, sign, lam, field: FieldMode = SYMBOLIC):
    """n with lam = +-q^n (n >= 0), certified on a truncated Verma; None if the Verma is simple."""
    if field.is_root_of_unity:
        raise ModuleError("q must not be a root of unity")
    lam = _scalar(lam, field)
    hit = _pm_q_power(lam, field)
    if hit is None:
        return None
    n, _ = hit
    M = verma(s, sign, lam, n + 2, field)
    if any(M.E[i][n + 1] for i in range(M.dim)):
        raise AssertionError("E m_(n+1) should vanish")
    return n


def verma_quotient_certificate(s, sign, lam, field: FieldMode = SYMBOLIC) -> dict:
    """For lam = +-q^n: the span of m_i (i > n) is stable, and the n+1 dimensional quotient is simple."""
    n = verma_submodule_index(s, sign, lam, field)
    if n is None:
        return {"n": None}
    M = verma(s, sign, _scalar(lam, field), n + 2, field)
    e_kills = not any(M.E[i][n + 1] for i in range(M.dim))
    # in the quotient E m_i != 0 for 1 <= i <= n, so every nonzero submodule contains m_0
    e_nonzero = all(M.E[i - 1][i] for i in range(1, n + 1))
    return {"n": n, "submodule_stable": e_kills, "quotient_dim": n + 1, "quotient_simple": e_nonzero}


@dataclass
class RadfordLabel:
    kind: str            # "Verma" or "Simple"
    z: object
    sqrt_z: object
    lam: object = None
    n: int | None = None
    sign: int | None = None


def radford_parameters(beta_a, l: int, chosen_root, field: FieldMode = SYMBOLIC) -> RadfordLabel:
    """Identify the module attached to (beta(a), l) with a Verma module or a simple L_z(n, +-)."""
    if field.is_root_of_unity:
        raise ModuleError("q must not be a root of unity")
    beta = _scalar(beta_a, field)
    r = _scalar(chosen_root, field)
    _check_nonzero(beta=beta)
    if r * r != beta:
        raise ModuleError("chosen_root must square to beta(a)")
    z = beta * field.qpow(-2 * l)
    sqrt_z = r * field.qpow(-l)
    # beta = omega^(l+n) with omega = q^-2  <=>  (beta q^(2l))^-1 = q^(2n)
    hit = _pm_q_power(field.one / (beta * field.qpow(2 * l)), field)
    n = hit[0] // 2 if hit is not None and hit[1] == 1 and hit[0] % 2 == 0 else None
    if n is None:
        lam = field.one / r * field.qpow(-l)
        return RadfordLabel("Verma", z, sqrt_z, lam=lam)
    target = field.qpow(-n - 2 * l)
    if sqrt_z == target:
        sign = 1
    elif sqrt_z == -target:
        sign = -1
    else:
        raise AssertionError("sqrt(z) must be +-q^(-n-2l)")
    return RadfordLabel("Simple", z, sqrt_z, n=n, sign=sign)
