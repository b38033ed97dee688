"""Higher-rank presentation as relation data, plus a matrix-representation checker.

No normal forms exist here.  Relations are lists of words in indexed letters
``(name, i)`` with ``name`` among E, F, K, Kinv, Kt, Ktinv, and a
representation is checked by evaluating every relation on its matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import linalg as la
from .scalars import SYMBOLIC, FieldMode, qbinomial

ALLOWED_ENTRIES = {-3, -2, -1, 0, 2}


class CartanError(ValueError):
    pass


def _positive_definite(m: list) -> bool:
    # symmetric Gaussian elimination; all pivots positive iff positive definite
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            r = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= r * a[k][j]
    return True


@dataclass(frozen=True)
class CartanData:
    a: tuple
    d: tuple

    def __init__(self, a, d):
        object.__setattr__(self, "a", tuple(tuple(int(x) for x in row) for row in a))
        object.__setattr__(self, "d", tuple(int(x) for x in d))
        self.validate()

    @property
    def n(self) -> int:
        return len(self.a)

    def validate(self) -> None:
        n = self.n
        if n == 0 or any(len(row) != n for row in self.a) or len(self.d) != n:
            raise CartanError("a must be square and match the length of d")
        for i in range(n):
            if self.d[i] not in (1, 2, 3):
                raise CartanError("symmetrizer entries must lie in {1, 2, 3}")
            for j in range(n):
                x = self.a[i][j]
                if x not in ALLOWED_ENTRIES:
                    raise CartanError(f"entry a[{i}][{j}] = {x} not allowed")
                if (i == j) != (x == 2):
                    raise CartanError("diagonal entries must be 2 and off-diagonal ones <= 0")
        sym = [[self.d[i] * self.a[i][j] for j in range(n)] for i in range(n)]
        if any(sym[i][j] != sym[j][i] for i in range(n) for j in range(n)):
            raise CartanError("(d_i a_ij) is not symmetric")
        if not _positive_definite(sym):
            raise CartanError("(d_i a_ij) is not positive definite")

    def to_json(self) -> dict:
        return {"a": [list(r) for r in self.a], "d": list(self.d)}

    @classmethod
    def from_json(cls, obj) -> "CartanData":
        return cls(obj["a"], obj.get("d", [1] * len(obj["a"])))


def cartan_A(n: int) -> CartanData:
    a = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    return CartanData(a, [1] * n)


@dataclass
class RankNRelation:
    """``sum(coeff * word) = 0``; ``kind`` is commutation, cross or Serre."""

    name: str
    kind: str
    indices: tuple
    terms: list                                   # [(coeff, ((letter, i), ...)), ...]
    coefficients: list = dc_field(default_factory=list)   # Serre data only


def serre_coefficients(cd: CartanData, i: int, j: int, field: FieldMode = SYMBOLIC) -> list:
    """(-1)^s [1 - a_ij over s] at base q^(d_i), for s = 0 .. 1 - a_ij."""
    m = 1 - cd.a[i][j]
    return [qbinomial(m, s, field, step=cd.d[i]) * (-1) ** s for s in range(m + 1)]


def _serre(cd, i, j, letter, field, coefficients=None) -> RankNRelation:
    coeffs = coefficients if coefficients is not None else serre_coefficients(cd, i, j, field)
    m = len(coeffs) - 1
    terms = [(c, ((letter, i),) * (m - s) + ((letter, j),) + ((letter, i),) * s)
             for s, c in enumerate(coeffs)]
    return RankNRelation(f"serre{letter}_{i}{j}", "serre", (i, j), terms, list(coeffs))


def relations(cd: CartanData, field: FieldMode = SYMBOLIC) -> list:
    """Every defining relation of the rank-n double, written as ``lhs - rhs``."""
    one = field.one
    out = []
    n = cd.n

    def rel(name, kind, idx, terms):
        out.append(RankNRelation(name, kind, idx, [(field.coerce(c) if isinstance(c, int) else c, w)
                                                   for c, w in terms]))

    for i in range(n):
        for inv, base in (("Kinv", "K"), ("Ktinv", "Kt")):
            rel(f"{base}{inv}_{i}", "commutation", (i,), [(one, ((base, i), (inv, i))), (-one, ())])
            rel(f"{inv}{base}_{i}", "commutation", (i,), [(one, ((inv, i), (base, i))), (-one, ())])
    for i in range(n):
        for j in range(n):
            if i < j:
                rel(f"KK_{i}{j}", "commutation", (i, j), [(one, (("K", i), ("K", j))), (-one, (("K", j), ("K", i)))])
                rel(f"KtKt_{i}{j}", "commutation", (i, j),
                    [(one, (("Kt", i), ("Kt", j))), (-one, (("Kt", j), ("Kt", i)))])
            rel(f"KKt_{i}{j}", "commutation", (i, j), [(one, (("K", i), ("Kt", j))), (-one, (("Kt", j), ("K", i)))])
    for i in range(n):
        for j in range(n):
            e = cd.d[i] * cd.a[i][j]
            for k in ("K", "Kt"):
                rel(f"{k}E_{i}{j}", "commutation", (i, j),
                    [(one, ((k, i), ("E", j))), (-field.qpow(e), (("E", j), (k, i)))])
                rel(f"{k}F_{i}{j}", "commutation", (i, j),
                    [(one, ((k, i), ("F", j))), (-field.qpow(-e), (("F", j), (k, i)))])
    for i in range(n):
        for j in range(n):
            terms = [(one, (("E", i), ("F", j))), (-one, (("F", j), ("E", i)))]
            if i == j:
                inv = one / (field.qpow(cd.d[i]) - field.qpow(-cd.d[i]))
                terms += [(-inv, (("K", i),)), (inv, (("Ktinv", i),))]
            rel(f"EF_{i}{j}", "cross", (i, j), terms)
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append(_serre(cd, i, j, "E", field))
                out.append(_serre(cd, i, j, "F", field))
    return out


def with_serre_coefficients(rels: list, name: str, coefficients: list) -> list:
    """Copy of ``rels`` with one Serre relation's coefficient list replaced."""
    out = []
    for r in rels:
        if r.name == name:
            i, j = r.indices
            m = len(coefficients) - 1
            letter = r.name[len("serre")]
            terms = [(c, ((letter, i),) * (m - s) + ((letter, j),) + ((letter, i),) * s)
                     for s, c in enumerate(coefficients)]
            r = RankNRelation(r.name, r.kind, r.indices, terms, list(coefficients))
        out.append(r)
    return out


_RANK1_NAMES = {"KKinv_0": "KKinv", "KinvK_0": "KinvK", "KtKtinv_0": "KtKtinv", "KtinvKt_0": "KtinvKt",
                "KKt_00": "KKt", "KE_00": "KE", "KF_00": "KF", "KtE_00": "KtE", "KtF_00": "KtF", "EF_00": "EF"}


def rank1_as_words(cd: CartanData, field: FieldMode = SYMBOLIC) -> dict:
    """Rank-1 relations as ``{name: {word: coeff}}`` with plain generator letters."""
    if cd.n != 1:
        raise CartanError("rank-1 data expected")
    out = {}
    for r in relations(cd, field):
        words: dict = {}
        for c, w in r.terms:
            key = tuple(letter for letter, _ in w)
            words[key] = words.get(key, field.zero) + c
        out[_RANK1_NAMES[r.name]] = {k: v for k, v in words.items() if v}
    return out


# ---------------------------------------------------------------------------
# pairing values on generators
# ---------------------------------------------------------------------------


def generator_pairing(cd: CartanData, i: int, j: int, which: str, field: FieldMode = SYMBOLIC):
    n = cd.n
    if not (0 <= i < n and 0 <= j < n):
        raise CartanError("index out of range")
    if which == "EF":
        return field.one / (field.qpow(2 * cd.d[i]) - field.one) if i == j else field.zero
    if which == "KK":
        return field.qpow(cd.d[i] * cd.a[i][j])
    if which == "KKinv":
        return field.qpow(-cd.d[i] * cd.a[i][j])
    raise CartanError(f"unknown generator pair {which!r}")


# ---------------------------------------------------------------------------
# matrix representations
# ---------------------------------------------------------------------------


@dataclass
class RankNModule:
    """Matrices of E_i, F_i, K_i, Kt_i (lists indexed by i) on a common basis."""

    field: FieldMode
    E: list
    F: list
    K: list
    Kt: list

    @property
    def dim(self) -> int:
        return len(self.K[0])

    @property
    def rank(self) -> int:
        return len(self.K)


def _inverse_diag_or_general(A, field):
    n = len(A)
    aug = [list(A[i]) + [field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    R, piv = la.rref(aug, field)
    if piv[:n] != list(range(n)):
        raise CartanError("a K-matrix is singular")
    return [row[n:] for row in R]


def _letter_matrix(M: RankNModule, letter: str, i: int, cache: dict):
    key = (letter, i)
    if key not in cache:
        if letter in ("E", "F", "K", "Kt"):
            cache[key] = getattr(M, letter)[i]
        elif letter == "Kinv":
            cache[key] = _inverse_diag_or_general(M.K[i], M.field)
        elif letter == "Ktinv":
            cache[key] = _inverse_diag_or_general(M.Kt[i], M.field)
        else:
            raise CartanError(f"unknown letter {letter!r}")
    return cache[key]


def evaluate(rel: RankNRelation, M: RankNModule, cache: dict | None = None):
    f = M.field
    cache = {} if cache is None else cache
    total = la.zeros(M.dim, M.dim, f)
    for c, word in rel.terms:
        mat = la.identity(M.dim, f)
        for letter, i in word:
            mat = la.mat_mul(mat, _letter_matrix(M, letter, i, cache), f)
        total = la.mat_add(total, la.mat_scale(mat, c))
    return total


def _is_diagonal(A) -> bool:
    return all(not A[i][j] for i in range(len(A)) for j in range(len(A)) if i != j)


def check_module(cd: CartanData, M: RankNModule, rels: list | None = None) -> dict:
    """Evaluate every relation on D_q-matrices; also report the weight-module condition."""
    if M.rank != cd.n or any(len(x) != cd.n for x in (M.E, M.F, M.Kt)):
        raise CartanError("need one matrix per index for each generator")
    dim = M.dim
    for group in (M.E, M.F, M.K, M.Kt):
        for A in group:
            if len(A) != dim or any(len(r) != dim for r in A):
                raise CartanError("dimension mismatch")
    rels = relations(cd, M.field) if rels is None else rels
    cache: dict = {}
    report = {r.name: la.is_zero(evaluate(r, M, cache)) for r in rels}
    weight = all(_is_diagonal(A) for A in M.K + M.Kt)
    return {"relations": report, "weight_module": weight, "pass": all(report.values())}


def pullback(U: dict, s: list, field: FieldMode) -> RankNModule:
    """D_q-matrices from U_q-matrices {"E", "F", "K"} via E -> sE, K -> sK, Kt -> s^-1 K."""
    n = len(U["K"])
    if len(s) != n:
        raise CartanError("s must have one entry per index")
    s = [field.coerce(x) if isinstance(x, (int, Fraction)) else x for x in s]
    if not all(s):
        raise CartanError("entries of s must be nonzero")
    E = [la.mat_scale(U["E"][i], s[i]) for i in range(n)]
    K = [la.mat_scale(U["K"][i], s[i]) for i in range(n)]
    Kt = [la.mat_scale(U["K"][i], field.one / s[i]) for i in range(n)]
    return RankNModule(field, E, [[r[:] for r in A] for A in U["F"]], K, Kt)


def check_matrix_rep(cd: CartanData, U: dict, s: list, field: FieldMode = SYMBOLIC, rels: list | None = None) -> dict:
    """Check U_q-matrices after pulling them back to D_q along the twist by s."""
    dims = {len(A) for key in ("E", "F", "K") for A in U[key]}
    if len(dims) != 1:
        raise CartanError("dimension mismatch")
    return check_module(cd, pullback(U, s, field), rels)


def epsilon_vec(s: list, field: FieldMode = SYMBOLIC) -> RankNModule:
    s = [field.coerce(x) if isinstance(x, (int, Fraction)) else x for x in s]
    if not all(s):
        raise CartanError("entries of s must be nonzero")
    z = [[field.zero]]
    return RankNModule(field, [z] * len(s), [z] * len(s), [[[x]] for x in s], [[[field.one / x]] for x in s])


def tensor_with_character(chi: RankNModule, M: RankNModule) -> RankNModule:
    """chi (x) M for a one-dimensional chi, through the coproduct."""
    f = M.field
    n = M.rank
    kval = [chi.K[i][0][0] for i in range(n)]
    ktval = [chi.Kt[i][0][0] for i in range(n)]
    if any(chi.E[i][0][0] or chi.F[i][0][0] for i in range(n)):
        raise CartanError("a character must kill E and F")
    return RankNModule(f, [la.mat_scale(M.E[i], kval[i]) for i in range(n)], [r for r in M.F],
                       [la.mat_scale(M.K[i], kval[i]) for i in range(n)],
                       [la.mat_scale(M.Kt[i], ktval[i]) for i in range(n)])


def uq_tensor(U: dict, V: dict, field: FieldMode) -> dict:
    """U_q-matrices of U (x) V with E -> E(x)1 + K(x)E and F -> F(x)K^-1 + 1(x)F."""
    n = len(U["K"])
    du, dv = len(U["K"][0]), len(V["K"][0])
    Iu, Iv = la.identity(du, field), la.identity(dv, field)
    kr = lambda A, B: la.kron(A, B, field)
    E, F, K = [], [], []
    for i in range(n):
        E.append(la.mat_add(kr(U["E"][i], Iv), kr(U["K"][i], V["E"][i])))
        F.append(la.mat_add(kr(U["F"][i], _inverse_diag_or_general(V["K"][i], field)), kr(Iu, V["F"][i])))
        K.append(kr(U["K"][i], V["K"][i]))
    return {"E": E, "F": F, "K": K}


def sl3_fundamental(field: FieldMode = SYMBOLIC) -> dict:
    """The three-dimensional natural representation of U_q(sl_3)."""
    f = field

    def unit(i, j):
        m = la.zeros(3, 3, f)
        m[i][j] = f.one
        return m

    q, qi = f.q, f.qinv
    return {"E": [unit(0, 1), unit(1, 2)], "F": [unit(1, 0), unit(2, 1)],
            "K": [la.diag([q, qi, f.one], f), la.diag([f.one, q, qi], f)]}


def rank1_simple(n: int, field: FieldMode = SYMBOLIC) -> dict:
    """U_q(sl_2) matrices of the (n+1)-dimensional positive-type simple."""
    from .rep import uq_simple
    M = uq_simple(n, 1, field)
    return {"E": [M.E], "F": [M.F], "K": [la.diag(M.k_weights, field)]}


def matrices_from_json(obj, field: FieldMode) -> dict:
    from .parse import parse_scalar
    conv = lambda x: parse_scalar(str(x), field)
    return {k: [[[conv(x) for x in row] for row in A] for A in obj[k]] for k in ("E", "F", "K")}
