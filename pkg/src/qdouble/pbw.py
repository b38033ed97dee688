"""PBW normal form for the double D_q and for U_q(sl_2).

Elements are sparse maps from normal monomials ``E^a K^c Kt^d F^b`` (stored
as ``(a, c, d, b)``) to scalars.  U_q elements use the same tuples with
``d == 0``.

Products are formed by rewriting: ``K``/``Kt`` powers are moved past ``E``
and ``F`` with their q-power factors, and each ``F E`` inversion is replaced by
``E F - (K - Kt^-1)/(q - q^-1)``.  The resulting ``F^b E^a`` reorderings are
memoized per coefficient field.

The faithful representation on ``k[T1, T2^+-1, T3^+-1, T4]`` gives an
independent way to compute the same elements (:func:`oracle_apply`).
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .scalars import SYMBOLIC, Cyclo, FieldMode, RatFunc, scalar_to_json, scalar_from_json
from .scalars.qcomb import in_localized_A
from .scalars.ratfunc import format_laurent

DQ = "Dq"
UQ = "Uq"

# normal order E < K < Kt < F
GENERATORS = ("E", "K", "Kinv", "Kt", "Ktinv", "F")
GEN_MONO = {
    "E": (1, 0, 0, 0),
    "K": (0, 1, 0, 0),
    "Kinv": (0, -1, 0, 0),
    "Kt": (0, 0, 1, 0),
    "Ktinv": (0, 0, -1, 0),
    "F": (0, 0, 0, 1),
}
INVERSE_SYMBOL = {"K": "Kinv", "Kinv": "K", "Kt": "Ktinv", "Ktinv": "Kt", "E": None, "F": None}
ONE_MONO = (0, 0, 0, 0)


class AlgebraMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# rewriting engine
# ---------------------------------------------------------------------------


class _Engine:
    """Memo tables for one coefficient field."""

    def __init__(self, field: FieldMode):
        self.field = field
        self.reorder_cache: dict[tuple[int, int], dict] = {}
        self.fe_cache: dict[int, dict] = {}
        self.mul_cache: dict[tuple, dict] = {}
        self.inv_qdiff = field.one / (field.q - field.qinv)

    def f_power_times_e(self, b: int) -> dict:
        """Normal form of ``F^b E``.

        One rewrite ``F E -> E F - H`` with ``H = (K - Kt^-1)/(q - q^-1)``
        gives ``F^b E = (F^(b-1) E) F - F^(b-1) H``; then ``F^j K = q^(2j) K F^j``
        and ``F^j Kt^-1 = q^(-2j) Kt^-1 F^j`` carry ``H`` to the left.
        """
        cached = self.fe_cache.get(b)
        if cached is not None:
            return cached
        if b == 0:
            out = {(1, 0, 0, 0): self.field.one}
        else:
            prev = self.f_power_times_e(b - 1)
            out = {}
            for (a, c, d, bb), coef in prev.items():
                _acc(out, (a, c, d, bb + 1), coef)
            j = b - 1
            qp = self.field.qpow
            _acc(out, (0, 1, 0, j), -self.inv_qdiff * qp(2 * j))
            _acc(out, (0, 0, -1, j), self.inv_qdiff * qp(-2 * j))
        self.fe_cache[b] = out
        return out

    def reorder(self, b: int, a: int) -> dict:
        """Normal form of ``F^b E^a``."""
        if a == 0 or b == 0:
            return {(a, 0, 0, b): self.field.one}
        key = (b, a)
        cached = self.reorder_cache.get(key)
        if cached is not None:
            return cached
        out: dict = {}
        qp = self.field.qpow
        # F^b E^a = (F^b E) E^(a-1)
        for (a1, c1, d1, b1), coef in self.f_power_times_e(b).items():
            for (a2, c2, d2, b2), coef2 in self.reorder(b1, a - 1).items():
                # K^c1 Kt^d1 E^a2 = q^(2 a2 (c1 + d1)) E^a2 K^c1 Kt^d1
                factor = coef * coef2
                shift = 2 * a2 * (c1 + d1)
                if shift:
                    factor = factor * qp(shift)
                _acc(out, (a1 + a2, c1 + c2, d1 + d2, b2), factor)
        self.reorder_cache[key] = out
        return out

    def mono_mul(self, m1: tuple, m2: tuple) -> dict:
        key = (m1, m2)
        cached = self.mul_cache.get(key)
        if cached is not None:
            return cached
        a1, c1, d1, b1 = m1
        a2, c2, d2, b2 = m2
        qp = self.field.qpow
        out: dict = {}
        for (a, c, d, b), coef in self.reorder(b1, a2).items():
            shift = 2 * a * (c1 + d1) + 2 * b * (c2 + d2)
            if shift:
                coef = coef * qp(shift)
            _acc(out, (a1 + a, c1 + c + c2, d1 + d + d2, b + b2), coef)
        self.mul_cache[key] = out
        return out


_ENGINES: dict[FieldMode, _Engine] = {}


def engine(field: FieldMode) -> _Engine:
    eng = _ENGINES.get(field)
    if eng is None:
        eng = _ENGINES[field] = _Engine(field)
    return eng


def _acc(target: dict, key, value):
    if not value:
        return
    cur = target.get(key)
    if cur is None:
        target[key] = value
    else:
        s = cur + value
        if s:
            target[key] = s
        else:
            del target[key]


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


def _mono_key(m):
    a, c, d, b = m
    return (a + b, a, c, d, b)


class PBWElement:
    """A finite linear combination of normal monomials of D_q or U_q."""

    __slots__ = ("algebra", "field", "terms")

    def __init__(self, terms: dict | None = None, algebra: str = DQ, field: FieldMode = SYMBOLIC):
        if algebra not in (DQ, UQ):
            raise ValueError(f"unknown algebra tag {algebra!r}")
        self.algebra = algebra
        self.field = field
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if algebra == UQ and m[2] != 0:
                    raise ValueError("U_q monomials carry no Kt exponent")
                _acc(self.terms, tuple(m), field.coerce(c) if isinstance(c, int) else c)

    # -- constructors --------------------------------------------------------

    @classmethod
    def monomial(cls, a=0, c=0, d=0, b=0, coeff=None, algebra=DQ, field=SYMBOLIC):
        coeff = field.one if coeff is None else coeff
        return cls({(a, c, d, b): coeff}, algebra, field)

    @classmethod
    def scalar(cls, value, algebra=DQ, field=SYMBOLIC):
        return cls({ONE_MONO: field.coerce(value) if isinstance(value, int) else value}, algebra, field)

    @classmethod
    def generator(cls, name: str, algebra=DQ, field=SYMBOLIC):
        mono = GEN_MONO[name]
        if algebra == UQ and mono[2]:
            mono = (mono[0], mono[2], 0, mono[3])
        return cls({mono: field.one}, algebra, field)

    def _like(self, terms: dict) -> "PBWElement":
        out = PBWElement.__new__(PBWElement)
        out.algebra = self.algebra
        out.field = self.field
        out.terms = terms
        return out

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "PBWElement"):
        if other.algebra != self.algebra or other.field != self.field:
            raise AlgebraMismatch(f"cannot combine {self.algebra}/{self.field!r} with {other.algebra}/{other.field!r}")

    def __add__(self, other):
        if not isinstance(other, PBWElement):
            other = PBWElement.scalar(other, self.algebra, self.field)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _acc(terms, m, c)
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, PBWElement):
            other = PBWElement.scalar(other, self.algebra, self.field)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "PBWElement":
        if not s:
            return self._like({})
        return self._like({m: c * s for m, c in self.terms.items() if c * s})

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, s):
        return self.scale(self.field.one / s)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for group-likes; build them directly")
        out = PBWElement.scalar(1, self.algebra, self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.algebra == other.algebra and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, a=0, c=0, d=0, b=0):
        return self.terms.get((a, c, d, b), self.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)

    # -- output -------------------------------------------------------------

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"PBWElement[{self.algebra}]({self})"

    def to_json(self) -> dict:
        terms = []
        for m, c in self.sorted_terms():
            mono = list(m) if self.algebra == DQ else [m[0], m[1], m[3]]
            terms.append({"mono": mono, "coeff": scalar_to_json(c)})
        return {"algebra": self.algebra, "terms": terms}

    @classmethod
    def from_json(cls, obj: dict, field: FieldMode = SYMBOLIC) -> "PBWElement":
        algebra = obj.get("algebra", DQ)
        terms = {}
        for t in obj["terms"]:
            mono = tuple(t["mono"])
            if algebra == UQ:
                mono = (mono[0], mono[1], 0, mono[2])
            _acc(terms, mono, scalar_from_json(t["coeff"], field))
        return cls(terms, algebra, field)


def mono_product(m1: tuple, m2: tuple, algebra: str, field: FieldMode) -> dict:
    """Normal form of the product of two normal monomials (shared table)."""
    prod = engine(field).mono_mul(m1, m2)
    if algebra == DQ:
        return prod
    out: dict = {}
    for (a, c, d, b), coef in prod.items():
        _acc(out, (a, c + d, 0, b), coef)
    return out


def multiply(x: PBWElement, y: PBWElement) -> PBWElement:
    """Product in the presented algebra, in PBW normal form."""
    x._check(y)
    eng = engine(x.field)
    out: dict = {}
    if x.algebra == DQ:
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                c12 = c1 * c2
                for m, c in eng.mono_mul(m1, m2).items():
                    _acc(out, m, c12 * c)
    else:
        # U_q = D_q/(K - Kt): multiply lifts, then project Kt -> K
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                c12 = c1 * c2
                for (a, c, d, b), c3 in eng.mono_mul(m1, m2).items():
                    _acc(out, (a, c + d, 0, b), c12 * c3)
    return x._like(out)


# ---------------------------------------------------------------------------
# free words
# ---------------------------------------------------------------------------


class WordExpr:
    """A free linear combination of words in the generator symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple] = ()):
        self.terms = [(c, tuple(w)) for c, w in terms if c]

    @classmethod
    def word(cls, letters: Sequence[str], coeff=1) -> "WordExpr":
        for s in letters:
            if s not in GEN_MONO:
                raise ValueError(f"unknown generator {s!r}")
        return cls([(coeff, tuple(letters))])

    @classmethod
    def scalar(cls, c) -> "WordExpr":
        return cls([(c, ())])

    def __add__(self, other):
        return WordExpr(self.terms + other.terms)

    def __neg__(self):
        return WordExpr([(-c, w) for c, w in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, WordExpr):
            return WordExpr([(c1 * c2, w1 + w2) for c1, w1 in self.terms for c2, w2 in other.terms])
        return WordExpr([(c * other, w) for c, w in self.terms])

    def __rmul__(self, other):
        return WordExpr([(other * c, w) for c, w in self.terms])

    def is_scalar(self) -> bool:
        return all(not w for _, w in self.terms)

    def scalar_value(self, field: FieldMode):
        total = field.zero
        for c, w in self.terms:
            if w:
                raise ValueError("expression contains generators")
            total = total + c
        return total

    def max_length(self) -> int:
        return max((len(w) for _, w in self.terms), default=0)

    def __repr__(self):
        return " + ".join(f"({c})*{'*'.join(w) or '1'}" for c, w in self.terms) or "0"


def normalize(w: WordExpr, algebra: str = DQ, field: FieldMode = SYMBOLIC) -> PBWElement:
    """Rewrite a free expression into PBW normal form."""
    total = PBWElement({}, algebra, field)
    letters = {s: PBWElement.generator(s, algebra, field) for s in GEN_MONO}
    for coeff, word in w.terms:
        acc = PBWElement.scalar(field.coerce(coeff) if isinstance(coeff, int) else coeff, algebra, field)
        for s in word:
            acc = multiply(acc, letters[s])
        total = total + acc
    return total


def defining_relations(field: FieldMode = SYMBOLIC) -> list[tuple[str, WordExpr, WordExpr]]:
    """The defining relations of D_q as (name, lhs, rhs) word pairs."""
    q2 = field.qpow(2)
    qm2 = field.qpow(-2)
    inv = field.one / (field.q - field.qinv)
    W = WordExpr.word
    one = WordExpr.scalar(field.one)
    return [
        ("KE", W(["K", "E"]), W(["E", "K"], q2)),
        ("KF", W(["K", "F"]), W(["F", "K"], qm2)),
        ("KtE", W(["Kt", "E"]), W(["E", "Kt"], q2)),
        ("KtF", W(["Kt", "F"]), W(["F", "Kt"], qm2)),
        ("KKinv", W(["K", "Kinv"]), one),
        ("KinvK", W(["Kinv", "K"]), one),
        ("KtKtinv", W(["Kt", "Ktinv"]), one),
        ("KtinvKt", W(["Ktinv", "Kt"]), one),
        ("KKt", W(["K", "Kt"]), W(["Kt", "K"])),
        ("EF", W(["E", "F"]) - W(["F", "E"]), W(["K"], inv) - W(["Ktinv"], inv)),
    ]


# ---------------------------------------------------------------------------
# faithful representation (independent oracle)
# ---------------------------------------------------------------------------


def _op_letter(state: dict, letter: str, field: FieldMode, algebra: str) -> dict:
    """Apply one generator operator to an element of k[T1, T2^+-1, T3^+-1, T4].

    Keys are exponent tuples (a, c, d, b) of T1^a T2^c T3^d T4^b.  ``f`` uses
    the corrected first coefficient ``-[a] (q^(a-1) T2 - q^(1-a) T3^-1)/(q-q^-1)``.
    """
    qp = field.qpow
    inv = field.one / (field.q - field.qinv)
    out: dict = {}
    if algebra == UQ and letter in ("Kt", "Ktinv"):
        letter = "K" if letter == "Kt" else "Kinv"
    for (a, c, d, b), coef in state.items():
        if letter == "E":
            _acc(out, (a + 1, c, d, b), coef)
        elif letter in ("K", "Kinv"):
            s = 1 if letter == "K" else -1
            _acc(out, (a, c + s, d, b), coef * qp(2 * s * a))
        elif letter in ("Kt", "Ktinv"):
            s = 1 if letter == "Kt" else -1
            _acc(out, (a, c, d + s, b), coef * qp(2 * s * a))
        elif letter == "F":
            _acc(out, (a, c, d, b + 1), coef * qp(2 * c + 2 * d))
            if a >= 1:
                base = coef * field.qint(a) * inv
                if algebra == DQ:
                    _acc(out, (a - 1, c + 1, d, b), -base * qp(a - 1))
                    _acc(out, (a - 1, c, d - 1, b), base * qp(1 - a))
                else:
                    _acc(out, (a - 1, c + 1, d, b), -base * qp(a - 1))
                    _acc(out, (a - 1, c - 1, d, b), base * qp(1 - a))
        else:
            raise ValueError(f"unknown generator {letter!r}")
    return out


def oracle_operator(letter: str, vec: dict, field: FieldMode = SYMBOLIC, algebra: str = DQ) -> dict:
    """Apply the operator for ``letter`` to a vector of the representation space."""
    return _op_letter(vec, letter, field, algebra)


def oracle_apply(w: WordExpr, field: FieldMode = SYMBOLIC, algebra: str = DQ) -> dict:
    """Act with ``w`` on the constant polynomial 1, letter by letter."""
    total: dict = {}
    for coeff, word in w.terms:
        state = {ONE_MONO: field.coerce(coeff) if isinstance(coeff, int) else coeff}
        for letter in reversed(word):
            state = _op_letter(state, letter, field, algebra)
        for k, c in state.items():
            _acc(total, k, c)
    return total


def oracle_check(w: WordExpr, field: FieldMode = SYMBOLIC, algebra: str = DQ) -> bool:
    """Compare :func:`normalize` with the faithful representation acting on 1."""
    if field.is_root_of_unity:
        raise ValueError("the oracle is faithful only when q is not a root of unity")
    normal = normalize(w, algebra, field)
    return oracle_apply(w, field, algebra) == dict(normal.terms)


# ---------------------------------------------------------------------------
# projections onto U_q
# ---------------------------------------------------------------------------


def project_pi(x: PBWElement) -> PBWElement:
    """The Hopf surjection D_q -> U_q sending Kt to K."""
    if x.algebra != DQ:
        raise AlgebraMismatch("project_pi expects a D_q element")
    out: dict = {}
    for (a, c, d, b), coef in x.terms.items():
        _acc(out, (a, c + d, 0, b), coef)
    return PBWElement(out, UQ, x.field)


def project_pi_z(x: PBWElement, s, sign: int = 1) -> PBWElement:
    """Algebra map E -> sign*s*E, F -> F, K -> sign*s*K, Kt -> sign*s^-1*K."""
    if x.algebra != DQ:
        raise AlgebraMismatch("project_pi_z expects a D_q element")
    if not s:
        raise ValueError("the chosen square root s must be nonzero")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    field = x.field
    s = field.coerce(s) if isinstance(s, int) else s
    out: dict = {}
    for (a, c, d, b), coef in x.terms.items():
        factor = s ** (a + c - d)
        if sign == -1 and (a + c + d) % 2:
            factor = -factor
        _acc(out, (a, c + d, 0, b), coef * factor)
    return PBWElement(out, UQ, field)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def format_monomial(m, algebra: str = DQ) -> str:
    a, c, d, b = m
    parts = []

    def piece(name, e):
        if e == 0:
            return
        parts.append(name if e == 1 else f"{name}^{e}")

    piece("E", a)
    piece("K", c)
    piece("Kt", d)
    piece("F", b)
    return " ".join(parts)


def format_coeff(c) -> tuple[bool, str]:
    """Split a coefficient into (negative, body); an empty body means 1."""
    if isinstance(c, RatFunc):
        mono = c.as_monomial()
        if mono is not None:
            k, e = mono[0], mono[1]
            body = format_laurent({e: abs(k)})
            return k < 0, "" if body == "1" else body
        if c.is_laurent():
            if c.num.leading_coefficient() < 0:
                return True, f"({-c})"
            return False, f"({c})"
        if in_localized_A(c):
            j = c.den.degree() // 2
            lpart = c * RatFunc.laurent({1: 1, -1: -1}) ** j
            mono = lpart.as_monomial()
            tail = f"(v-v^-1)^-{j}"
            if mono is not None:
                k, e = mono
                body = format_laurent({e: abs(k)})
                return k < 0, tail if body == "1" else f"{body} {tail}"
            if lpart.num.leading_coefficient() < 0:
                return True, f"({-lpart}) {tail}"
            return False, f"({lpart}) {tail}"
        return False, f"({c})"
    if isinstance(c, Cyclo):
        s = str(c)
        if s == "1":
            return False, ""
        if s == "-1":
            return True, ""
        if " " in s:
            return False, f"({s})"
        if s.startswith("-"):
            return True, s[1:]
        return False, s
    neg = c < 0
    c = abs(c)
    return neg, "" if c == 1 else str(c)


def format_sum(items) -> str:
    """Join ``(coeff, basis_text)`` pairs; an empty basis text stands for 1."""
    pieces = []
    for i, (c, mono) in enumerate(items):
        neg, body = format_coeff(c)
        if body and mono:
            text = f"{body} {mono}"
        else:
            text = body or mono or "1"
        if i == 0:
            pieces.append(("-" if neg else "") + text)
        else:
            pieces.append((" - " if neg else " + ") + text)
    return "".join(pieces) or "0"


def format_element(x: PBWElement) -> str:
    return format_sum((c, format_monomial(m, x.algebra)) for m, c in x.sorted_terms())


# ---------------------------------------------------------------------------
# random generation (tests and verification suites)
# ---------------------------------------------------------------------------


def random_word(rng: random.Random, max_factors: int = 12, max_exp: int = 3,
                letters: Sequence[str] = GENERATORS) -> tuple[str, ...]:
    """A random word built from up to ``max_factors`` generator powers."""
    out: list[str] = []
    for _ in range(rng.randint(0, max_factors)):
        out.extend([rng.choice(letters)] * rng.randint(1, max_exp))
    return tuple(out)


def random_element(rng: random.Random, field: FieldMode = SYMBOLIC, algebra: str = DQ,
                   nterms: int = 3, max_deg: int = 2, max_k: int = 2) -> PBWElement:
    terms = {}
    for _ in range(rng.randint(1, nterms)):
        a = rng.randint(0, max_deg)
        b = rng.randint(0, max_deg)
        c = rng.randint(-max_k, max_k)
        d = rng.randint(-max_k, max_k) if algebra == DQ else 0
        coeff = field.coerce(rng.choice([1, -1, 2, 3])) * field.qpow(rng.randint(-2, 2))
        _acc(terms, (a, c, d, b), coeff)
    return PBWElement(terms, algebra, field)
