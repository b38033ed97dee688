"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a :class:`SuiteReport`: named boolean checks that must
all hold, plus informational entries that never affect the verdict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import aform, cartan, rep, taft
from .hopf import check_hopf_axioms
from .pairing import (DoubleElement, check_pairing_axioms, double_generators, double_multiply, pair,
                      pair_closed, pair_closed_printed, upper, lower)
from .pbw import DQ, GENERATORS, UQ, PBWElement, WordExpr, defining_relations, normalize, oracle_check, random_element, random_word
from .scalars import SYMBOLIC, RationalQ, RatFunc

SEED = 20240601


@dataclass
class SuiteReport:
    criterion: int
    name: str
    checks: dict = dc_field(default_factory=dict)
    info: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list:
        return sorted(k for k, v in self.checks.items() if not v)

    def to_json(self) -> dict:
        return {"criterion": self.criterion, "name": self.name, "pass": self.passed,
                "checks": {k: bool(v) for k, v in sorted(self.checks.items())},
                "failures": self.failures(), "info": self.info}

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"criterion {self.criterion} [{self.name}]: {verdict} ({len(self.checks)} checks)"


def _all(iterable) -> bool:
    return all(iterable)


# -- 1 ----------------------------------------------------------------------


def suite_pbw(samples: int = 200, seed: int = SEED) -> SuiteReport:
    rng = random.Random(seed)
    r = SuiteReport(1, "pbw-oracle")
    ok = bad = 0
    for _ in range(samples):
        w = WordExpr.word(random_word(rng, max_factors=12, max_exp=3))
        if oracle_check(w):
            ok += 1
        else:
            bad += 1
    r.checks["random_words_match_oracle"] = bad == 0
    r.checks["defining_relations_vanish"] = _all(
        not normalize(lhs - rhs) for _, lhs, rhs in defining_relations())
    r.info["words"] = samples
    return r


# -- 2 ----------------------------------------------------------------------


def suite_hopf(samples: int = 100, seed: int = SEED) -> SuiteReport:
    rng = random.Random(seed)
    r = SuiteReport(2, "hopf-axioms")
    gens = [PBWElement.generator(g) for g in GENERATORS]
    gen_ok = True
    for x in gens:
        for y in gens:
            gen_ok &= all(check_hopf_axioms(x, y).values())
    r.checks["generators"] = gen_ok
    failures: dict = {}
    for _ in range(samples):
        x, y = random_element(rng), random_element(rng)
        for k, v in check_hopf_axioms(x, y).items():
            if not v:
                failures[k] = failures.get(k, 0) + 1
    for k in ("coassociative", "counit_left", "counit_right", "antipode_left", "antipode_right",
              "antipode_inverse", "coproduct_multiplicative", "antipode_antimultiplicative",
              "counit_multiplicative"):
        r.checks[f"random_{k}"] = failures.get(k, 0) == 0
    r.info["random_elements"] = samples
    return r


# -- 3 ----------------------------------------------------------------------


def _random_borel(rng, up: bool, field=SYMBOLIC) -> PBWElement:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        key = (rng.randint(0, 2), rng.randint(-2, 2))
        terms[key] = terms.get(key, 0) + rng.choice([1, -1, 2, 3])
    terms = {k: v for k, v in terms.items() if v} or {(0, 0): 1}
    x = upper(terms, field) if up else lower(terms, field)
    return x.scale(field.qpow(rng.randint(-2, 2)))


def suite_pairing(samples: int = 200, seed: int = SEED, grid_a: int = 5, grid_b: int = 4) -> SuiteReport:
    rng = random.Random(seed)
    r = SuiteReport(3, "pairing-axioms")
    f = SYMBOLIC
    v = f.q
    E, F = upper({(1, 0): 1}), lower({(1, 0): 1})
    K, Ki = upper({(0, 1): 1}), upper({(0, -1): 1})
    Kl, Kil = lower({(0, 1): 1}), lower({(0, -1): 1})
    r.checks["axiom3_generator_values"] = (
        pair(E, F) == f.one / (v * v - f.one)
        and pair(K, Kl) == v ** 2 and pair(K, Kil) == v ** -2
        and pair(Ki, Kl) == v ** -2 and pair(Ki, Kil) == v ** 2)
    counts = {"axiom1": 0, "axiom4": 0, "axiom5": 0, "axiom6": 0}
    for _ in range(samples):
        x, x2 = _random_borel(rng, True), _random_borel(rng, True)
        y, y2 = _random_borel(rng, False), _random_borel(rng, False)
        for k, ok in check_pairing_axioms(x, x2, y, y2).items():
            if not ok:
                counts[k] += 1
    for k, n in counts.items():
        r.checks[f"random_{k}"] = n == 0
    grid_ok = degree_ok = True
    printed_mismatch = 0
    total = 0
    for a in range(grid_a + 1):
        for b in range(-grid_b, grid_b + 1):
            for b2 in range(-grid_b, grid_b + 1):
                val = pair(upper({(a, b): 1}), lower({(a, b2): 1}))
                grid_ok &= val == pair_closed(a, b, a, b2)
                total += 1
                if val != pair_closed_printed(a, b, b2):
                    printed_mismatch += 1
                a2 = (a + 1) % (grid_a + 1)
                degree_ok &= not pair(upper({(a, b): 1}), lower({(a2, b2): 1}))
    r.checks["closed_form_grid"] = grid_ok
    r.checks["axiom2_degree_filtering"] = degree_ok
    r.info["printed_root_of_unity_form_mismatches"] = f"{printed_mismatch}/{total}"
    return r


# -- 4 ----------------------------------------------------------------------


def _word_in_double(w: WordExpr, gens: dict, field=SYMBOLIC) -> DoubleElement:
    out = DoubleElement({}, field)
    for c, letters in w.terms:
        term = DoubleElement.one(field)
        for letter in letters:
            term = double_multiply(term, gens[letter])
        out = out + term.scale(field.coerce(c) if isinstance(c, int) else c)
    return out


def suite_double() -> SuiteReport:
    r = SuiteReport(4, "double-presentation")
    f = SYMBOLIC
    gens = double_generators(f)
    for name, lhs, rhs in defining_relations(f):
        r.checks[f"relation_{name}"] = _word_in_double(lhs, gens) == _word_in_double(rhs, gens)
    # (E (x) 1)(1 (x) qF) - (1 (x) qF)(E (x) 1) = (K (x) 1 - 1 (x) K^-1)/(q - q^-1)
    one = PBWElement.scalar(1, UQ, f)
    e1 = DoubleElement.pure(upper({(1, 0): 1}), one)
    qf = DoubleElement.pure(one, lower({(1, 0): 1}).scale(f.q))
    lhs = double_multiply(e1, qf) - double_multiply(qf, e1)
    rhs = (DoubleElement.pure(upper({(0, 1): 1}), one) - DoubleElement.pure(one, lower({(0, -1): 1}))).scale(
        f.one / (f.q - f.qinv))
    r.checks["commutator_display"] = lhs == rhs
    return r


# -- 5 ----------------------------------------------------------------------


def suite_aform(max_ab: int = 5) -> SuiteReport:
    r = SuiteReport(5, "a-form")
    r.checks["lemma_EF_divided"] = _all(aform.verify_lemma21(a, b) for a in range(max_ab + 1) for b in range(max_ab + 1))
    r.checks["bracket_shift_part1"] = _all(aform.verify_lemma22(1, c, t, p)
                                           for c in range(-3, 4) for t in range(5) for p in range(t + 1))
    r.checks["bracket_shift_part2"] = _all(aform.verify_lemma22(2, c, t, p)
                                           for c in range(-3, 4) for t in range(5) for p in range(1, 5))
    r.checks["bracket_integrality_part3"] = _all(aform.verify_lemma22(3, c, t)
                                                 for c in range(-4, 5) for t in range(5))
    r.checks["bracket_product_part4"] = _all(aform.verify_lemma22(4, t=t, t2=t2)
                                             for t in range(1, 7) for t2 in range(0, 7 - t))
    r.checks["divided_products"] = _all(aform.verify_divided_products(a, b)
                                        for a in range(7) for b in range(7 - a))
    r.checks["delta_bracket"] = _all(aform.verify_delta_bracket(t) for t in range(1, 6))
    printed = {}
    ok = True
    for N in range(1, 5):
        rep_n = aform.divided_hopf_reports(N)
        ok &= rep_n["delta_E"] and rep_n["delta_F"] and rep_n["antipode_E"] and rep_n["antipode_F"]
        printed[N] = rep_n["antipode_E_flipped"] and rep_n["antipode_F_flipped"]
    r.checks["divided_hopf"] = ok
    r.info["antipode_opposite_exponent_form_holds"] = {str(k): v for k, v in printed.items()}
    r.checks["theta_involution_and_bracket"] = _all(aform.verify_theta_bracket(t) for t in range(1, 5))
    return r


def aform_targets(name: str, max_value: int | None = None, part: int | None = None) -> SuiteReport:
    """One A-form identity family on its grid; ``max_value`` caps the main parameter."""
    r = SuiteReport(5, name)
    if name == "lemma21":
        m = 5 if max_value is None else max_value
        for a in range(m + 1):
            for b in range(m + 1):
                r.checks[f"a={a},b={b}"] = aform.verify_lemma21(a, b)
    elif name == "lemma22":
        parts = [part] if part else [1, 2, 3, 4]
        m = 4 if max_value is None else max_value
        for pt in parts:
            if pt == 1:
                grid = [(c, t, p) for c in range(-3, 4) for t in range(m + 1) for p in range(t + 1)]
            elif pt == 2:
                grid = [(c, t, p) for c in range(-3, 4) for t in range(m + 1) for p in range(1, m + 1)]
            elif pt == 3:
                grid = [(c, t, 0) for c in range(-4, 5) for t in range(m + 1)]
            elif pt == 4:
                grid = [(0, t, t2) for t in range(1, m + 3) for t2 in range(0, m + 3 - t)]
            else:
                raise ValueError("part must be 1, 2, 3 or 4")
            for c, t, p in grid:
                if pt == 4:
                    r.checks[f"part=4,t={t},t2={p}"] = aform.verify_lemma22(4, t=t, t2=p)
                else:
                    r.checks[f"part={pt},c={c},t={t},p={p}"] = aform.verify_lemma22(pt, c, t, p)
    elif name == "delta-bracket":
        m = 5 if max_value is None else max_value
        for t in range(1, m + 1):
            r.checks[f"t={t}"] = aform.verify_delta_bracket(t)
    elif name == "divided-hopf":
        m = 4 if max_value is None else max_value
        for N in range(1, m + 1):
            rep_n = aform.divided_hopf_reports(N)
            for k in ("delta_E", "delta_F", "antipode_E", "antipode_F"):
                r.checks[f"N={N},{k}"] = rep_n[k]
            r.info[f"N={N},opposite_exponent_antipode"] = rep_n["antipode_E_flipped"] and rep_n["antipode_F_flipped"]
    elif name == "divided-products":
        m = 6 if max_value is None else max_value
        for a in range(m + 1):
            for b in range(m + 1 - a):
                r.checks[f"a={a},b={b}"] = aform.verify_divided_products(a, b)
    else:
        raise ValueError(f"unknown A-form target {name!r}")
    r.info["params"] = {"max": max_value, "part": part}
    return r


AFORM_TARGETS = ("lemma21", "lemma22", "delta-bracket", "divided-hopf", "divided-products")


# -- 6 ----------------------------------------------------------------------


def constructed_modules(max_n: int = 4) -> list:
    """Sample of every constructor over symbolic, rational and cyclotomic fields."""
    from .scalars import CyclotomicQ
    S, Q = SYMBOLIC, RationalQ(2)
    v = S.q
    mods = []
    for field, s in ((S, v ** 3), (Q, Q.coerce(3))):
        for sign in (1, -1):
            mods.append(("one_dim", rep.one_dim(s, sign, field)))
            for n in range(max_n + 1):
                mods.append((f"simple_{n}_{sign}", rep.simple(s, n, sign, field)))
            mods.append(("verma", rep.verma(s, sign, field.coerce(5) if field is Q else v ** 5 + 1, 6, field)))
    mods.append(("tensor", rep.tensor(rep.simple(3, 2, 1, Q), rep.simple(5, 1, -1, Q))))
    C3 = CyclotomicQ(6, 1)
    mods.append(("z0", rep.z0_module(1, 1, C3.coerce(2), 3, C3)))
    U = rep.uq_simple(3, 1, Q)
    mods.append(("pullback", rep.pullback(U, 3, -1)))
    return mods


def suite_rep() -> SuiteReport:
    r = SuiteReport(6, "representations")
    S, Q = SYMBOLIC, RationalQ(2)
    v = S.q
    r.checks["all_constructed_pass_relations"] = _all(rep.check_relations(M)["pass"] for _, M in constructed_modules())
    sub_ok = True
    for field in (S, Q):
        for n in range(5):
            for lam_sign in (1, -1):
                lam = field.qpow(n) * lam_sign
                cert = rep.verma_quotient_certificate(3, 1, lam, field)
                sub_ok &= cert["n"] == n and cert["submodule_stable"] and cert["quotient_simple"] \
                    and cert["quotient_dim"] == n + 1
    sub_ok &= rep.verma_submodule_index(3, 1, 3, Q) is None
    r.checks["verma_submodule_index"] = sub_ok
    C = rep.casimir_in(S)
    r.checks["casimir_central"] = _all(not (C * g - g * C) for g in (PBWElement.generator(x) for x in GENERATORS))
    r.checks["casimir_two_forms_agree"] = C == rep.casimir_ef_form(S)
    scal = True
    for s in (v, v ** 3, S.coerce(3)):
        for n in range(5):
            scal &= rep.central_scalar(rep.simple(s, n, 1, S)) == rep.simple_central_value(s, n, S)
            rep.central_scalar(rep.simple(s, n, -1, S))
    r.checks["casimir_scalar_on_simples"] = scal
    r.checks["casimir_scalar_on_verma"] = _all(
        rep.central_scalar(rep.verma(3, sg, 5, 6, Q)) == rep.verma_central_value(3, sg, 5, Q) for sg in (1, -1))
    return r


# -- 7 ----------------------------------------------------------------------


def suite_clebsch_gordan(max_mn: int = 4) -> SuiteReport:
    r = SuiteReport(7, "clebsch-gordan")
    Q = RationalQ(2)
    for s, s2 in ((3, 5), (3, -5)):
        ok = True
        for m in range(max_mn + 1):
            for n in range(max_mn + 1):
                for sm in (1, -1):
                    for sn in (1, -1):
                        T = rep.tensor(rep.simple(s, m, sm, Q), rep.simple(s2, n, sn, Q))
                        res = rep.decompose(T)
                        want = rep.expected_clebsch_gordan(m, sm, n, sn, Q.coerce(s * s2))
                        ok &= (not res.residual) and res.components == want and res.dimension() == T.dim
        r.checks[f"roots_{s}_{s2}"] = ok
    return r


# -- 8 ----------------------------------------------------------------------


def suite_taft(dims=(2, 3, 4), gram_dims=(2, 3, 4, 5)) -> SuiteReport:
    r = SuiteReport(8, "taft-double")
    for d in dims:
        T = taft.build_taft_double(d)
        r.checks[f"dimension_{d}"] = T.dimension == d ** 4
        r.checks[f"quotient_relations_{d}"] = T.check_relations()["pass"]
        r.checks[f"hopf_ideal_{d}"] = all(taft.hopf_ideal_check(d).values())
        f = T.field
        r.checks[f"radical_{d}"] = (
            taft.radical_membership(upper({(d, 0): 1}, f), d)
            and taft.radical_membership(lower({(d, 0): 1}, f), d)
            and taft.radical_membership(upper({(0, d): 1, (0, 0): -1}, f), d)
            and not taft.radical_membership(upper({(1, 0): 1}, f), d))
    for d in gram_dims:
        G = taft.gram_matrix(d)
        r.checks[f"gram_nondegenerate_{d}"] = taft.nondegenerate(G)
        r.checks[f"gram_block_structure_{d}"] = taft.block_structure_ok(G) and taft.vandermonde_form_ok(G)
    z_kills = {}
    for d in (2, 3):
        f = taft.taft_field(d)
        inv = taft.simple_inventory(d, f, lambdas=[f.coerce(2), f.coerce(3)])
        r.checks[f"inventory_relations_{d}"] = _all(e.relations_ok for e in inv)
        r.checks[f"inventory_nilpotent_{d}"] = _all(e.ideal["E^d"] and e.ideal["F^d"] for e in inv)
        r.checks[f"inventory_simple_{d}"] = _all(e.simple for e in inv)
        r.checks[f"inventory_L_group_trivial_{d}"] = _all(
            e.ideal["K^d-1"] and e.ideal["Kt^d-1"] for e in inv if e.label.startswith("L"))
        z_kills[str(d)] = any(e.ideal["K^d-1"] and e.ideal["Kt^d-1"] for e in inv if e.label.startswith("Z"))
    r.info["some_Z_module_kills_group_part"] = z_kills
    return r


# -- 9 ----------------------------------------------------------------------


def suite_cartan() -> SuiteReport:
    from .pairing import pair as pair1
    r = SuiteReport(9, "rank-n")
    S = SYMBOLIC
    cd1 = cartan.CartanData([[2]], [1])
    words = cartan.rank1_as_words(cd1, S)
    same = True
    for name, lhs, rhs in defining_relations(S):
        d: dict = {}
        for c, w in (lhs - rhs).terms:
            d[w] = d.get(w, S.zero) + S.coerce(c)
        same &= {k: c for k, c in d.items() if c} == words[name]
    r.checks["rank1_relations"] = same and len(words) == len(defining_relations(S))
    E, F = upper({(1, 0): 1}), lower({(1, 0): 1})
    K, Kl, Kil = upper({(0, 1): 1}), lower({(0, 1): 1}), lower({(0, -1): 1})
    r.checks["rank1_pairing"] = (cartan.generator_pairing(cd1, 0, 0, "EF", S) == pair1(E, F)
                                 and cartan.generator_pairing(cd1, 0, 0, "KK", S) == pair1(K, Kl)
                                 and cartan.generator_pairing(cd1, 0, 0, "KKinv", S) == pair1(K, Kil))
    r.checks["rank1_simple_rep"] = cartan.check_matrix_rep(cd1, cartan.rank1_simple(1, S), [S.q ** 2], S)["pass"]
    sl3 = cartan.cartan_A(2)
    V = cartan.sl3_fundamental(S)
    VV = cartan.uq_tensor(V, V, S)
    r.checks["sl3_fundamental"] = cartan.check_matrix_rep(sl3, V, [1, 1], S)["pass"] and \
        cartan.check_matrix_rep(sl3, V, [S.q, S.coerce(3)], S)["pass"]
    r.checks["sl3_tensor_square"] = cartan.check_matrix_rep(sl3, VV, [S.coerce(2), S.q], S)["pass"]
    r.checks["character"] = cartan.check_module(sl3, cartan.epsilon_vec([2, 3], S))["pass"]
    rels = cartan.relations(sl3, S)
    bad = cartan.with_serre_coefficients(rels, "serreE_01", [S.one, -S.coerce(2), S.one])
    rep_bad = cartan.check_matrix_rep(sl3, VV, [1, 1], S, rels=bad)
    r.checks["negative_serre_coefficient"] = rep_bad["relations"]["serreE_01"] is False
    broken = {k: [[row[:] for row in A] for A in mats] for k, mats in V.items()}
    broken["E"][0][0][1] = S.coerce(2)
    r.checks["negative_matrix_entry"] = not cartan.check_matrix_rep(sl3, broken, [1, 1], S)["pass"]
    return r


SUITES = {
    "pbw": suite_pbw, "hopf": suite_hopf, "pairing": suite_pairing, "double": suite_double,
    "aform": suite_aform, "rep": suite_rep, "clebsch-gordan": suite_clebsch_gordan,
    "taft": suite_taft, "cartan": suite_cartan,
}


def run_all() -> list:
    return [fn() for fn in SUITES.values()]


def aggregate(reports: list) -> dict:
    return {"pass": all(r.passed for r in reports), "criteria": [r.to_json() for r in reports]}
