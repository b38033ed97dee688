"""Acceptance criteria 1-10, one test per criterion, exact equality throughout.

Each test prints a single ``criterion N: PASS|FAIL`` line to the terminal.
"""

import json
import shutil
import subprocess
import sys

import pytest

from qdouble import verify


@pytest.fixture
def report_line(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            extra = f" ({detail})" if detail else ""
            sys.stdout.write(f"\ncriterion {number} [{title}]: {'PASS' if ok else 'FAIL'}{extra}\n")
    return emit


def check_suite(report, report_line, required):
    missing = [k for k in required if k not in report.checks]
    ok = report.passed and not missing
    report_line(report.criterion, report.name, ok, ", ".join(report.failures() + missing))
    assert not missing, missing
    assert report.passed, report.failures()
    return report


def test_criterion_1_pbw_oracle(report_line):
    r = verify.suite_pbw(samples=200)
    check_suite(r, report_line, ["random_words_match_oracle", "defining_relations_vanish"])
    assert r.info["words"] == 200


def test_criterion_2_hopf_axioms(report_line):
    r = verify.suite_hopf(samples=100)
    check_suite(r, report_line, ["generators"] + [f"random_{k}" for k in (
        "coassociative", "counit_left", "counit_right", "antipode_left", "antipode_right",
        "antipode_inverse", "coproduct_multiplicative", "antipode_antimultiplicative")])


def test_criterion_3_pairing(report_line):
    r = verify.suite_pairing(samples=200, grid_a=5, grid_b=4)
    check_suite(r, report_line, ["axiom3_generator_values", "axiom2_degree_filtering", "closed_form_grid",
                                 "random_axiom1", "random_axiom4", "random_axiom5", "random_axiom6"])
    # informational: the printed root-of-unity closed form disagrees with the recursion
    with_total = r.info["printed_root_of_unity_form_mismatches"]
    assert with_total.endswith("/486")
    print("printed closed form mismatches:", with_total)


def test_criterion_4_double_presentation(report_line):
    r = verify.suite_double()
    names = [f"relation_{n}" for n in ("KE", "KF", "KtE", "KtF", "KKinv", "KinvK", "KtKtinv", "KtinvKt", "KKt", "EF")]
    check_suite(r, report_line, names + ["commutator_display"])


def test_criterion_5_aform(report_line):
    r = verify.suite_aform(max_ab=5)
    check_suite(r, report_line, ["lemma_EF_divided", "bracket_shift_part1", "bracket_shift_part2",
                                 "bracket_integrality_part3", "bracket_product_part4", "divided_products",
                                 "delta_bracket", "divided_hopf", "theta_involution_and_bracket"])
    print("opposite-exponent antipode form holds:", r.info["antipode_opposite_exponent_form_holds"])


def test_criterion_6_representations(report_line):
    r = verify.suite_rep()
    check_suite(r, report_line, ["all_constructed_pass_relations", "verma_submodule_index", "casimir_central",
                                 "casimir_two_forms_agree", "casimir_scalar_on_simples", "casimir_scalar_on_verma"])


def test_criterion_7_clebsch_gordan(report_line):
    r = verify.suite_clebsch_gordan(max_mn=4)
    check_suite(r, report_line, ["roots_3_5", "roots_3_-5"])


def test_criterion_8_taft(report_line):
    r = verify.suite_taft(dims=(2, 3, 4), gram_dims=(2, 3, 4, 5))
    req = [f"dimension_{d}" for d in (2, 3, 4)] + [f"radical_{d}" for d in (2, 3, 4)]
    req += [f"gram_nondegenerate_{d}" for d in (2, 3, 4, 5)]
    req += [f"inventory_{k}_{d}" for k in ("relations", "nilpotent", "simple") for d in (2, 3)]
    check_suite(r, report_line, req)


def test_criterion_9_rank_n(report_line):
    r = verify.suite_cartan()
    check_suite(r, report_line, ["rank1_relations", "rank1_pairing", "rank1_simple_rep", "sl3_fundamental",
                                 "sl3_tensor_square", "character", "negative_serre_coefficient",
                                 "negative_matrix_entry"])


def test_criterion_10_cli_verify_all(report_line):
    exe = shutil.which("qdouble")
    cmd = [exe] if exe else [sys.executable, "-m", "qdouble"]
    runs = [subprocess.run(cmd + ["verify", "all"], capture_output=True, text=True) for _ in range(2)]
    first = runs[0]
    obj = json.loads(first.stdout)
    ok = (first.returncode == 0 and obj["pass"] is True
          and [c["criterion"] for c in obj["criteria"]] == list(range(1, 10))
          and all(c["pass"] for c in obj["criteria"])
          and runs[1].stdout == first.stdout
          and first.stdout == json.dumps(obj, sort_keys=True, indent=2) + "\n")
    report_line(10, "cli-verify-all", ok)
    assert first.returncode == 0, first.stderr
    assert [c["criterion"] for c in obj["criteria"]] == list(range(1, 10))
    assert runs[1].stdout == first.stdout
    assert ok
