import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gtsq import verify
from gtsq.exactpoly import aux_poly
from gtsq.gts import HasseDiagram, build_hasse
from gtsq.matrices import q_laplacian
from gtsq.spectra import sym_eigen
from gtsq.trees import TreeCode, path_tree, star_tree

# anchors of every claim the checkers are meant to exercise
ANCHORS = {
    "main_result", "csikvari_main", "csikvari_min_max", "bapat-lal-pati", "bapat_ED_ev", "mult_small_ev",
    "even_odd_no_vertices", "condition_gen_lemma", "result_by_gen_lemma", "ev_A_B", "q_interlacing",
    "q_partial_interlacing", "subtree_ev", "ev_n-1_subtrees", "deg_aux_poly", "F_T_q|<1", "F_T_q|>1",
    "eg_graphs", "sgn_F_T", "sgn_D_T2^T1", "max_ev_with_D_T1T2", "sgn_f^sL_T^i", "ev_max_main", "ev_S_n",
    "max_ev_bound_L_Tq", "min_ev_q<1", "min_ev_q>1", "2nd_ev_L_T2", "min_T1<2nd_min_T2", "2nd_ev_main",
    "2nd_smal_ev_bound", "tab:min_max_eig_GTS_6", "q_t-Laplacian_result", "q_t_bound_corollary",
    "main_result_E", "bapat_E_biv_inverse",
}


def _reversed_first_cover(h: HasseDiagram) -> HasseDiagram:
    i, j = h.covers[0]
    witness = dict(h.witness)
    witness[(j, i)] = h.witness[(i, j)].reversed()
    return HasseDiagram(h.n, list(h.nodes), sorted(h.covers + [(j, i)]), witness)


def test_coverage_manifest_lists_every_anchor():
    assert set(verify.COVERAGE) == ANCHORS
    for anchor, selectors in verify.COVERAGE.items():
        assert selectors and all(s in verify.SELECTORS for s in selectors), anchor


def test_coverage_manifest_is_backed_by_reports():
    cfg = verify.VerifyConfig(n=5)
    seen: dict[str, set[str]] = {}
    for name in verify.SELECTORS:
        for r in verify.run(name, cfg):
            for a in r.anchors:
                seen.setdefault(a, set()).add(name)
    for anchor, selectors in verify.COVERAGE.items():
        assert set(selectors) <= seen.get(anchor, set()), anchor


def test_qgrid_validation():
    with pytest.raises(ValueError):
        verify.QGrid((0.5, 0.0))
    with pytest.raises(ValueError):
        verify.QGrid((math.inf,))
    with pytest.raises(ValueError):
        verify.check_herm_grid([0j])
    assert 2.0 in verify.QGrid.default([2.0]).values


@pytest.mark.parametrize("n", range(2, 10))
def test_enumeration_check(n):
    assert verify.check_enumeration(n).passed


@pytest.mark.parametrize("n", range(1, 8))
def test_determinant_check(n):
    assert verify.check_determinant(n).passed


@pytest.mark.parametrize("n", range(4, 8))
def test_monotonicity_and_structure(n):
    assert verify.check_monotonicity_q(n).passed
    assert verify.check_structural(n).passed
    assert verify.check_interlacing(n).passed


@pytest.mark.parametrize("n", [5, 6])
def test_reversed_cover_is_caught(n):
    bad = _reversed_first_cover(build_hasse(n))
    r = verify.check_monotonicity_q(n, hasse=bad)
    assert not r.passed
    assert verify.check_ed(n, hasse=bad).passed is False


def test_slack_override_is_scoped():
    before = verify.SLACK
    with verify.slack_override(-1.0):
        assert not verify.check_monotonicity_q(5).passed
    assert verify.SLACK == before
    assert verify.check_monotonicity_q(5).passed


def test_reports_are_deterministic_without_timing():
    a = [r.dumps(include_timing=False) for r in verify.run("all", verify.VerifyConfig(n=5))]
    verify.clear_cache()
    b = [r.dumps(include_timing=False) for r in verify.run("all", verify.VerifyConfig(n=5))]
    assert a == b


def test_parallel_warmup_matches_serial():
    serial = verify.check_ed(6, jobs=1).dumps(include_timing=False)
    verify.clear_cache()
    parallel = verify.check_ed(6, jobs=2).dumps(include_timing=False)
    assert serial == parallel


def test_report_json_round_trip_and_text():
    r = verify.check_monotonicity_q(5)
    data = json.loads(r.dumps())
    assert data["claim"] == "main_result" and data["passed"] is True
    assert set(data) >= {"claim", "instances", "failures", "max_violation", "elapsed_ms"}
    assert r.to_text().startswith("[PASS] main_result")


def test_table1_pair_is_unique_and_close():
    m = verify.locate_table1_pair()
    assert (str(m.t1), str(m.t2)) == ("0,1,2,2,1,2", "0,1,2,2,1,1")
    assert m.max_error <= verify.TABLE1_TOL
    assert verify.check_table1().passed
    assert abs(m.table[1][0] - 2.2566) <= 5e-5
    assert abs(m.table[3][2] - -0.0864) <= 5e-5 and abs(m.table[3][3] - -0.0981) <= 5e-5


def test_table1_lookup_fails_without_the_cover():
    h = build_hasse(6)
    i, j = h.index(TreeCode((0, 1, 2, 2, 1, 2))), h.index(TreeCode((0, 1, 2, 2, 1, 1)))
    pruned = HasseDiagram(6, h.nodes, [c for c in h.covers if c != (i, j)],
                          {c: w for c, w in h.witness.items() if c != (i, j)})
    with pytest.raises(LookupError):
        verify.locate_table1_pair(pruned)
    assert not verify.check_table1(pruned).passed


def test_aux_example():
    r = verify.check_aux_example()
    assert r.passed
    assert "[0, 1, 4, 5]" in r.observations[0]


@pytest.mark.parametrize("q", [0.1, 0.5, 0.9, 1.0, 1.5, 10.0])
@pytest.mark.parametrize("n", range(3, 13))
def test_star_formulas(n, q):
    s = sym_eigen(q_laplacian(star_tree(n), q))
    assert np.allclose(s.values, verify.star_eigenvalues(n, q), atol=1e-9, rtol=0)
    assert abs(s.max - verify.lambda_max_bound(n, q * q)) <= 1e-9 * (1 + s.max)


def test_path_bound_example():
    s = sym_eigen(q_laplacian(path_tree(6), 1.0))
    assert abs(s.max - (2 + math.sqrt(3))) <= 1e-12
    assert s.max <= verify.lambda_max_bound(6, 1.0) == 6.0


@given(st.sampled_from([4, 5, 6]), st.sampled_from(verify.QGrid().values))
def test_bounds_hold(n, q):
    assert verify.check_bounds(n, verify.QGrid((q,))).passed


def test_qt_and_ed_small():
    assert verify.check_qt(5).passed
    assert verify.check_ed(6).passed


def test_solver_check_is_seeded():
    a = verify.check_solvers(4, seed=3, count=40)
    b = verify.check_solvers(4, seed=3, count=40)
    assert a.passed and a.dumps(include_timing=False) == b.dumps(include_timing=False)


def test_nonzero_roots_strip_zero_and_repeat_multiplicities():
    # x^2 (x - 2)^2 (x - 3)
    coeffs = [Fraction(c) for c in (0, 0, -12, 16, -7, 1)]
    roots = sorted(r.real for r in verify.nonzero_roots(coeffs))
    assert np.allclose(roots, [2, 2, 3])


def test_aux_root_location_counterexample_on_p4():
    """Endpoint auxiliary polynomial of P_4 at q = 0.1 has its root 1 + q^2 - q below lambda_a."""
    q = Fraction(1, 10)
    f = aux_poly(path_tree(4), 0)
    root = 1 + q * q - q
    assert f.eval(q, root) == 0
    la = sym_eigen(q_laplacian(path_tree(4), 0.1)).second_smallest
    assert float(root) < la - verify.ROOT_WINDOW
    r = verify.check_aux_polynomials(4, verify.QGrid((0.1,)))
    assert not r.passed
    assert {f.quantity for f in r.failures} == {"nonzero root of F >= lambda_a"}


@pytest.mark.parametrize("n", range(4, 8))
def test_aux_checks_other_than_root_location(n):
    r = verify.check_aux_polynomials(n)
    assert {f.quantity for f in r.failures} <= {"nonzero root of F >= lambda_a"}
    assert all(abs(float(f.params.split(",")[0][2:])) < 1 for f in r.failures)


def test_unknown_selector():
    with pytest.raises(KeyError):
        verify.run("nope", verify.VerifyConfig())


def test_all_runs_every_selector():
    reports = verify.run("all", verify.VerifyConfig(n=4))
    claims = {r.claim for r in reports}
    assert {"enumeration", "main_result", "solvers", "tab:min_max_eig_GTS_6"} <= claims
    assert len(reports) == len(verify.SELECTORS) + 1  # aux contributes two reports


@given(st.sampled_from(range(3, 8)), st.data())
def test_count_below_matches_floating_spectrum(n, data):
    from gtsq.trees import enumerate_trees

    code = data.draw(st.sampled_from(enumerate_trees(n)))
    q = data.draw(st.sampled_from([Fraction(1, 10), Fraction(1, 2), Fraction(3, 2)]))
    x0 = data.draw(st.fractions(-2, 6, max_denominator=97))
    vals = sym_eigen(q_laplacian(code.tree(), float(q))).values
    if min(abs(v - float(x0)) for v in vals) < 1e-6:
        return
    assert verify.count_below(code.tree(), q, x0) == sum(v < x0 for v in vals)


def test_lambda_a_cover_counterexample_is_exact():
    """A GTS_8 cover whose second smallest q-Laplacian eigenvalue drops at q = 1/10."""
    t1, t2 = TreeCode.parse("0,1,2,3,1,2,2,2"), TreeCode.parse("0,1,2,2,2,1,2,2")
    h = build_hasse(8)
    assert (h.index(t1), h.index(t2)) in h.covers
    x0, q = Fraction(858, 1000), Fraction(1, 10)
    assert verify.count_below(t1.tree(), q, x0) == 1
    assert verify.count_below(t2.tree(), q, x0) == 2
    assert verify.certify_order(t2, t1, 2, 0.1, 0.8568, 0.8591)
    assert verify.check_monotonicity_q(8, verify.QGrid((0.9, 1.0, 1.5, 10.0))).passed
