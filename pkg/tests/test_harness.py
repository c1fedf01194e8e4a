import json
import math

import pytest
from numpy.testing import assert_allclose

from concave_dirichlet.concave import ConcaveMapSpec
from concave_dirichlet.harness import (
    GridSpec,
    _change_of_variables,
    _convex_z_over_j,
    _koebe_f_over_z,
    _koebe_z_over_f,
    _oracle_agreement,
    overall_pass,
    run_coefficient_suite,
    run_lemma_suite,
    run_suites,
    wedge_distance,
)
from concave_dirichlet.hypergeom import UnitModulusParameter
from concave_dirichlet.report import VerificationReport, reports_to_csv, reports_to_json

SMALL = GridSpec(alpha_values=(1.5, 2.0), small_alpha_values=(0.5,), gamma_count=32,
                 n_max=8, trials=6)


def _rep(claim, passed, informational=False):
    return VerificationReport(claim, {}, 1.0, 1.0, 1.0, None, passed, 0.0,
                              informational=informational)


def test_gridspec_validation():
    with pytest.raises(ValueError):
        GridSpec(n_max=100, series_order=64)
    with pytest.raises(ValueError):
        GridSpec(gamma_margin=0.0)
    assert GridSpec().gammas().size == 256


def test_lemma_suite_ids_are_unique_and_ordered():
    reps = run_lemma_suite(SMALL)
    ids = [r.claim_id for r in reps]
    assert len(ids) == len(set(ids))
    assert ids[0] == "domination.B_n.alpha_gt_1[alpha=1.5]"
    assert [r.passed for r in reps[:2]] == [True, True]
    # the small-alpha analogue and the scaled form both fail at n = 2
    assert not reps[2].passed
    assert all(not r.passed for r in reps if r.claim_id.startswith("domination.scaled"))


def test_coefficient_suite_deterministic():
    a = reports_to_json(run_coefficient_suite(SMALL))
    b = reports_to_json(run_coefficient_suite(SMALL))
    assert a == b
    claims = {d["claim_id"]: d["pass"] for d in json.loads(a)}
    assert claims["coefficients.disc_bound.f_theta"]
    assert claims["coefficients.disc_bound.f_theta_mixtures"]
    assert not claims["coefficients.disc_bound.random_measures"]


def test_area_pieces():
    g = GridSpec()
    for fn in (_oracle_agreement, _koebe_z_over_f, _convex_z_over_j, _koebe_f_over_z,
               _change_of_variables):
        rep = fn(g)
        assert rep.passed, rep.summary_line()


def test_wedge_distance():
    k = ConcaveMapSpec.koebe()
    assert_allclose(wedge_distance(k), 0.25)
    s = ConcaveMapSpec(1.25, UnitModulusParameter(math.pi / 3))
    assert wedge_distance(s) < 1 / (abs(1 + s.xc) * 1.25)


def test_overall_pass_ignores_informational():
    assert overall_pass([_rep("a", True), _rep("b", False, informational=True)])
    assert not overall_pass([_rep("a", True), _rep("c", False)])


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suites("nonsense")


def test_report_encodings():
    r = VerificationReport("x", {"z": 1 + 2j, "v": [float("inf")]}, 0.5, 1.0, 0.5,
                           {"n": 3}, True, 1e-12, runtime_ms=99)
    d = json.loads(reports_to_json([r]))[0]
    for key in ("claim_id", "params", "value", "bound", "ratio", "pass", "tolerance"):
        assert key in d
    assert "runtime_ms" not in d
    assert d["params"]["z"] == {"re": 1.0, "im": 2.0}
    assert d["params"]["v"] == ["inf"]
    text = reports_to_csv([r])
    assert text.splitlines()[0].startswith("claim_id,value,bound,ratio,pass")
    assert text.endswith("\r\n")
    assert r.summary_line().startswith("[PASS] x")
