import json

import pytest

from mapcensus import decomposition as dec
from mapcensus.series import Series1


@pytest.fixture(scope="module")
def suite():
    return dec.run_suite(30, 20)


def test_suite_passes(suite):
    failed = [r.as_text() for r in suite if not r.passed]
    assert not failed, "\n".join(failed)
    assert len(suite) > 100


def test_suite_covers_every_group(suite):
    prefixes = {r.identity.split(".")[0] for r in suite}
    for p in ("kernel", "changevar", "multiple_edge", "sep4_ge3", "J", "two_rooted", "solve",
              "diagonal"):
        assert any(x.startswith(p) for x in prefixes), p


def test_reports_record_order(suite):
    orders = {(r.variables, r.order) for r in suite}
    assert (1, 30) in orders and (2, 20) in orders


def test_report_finds_first_failure():
    r = dec.report("demo", Series1([0, 0, 0, 5, 0], 4), 4)
    assert not r.passed and r.first_failure == 3
    assert "FAIL" in r.as_text()
    ok = dec.report("demo", Series1.zero(4), 4)
    assert ok.passed and ok.first_failure is None


def test_one_variable_solve_prefers_with_L():
    sol = dec.solve_two_rooted_1v(20)
    assert sol.vf_variant == "with_L"
    c = dec._cat1(20)
    z = dec._z1(c)
    printed = dec._solve_vf(c, z, sol.solved["H_ff"], "printed")
    assert not (printed - sol.closed["H_vf"]).is_zero()


def test_solved_series_equal_closed_forms_1v():
    sol = dec.solve_two_rooted_1v(30)
    for name, s in sol.solved.items():
        assert (s - sol.closed[name]).is_zero(), name


def test_solved_series_equal_closed_forms_2v():
    sol = dec.solve_two_rooted_2v(14)
    for name, s in sol.solved.items():
        assert (s - sol.closed[name]).is_zero(), name


def test_untransposed_J_fails_the_ww_identity():
    d = dec._cat2(12)
    zb, zw = dec._z2(d)
    rest = d.C / d.W * d.H_ww_ge3.compose(zb, zw)
    good = d.G_ww - (dec._axis_term_2v(d, "w", "swapped") + rest)
    bad = d.G_ww - (dec._axis_term_2v(d, "w", "printed") + rest)
    assert good.is_zero()
    assert not bad.is_zero()


def test_derived_J_is_asymmetric_integral_and_reduces():
    J = dec.derive_J_2v(12)
    assert all(isinstance(c, int) and c >= 0 for _, c in J.items())
    assert not (J.swap() - J).is_zero()
    assert (J.diagonal() - dec._cat1(12).J).is_zero()


def test_format_reports():
    reps = dec.check_kernels(8, 6)
    text = dec.format_reports(reps, "text")
    assert text.rstrip().endswith(f"{len(reps)} passed, 0 failed")
    doc = json.loads(dec.format_reports(reps, "json"))
    assert isinstance(doc, (list, dict))
