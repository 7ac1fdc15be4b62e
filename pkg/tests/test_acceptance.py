"""Acceptance gate: one test per shipped criterion, one report line each.

Run with -s to see the PASS/FAIL lines; each test fails loudly with the
criterion's own detail string if its bar is missed.
"""

from fse import verify


def _run(index):
    fn = getattr(verify, "criterion_%d" % index)
    result = fn()
    print("criterion %02d %-24s %s  (%s)"
          % (index, result.name, "PASS" if result.passed else "FAIL",
             result.detail))
    assert result.passed, "%s: %s" % (result.name, result.detail)


def test_criterion_01_first_order_time_factor():
    _run(1)


def test_criterion_02_half_order_relaxation():
    _run(2)


def test_criterion_03_algebraic_h_identity():
    _run(3)


def test_criterion_04_h_route_agreement():
    _run(4)


def test_criterion_05_order_two_point_potential():
    _run(5)


def test_criterion_06_full_solution_invariants():
    _run(6)


def test_criterion_07_linear_route_agreement():
    _run(7)


def test_criterion_08_order_two_stationarity():
    _run(8)


def test_criterion_09_fourier_pair_defects():
    _run(9)


def test_criterion_10_cli_contract():
    _run(10)
