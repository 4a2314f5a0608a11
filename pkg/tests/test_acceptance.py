"""Sign-off battery: one test per acceptance criterion.

Each test delegates to the shared runner in refleq.acceptance, so the
command line's "suite acceptance" and this module always agree.  A failure
message carries the runner's detail line verbatim.
"""

import pytest

from refleq.acceptance import CRITERIA, run_criterion


def _run(index):
    rep = run_criterion(index)
    assert rep["ok"], f"criterion {index} ({rep['title']}): {rep['detail']}"


def test_01_fixed_point_counts():
    _run(1)


def test_02_charge_condition_example():
    _run(2)


def test_03_tangent_dimensions():
    _run(3)


def test_04_betti_structure():
    _run(4)


def test_05_longest_reflection_composite():
    _run(5)


def test_06_r_matrix_identities():
    _run(6)


def test_07_reflection_equation():
    _run(7)


def test_08_monodromy_exchange():
    _run(8)


def test_09_boundary_operator():
    _run(9)


def test_10_polarization_dichotomy():
    _run(10)


def test_11_flag_fixed_points():
    _run(11)


def test_battery_is_complete():
    assert len(CRITERIA) == 11
    with pytest.raises(IndexError):
        run_criterion(12)
