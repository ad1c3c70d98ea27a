import math

import pytest
from hypothesis import given, settings, strategies as st

from conftest import assert_close, quaternions
from qint import (DegenerateSliceError, DomainError, Line, MissingReferenceError,
                  Monomial, NamedFunction, PolyLine, PowerSeries, Quaternion,
                  SliceCircle, UnitImaginary, convergence_study, endpoint_reference,
                  eval_function, integrate, integrate_slice_quadrature)

U_I = UnitImaginary(Quaternion(0, 1, 0, 0))


@settings(max_examples=25, deadline=None)
@given(quaternions(1.5), quaternions(1.5), st.integers(min_value=1, max_value=500))
def test_identity_telescopes_exactly(a, b, n):
    rep = integrate(Monomial(1), Line(a, b), n)
    assert_close(rep.value, b - a, 1e-12)


def test_square_over_j_segment():
    rep = integrate(Monomial(2), Line(Quaternion(0, 0, 0, 0), Quaternion(0, 0, 1, 0)), 10_000)
    assert_close(rep.value, Quaternion(-1, 0, 0, 0), 1e-3)
    assert rep.abs_error <= 1e-3


def test_cube_converges_to_endpoint_difference():
    # segment stepping off 1+i in the j direction
    path = Line(Quaternion(1, 1, 0, 0), Quaternion(1, 1, 1, 0))
    ref = Quaternion(-3, -1, 1, 0)  # (1+i+j)^3 - (1+i)^3 by direct cubing
    assert_close(endpoint_reference(Monomial(3), path), ref, 1e-12)
    study = convergence_study(Monomial(3), path, [100, 400, 1600, 6400])
    errs = [e for _, _, e in study.rows]
    assert all(b < a for a, b in zip(errs, errs[1:]))
    assert study.est_order == pytest.approx(1.0, abs=0.1)
    assert_close(study.value, ref, 1e-3)


def test_left_rule_error_scales_first_order():
    path = Line(Quaternion(1, 1, 0, 0), Quaternion(2, 0, 1, 0))
    e1 = integrate(Monomial(2), path, 500).abs_error
    e2 = integrate(Monomial(2), path, 1000).abs_error
    assert e1 / e2 == pytest.approx(2.0, rel=0.05)


def test_midpoint_rule_is_sharper():
    path = Line(Quaternion(1, 1, 0, 0), Quaternion(2, 0, 1, 0))
    left = integrate(NamedFunction("exp"), path, 2000, rule="left").abs_error
    mid = integrate(NamedFunction("exp"), path, 2000, rule="midpoint").abs_error
    assert mid < left / 100


def test_integrate_validates_arguments():
    path = Line(Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0))
    with pytest.raises(ValueError):
        integrate(Monomial(1), path, 0)
    with pytest.raises(ValueError):
        integrate(Monomial(1), path, 100, rule="simpson")


def test_quadrature_identity_is_almost_exact():
    rep = integrate_slice_quadrature(
        Monomial(1), Line(Quaternion(0, 0, 0, 0), Quaternion(0, 0, 1, 0)), 1000)
    assert rep.abs_error <= 1e-10


def test_quadrature_euler_segment():
    rep = integrate_slice_quadrature(
        NamedFunction("exp"), Line(Quaternion(0, 0, 0, 0), Quaternion(0, math.pi, 0, 0)),
        10_000)
    assert_close(rep.value, Quaternion(-2, 0, 0, 0), 1e-6)


def test_quadrature_single_step_telescopes():
    rep = integrate_slice_quadrature(
        Monomial(2), Line(Quaternion(1, 1, 0, 0), Quaternion(1, 1, 1, 0)), 1)
    assert_close(rep.value, rep.reference, 1e-12)


@settings(max_examples=10, deadline=None)
@given(st.tuples(*(st.floats(-1, 1) for _ in range(4))),
       st.tuples(*(st.floats(-1, 1) for _ in range(4))))
def test_staircase_and_quadrature_agree_increasingly(a4, b4):
    a, b = Quaternion(*a4), Quaternion(*b4)
    F = PowerSeries((0.5, 1.0, -2.0, 1.5))
    path = Line(a, b)
    gaps = []
    for n in (200, 800):
        va = integrate(F, path, n).value
        vb = integrate_slice_quadrature(F, path, n).value
        gaps.append((va - vb).norm())
    assert gaps[1] <= gaps[0] * 0.5 + 1e-12


def test_closed_loop_of_entire_function_is_small():
    circle = SliceCircle(0.25, 1.0, U_I, 1.0)
    n = 10_000
    rep = integrate(NamedFunction("exp"), circle, n)
    assert rep.value.norm() <= 25.0 / n
    assert_close(rep.reference, Quaternion(0, 0, 0, 0), 1e-12)


def test_polynomial_closed_loop_is_exact():
    # in-slice circles sample monomials at roots of unity; the sums cancel
    circle = SliceCircle(2.0, 1.0, U_I, 1.0)
    rep = integrate(Monomial(3), circle, 64)
    assert rep.value.norm() <= 1e-12


def test_study_requires_three_ascending_counts():
    path = Line(Quaternion(1, 1, 0, 0), Quaternion(1, 1, 1, 0))
    with pytest.raises(ValueError):
        convergence_study(Monomial(2), path, [100, 200])
    with pytest.raises(ValueError):
        convergence_study(Monomial(2), path, [100, 300, 200])


def test_study_exact_case_reports_no_order():
    path = Line(Quaternion(1, 1, 0, 0), Quaternion(1, 1, 1, 0))
    study = convergence_study(Monomial(1), path, [100, 200, 400])
    assert study.est_order is None
    assert study.is_exact()
    assert all(err <= 1e-12 for _, _, err in study.rows)


def test_study_without_reference_raises():
    path = Line(Quaternion(1, 1, 0, 0), Quaternion(2, 1, 0, 0))
    with pytest.raises(MissingReferenceError):
        convergence_study(NamedFunction("ln"), path, [100, 200, 400])


def test_endpoint_outside_domain_raises_domain_error():
    geometric = PowerSeries((1.0,) * 30, radius=1.0)
    # stays off the real axis throughout, but |z| reaches 2 at the far end
    path = Line(Quaternion(0, 0.5, 0, 0), Quaternion(0, 0, 2, 0))
    with pytest.raises(DomainError):
        convergence_study(geometric, path, [100, 200, 400])
    with pytest.raises(DomainError):
        integrate(geometric, path, 100)


def test_axis_crossing_rejected_for_non_entire():
    # crosses the real axis midway; reciprocal is not entire
    path = Line(Quaternion(0.25, -0.5, 0, 0), Quaternion(0.25, 0.5, 0, 0))
    with pytest.raises(DegenerateSliceError) as exc:
        integrate(NamedFunction("reciprocal"), path, 100)
    assert exc.value.s_param == pytest.approx(0.5, abs=0.01)
    with pytest.raises(DegenerateSliceError):
        integrate_slice_quadrature(NamedFunction("reciprocal"), path, 100)


def test_axis_crossing_fine_for_entire():
    path = Line(Quaternion(0.25, -0.5, 0, 0), Quaternion(0.25, 0.5, 0, 0))
    rep = integrate(NamedFunction("exp"), path, 4000)
    assert rep.abs_error <= 1e-3


def test_reference_and_error_populated():
    path = Line(Quaternion(1, 1, 0, 0), Quaternion(1, 1, 1, 0))
    rep = integrate(Monomial(2), path, 100)
    ref = eval_function(Monomial(2), path.end) - eval_function(Monomial(2), path.start)
    assert_close(rep.reference, ref, 1e-15)
    assert rep.abs_error == pytest.approx((rep.value - ref).norm())
    assert rep.rows == [(100, rep.value, rep.abs_error)]


def test_threads_agree_with_sequential():
    path = PolyLine((Quaternion(1, 1, 0, 0), Quaternion(1.5, 0.5, 0.5, 0),
                     Quaternion(1, 0, 1, 0)))
    seq = integrate(NamedFunction("sin"), path, 999).value
    par = integrate(NamedFunction("sin"), path, 999, threads=4).value
    assert (seq - par).norm() <= 1e-12
    seq_q = integrate_slice_quadrature(NamedFunction("sin"), path, 999).value
    par_q = integrate_slice_quadrature(NamedFunction("sin"), path, 999, threads=3).value
    assert (seq_q - par_q).norm() <= 1e-12
