import math

import hypothesis.strategies as st

from qint import Quaternion, UnitImaginary


def components(span: float):
    return st.floats(min_value=-span, max_value=span,
                     allow_nan=False, allow_infinity=False)


def quaternions(span: float = 2.0):
    c = components(span)
    return st.builds(Quaternion, c, c, c, c)


def off_axis_quaternions(span: float = 2.0, min_r: float = 1e-3):
    return quaternions(span).filter(lambda q: q.imag_norm() > min_r)


def unit_imaginaries():
    c = components(1.0)
    return (st.tuples(c, c, c)
            .filter(lambda v: math.sqrt(v[0]**2 + v[1]**2 + v[2]**2) > 1e-3)
            .map(lambda v: UnitImaginary(Quaternion(0.0, *v))))


def assert_close(a: Quaternion, b: Quaternion, tol: float = 1e-10):
    d = (a - b).norm()
    assert d <= tol, f"{a.to_list()} vs {b.to_list()}: |diff| = {d:.3e} > {tol:.1e}"
