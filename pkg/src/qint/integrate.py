"""Staircase path integration of the differential, plus two companions:
an ordinary ds-quadrature of dF(x(s))/ds used as an independent cross-check,
and a branch-tracked variant for ln on in-slice paths.
"""

import cmath
import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .differential import differential
from .errors import (DegenerateSliceError, DomainError, MissingReferenceError,
                     SliceEscapeError, StepTooCoarseError, UnsupportedFunctionError)
from .functions import AnalyticFunction, NamedFunction
from .paths import Path
from .quaternion import Quaternion
from .slices import EPS_AXIS, eval_function

# Errors at or below this are treated as exact (pure rounding noise), both for
# the "exact" verdict and for excluding points from log-log order fits.
EXACT_FLOOR = 1e-12

# Tolerance for deciding a point has left the slice plane (branch tracking).
SLICE_REJECTION_TOL = 1e-9

# Unwrapping slack: per-step phase change may exceed pi/2 by rounding only.
UNWRAP_SLACK = 1e-9


@dataclass
class IntegrationReport:
    """Result of one integration or of a convergence study over several N."""

    steps: int
    value: Quaternion
    reference: Quaternion | None = None
    abs_error: float | None = None
    rows: list[tuple[int, Quaternion, float | None]] = field(default_factory=list)
    est_order: float | None = None

    def is_exact(self, floor: float = EXACT_FLOOR) -> bool:
        """True when every measured error is at or below rounding noise."""
        if self.reference is None or not self.rows:
            return False
        return all(err is not None and err <= floor for _, _, err in self.rows)


class _KahanQuat:
    """Compensated component-wise accumulator for quaternion sums."""

    __slots__ = ("s", "c")

    def __init__(self):
        self.s = [0.0, 0.0, 0.0, 0.0]
        self.c = [0.0, 0.0, 0.0, 0.0]

    def add(self, q: Quaternion) -> None:
        s, c = self.s, self.c
        for i, v in enumerate((q.w, q.x1, q.x2, q.x3)):
            y = v - c[i]
            t = s[i] + y
            c[i] = (t - s[i]) - y
            s[i] = t

    def total(self) -> Quaternion:
        return Quaternion(*self.s)


def endpoint_reference(F: AnalyticFunction, path: Path) -> Quaternion:
    """F(x_b) - F(x_a) by slice evaluation; the closed-form integral value.

    Only meaningful for single-valued F; multivalued functions make the
    endpoint difference path dependent, so no reference exists. An endpoint
    outside F's domain raises DomainError as usual.
    """
    if not F.single_valued:
        raise MissingReferenceError(
            "endpoint difference is path dependent for a multivalued function")
    return eval_function(F, path.end) - eval_function(F, path.start)


def _try_reference(F: AnalyticFunction, path: Path) -> Quaternion | None:
    try:
        return endpoint_reference(F, path)
    except (MissingReferenceError, DomainError):
        return None


def _check_axis_eval(F: AnalyticFunction, x: Quaternion, s: float, eps_axis: float) -> None:
    if x.imag_norm() <= eps_axis and not F.is_entire:
        raise DegenerateSliceError(
            "evaluation point on the real axis for a non-entire function",
            s_param=s)


def _staircase_chunk(F: AnalyticFunction, path: Path, steps: int,
                     lo: int, hi: int, rule: str, eps_axis: float) -> Quaternion:
    inv = 1.0 / steps
    acc = _KahanQuat()
    prev = path.point(lo * inv)
    for n in range(lo + 1, hi + 1):
        cur = path.point(n * inv)
        if rule == "left":
            s_eval = (n - 1) * inv
            xe = prev
        else:
            s_eval = (n - 0.5) * inv
            xe = path.point(s_eval)
        _check_axis_eval(F, xe, s_eval, eps_axis)
        acc.add(differential(F, xe, cur - prev, eps_axis))
        prev = cur
    return acc.total()


def integrate(F: AnalyticFunction, path: Path, steps: int, rule: str = "left",
              threads: int = 1, eps_axis: float = EPS_AXIS) -> IntegrationReport:
    """Sum differential(F, x_eval, x_n - x_{n-1}) over a uniform subdivision.

    rule='left' evaluates at the segment start (first-order accurate);
    rule='midpoint' evaluates at the path midpoint of the segment
    (second-order). Compensated summation keeps the telescoping case
    (F = x, any N) at rounding noise.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if rule not in ("left", "midpoint"):
        raise ValueError(f"unknown rule {rule!r}; expected 'left' or 'midpoint'")
    if threads > 1 and steps > threads:
        bounds = [(k * steps) // threads for k in range(threads + 1)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(
                lambda be: _staircase_chunk(F, path, steps, be[0], be[1], rule, eps_axis),
                zip(bounds[:-1], bounds[1:])))
        acc = _KahanQuat()
        for p in parts:
            acc.add(p)
        value = acc.total()
    else:
        value = _staircase_chunk(F, path, steps, 0, steps, rule, eps_axis)
    ref = _try_reference(F, path)
    err = (value - ref).norm() if ref is not None else None
    return IntegrationReport(steps=steps, value=value, reference=ref, abs_error=err,
                             rows=[(steps, value, err)])


def integrate_slice_quadrature(F: AnalyticFunction, path: Path, steps: int,
                               threads: int = 1,
                               eps_axis: float = EPS_AXIS) -> IntegrationReport:
    """Trapezoid rule on dF(x(s))/ds with central finite differences.

    Completely independent of the differential operator: it only ever calls
    eval_function along the path, so it cross-checks the staircase. Order 2.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    n = steps
    h = 1.0 / n

    def sample(k: int) -> Quaternion:
        s = k * h
        x = path.point(s)
        _check_axis_eval(F, x, s, eps_axis)
        return eval_function(F, x, eps_axis)

    if threads > 1 and n + 1 > threads:
        bounds = [(k * (n + 1)) // threads for k in range(threads + 1)]
        g: list[Quaternion] = []
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(lambda be: [sample(k) for k in range(be[0], be[1])],
                                 zip(bounds[:-1], bounds[1:])):
                g.extend(part)
    else:
        g = [sample(k) for k in range(n + 1)]

    if n == 1:
        value = g[1] - g[0]
    else:
        acc = _KahanQuat()
        # trapezoid weights: half at the ends, 1 inside; all scaled by h later
        acc.add(0.5 * ((-3.0) * g[0] + 4.0 * g[1] - g[2]) * 0.5)
        acc.add(0.5 * (3.0 * g[n] - 4.0 * g[n - 1] + g[n - 2]) * 0.5)
        for k in range(1, n):
            acc.add(0.5 * (g[k + 1] - g[k - 1]))
        value = acc.total()  # the 1/(2h) of each stencil cancels h of the rule
    ref = _try_reference(F, path)
    err = (value - ref).norm() if ref is not None else None
    return IntegrationReport(steps=n, value=value, reference=ref, abs_error=err,
                             rows=[(n, value, err)])


def convergence_study(F: AnalyticFunction, path: Path, n_list: list[int],
                      rule: str = "left", threads: int = 1,
                      eps_axis: float = EPS_AXIS) -> IntegrationReport:
    """Run integrate at each N and fit the error order on a log-log scale.

    est_order is the negated least-squares slope of log(err) against log(N),
    computed over rows whose error is above rounding noise; it stays None
    when fewer than two rows qualify (including the all-exact case).
    """
    if len(n_list) < 3:
        raise ValueError("need at least 3 step counts for a study")
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("step counts must be strictly ascending")
    ref = endpoint_reference(F, path)  # raises MissingReference if unavailable
    rows: list[tuple[int, Quaternion, float | None]] = []
    for n in n_list:
        r = integrate(F, path, n, rule=rule, threads=threads, eps_axis=eps_axis)
        rows.append((n, r.value, (r.value - ref).norm()))
    pts = [(math.log(n), math.log(err)) for n, _, err in rows if err > EXACT_FLOOR]
    est = None
    if len(pts) >= 2:
        slope, _ = statistics.linear_regression([p[0] for p in pts], [p[1] for p in pts])
        est = -slope
    last = rows[-1]
    return IntegrationReport(steps=last[0], value=last[1], reference=ref,
                             abs_error=last[2], rows=rows, est_order=est)


def integrate_with_branch_tracking(F: AnalyticFunction, path: Path, steps: int,
                                   eps_axis: float = EPS_AXIS) -> IntegrationReport:
    """Staircase integral of ln along a path confined to one slice plane.

    Works in the fixed slice coordinates z(s) = xi0(s) + i*y(s), where y is
    the signed component along the first off-axis direction found. The value
    is the left-endpoint sum of (z_{n+1} - z_n)/z_n, which is branch-free;
    the reference is the continuously unwrapped ln difference, so a loop
    winding m times around 0 reports 2*pi*m*u. Strictly sequential: the
    unwrapped phase state depends on path order.
    """
    if not (isinstance(F, NamedFunction) and F.name == "ln"):
        raise UnsupportedFunctionError("branch tracking is implemented for ln only")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    n = steps
    h = 1.0 / n
    xs = [path.point(k * h) for k in range(n + 1)]

    u = None
    for x in xs:
        r = x.imag_norm()
        if r > eps_axis:
            u = (x.x1 / r, x.x2 / r, x.x3 / r)
            break

    zs: list[complex] = []
    for k, x in enumerate(xs):
        if u is None:
            y = 0.0
        else:
            y = x.x1 * u[0] + x.x2 * u[1] + x.x3 * u[2]
            rej = math.sqrt((x.x1 - y * u[0]) ** 2 + (x.x2 - y * u[1]) ** 2
                            + (x.x3 - y * u[2]) ** 2)
            if rej > SLICE_REJECTION_TOL * max(1.0, x.norm()):
                raise SliceEscapeError(
                    f"point leaves the slice plane (off-plane magnitude {rej:.3e})",
                    s_param=k * h)
        z = complex(x.w, y)
        if z == 0:
            raise DomainError("path passes through 0, where ln is singular",
                              s_param=k * h)
        zs.append(z)

    phase = cmath.phase(zs[0])
    total_phase = phase
    for k in range(1, n + 1):
        step = math.remainder(cmath.phase(zs[k]) - total_phase, math.tau)
        if abs(step) > 0.5 * math.pi + UNWRAP_SLACK:
            raise StepTooCoarseError(
                f"phase jump {abs(step):.3f} rad exceeds pi/2; increase steps",
                s_param=k * h)
        total_phase += step

    sr = sc = 0.0  # compensated real part
    ir = ic = 0.0  # compensated imaginary part
    for k in range(n):
        term = (zs[k + 1] - zs[k]) / zs[k]
        y = term.real - sc
        t = sr + y
        sc = (t - sr) - y
        sr = t
        y = term.imag - ic
        t = ir + y
        ic = (t - ir) - y
        ir = t

    def to_quaternion(re: float, im: float) -> Quaternion:
        if u is None:
            return Quaternion(re, 0.0, 0.0, 0.0)
        return Quaternion(re, im * u[0], im * u[1], im * u[2])

    value = to_quaternion(sr, ir)
    ref = to_quaternion(math.log(abs(zs[n])) - math.log(abs(zs[0])),
                        total_phase - phase)
    err = (value - ref).norm()
    return IntegrationReport(steps=n, value=value, reference=ref, abs_error=err,
                             rows=[(n, value, err)])
