"""Structured pass/fail checks for the identities the library claims:
the fundamental theorem in both directions, integration by parts, and the
antiderivative correspondence. Each check returns a CheckReport with
measured residuals, never a bare boolean.
"""

import json
import os
from dataclasses import dataclass, field, fields, replace

from .differential import differential
from .functions import AnalyticFunction, antiderivative
from .integrate import (EXACT_FLOOR, _KahanQuat, convergence_study,
                        endpoint_reference, integrate)
from .paths import Line, Path
from .quaternion import Quaternion
from .slices import decompose_delta, eval_function

# Default base point for the indefinite integral in the inverse direction.
DEFAULT_BASE = Quaternion(1.0, 1.0, 0.0, 0.0)


@dataclass(frozen=True)
class Tolerances:
    """Every numeric acceptance knob in one record.

    QINT_TOL overrides it: a bare number replaces all residual bounds
    (slope targets and slack factors keep their defaults), a JSON object
    replaces named fields.
    """

    exact_floor: float = EXACT_FLOOR  # telescoping sums, machine-precision identities
    monomial_rel: float = 1e-3        # relative error for x^2, x^3 staircases at N=1e4
    path_independence: float = 2e-3
    closed_loop: float = 2e-3
    winding: float = 1e-2             # per unit of |winding number|
    by_parts: float = 2e-3
    inverse_ftc: float = 1e-3
    algebraic: float = 1e-10          # exact algebraic identities
    antiderivative: float = 1e-3
    mutual_oracle: float = 2e-3
    ftc_final: float = 1e-3           # forward FTC, relative to max(1, |reference|)
    slope_min: float = 0.9            # staircase convergence order lower bound
    slope_two_tol: float = 0.3        # |fitted slope - 2| bound for O(h^2) checks
    rule_upgrade_margin: float = 0.5  # midpoint order must beat left by this much
    decay_slack: float = 1.05         # allowed per-refinement error growth factor

    def describe(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


# Fields a bare-number QINT_TOL replaces. Slope targets and slack factors are
# not residual bounds, so a global override leaves them alone.
_RESIDUAL_FIELDS = ("exact_floor", "monomial_rel", "path_independence", "closed_loop",
                    "winding", "by_parts", "inverse_ftc", "algebraic", "antiderivative",
                    "mutual_oracle", "ftc_final")


def tolerances_from_env(env=None) -> Tolerances:
    """Default tolerances, with QINT_TOL applied if set.

    Accepts either a bare number ("1e-6") or a JSON object naming fields
    ('{"by_parts": 1e-4}'). Raises ValueError on anything else.
    """
    if env is None:
        env = os.environ
    raw = env.get("QINT_TOL")
    if raw is None or raw.strip() == "":
        return Tolerances()
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ValueError(f"QINT_TOL is not valid JSON: {e}") from e
    if isinstance(obj, bool):
        raise ValueError("QINT_TOL must be a number or an object, not a boolean")
    if isinstance(obj, (int, float)):
        return Tolerances(**{name: float(obj) for name in _RESIDUAL_FIELDS})
    if isinstance(obj, dict):
        known = {f.name for f in fields(Tolerances)}
        unknown = set(obj) - known
        if unknown:
            raise ValueError(f"QINT_TOL names unknown fields: {sorted(unknown)}")
        bad = [k for k, v in obj.items() if isinstance(v, bool) or not isinstance(v, (int, float))]
        if bad:
            raise ValueError(f"QINT_TOL fields must be numbers: {sorted(bad)}")
        return replace(Tolerances(), **{k: float(v) for k, v in obj.items()})
    raise ValueError("QINT_TOL must be a number or a JSON object")


@dataclass
class CheckReport:
    """One verification check: what was measured against which bound."""

    check: str
    passed: bool
    residuals: list[float]
    tolerance: float
    config: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.check, "pass": self.passed,
                "residuals": self.residuals, "tolerance": self.tolerance,
                "config": self.config}

    def summary_line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        worst = max(self.residuals) if self.residuals else 0.0
        return (f"{verdict} {self.check}: max residual {worst:.3e} "
                f"(tolerance {self.tolerance:.3e})")


def _decaying(errors: list[float], slack: float, floor: float) -> bool:
    return all(b <= max(a * slack, floor) for a, b in zip(errors, errors[1:]))


def verify_ftc_forward(F: AnalyticFunction, path: Path, n_list: list[int],
                       tol: Tolerances | None = None, rule: str = "left",
                       threads: int = 1, label: str = "ftc_forward") -> CheckReport:
    """Staircase value converges to F(end) - F(start): errors decay with N
    and the finest one is small relative to the endpoint difference."""
    tol = tol or Tolerances()
    study = convergence_study(F, path, n_list, rule=rule, threads=threads)
    errors = [err for _, _, err in study.rows]
    scale = max(1.0, study.reference.norm())
    passed = (_decaying(errors, tol.decay_slack, tol.exact_floor)
              and errors[-1] <= tol.ftc_final * scale)
    return CheckReport(
        check=label, passed=passed, residuals=errors, tolerance=tol.ftc_final * scale,
        config={"path": path.to_json(), "function": F.to_json(), "steps": list(n_list),
                "rule": rule, "est_order": study.est_order,
                "reference": study.reference.to_list()})


def inverse_ftc_residual(F: AnalyticFunction, x: Quaternion, delta: Quaternion,
                         steps: int, base: Quaternion = DEFAULT_BASE,
                         threads: int = 1) -> float:
    """|[G(x+delta) - G(x)] - differential(F, x, delta)| for the indefinite
    staircase integral G(y) from a fixed base point.

    G(x+delta) extends G(x)'s path by two legs, the parallel increment first
    and then the perpendicular one. The base leg is computed once and shared
    by both G values, so it cancels exactly in the difference.
    """
    split = decompose_delta(x, delta)
    x_mid = x + split.parallel
    x_end = x + delta
    if (base - x).norm() == 0.0:
        g_x = Quaternion(0.0, 0.0, 0.0, 0.0)
    else:
        g_x = integrate(F, Line(base, x), steps, threads=threads).value
    leg_par = integrate(F, Line(x, x_mid), steps, threads=threads).value
    leg_perp = integrate(F, Line(x_mid, x_end), steps, threads=threads).value
    g_x_delta = g_x + leg_par + leg_perp
    return ((g_x_delta - g_x) - differential(F, x, delta)).norm()


def verify_ftc_inverse(F: AnalyticFunction, x: Quaternion, delta: Quaternion,
                       steps: int, tol: Tolerances | None = None,
                       base: Quaternion = DEFAULT_BASE,
                       label: str = "ftc_inverse") -> CheckReport:
    """Differencing the staircase integral recovers the differential."""
    tol = tol or Tolerances()
    res = inverse_ftc_residual(F, x, delta, steps, base=base)
    return CheckReport(
        check=label, passed=res <= tol.inverse_ftc, residuals=[res],
        tolerance=tol.inverse_ftc,
        config={"function": F.to_json(), "x": x.to_list(), "delta": delta.to_list(),
                "steps": steps, "base": base.to_list()})


def by_parts_residual(F: AnalyticFunction, G: AnalyticFunction, path: Path,
                      steps: int) -> tuple[float, Quaternion]:
    """Residual of sum[F dG + (dF) G] against the boundary term F G |_a^b.

    Both products ride the same left-endpoint staircase partition; order
    matters, F multiplies from the left in one term and G from the right in
    the other.
    """
    n = steps
    h = 1.0 / n
    acc = _KahanQuat()
    prev = path.point(0.0)
    f_prev = eval_function(F, prev)
    g_prev = eval_function(G, prev)
    for k in range(1, n + 1):
        cur = path.point(k * h)
        d = cur - prev
        acc.add(f_prev * differential(G, prev, d))
        acc.add(differential(F, prev, d) * g_prev)
        prev = cur
        f_prev = eval_function(F, prev)
        g_prev = eval_function(G, prev)
    start, end = path.start, path.end
    boundary = (eval_function(F, end) * eval_function(G, end)
                - eval_function(F, start) * eval_function(G, start))
    return (acc.total() - boundary).norm(), boundary


def verify_integration_by_parts(F: AnalyticFunction, G: AnalyticFunction, path: Path,
                                steps: int, tol: Tolerances | None = None,
                                label: str = "integration_by_parts") -> CheckReport:
    tol = tol or Tolerances()
    res, boundary = by_parts_residual(F, G, path, steps)
    return CheckReport(
        check=label, passed=res <= tol.by_parts, residuals=[res],
        tolerance=tol.by_parts,
        config={"F": F.to_json(), "G": G.to_json(), "path": path.to_json(),
                "steps": steps, "boundary": boundary.to_list()})


def verify_antiderivative_map(f: AnalyticFunction, path: Path, steps: int,
                              tol: Tolerances | None = None,
                              label: str = "antiderivative_map") -> CheckReport:
    """The real-axis rule "integrate f, get h" lifts to the staircase:
    the integral of h's differential converges to h(end) - h(start)."""
    tol = tol or Tolerances()
    h = antiderivative(f)
    ref = endpoint_reference(h, path)
    rep = integrate(h, path, steps)
    res = (rep.value - ref).norm()
    return CheckReport(
        check=label, passed=res <= tol.antiderivative, residuals=[res],
        tolerance=tol.antiderivative,
        config={"integrand": f.to_json(), "antiderivative": h.to_json(),
                "path": path.to_json(), "steps": steps, "reference": ref.to_list()})
