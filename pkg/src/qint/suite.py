"""The runnable check suites behind `qint verify`.

"default" is the acceptance set: nine checks covering the staircase on
monomials, path independence, closed loops, log winding, integration by
parts, the inverse fundamental theorem, the exact algebraic identities, the
antiderivative correspondence, and staircase/quadrature agreement.
"all" re-runs those plus broader catalog sweeps and order-of-accuracy
comparisons.
"""

import math
import random
import statistics

from .differential import conjugate_quotient, differential, sym_product_sum
from .functions import AnalyticFunction, Monomial, NamedFunction, PowerSeries
from .integrate import (convergence_study, endpoint_reference, integrate,
                        integrate_slice_quadrature, integrate_with_branch_tracking)
from .paths import Line, Path, PolyLine, SliceCircle
from .quaternion import Quaternion
from .slices import UnitImaginary, decompose_delta, eval_function, perp_quotient
from .verify import (CheckReport, Tolerances, inverse_ftc_residual,
                     verify_antiderivative_map, verify_ftc_forward,
                     verify_integration_by_parts)

RNG_SEED = 20260825

_SQ3 = math.sqrt(3.0)


def _q(w=0.0, x1=0.0, x2=0.0, x3=0.0) -> Quaternion:
    return Quaternion(w, x1, x2, x3)


def catalog_functions() -> dict[str, AnalyticFunction]:
    """Polynomials through cubic plus the entire elementary trio."""
    return {
        "x": Monomial(1),
        "x^2": Monomial(2),
        "x^3": Monomial(3),
        "exp": NamedFunction("exp"),
        "sin": NamedFunction("sin"),
        "cos": NamedFunction("cos"),
    }


def _slice_arc(a_xi0: float, b_xi0: float, waypoints: int = 257) -> PolyLine:
    """An arc from a_xi0 + i to b_xi0 + j whose slice direction rotates from
    i to j while the imaginary radius stays 1; discretized as a polyline."""
    pts = []
    for k in range(waypoints):
        t = k / (waypoints - 1)
        th = 0.5 * math.pi * t
        pts.append(Quaternion(a_xi0 + t * (b_xi0 - a_xi0),
                              math.cos(th), math.sin(th), 0.0))
    return PolyLine(tuple(pts))


def catalog_paths() -> dict[str, Path]:
    """Three lines, one polyline, one in-slice circle; all within norm ~3."""
    return {
        "line_j_step": Line(_q(1, 1), _q(1, 1, 1)),          # 1+i -> 1+i+j
        "line_cross_slice": Line(_q(1, 1), _q(0.5, 0, 1)),   # 1+i -> 1/2+j
        "line_from_zero": Line(_q(), _q(1, 1, 1)),           # 0 -> 1+i+j
        "polyline_bent": PolyLine((_q(1, 1), _q(0.9, 0.5, 0.5), _q(0.7, 0.2, 0.8),
                                   _q(0.5, 0, 1))),
        "circle_real_center": SliceCircle(2.0, 1.0, UnitImaginary(_q(0, 1)), 1.0),
    }


def _fit_slope(xs: list[float], ys: list[float]) -> float:
    slope, _ = statistics.linear_regression(xs, ys)
    return slope


def check_monomial_staircase(tol: Tolerances) -> CheckReport:
    """x telescopes to rounding noise at every N; x^2 and x^3 converge at
    first order with small relative error on the j-step line."""
    path = catalog_paths()["line_j_step"]
    n_list = [100, 1000, 10_000, 100_000]
    residuals: list[float] = []
    ok = True
    config: dict = {"path": path.to_json(), "steps": n_list, "orders": {}}

    ref1 = endpoint_reference(Monomial(1), path)
    for n in n_list:
        err = (integrate(Monomial(1), path, n).value - ref1).norm()
        residuals.append(err)
        ok = ok and err <= tol.exact_floor

    for name, F in (("x^2", Monomial(2)), ("x^3", Monomial(3))):
        study = convergence_study(F, path, n_list)
        scale = study.reference.norm()
        rel = study.rows[2][2] / scale  # the N = 1e4 row
        residuals.append(rel)
        config["orders"][name] = study.est_order
        ok = ok and rel <= tol.monomial_rel
        ok = ok and study.est_order is not None and study.est_order >= tol.slope_min

    return CheckReport(
        check="monomial_staircase", passed=ok, residuals=residuals,
        tolerance=tol.monomial_rel,
        config=config | {"exact_floor": tol.exact_floor, "slope_min": tol.slope_min})


def check_path_independence(tol: Tolerances) -> CheckReport:
    """exp integrated 1+i -> 1/2+j over a line, a bent polyline, and an arc
    that rotates between slices: all three agree with the endpoint value."""
    F = NamedFunction("exp")
    paths = {
        "line": catalog_paths()["line_cross_slice"],
        "polyline": catalog_paths()["polyline_bent"],
        "slice_arc": _slice_arc(1.0, 0.5),
    }
    n = 10_000
    ref = endpoint_reference(F, paths["line"])
    values = {name: integrate(F, p, n).value for name, p in paths.items()}
    residuals = [(v - ref).norm() for v in values.values()]
    names = list(values)
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            residuals.append((values[names[i]] - values[names[j]]).norm())
    return CheckReport(
        check="path_independence", passed=all(r <= tol.path_independence for r in residuals),
        residuals=residuals, tolerance=tol.path_independence,
        config={"function": F.to_json(), "steps": n, "paths": list(names),
                "reference": ref.to_list()})


def check_closed_loop(tol: Tolerances) -> CheckReport:
    """A cubic around a full in-slice circle integrates to zero."""
    path = catalog_paths()["circle_real_center"]
    n = 10_000
    value = integrate(Monomial(3), path, n).value
    res = value.norm()
    return CheckReport(
        check="closed_loop_zero", passed=res <= tol.closed_loop, residuals=[res],
        tolerance=tol.closed_loop,
        config={"function": Monomial(3).to_json(), "path": path.to_json(), "steps": n})


def check_winding(tol: Tolerances) -> CheckReport:
    """ln around the unit circle picks up 2*pi*turns*u, for several slice
    directions and winding numbers. Residuals are scaled by max(1, |m|)."""
    F = NamedFunction("ln")
    n = 10_000
    directions = {
        "i": UnitImaginary(_q(0, 1)),
        "j": UnitImaginary(_q(0, 0, 1)),
        "diag": UnitImaginary(_q(0, 1 / _SQ3, 1 / _SQ3, 1 / _SQ3)),
    }
    residuals = []
    combos = []
    for dname, u in directions.items():
        for m in (-1, 1, 2):
            path = SliceCircle(0.0, 1.0, u, float(m))
            value = integrate_with_branch_tracking(F, path, n).value
            expected = u.scaled(2.0 * math.pi * m)
            residuals.append((value - expected).norm() / max(1.0, abs(m)))
            combos.append([dname, m])
    return CheckReport(
        check="log_winding", passed=all(r <= tol.winding for r in residuals),
        residuals=residuals, tolerance=tol.winding,
        config={"steps": n, "combos": combos,
                "note": "residuals divided by max(1, |turns|)"})


def check_by_parts(tol: Tolerances) -> CheckReport:
    """Integration by parts for (x, x) and (x^2, x) on the line from 0."""
    path = catalog_paths()["line_from_zero"]
    n = 10_000
    pairs = [(Monomial(1), Monomial(1)), (Monomial(2), Monomial(1))]
    residuals = []
    for F, G in pairs:
        rep = verify_integration_by_parts(F, G, path, n, tol)
        residuals.extend(rep.residuals)
    return CheckReport(
        check="integration_by_parts", passed=all(r <= tol.by_parts for r in residuals),
        residuals=residuals, tolerance=tol.by_parts,
        config={"pairs": [[F.to_json(), G.to_json()] for F, G in pairs],
                "path": path.to_json(), "steps": n})


def check_inverse_ftc(tol: Tolerances) -> CheckReport:
    """Differencing the indefinite staircase integral of x^3 returns its
    differential, with the residual shrinking quadratically in |delta|."""
    F = Monomial(3)
    x = _q(1, 1)
    n = 10_000
    mags = [1e-2, 5e-3, 2.5e-3]
    residuals = [inverse_ftc_residual(F, x, _q(0, 0, m), n) for m in mags]
    slope = _fit_slope([math.log(m) for m in mags], [math.log(r) for r in residuals])
    ok = residuals[0] <= tol.inverse_ftc and abs(slope - 2.0) <= tol.slope_two_tol
    return CheckReport(
        check="inverse_ftc", passed=ok, residuals=residuals, tolerance=tol.inverse_ftc,
        config={"function": F.to_json(), "x": x.to_list(), "delta_norms": mags,
                "direction": [0, 0, 1, 0], "steps": n, "slope": slope,
                "slope_target": [2.0, tol.slope_two_tol]})


def _random_point(rng: random.Random, span: float, min_r: float) -> Quaternion:
    while True:
        x = Quaternion(rng.uniform(-span, span), rng.uniform(-span, span),
                       rng.uniform(-span, span), rng.uniform(-span, span))
        if x.imag_norm() > min_r:
            return x


def _random_delta(rng: random.Random, span: float = 1.0) -> Quaternion:
    return Quaternion(rng.uniform(-span, span), rng.uniform(-span, span),
                      rng.uniform(-span, span), rng.uniform(-span, span))


def check_exact_identities(tol: Tolerances, seed: int = RNG_SEED) -> CheckReport:
    """Machine-precision identities: the symmetric-product form of the
    monomial differential, the Leibniz rule on polynomial products, the
    commutation split of increments, and the scalar form of the conjugate
    quotient. Sampling spans are kept moderate so rounding stays well under
    the bound."""
    rng = random.Random(seed)
    worst = {"sym_product": 0.0, "leibniz": 0.0, "delta_split": 0.0,
             "conjugate_quotient": 0.0}

    for _ in range(100):
        x = _random_point(rng, 1.2, 1e-3)
        d = _random_delta(rng)
        for n in range(0, 7):
            r = (differential(Monomial(n + 1), x, d) - sym_product_sum(x, d, n)).norm()
            worst["sym_product"] = max(worst["sym_product"], r)

    for _ in range(20):
        F = PowerSeries(tuple(rng.uniform(-1, 1) for _ in range(rng.randint(1, 5))))
        G = PowerSeries(tuple(rng.uniform(-1, 1) for _ in range(rng.randint(1, 5))))
        x = _random_point(rng, 0.8, 1e-3)
        d = _random_delta(rng)
        lhs = differential(F * G, x, d)
        rhs = differential(F, x, d) * eval_function(G, x) \
            + eval_function(F, x) * differential(G, x, d)
        worst["leibniz"] = max(worst["leibniz"], (lhs - rhs).norm())

    for _ in range(100):
        x = _random_point(rng, 1.2, 1e-6)
        d = _random_delta(rng)
        sp = decompose_delta(x, d)
        u = Quaternion(0.0, *((x.x1, x.x2, x.x3))) * (1.0 / x.imag_norm())
        worst["delta_split"] = max(
            worst["delta_split"],
            (sp.parallel + sp.perp - d).norm(),
            (u * sp.parallel - sp.parallel * u).norm(),
            (u * sp.perp + sp.perp * u).norm())

    quotient_functions = [Monomial(2), Monomial(3), NamedFunction("exp"),
                          NamedFunction("sin")]
    for _ in range(50):
        x = _random_point(rng, 1.2, 1e-3)
        for F in quotient_functions:
            scalar = perp_quotient(F, x)
            full = conjugate_quotient(F, x)
            worst["conjugate_quotient"] = max(
                worst["conjugate_quotient"],
                (full - Quaternion(scalar, 0.0, 0.0, 0.0)).norm())

    residuals = list(worst.values())
    return CheckReport(
        check="exact_identities", passed=all(r <= tol.algebraic for r in residuals),
        residuals=residuals, tolerance=tol.algebraic,
        config={"families": list(worst), "seed": seed,
                "samples": {"sym_product": 100, "leibniz": 20, "delta_split": 100,
                            "conjugate_quotient": 50}})


def check_antiderivative(tol: Tolerances) -> CheckReport:
    """Lifting t^2 -> t^3/3 and cos -> sin to the staircase integral."""
    path = Line(_q(0, 1), _q(0, 0, 1))  # i -> j
    n = 10_000
    reports = [
        verify_antiderivative_map(PowerSeries((0.0, 0.0, 1.0)), path, n, tol),
        verify_antiderivative_map(NamedFunction("cos"), path, n, tol),
    ]
    residuals = [r for rep in reports for r in rep.residuals]
    return CheckReport(
        check="antiderivative_map", passed=all(r <= tol.antiderivative for r in residuals),
        residuals=residuals, tolerance=tol.antiderivative,
        config={"integrands": ["t^2 series", "cos"], "path": path.to_json(),
                "steps": n})


def check_mutual_oracle(tol: Tolerances, threads: int = 1) -> CheckReport:
    """Staircase and ds-quadrature agree on every catalog function/path pair."""
    n = 10_000
    residuals = []
    pairs = []
    for fname, F in catalog_functions().items():
        for pname, path in catalog_paths().items():
            a = integrate(F, path, n, threads=threads).value
            b = integrate_slice_quadrature(F, path, n, threads=threads).value
            residuals.append((a - b).norm())
            pairs.append([fname, pname])
    return CheckReport(
        check="mutual_oracle", passed=all(r <= tol.mutual_oracle for r in residuals),
        residuals=residuals, tolerance=tol.mutual_oracle,
        config={"steps": n, "pairs": pairs})


def check_ftc_catalog(tol: Tolerances, threads: int = 1) -> CheckReport:
    """Forward fundamental theorem across the whole catalog at modest N."""
    n_list = [400, 2000, 10_000]
    residuals = []
    failing = []
    for fname, F in catalog_functions().items():
        for pname, path in catalog_paths().items():
            rep = verify_ftc_forward(F, path, n_list, tol, threads=threads)
            residuals.append(rep.residuals[-1])
            if not rep.passed:
                failing.append([fname, pname])
    return CheckReport(
        check="ftc_catalog", passed=not failing, residuals=residuals,
        tolerance=tol.ftc_final,
        config={"steps": n_list, "failing": failing,
                "note": "residuals are final absolute errors; pass/fail is "
                        "relative to max(1, |reference|) per pair"})


def check_rule_upgrade(tol: Tolerances) -> CheckReport:
    """Midpoint evaluation buys at least half an order over left endpoints."""
    n_list = [200, 400, 800, 1600]
    cases = [(Monomial(3), catalog_paths()["line_j_step"]),
             (NamedFunction("exp"), catalog_paths()["line_cross_slice"])]
    residuals = []
    orders = []
    ok = True
    for F, path in cases:
        left = convergence_study(F, path, n_list, rule="left").est_order
        mid = convergence_study(F, path, n_list, rule="midpoint").est_order
        orders.append([left, mid])
        gain = (mid or 0.0) - (left or 0.0)
        residuals.append(gain)
        ok = ok and left is not None and mid is not None \
            and gain >= tol.rule_upgrade_margin
    return CheckReport(
        check="rule_upgrade", passed=ok, residuals=residuals,
        tolerance=tol.rule_upgrade_margin,
        config={"steps": n_list, "orders_left_mid": orders,
                "note": "residuals are order gains; pass needs gain >= tolerance"})


def check_winding_additivity(tol: Tolerances) -> CheckReport:
    """m turns integrate to m times one turn, for m in {-2, -1, 1, 2}."""
    F = NamedFunction("ln")
    u = UnitImaginary(_q(0, 1))
    n = 10_000
    one = integrate_with_branch_tracking(F, SliceCircle(0.0, 1.0, u, 1.0), n).value
    residuals = []
    for m in (-2, -1, 1, 2):
        vm = integrate_with_branch_tracking(F, SliceCircle(0.0, 1.0, u, float(m)), n).value
        residuals.append((vm - float(m) * one).norm() / max(1.0, abs(m)))
    return CheckReport(
        check="winding_additivity", passed=all(r <= tol.winding for r in residuals),
        residuals=residuals, tolerance=tol.winding,
        config={"steps": n, "turns": [-2, -1, 1, 2],
                "note": "residuals divided by max(1, |turns|)"})


def check_remainder_slope(tol: Tolerances) -> CheckReport:
    """|F(x+h d) - F(x) - differential(F, x, h d)| shrinks like h^2."""
    F = NamedFunction("exp")
    x = _q(1, 1)
    d = _q(0.2, 0.3, 1.0, -0.4)
    hs = [1e-2 * 0.5 ** k for k in range(11)]  # down to ~1e-5
    rems = []
    for h in hs:
        hd = h * d
        rems.append((eval_function(F, x + hd)
                     - eval_function(F, x) - differential(F, x, hd)).norm())
    slope = _fit_slope([math.log(h) for h in hs], [math.log(r) for r in rems])
    ok = abs(slope - 2.0) <= tol.slope_two_tol
    return CheckReport(
        check="first_order_remainder", passed=ok, residuals=rems,
        tolerance=tol.slope_two_tol,
        config={"function": F.to_json(), "x": x.to_list(), "delta": d.to_list(),
                "h": hs, "slope": slope,
                "note": "pass requires |fitted slope - 2| <= tolerance"})


DEFAULT_CHECKS = (
    check_monomial_staircase,
    check_path_independence,
    check_closed_loop,
    check_winding,
    check_by_parts,
    check_inverse_ftc,
    check_exact_identities,
    check_antiderivative,
    check_mutual_oracle,
)

EXTRA_CHECKS = (
    check_ftc_catalog,
    check_rule_upgrade,
    check_winding_additivity,
    check_remainder_slope,
)


def run_suite(name: str = "default", tol: Tolerances | None = None,
              threads: int = 1) -> list[CheckReport]:
    """Run a named suite and return its reports in execution order."""
    tol = tol or Tolerances()
    if name == "default":
        checks = DEFAULT_CHECKS
    elif name == "all":
        checks = DEFAULT_CHECKS + EXTRA_CHECKS
    else:
        raise ValueError(f"unknown suite {name!r}; expected 'default' or 'all'")
    reports = []
    for fn in checks:
        if fn in (check_mutual_oracle, check_ftc_catalog):
            reports.append(fn(tol, threads=threads))
        else:
            reports.append(fn(tol))
    return reports
