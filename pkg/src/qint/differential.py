"""The first-order differential of F at x applied to an increment delta:

    D F(x) = F'(x) * delta_par + [F(x) - F(x*)] (x - x*)^-1 * delta_perp

Both coefficient factors live in x's slice, so the whole computation reduces
to two complex evaluations plus a projection of delta onto the slice plane.
"""

import math

from .functions import AnalyticFunction, Monomial
from .quaternion import ONE, ZERO, Quaternion
from .slices import EPS_AXIS, decompose_delta, eval_derivative, perp_quotient


def differential(F: AnalyticFunction, x: Quaternion, delta: Quaternion,
                 eps_axis: float = EPS_AXIS) -> Quaternion:
    """Apply the differential of F at x to delta. Linear in delta.

    On the real axis (r <= eps_axis) both coefficient factors collapse to
    f'(xi0) and the result is the ordinary f'(x)*delta.
    """
    r2 = x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3
    r = math.sqrt(r2)
    if r <= eps_axis:
        d = F.deriv_complex(complex(x.w, 0.0)).real
        return Quaternion(d * delta.w, d * delta.x1, d * delta.x2, d * delta.x3)
    z = complex(x.w, r)
    fp = F.deriv_complex(z)          # F'(x) = c + d*u in the slice
    q = F.eval_complex(z).imag / r   # perpendicular quotient b/r
    c, d = fp.real, fp.imag
    u1, u2, u3 = x.x1 / r, x.x2 / r, x.x3 / r
    # delta = [dw + t*u] (parallel, complex in the slice) + rejection (perp)
    t = delta.x1 * u1 + delta.x2 * u2 + delta.x3 * u3
    pw = c * delta.w - d * t         # (c + d*i)(dw + t*i), real part
    pv = c * t + d * delta.w         # imaginary coefficient along u
    return Quaternion(
        pw,
        pv * u1 + q * (delta.x1 - t * u1),
        pv * u2 + q * (delta.x2 - t * u2),
        pv * u3 + q * (delta.x3 - t * u3),
    )


def differential_reference(F: AnalyticFunction, x: Quaternion, delta: Quaternion,
                           eps_axis: float = EPS_AXIS) -> Quaternion:
    """Same operator assembled from the public slice primitives.

    Slower than differential(); kept as an independent cross-check of the
    flattened arithmetic above.
    """
    r = x.imag_norm()
    if r <= eps_axis:
        fp = eval_derivative(F, x, eps_axis)
        return fp * delta
    split = decompose_delta(x, delta, eps_axis)
    fp = eval_derivative(F, x, eps_axis)
    q = perp_quotient(F, x, eps_axis)
    return fp * split.parallel + q * split.perp


def conjugate_quotient(F: AnalyticFunction, x: Quaternion) -> Quaternion:
    """[F(x) - F(conj x)] * (x - conj x)^-1 computed literally, as a quaternion.

    The scalar perp_quotient must match this; used to validate it.
    """
    from .slices import eval_function

    xc = x.conj()
    return (eval_function(F, x) - eval_function(F, xc)) * (x - xc).inverse()


def sym_product_sum(x: Quaternion, delta: Quaternion, n: int) -> Quaternion:
    """Sum_{k=0..n} x^k * delta * x^(n-k), by direct non-commutative products.

    Equals the differential of x^(n+1) at x applied to delta; serves as an
    exactness oracle for the operator on monomials.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    powers = [ONE]
    for _ in range(n):
        powers.append(powers[-1] * x)
    total = ZERO
    for k in range(n + 1):
        total = total + powers[k] * delta * powers[n - k]
    return total


def monomial_differential_exact(x: Quaternion, delta: Quaternion, n: int) -> Quaternion:
    """differential(Monomial(n+1), x, delta) — thin convenience wrapper."""
    return differential(Monomial(n + 1), x, delta)
