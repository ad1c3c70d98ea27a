"""Hamilton quaternion arithmetic on IEEE-754 doubles."""

import math
from dataclasses import dataclass

from .errors import ZeroDivisorError

Number = int | float


@dataclass(slots=True)
class Quaternion:
    """A quaternion w + i*x1 + j*x2 + k*x3.

    Treated as an immutable value: no operation mutates its operands, so
    instances are safe to share across threads. Component order (w, x1,
    x2, x3) is also the serialization order.
    """

    w: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w + other.w, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w - other.w, self.x1 - other.x1,
                          self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other: "Quaternion | Number") -> "Quaternion":
        if isinstance(other, Quaternion):
            a0, a1, a2, a3 = self.w, self.x1, self.x2, self.x3
            b0, b1, b2, b3 = other.w, other.x1, other.x2, other.x3
            return Quaternion(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x1 * other,
                              self.x2 * other, self.x3 * other)
        return NotImplemented

    def __rmul__(self, other: Number) -> "Quaternion":
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x1 * other,
                              self.x2 * other, self.x3 * other)
        return NotImplemented

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x1, -self.x2, -self.x3)

    def norm_sq(self) -> float:
        return self.w * self.w + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def norm(self) -> float:
        return math.sqrt(self.norm_sq())

    def imag_norm(self) -> float:
        """Length of the imaginary part, r = sqrt(x1^2 + x2^2 + x3^2)."""
        return math.sqrt(self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3)

    def inverse(self) -> "Quaternion":
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise ZeroDivisorError("cannot invert the zero quaternion")
        return Quaternion(self.w / n2, -self.x1 / n2, -self.x2 / n2, -self.x3 / n2)

    def approx_eq(self, other: "Quaternion", tol: float = 1e-10) -> bool:
        """Mixed absolute/relative comparison: |a - b| <= max(tol, tol * max(|a|, |b|))."""
        bound = max(tol, tol * max(self.norm(), other.norm()))
        return (self - other).norm() <= bound

    def to_list(self) -> list[float]:
        return [self.w, self.x1, self.x2, self.x3]

    @classmethod
    def from_list(cls, values) -> "Quaternion":
        if not isinstance(values, (list, tuple)):
            raise ValueError(f"expected a 4-component list, got {values!r}")
        if len(values) != 4:
            raise ValueError(f"expected 4 components, got {len(values)}")
        comps = []
        for v in values:
            if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
                raise ValueError(f"quaternion components must be finite numbers, got {v!r}")
            comps.append(float(v))
        return cls(*comps)

    @classmethod
    def from_real(cls, t: float) -> "Quaternion":
        return cls(float(t), 0.0, 0.0, 0.0)


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
