"""Parameterized curves in quaternion space, each exposing point(s) on [0, 1].

Integration samples these at uniform s and connects the samples with straight
chords, so only point() and the endpoints matter to the rest of the library.
"""

import math
from dataclasses import dataclass

from .quaternion import Quaternion
from .slices import UnitImaginary

TAU = 2.0 * math.pi


def _lerp(a: Quaternion, b: Quaternion, t: float) -> Quaternion:
    # (1-t)*a + t*b hits both endpoints exactly, unlike a + t*(b-a)
    s = 1.0 - t
    return Quaternion(s * a.w + t * b.w, s * a.x1 + t * b.x1,
                      s * a.x2 + t * b.x2, s * a.x3 + t * b.x3)


class Path:
    """Base: a piecewise-smooth curve with point(s) for s in [0, 1]."""

    def point(self, s: float) -> Quaternion:
        raise NotImplementedError

    @property
    def start(self) -> Quaternion:
        return self.point(0.0)

    @property
    def end(self) -> Quaternion:
        return self.point(1.0)

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True, slots=True)
class Line(Path):
    """Straight segment from a to b."""

    a: Quaternion
    b: Quaternion

    def point(self, s: float) -> Quaternion:
        return _lerp(self.a, self.b, s)

    def to_json(self) -> dict:
        return {"kind": "line", "a": self.a.to_list(), "b": self.b.to_list()}


@dataclass(frozen=True, slots=True)
class PolyLine(Path):
    """Straight segments through waypoints, each traversed in equal s-time."""

    waypoints: tuple[Quaternion, ...]

    def __post_init__(self):
        object.__setattr__(self, "waypoints", tuple(self.waypoints))
        if len(self.waypoints) < 2:
            raise ValueError("polyline needs at least 2 waypoints")

    def point(self, s: float) -> Quaternion:
        k = len(self.waypoints) - 1
        t = s * k
        seg = min(int(math.floor(t)), k - 1)
        if seg < 0:
            seg = 0
        return _lerp(self.waypoints[seg], self.waypoints[seg + 1], t - seg)

    def to_json(self) -> dict:
        return {"kind": "polyline", "points": [p.to_list() for p in self.waypoints]}


@dataclass(frozen=True, slots=True)
class SliceCircle(Path):
    """center + radius*(cos th + u sin th), th sweeping turns full revolutions.

    The center sits on the real axis so the whole loop stays in u's slice.
    Signed, possibly fractional turns; integer turns close the loop exactly
    (the phase is reduced mod 1 before taking cos/sin).
    """

    center: float
    radius: float
    u: UnitImaginary
    turns: float = 1.0

    def __post_init__(self):
        if not (self.radius > 0.0):
            raise ValueError("radius must be positive")

    def point(self, s: float) -> Quaternion:
        t = self.turns * s
        th = TAU * (t - math.floor(t))
        b = self.radius * math.sin(th)
        return Quaternion(self.center + self.radius * math.cos(th),
                          b * self.u.x1, b * self.u.x2, b * self.u.x3)

    def to_json(self) -> dict:
        return {"kind": "circle", "center": self.center, "radius": self.radius,
                "u": self.u.value.to_list(), "turns": self.turns}


def parse_path(obj: dict) -> Path:
    """Build a path from its JSON object form.

    Accepted shapes:
      {"kind": "line", "a": [...], "b": [...]}
      {"kind": "polyline", "points": [[...], ...]}
      {"kind": "circle", "center": c, "radius": rho, "u": [0,u1,u2,u3], "turns": m}
    """
    if not isinstance(obj, dict):
        raise ValueError("path spec must be a JSON object")
    kind = obj.get("kind")
    if kind == "line":
        return Line(Quaternion.from_list(obj.get("a")), Quaternion.from_list(obj.get("b")))
    if kind == "polyline":
        pts = obj.get("points")
        if not isinstance(pts, list) or len(pts) < 2:
            raise ValueError("polyline spec needs a 'points' list with >= 2 entries")
        return PolyLine(tuple(Quaternion.from_list(p) for p in pts))
    if kind == "circle":
        center = obj.get("center")
        radius = obj.get("radius")
        turns = obj.get("turns", 1.0)
        for name, v in (("center", center), ("radius", radius), ("turns", turns)):
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ValueError(f"circle spec needs a numeric {name!r}")
        u = UnitImaginary(Quaternion.from_list(obj.get("u")))
        return SliceCircle(float(center), float(radius), u, float(turns))
    raise ValueError(f"unknown path kind {kind!r}")
