"""Two-dimensional rate polytopes: vertices, hulls, and support queries.

A :class:`RatePolytope` is a list of half-planes a*R1 + b*R2 <= c with small
integer coefficients, plus the implicit R1 >= 0, R2 >= 0.  A
:class:`RateRegion` is a convex vertex list in counterclockwise order.
Everything is plain float geometry; the rates involved never exceed a few
tens of bits, so absolute tolerances are used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

_FEAS_TOL = 1e-9
_DEDUP_TOL = 1e-12

Point = tuple[float, float]


@dataclass(frozen=True)
class RatePolytope:
    """Constraints (a, b, c): a*R1 + b*R2 <= c with a, b in {0, 1, 2}, c >= 0."""

    constraints: tuple[tuple[float, float, float], ...]

    def __post_init__(self):
        if not self.constraints:
            raise ValueError("constraint list must be nonempty")
        for a, b, c in self.constraints:
            if (a, b) == (0, 0):
                raise ValueError("constraint needs a nonzero rate coefficient")
            if not (c >= 0.0 or math.isinf(c)):
                raise ValueError(f"constraint bound must be >= 0, got {c!r}")

    def feasible(self, pt: Point, tol: float = _FEAS_TOL) -> bool:
        r1, r2 = pt
        if r1 < -tol or r2 < -tol:
            return False
        return all(a * r1 + b * r2 <= c + tol for a, b, c in self.constraints)


@dataclass(frozen=True)
class RateRegion:
    """Convex region as counterclockwise vertices, all coordinates >= 0."""

    vertices: tuple[Point, ...]


def _dedup(points: Iterable[Point], tol: float = _DEDUP_TOL) -> list[Point]:
    out: list[Point] = []
    for p in sorted(points):
        if not out or abs(p[0] - out[-1][0]) > tol or abs(p[1] - out[-1][1]) > tol:
            out.append(p)
    return out


def polytope_vertices(p: RatePolytope) -> list[Point]:
    """All feasible pairwise line intersections plus axis intercepts.

    Infinite bounds never bind and generate no candidates.  An infeasible
    or degenerate system collapses to [(0, 0)].
    """
    lines = [(a, b, c) for a, b, c in p.constraints if math.isfinite(c)]
    # Axes as lines so axis intercepts come out of the same intersection loop.
    lines += [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0)]
    candidates: list[Point] = [(0.0, 0.0)]
    for i in range(len(lines)):
        a1, b1, c1 = lines[i]
        for j in range(i + 1, len(lines)):
            a2, b2, c2 = lines[j]
            det = a1 * b2 - a2 * b1
            if abs(det) < 1e-12:
                continue
            r1 = (c1 * b2 - c2 * b1) / det
            r2 = (a1 * c2 - a2 * c1) / det
            candidates.append((r1, r2))
    feas = [
        (max(pt[0], 0.0) + 0.0, max(pt[1], 0.0) + 0.0)  # +0.0 drops negative zero
        for pt in candidates
        if p.feasible(pt)
    ]
    if not feas:
        return [(0.0, 0.0)]
    return _dedup(feas)


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[Point]) -> RateRegion:
    """Monotone-chain hull, counterclockwise, collinear interior points dropped."""
    if not points:
        raise ValueError("convex hull of an empty point list")
    pts = _dedup(points)
    if len(pts) <= 2:
        return RateRegion(tuple(pts))
    lower: list[Point] = []
    for pt in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], pt) <= _DEDUP_TOL:
            lower.pop()
        lower.append(pt)
    upper: list[Point] = []
    for pt in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], pt) <= _DEDUP_TOL:
            upper.pop()
        upper.append(pt)
    hull = lower[:-1] + upper[:-1]
    if not hull:  # all points collinear
        hull = [pts[0], pts[-1]]
    return RateRegion(tuple(hull))


def weighted_sum_max(region: RateRegion, w: float) -> float:
    """max over vertices of w*R1 + (1-w)*R2."""
    if not region.vertices:
        raise ValueError("empty region")
    return max(w * r1 + (1.0 - w) * r2 for r1, r2 in region.vertices)


def sum_rate(region: RateRegion) -> float:
    """max over vertices of R1 + R2."""
    if not region.vertices:
        raise ValueError("empty region")
    return max(r1 + r2 for r1, r2 in region.vertices)


def contains(region: RateRegion, pt: Point, tol: float) -> bool:
    """True if pt lies inside the hull or within tol of its boundary."""
    verts = region.vertices
    if not verts:
        return False
    if len(verts) == 1:
        return _dist(verts[0], pt) <= tol
    if len(verts) == 2:
        return _segment_dist(verts[0], verts[1], pt) <= tol
    for i, p in enumerate(verts):
        q = verts[(i + 1) % len(verts)]
        edge = math.hypot(q[0] - p[0], q[1] - p[1])
        if edge < _DEDUP_TOL:
            continue
        if _cross(p, q, pt) < -tol * edge:
            return False
    return True


def region_area(region: RateRegion) -> float:
    """Shoelace area of the hull (0 for points and segments)."""
    verts = region.vertices
    if len(verts) < 3:
        return 0.0
    acc = 0.0
    for i, (x1, y1) in enumerate(verts):
        x2, y2 = verts[(i + 1) % len(verts)]
        acc += x1 * y2 - x2 * y1
    return 0.5 * abs(acc)


def _dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def _segment_dist(a: Point, b: Point, pt: Point) -> float:
    ab = (b[0] - a[0], b[1] - a[1])
    denom = ab[0] ** 2 + ab[1] ** 2
    if denom < _DEDUP_TOL**2:
        return _dist(a, pt)
    t = ((pt[0] - a[0]) * ab[0] + (pt[1] - a[1]) * ab[1]) / denom
    t = min(1.0, max(0.0, t))
    return _dist((a[0] + t * ab[0], a[1] + t * ab[1]), pt)
