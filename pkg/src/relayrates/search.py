"""Deterministic derivative-free maximization over power spheres and scalars.

The search domain is a list of dimension specs: bounded intervals,
log-scaled intervals, and power-sphere groups (coefficient vectors whose
squares sum to a fixed budget, parameterized by spherical angles so the
power constraint holds at equality by construction).

The algorithm is a coarse grid scan followed by rounds of coordinate-wise
window refinement around the incumbent.  When the full Cartesian coarse
grid would be too large (the 15-parameter two-way combined scheme), the
coarse scan runs blockwise instead: each sphere group / scalar is scanned
jointly on its own grid while the other coordinates stay at the incumbent,
cycling over blocks.  Everything is deterministic; ties break toward the
lexicographically smallest parameter vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class SearchBudget:
    coarse_steps: int = 9
    refine_rounds: int = 4
    refine_shrink: float = 0.35
    tol: float = 1e-3
    max_grid_points: int = 20000
    block_passes: int = 2

    def __post_init__(self):
        if self.coarse_steps < 2:
            raise ValueError("coarse_steps must be >= 2")
        if self.refine_rounds < 0:
            raise ValueError("refine_rounds must be >= 0")
        if not (0.0 < self.refine_shrink < 1.0):
            raise ValueError("refine_shrink must lie in (0, 1)")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


DEFAULT_BUDGET = SearchBudget()
# The combined two-way scheme searches 13 power coefficients + 2 variances,
# so its grid is coarser with more refinement rounds.
TWRC_COMBINED_BUDGET = SearchBudget(coarse_steps=5, refine_rounds=6)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float


@dataclass(frozen=True)
class LogInterval:
    lo: float
    hi: float

    def __post_init__(self):
        if self.lo <= 0 or self.hi < self.lo:
            raise ValueError("log interval needs 0 < lo <= hi")


@dataclass(frozen=True)
class SphereGroup:
    """size coefficients >= 0 with sum of squares equal to radius**2."""

    size: int
    radius: float

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("sphere group needs at least one coefficient")
        if self.radius < 0:
            raise ValueError("sphere radius must be >= 0")


DimensionSpec = Interval | LogInterval | SphereGroup


def sphere_to_coeffs(radius: float, angles: Sequence[float]) -> tuple[float, ...]:
    """Spherical angles in [0, pi/2] to nonnegative coefficients on the sphere.

    Coefficients below 1e-4 of the radius snap to exact 0: they carry under
    1e-8 of the power budget (immaterial to any rate at the tolerances in
    play) and exact zeros switch signaling layers off cleanly instead of
    leaving near-singular directions in the covariances.
    """
    coeffs = []
    rest = radius
    for th in angles:
        coeffs.append(rest * math.cos(th))
        rest *= math.sin(th)
    coeffs.append(rest)
    snap = 1e-4 * radius
    return tuple(0.0 if abs(c) < snap else c for c in coeffs)


def coeffs_to_angles(coeffs: Sequence[float]) -> tuple[float, ...]:
    """Inverse of :func:`sphere_to_coeffs` (coefficients assumed >= 0)."""
    angles = []
    rest2 = sum(c * c for c in coeffs)
    for c in coeffs[:-1]:
        if rest2 <= 0.0:
            angles.append(0.0)
            continue
        ratio = min(1.0, max(0.0, c / math.sqrt(rest2)))
        angles.append(math.acos(ratio))
        rest2 = max(rest2 - c * c, 0.0)
    return tuple(angles)


class _Coord:
    __slots__ = ("lo", "hi", "kind")

    def __init__(self, lo, hi, kind):
        self.lo, self.hi, self.kind = lo, hi, kind


def _compile(domain: Sequence[DimensionSpec]):
    """Flatten the domain into scan coordinates plus an expansion function."""
    coords: list[_Coord] = []
    blocks: list[list[int]] = []
    plan = []
    for spec in domain:
        if isinstance(spec, SphereGroup):
            first = len(coords)
            for _ in range(spec.size - 1):
                coords.append(_Coord(0.0, HALF_PI, "angle"))
            if spec.size > 1:
                blocks.append(list(range(first, len(coords))))
            plan.append(("sphere", spec, first, spec.size - 1))
        elif isinstance(spec, LogInterval):
            coords.append(_Coord(math.log10(spec.lo), math.log10(spec.hi), "log"))
            blocks.append([len(coords) - 1])
            plan.append(("log", spec, len(coords) - 1, 1))
        elif isinstance(spec, Interval):
            coords.append(_Coord(spec.lo, spec.hi, "lin"))
            blocks.append([len(coords) - 1])
            plan.append(("lin", spec, len(coords) - 1, 1))
        else:
            raise TypeError(f"unknown dimension spec {spec!r}")

    def expand(z: Sequence[float]) -> tuple[float, ...]:
        out: list[float] = []
        for kind, spec, first, width in plan:
            if kind == "sphere":
                out.extend(sphere_to_coeffs(spec.radius, z[first : first + width]))
            elif kind == "log":
                out.append(10.0 ** z[first])
            else:
                out.append(z[first])
        return tuple(out)

    def invert(params: Sequence[float]) -> tuple[float, ...]:
        z: list[float] = [0.0] * len(coords)
        pos = 0
        for kind, spec, first, width in plan:
            if kind == "sphere":
                angles = coeffs_to_angles(params[pos : pos + spec.size])
                z[first : first + width] = angles
                pos += spec.size
            elif kind == "log":
                q = min(max(params[pos], spec.lo), spec.hi)
                z[first] = math.log10(q)
                pos += 1
            else:
                z[first] = min(max(params[pos], spec.lo), spec.hi)
                pos += 1
        return tuple(z)

    return coords, blocks, expand, invert


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    if n == 1 or hi <= lo:
        return [lo]
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def maximize(
    objective: Callable[[tuple[float, ...]], float],
    domain: Sequence[DimensionSpec],
    budget: SearchBudget = DEFAULT_BUDGET,
    seeds: Sequence[Sequence[float]] = (),
) -> tuple[tuple[float, ...], float]:
    """Maximize ``objective`` over the domain; returns (best_params, best_value).

    ``seeds`` are parameter vectors (in expanded form) evaluated before the
    scan and refined like any incumbent.  Non-finite objective values mark
    invalid points and never become incumbents.
    """
    if not domain:
        raise ValueError("empty search domain")
    coords, blocks, expand, invert = _compile(domain)

    best_val = -math.inf
    best_params: tuple[float, ...] | None = None
    best_z: tuple[float, ...] | None = None

    def consider(z: tuple[float, ...]) -> None:
        nonlocal best_val, best_params, best_z
        params = expand(z)
        val = objective(params)
        if not (isinstance(val, (int, float)) and math.isfinite(val)):
            return
        if val > best_val or (val == best_val and (best_params is None or params < best_params)):
            best_val, best_params, best_z = val, params, z

    for seed in seeds:
        consider(invert(seed))

    grids = [_linspace(c.lo, c.hi, budget.coarse_steps) for c in coords]
    if coords:
        total = 1
        for g in grids:
            total *= len(g)
        if total <= budget.max_grid_points:
            for z in product(*grids):
                consider(z)
        else:
            if best_z is None:
                consider(tuple(g[len(g) // 2] for g in grids))
            for _ in range(budget.block_passes):
                for block in blocks:
                    base = best_z
                    for combo in product(*(grids[i] for i in block)):
                        z = list(base)
                        for i, v in zip(block, combo):
                            z[i] = v
                        consider(tuple(z))
    else:
        consider(())

    for r in range(1, budget.refine_rounds + 1):
        for i, c in enumerate(coords):
            if best_z is None:
                break
            w = (c.hi - c.lo) * budget.refine_shrink**r
            center = best_z[i]
            lo = max(c.lo, center - w / 2.0)
            hi = min(c.hi, center + w / 2.0)
            base = best_z
            for v in _linspace(lo, hi, budget.coarse_steps):
                z = list(base)
                z[i] = v
                consider(tuple(z))

    if best_params is None:
        raise ValueError("objective returned no finite value on the search grid")
    return best_params, best_val


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(
    f: Callable[[float], float], lo: float, hi: float, coarse: int = 33, xtol: float = 1e-10
) -> tuple[float, float]:
    """Coarse scan plus golden-section refinement for smooth unimodal 1-D objectives."""
    xs = _linspace(lo, hi, coarse)
    vals = [f(x) for x in xs]
    k = max(range(len(xs)), key=lambda i: vals[i])
    a = xs[max(k - 1, 0)]
    b = xs[min(k + 1, len(xs) - 1)]
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = (a + b) / 2.0
    fx = f(x)
    if vals[k] > fx:
        return xs[k], vals[k]
    return x, fx
