"""Rate region of the Gaussian two-way relay channel.

The combined scheme splits each user's message into a block-Markov common
stream, an independent common stream, and a private stream, while the relay
decodes both common bundles and compresses the remainder into two nested
layers (a coarse layer used by both destinations and a refinement used by
one of them).  The achievable region is described by nineteen conditional
mutual informations I1..I19 over the superposition signaling; the region
itself has four bound lines (R1, R2, R1+R2 and 2R1+R2) assembled from them.

Signaling layout (16 unit-variance sources):

    w1 = a1*s1            u1 = w1 + b1*s2    v1 = u1 + c1*s3   x1 = v1 + d1*s4
    w2 = a2*s5            u2 = w2 + b2*s6    v2 = u2 + c2*s7   x2 = v2 + d2*s8
    vr = a31*s1 + a32*s5 + b3*s10            ur = vr + c3*s9   xr = ur + d3*s11
    y1 = g12*x2 + g1r*xr + z1                y2 = g21*x1 + g2r*xr + z2
    yr = gr1*x1 + gr2*x2 + zr
    yhat = yr + N(0, qhat)                   ytilde = yhat + N(0, qtilde)

Each codebook layer adds exactly one fresh source, matching the
superposition order of the encoding.  ``qhat``/``qtilde`` of +inf disable a
compression layer: the corresponding variable is dropped from every query
instead of being carried as pure noise, which keeps covariances well
conditioned in the decode-forward-only restrictions.

Three classical schemes are parameter restrictions of the combined family:
coherent block-Markov decode-forward (no private streams, no compression),
independent-encoding decode-forward (everything in the independent common
stream, relay at full power on the bin codeword), and layered noisy network
coding (private streams and compression only).  Because they are
restrictions, the combined search is seeded with their optima and the
combined region is the hull of the union of everything visited.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .channels import TwoWayChannel
from .gaussian import GaussianSystem
from .oneway import capacity
from .regions import RatePolytope, RateRegion, convex_hull, polytope_vertices, sum_rate
from .search import (
    DEFAULT_BUDGET,
    TWRC_COMBINED_BUDGET,
    LogInterval,
    SearchBudget,
    SphereGroup,
    maximize,
)

__all__ = [
    "TwrcParams",
    "ConstraintSet",
    "LayerAssignment",
    "build_signaling",
    "constraint_set",
    "region_for_params",
    "theorem_bounds",
    "TwrcEvaluator",
    "scheme_region",
    "combined_region",
    "rankov_df_region",
    "xie_df_region",
    "lnnc_region",
    "twrc_all_regions",
    "twrc_sum_rates",
    "twrc_cutset_bound",
    "sum_rate",
    "combined_embedding",
    "SCHEME_NAMES",
    "DEFAULT_WEIGHTS",
    "RATE_CAP",
    "TWRC_Q_RANGE",
]

# Any single bound above this is treated as unbounded and clamped, so the
# polytope geometry stays finite when +inf sentinels appear.
RATE_CAP = 30.0

# Compression variances searched logarithmically.  The upper end is high
# enough that a "nearly disabled" layer costs under a millibit even at the
# strongest sweep gains.
TWRC_Q_RANGE = LogInterval(1e-2, 1e8)

DEFAULT_WEIGHTS: tuple[float, ...] = tuple(i / 8.0 for i in range(9))

SCHEME_NAMES = ("rankov_df", "xie_df", "lnnc", "combined")


@dataclass(frozen=True)
class TwrcParams:
    """Power splits for user 1, user 2 and the relay, plus the two
    compression-noise variances (+inf = layer disabled)."""

    alpha1: float
    beta1: float
    gamma1: float
    delta1: float
    alpha2: float
    beta2: float
    gamma2: float
    delta2: float
    alpha31: float
    alpha32: float
    beta3: float
    gamma3: float
    delta3: float
    qhat: float = math.inf
    qtilde: float = math.inf

    _COEFFS = (
        "alpha1", "beta1", "gamma1", "delta1",
        "alpha2", "beta2", "gamma2", "delta2",
        "alpha31", "alpha32", "beta3", "gamma3", "delta3",
    )

    def __post_init__(self):
        for name in self._COEFFS:
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if not self.qhat > 0 or not self.qtilde > 0:
            raise ValueError("compression variances must be positive")

    def validate_power(self, P: float, slack: float = 1e-9) -> None:
        budget = P * (1 + slack)
        if self.alpha1**2 + self.beta1**2 + self.gamma1**2 + self.delta1**2 > budget:
            raise ValueError("user 1 power split exceeds the budget")
        if self.alpha2**2 + self.beta2**2 + self.gamma2**2 + self.delta2**2 > budget:
            raise ValueError("user 2 power split exceeds the budget")
        if (
            self.alpha31**2 + self.alpha32**2 + self.beta3**2
            + self.gamma3**2 + self.delta3**2
        ) > budget:
            raise ValueError("relay power split exceeds the budget")

    def swap_users(self) -> "TwrcParams":
        return TwrcParams(
            self.alpha2, self.beta2, self.gamma2, self.delta2,
            self.alpha1, self.beta1, self.gamma1, self.delta1,
            self.alpha32, self.alpha31, self.beta3, self.gamma3, self.delta3,
            qhat=self.qhat, qtilde=self.qtilde,
        )


class LayerAssignment(enum.Enum):
    """Which destination decodes both compression layers."""

    USER1 = "user1"
    USER2 = "user2"


@dataclass(frozen=True)
class ConstraintSet:
    """The nineteen rate-constraint quantities, in bits (>= 0 or +inf)."""

    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != 19:
            raise ValueError("expected 19 constraint values")
        for v in self.values:
            if not (v >= 0.0 or math.isinf(v)):
                raise ValueError(f"constraint values must be >= 0, got {v!r}")

    def __getitem__(self, j: int) -> float:
        """1-based access: cs[5] is I5."""
        if not 1 <= j <= 19:
            raise IndexError(j)
        return self.values[j - 1]


def build_signaling(ch: TwoWayChannel, p: TwrcParams) -> GaussianSystem:
    """Instantiate the full superposition signaling over 16 sources."""
    p.validate_power(ch.P)

    def row(**entries: float) -> list[float]:
        out = [0.0] * 16
        for key, val in entries.items():
            out[_SOURCE_INDEX[key]] = val
        return out

    def lincomb(*pairs) -> list[float]:
        out = [0.0] * 16
        for scale, vec in pairs:
            for i, v in enumerate(vec):
                out[i] += scale * v
        return out

    w1 = row(s1=p.alpha1)
    u1 = lincomb((1, w1), (1, row(s2=p.beta1)))
    v1 = lincomb((1, u1), (1, row(s3=p.gamma1)))
    x1 = lincomb((1, v1), (1, row(s4=p.delta1)))
    w2 = row(s5=p.alpha2)
    u2 = lincomb((1, w2), (1, row(s6=p.beta2)))
    v2 = lincomb((1, u2), (1, row(s7=p.gamma2)))
    x2 = lincomb((1, v2), (1, row(s8=p.delta2)))
    vr = lincomb((1, row(s1=p.alpha31)), (1, row(s5=p.alpha32)), (1, row(s10=p.beta3)))
    ur = lincomb((1, vr), (1, row(s9=p.gamma3)))
    xr = lincomb((1, ur), (1, row(s11=p.delta3)))
    y1 = lincomb((ch.g12, x2), (ch.g1r, xr), (1, row(z1=1.0)))
    y2 = lincomb((ch.g21, x1), (ch.g2r, xr), (1, row(z2=1.0)))
    yr = lincomb((ch.gr1, x1), (ch.gr2, x2), (1, row(zr=1.0)))

    variables = {
        "w1": w1, "u1": u1, "v1": v1, "x1": x1,
        "w2": w2, "u2": u2, "v2": v2, "x2": x2,
        "vr": vr, "ur": ur, "xr": xr,
        "y1": y1, "y2": y2, "yr": yr,
    }
    if math.isfinite(p.qhat):
        yhat = lincomb((1, yr), (1, row(zhat=math.sqrt(p.qhat))))
        variables["yhat"] = yhat
        if math.isfinite(p.qtilde):
            variables["ytilde"] = lincomb((1, yhat), (1, row(ztilde=math.sqrt(p.qtilde))))
    return GaussianSystem(16, variables)


_SOURCE_INDEX = {
    **{f"s{i}": i - 1 for i in range(1, 12)},
    "zhat": 11, "ztilde": 12, "z1": 13, "z2": 14, "zr": 15,
}

_AUX = ("w1", "u1", "v1", "w2", "u2", "v2")

# (A, B, C) name sets for each constraint; multi-term constraints sum their
# conditional mutual informations.
_I_TABLE: tuple[tuple[tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]], ...], ...] = (
    # I1: coarse compression layer covering cost
    ((("ytilde",), ("xr", "yr"), ("ur", "vr") + _AUX),),
    # I2: both layers
    (
        (("ytilde",), ("xr", "yr"), ("ur", "vr") + _AUX),
        (("yhat",), ("yr",), ("ytilde", "xr", "ur", "vr") + _AUX),
    ),
    # I3..I10: relay multiple-access decoding of the common streams
    ((("v1",), ("yr",), ("vr", "w1", "u1", "w2", "u2", "v2")),),
    ((("v2",), ("yr",), ("vr", "w2", "u2", "w1", "u1", "v1")),),
    ((("u1", "v1"), ("yr",), ("vr", "w1", "w2", "u2", "v2")),),
    ((("u2", "v2"), ("yr",), ("vr", "w2", "w1", "u1", "v1")),),
    ((("v1", "v2"), ("yr",), ("vr", "w1", "u1", "w2", "u2")),),
    ((("u1", "v1", "v2"), ("yr",), ("vr", "w1", "w2", "u2")),),
    ((("u2", "v1", "v2"), ("yr",), ("vr", "w1", "w2", "u1")),),
    ((("u1", "v1", "u2", "v2"), ("yr",), ("vr", "w1", "w2")),),
    # I11..I14: sliding-window common-stream decoding at the destinations
    (
        (("v1",), ("y2",), ("vr", "w1", "u1", "w2", "u2", "v2", "x2")),
        (("vr",), ("y2",), ("w1", "w2", "u2", "v2", "x2")),
    ),
    ((("w1", "u1", "v1", "vr"), ("y2",), ("w2", "u2", "v2", "x2")),),
    (
        (("v2",), ("y1",), ("vr", "w2", "u2", "w1", "u1", "v1", "x1")),
        (("vr",), ("y1",), ("w2", "w1", "u1", "v1", "x1")),
    ),
    ((("w2", "u2", "v2", "vr"), ("y1",), ("w1", "u1", "v1", "x1")),),
    # I15, I16: private stream of user 1, decoded at user 2 (coarse layer only)
    (
        (("x1", "ur"), ("y2",), ("x2",) + _AUX + ("vr",)),
        (("ytilde",), ("x1", "x2", "y2"), ("ur",) + _AUX + ("vr",)),
    ),
    ((("x1",), ("ytilde", "y2"), ("x2", "ur") + _AUX + ("vr",)),),
    # I17..I19: private stream of user 2, decoded at user 1 (both layers)
    (
        (("x2", "xr"), ("y1",), ("x1",) + _AUX + ("vr",)),
        (("yhat",), ("x1", "x2", "y1"), ("ytilde", "xr", "ur") + _AUX + ("vr",)),
        (("ytilde",), ("x1", "x2", "xr", "y2"), ("ur",) + _AUX + ("vr",)),
    ),
    (
        (("x2", "xr"), ("y1", "ytilde"), ("x1", "ur") + _AUX + ("vr",)),
        (("yhat",), ("x1", "x2", "y1"), ("ytilde", "xr", "ur") + _AUX + ("vr",)),
    ),
    ((("x2",), ("ytilde", "yhat", "y1"), ("x1", "ur", "xr") + _AUX + ("vr",)),),
)

_SWAP = {
    "w1": "w2", "w2": "w1", "u1": "u2", "u2": "u1", "v1": "v2", "v2": "v1",
    "x1": "x2", "x2": "x1", "y1": "y2", "y2": "y1",
}


def _swap_names(names: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(_SWAP.get(n, n) for n in names)


class TwrcEvaluator:
    """Evaluates constraint sets and region polytopes for one channel.

    Query plans (the four log-pseudo-determinant keys behind every
    conditional mutual information) are compiled once per layer pattern and
    reused across parameter points; shared entropy terms are deduplicated by
    the per-system memo.
    """

    def __init__(self, ch: TwoWayChannel):
        self.ch = ch
        self._plans: dict[tuple[int, bool], tuple] = {}

    def _plan(self, system: GaussianSystem, swapped: bool):
        key = (len(system.names), swapped)
        plan = self._plans.get(key)
        if plan is None:
            present = set(system.names)
            compiled = []
            for terms in _I_TABLE:
                cterms = []
                for a, b, c in terms:
                    if swapped:
                        a, b, c = _swap_names(a), _swap_names(b), _swap_names(c)
                    ia = {system._idx(n) for n in a if n in present}
                    ib = {system._idx(n) for n in b if n in present}
                    ic = {system._idx(n) for n in c if n in present}
                    if not ia or not ib:
                        continue  # disabled compression layer carries nothing
                    cterms.append(
                        (
                            tuple(sorted(ia | ic)),
                            tuple(sorted(ib | ic)),
                            tuple(sorted(ia | ib | ic)),
                            tuple(sorted(ic)),
                        )
                    )
                compiled.append(tuple(cterms))
            plan = tuple(compiled)
            self._plans[key] = plan
        return plan

    def constraint_values(self, system: GaussianSystem, swapped: bool = False) -> tuple[float, ...]:
        out = []
        for cterms in self._plan(system, swapped):
            acc = 0.0
            for keys in cterms:
                acc += system._cmi_from_keys(*keys)
            out.append(acc)
        return tuple(out)

    def constraint_set(self, p: TwrcParams, swap_roles: bool = False) -> ConstraintSet:
        return ConstraintSet(self.constraint_values(build_signaling(self.ch, p), swap_roles))

    def polytopes(self, p: TwrcParams) -> tuple[RatePolytope, RatePolytope]:
        """Region polytopes for both layer assignments at one parameter point."""
        system = build_signaling(self.ch, p)
        poly1 = _bounds_to_polytope(
            theorem_bounds(self.constraint_values(system, False)), LayerAssignment.USER1
        )
        poly2 = _bounds_to_polytope(
            theorem_bounds(self.constraint_values(system, True)), LayerAssignment.USER2
        )
        return poly1, poly2


def constraint_set(ch: TwoWayChannel, p: TwrcParams, swap_roles: bool = False) -> ConstraintSet:
    """I1..I19 for one parameter point.

    With ``swap_roles`` the user indices are exchanged throughout the
    definitions, producing the constraint set of the swapped-layer region.
    """
    return TwrcEvaluator(ch).constraint_set(p, swap_roles)


def _clean(bound: float) -> float:
    if bound != bound:  # sentinels never co-occur in these combinations; NaN means a bug upstream
        return 0.0
    return min(max(bound, 0.0), RATE_CAP)


def theorem_bounds(values: Sequence[float]) -> tuple[float, float, float, float]:
    """The four region bound lines (R1, R2, R1+R2, 2R1+R2) from I1..I19.

    Min-expressions are evaluated after clamping each argument at 0; a
    negative right-hand side means the corresponding stream is infeasible,
    not a rate debt.  Each final bound is capped at RATE_CAP.
    """
    I = dict(enumerate(values, start=1))
    m5 = min(I[5], I[12])
    m6 = min(I[6], I[14])
    p1 = min(max(I[15] - I[1], 0.0), max(I[16], 0.0))
    p1_single = min(max(I[5] - I[1], 0.0), max(I[16], 0.0))
    p2 = min(max(I[17] - I[2], 0.0), max(I[19], 0.0))
    pair = max(I[15] + I[18] - I[2], 0.0)
    r1 = m5 + p1_single
    r2 = m6 + p2
    rsum = min(m5 + pair + m6, I[10] + pair, I[10] + p1 + p2)
    r21 = m5 + pair + I[10] + p1
    return _clean(r1), _clean(r2), _clean(rsum), _clean(r21)


def _bounds_to_polytope(
    bounds: tuple[float, float, float, float], layers: LayerAssignment
) -> RatePolytope:
    b1, b2, bs, b21 = bounds
    if layers is LayerAssignment.USER1:
        cons = ((1.0, 0.0, b1), (0.0, 1.0, b2), (1.0, 1.0, bs), (2.0, 1.0, b21))
    else:
        # Swapped roles: the bound lines apply to (R2, R1, R1+R2, 2R2+R1).
        cons = ((0.0, 1.0, b1), (1.0, 0.0, b2), (1.0, 1.0, bs), (1.0, 2.0, b21))
    return RatePolytope(cons)


def region_for_params(cs: ConstraintSet, layers: LayerAssignment) -> RatePolytope:
    """Region polytope from a constraint set.

    For ``LayerAssignment.USER2`` the constraint set must have been computed
    with ``swap_roles=True``.
    """
    return _bounds_to_polytope(theorem_bounds(cs.values), layers)


# -- scheme families ---------------------------------------------------------


def _combined_family(P: float):
    sP = math.sqrt(P)
    domain = [
        SphereGroup(4, sP),
        SphereGroup(4, sP),
        SphereGroup(5, sP),
        TWRC_Q_RANGE,
        TWRC_Q_RANGE,
    ]

    def assemble(x):
        return TwrcParams(*x[:13], qhat=x[13], qtilde=x[14])

    return domain, assemble


def _rankov_family(P: float):
    # Coherent block-Markov decode-forward: no independent-common or private
    # streams, no compression.
    sP = math.sqrt(P)
    domain = [SphereGroup(2, sP), SphereGroup(2, sP), SphereGroup(3, sP)]

    def assemble(x):
        a1, b1, a2, b2, a31, a32, b3 = x
        return TwrcParams(a1, b1, 0, 0, a2, b2, 0, 0, a31, a32, b3, 0, 0)

    return domain, assemble


def _xie_family(P: float):
    # Independent-encoding decode-forward: all user power in the independent
    # common stream, relay at full power on the bin codeword.
    sP = math.sqrt(P)
    domain = [SphereGroup(1, sP), SphereGroup(1, sP), SphereGroup(1, sP)]

    def assemble(x):
        c1, c2, b3 = x
        return TwrcParams(0, 0, c1, 0, 0, 0, c2, 0, 0, 0, b3, 0, 0)

    return domain, assemble


def _lnnc_family(P: float):
    # Layered noisy network coding: private streams and compression only.
    sP = math.sqrt(P)
    domain = [SphereGroup(1, sP), SphereGroup(1, sP), SphereGroup(2, sP),
              TWRC_Q_RANGE, TWRC_Q_RANGE]

    def assemble(x):
        d1, d2, c3, d3, qh, qt = x
        return TwrcParams(0, 0, 0, d1, 0, 0, 0, d2, 0, 0, 0, c3, d3, qhat=qh, qtilde=qt)

    return domain, assemble


_FAMILIES: dict[str, Callable] = {
    "combined": _combined_family,
    "rankov_df": _rankov_family,
    "xie_df": _xie_family,
    "lnnc": _lnnc_family,
}


def _clip_q(q: float) -> float:
    return min(max(q, TWRC_Q_RANGE.lo), TWRC_Q_RANGE.hi)


def combined_embedding(p: TwrcParams) -> tuple[float, ...]:
    """A parameter point of any restricted family, as a combined-family vector."""
    return (
        p.alpha1, p.beta1, p.gamma1, p.delta1,
        p.alpha2, p.beta2, p.gamma2, p.delta2,
        p.alpha31, p.alpha32, p.beta3, p.gamma3, p.delta3,
        _clip_q(p.qhat), _clip_q(p.qtilde),
    )


# -- search drivers ----------------------------------------------------------


@dataclass
class SchemeSearch:
    region: RateRegion
    vertices: list[tuple[float, float]]
    best_params: list[TwrcParams]
    best_values: list[float]


def _run_scheme(
    ch: TwoWayChannel,
    name: str,
    budget: SearchBudget,
    weights: Sequence[float],
    seeds_by_weight: Sequence[Sequence[Sequence[float]]] | None = None,
) -> SchemeSearch:
    evaluator = TwrcEvaluator(ch)
    domain, assemble = _FAMILIES[name](ch.P)
    collected: list[tuple[float, float]] = [(0.0, 0.0)]
    best_params: list[TwrcParams] = []
    best_values: list[float] = []
    for k, w in enumerate(weights):

        def obj(x, _w=w):
            p = assemble(x)
            pa, pb = evaluator.polytopes(p)
            va = polytope_vertices(pa)
            vb = polytope_vertices(pb)
            collected.extend(va)
            collected.extend(vb)
            return max(_w * r1 + (1.0 - _w) * r2 for r1, r2 in va + vb)

        seeds = seeds_by_weight[k] if seeds_by_weight is not None else ()
        params, val = maximize(obj, domain, budget, seeds=seeds)
        best_params.append(assemble(params))
        best_values.append(val)
    return SchemeSearch(convex_hull(collected), collected, best_params, best_values)


def scheme_region(
    ch: TwoWayChannel,
    name: str,
    budget: SearchBudget = DEFAULT_BUDGET,
    weights: Sequence[float] = DEFAULT_WEIGHTS,
) -> RateRegion:
    """Achievable region of one scheme: hull of all region polytopes visited
    while maximizing each weighted sum, over both layer assignments."""
    if name == "combined":
        return twrc_all_regions(ch, combined_budget=budget, weights=weights)["combined"]
    return _run_scheme(ch, name, budget, weights).region


def rankov_df_region(ch, budget=DEFAULT_BUDGET, weights=DEFAULT_WEIGHTS) -> RateRegion:
    return _run_scheme(ch, "rankov_df", budget, weights).region


def xie_df_region(ch, budget=DEFAULT_BUDGET, weights=DEFAULT_WEIGHTS) -> RateRegion:
    return _run_scheme(ch, "xie_df", budget, weights).region


def lnnc_region(ch, budget=DEFAULT_BUDGET, weights=DEFAULT_WEIGHTS) -> RateRegion:
    return _run_scheme(ch, "lnnc", budget, weights).region


def combined_region(
    ch: TwoWayChannel,
    budget: SearchBudget = TWRC_COMBINED_BUDGET,
    weights: Sequence[float] = DEFAULT_WEIGHTS,
) -> RateRegion:
    return twrc_all_regions(ch, combined_budget=budget, weights=weights)["combined"]


def twrc_all_regions(
    ch: TwoWayChannel,
    budget: SearchBudget = DEFAULT_BUDGET,
    combined_budget: SearchBudget = TWRC_COMBINED_BUDGET,
    weights: Sequence[float] = DEFAULT_WEIGHTS,
) -> dict[str, RateRegion]:
    """All four scheme regions on one channel.

    The restricted schemes feed the combined search twice over: their
    per-weight optima become seeds, and every vertex they visited joins the
    combined hull (legitimately, since they are parameter restrictions of
    the combined family).
    """
    searches = {name: _run_scheme(ch, name, budget, weights) for name in SCHEME_NAMES[:3]}
    seeds_by_weight = [
        [combined_embedding(searches[name].best_params[k]) for name in SCHEME_NAMES[:3]]
        for k in range(len(weights))
    ]
    comb = _run_scheme(ch, "combined", combined_budget, weights, seeds_by_weight)
    union = list(comb.vertices)
    for s in searches.values():
        union.extend(s.region.vertices)
    regions = {name: searches[name].region for name in SCHEME_NAMES[:3]}
    regions["combined"] = convex_hull(union)
    return regions


def twrc_sum_rates(
    ch: TwoWayChannel,
    budget: SearchBudget = DEFAULT_BUDGET,
    combined_budget: SearchBudget = TWRC_COMBINED_BUDGET,
) -> dict[str, float]:
    """Best sum rate per scheme (single weighted-sum search at w = 1/2)."""
    weights = (0.5,)
    searches = {name: _run_scheme(ch, name, budget, weights) for name in SCHEME_NAMES[:3]}
    seeds = [[combined_embedding(searches[name].best_params[0]) for name in SCHEME_NAMES[:3]]]
    comb = _run_scheme(ch, "combined", combined_budget, weights, seeds)
    sums = {name: sum_rate(searches[name].region) for name in SCHEME_NAMES[:3]}
    sums["combined"] = max(sum_rate(comb.region), *sums.values())
    return sums


def twrc_cutset_bound(ch: TwoWayChannel) -> RatePolytope:
    """Outer bound: per-direction broadcast cut with independent inputs and
    fully cooperative multiple-access cut."""
    P = ch.P
    r1 = min(
        capacity((ch.gr1**2 + ch.g21**2) * P),
        capacity((ch.g21**2 + ch.g2r**2) * P + 2.0 * ch.g21 * ch.g2r * P),
    )
    r2 = min(
        capacity((ch.gr2**2 + ch.g12**2) * P),
        capacity((ch.g12**2 + ch.g1r**2) * P + 2.0 * ch.g12 * ch.g1r * P),
    )
    return RatePolytope(((1.0, 0.0, r1), (0.0, 1.0, r2)))
