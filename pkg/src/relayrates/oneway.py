"""Achievable rates for the Gaussian one-way relay channel.

Four rate functions: decode-forward with source-relay correlation rho,
noisy network coding with compression variance Q (evaluated through the
mutual-information engine), the combined scheme in both its closed form
and its engine-evaluated form, and a cut-set upper bound for validation.

Signaling for the engine-evaluated combined scheme: the relay's decoded
layer points along source S1 (shared with the source's coherent component),
the source superimposes a fresh private stream on its common codeword, and
the relay observation is compressed by adding independent noise of
variance Q.  A Q of +inf disables the compression layer entirely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channels import OneWayChannel
from .gaussian import GaussianSystem
from .search import (
    DEFAULT_BUDGET,
    Interval,
    LogInterval,
    SearchBudget,
    SphereGroup,
    golden_max,
    maximize,
)

# Q searched logarithmically; the optimum spans decades as the relay moves.
Q_RANGE = LogInterval(1e-3, 1e6)


def capacity(snr: float) -> float:
    """C(x) = 0.5*log2(1 + x) bits per channel use."""
    if snr < 0:
        raise ValueError(f"snr must be >= 0, got {snr!r}")
    return 0.5 * math.log2(1.0 + snr)


@dataclass(frozen=True)
class OneWayCombinedParams:
    """Power split (alpha1, beta1, gamma1) at the source, (alpha2, beta2) at
    the relay, and compression-noise variance q (math.inf = layer disabled)."""

    alpha1: float
    beta1: float
    gamma1: float
    alpha2: float
    beta2: float
    q: float = math.inf

    def __post_init__(self):
        for name in ("alpha1", "beta1", "gamma1", "alpha2", "beta2"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if not self.q > 0:
            raise ValueError("compression variance q must be positive")

    def validate_power(self, P: float, slack: float = 1e-9) -> None:
        if self.alpha1**2 + self.beta1**2 + self.gamma1**2 > P * (1 + slack):
            raise ValueError("source power split exceeds the budget")
        if self.alpha2**2 + self.beta2**2 > P * (1 + slack):
            raise ValueError("relay power split exceeds the budget")


# -- individual schemes ----------------------------------------------------


def df_rate(ch: OneWayChannel, rho: float) -> float:
    """Decode-forward with source-relay correlation rho in [0, 1]."""
    if not (0.0 <= rho <= 1.0):
        raise ValueError(f"rho must lie in [0, 1], got {rho!r}")
    P = ch.P
    relay_decode = capacity(ch.g1**2 * (1.0 - rho**2) * P)
    coherent_sum = capacity(ch.g**2 * P + ch.g2**2 * P + 2.0 * rho * ch.g * ch.g2 * P)
    return min(relay_decode, coherent_sum)


def _nnc_system(ch: OneWayChannel, q: float) -> GaussianSystem:
    sP = math.sqrt(ch.P)
    return GaussianSystem(
        5,
        {
            # sources: s1, s2, z, zr, z'
            "x": [sP, 0, 0, 0, 0],
            "xr": [0, sP, 0, 0, 0],
            "y": [ch.g * sP, ch.g2 * sP, 1, 0, 0],
            "yr": [ch.g1 * sP, 0, 0, 1, 0],
            "yhat": [ch.g1 * sP, 0, 0, 1, math.sqrt(q)],
        },
    )


def nnc_rate(ch: OneWayChannel, q: float) -> float:
    """Noisy network coding with independent full-power inputs and
    compression variance q, evaluated through the engine.

    q = +inf disables the compression layer (the Q -> inf limit, where the
    relay observation carries nothing to the destination).
    """
    if not q > 0:
        raise ValueError(f"compression variance must be positive, got {q!r}")
    if math.isinf(q):
        sys_ = _nnc_system(ch, 1.0)
        return max(
            0.0,
            min(
                sys_.conditional_mutual_info(["x"], ["y"], ["xr"]),
                sys_.mutual_info(["x", "xr"], ["y"]),
            ),
        )
    sys_ = _nnc_system(ch, q)
    direct = sys_.conditional_mutual_info(["x"], ["y", "yhat"], ["xr"])
    mac = sys_.mutual_info(["x", "xr"], ["y"]) - sys_.conditional_mutual_info(
        ["yhat"], ["yr"], ["xr", "x", "y"]
    )
    return max(0.0, min(direct, mac))


def combined_rate_closed_form(ch: OneWayChannel, p: OneWayCombinedParams) -> float:
    """Closed-form combined rate: common stream min-term plus the
    compression-optimized private term."""
    p.validate_power(ch.P)
    g, g1, g2 = ch.g, ch.g1, ch.g2
    a1, b1, c1, a2, b2 = p.alpha1, p.beta1, p.gamma1, p.alpha2, p.beta2
    relay_decode = capacity(g1**2 * b1**2 / (g1**2 * c1**2 + 1.0))
    dest_decode = capacity(
        ((g * a1 + g2 * a2) ** 2 + g**2 * b1**2) / (g**2 * c1**2 + g2**2 * b2**2 + 1.0)
    )
    private = capacity(
        g**2 * c1**2
        + g1**2 * c1**2 * g2**2 * b2**2 / (g**2 * c1**2 + g1**2 * c1**2 + g2**2 * b2**2 + 1.0)
    )
    return min(relay_decode, dest_decode) + private


def _combined_system(ch: OneWayChannel, p: OneWayCombinedParams) -> GaussianSystem:
    g, g1, g2 = ch.g, ch.g1, ch.g2
    a1, b1, c1, a2, b2 = p.alpha1, p.beta1, p.gamma1, p.alpha2, p.beta2
    # sources: s1, s2, s3, s4, z, zr, z'
    sysvars = {
        "ur": [1, 0, 0, 0, 0, 0, 0],
        "u": [a1, b1, 0, 0, 0, 0, 0],
        "x": [a1, b1, c1, 0, 0, 0, 0],
        "xr": [a2, 0, 0, b2, 0, 0, 0],
    }
    sysvars["y"] = [g * a1 + g2 * a2, g * b1, g * c1, g2 * b2, 1, 0, 0]
    sysvars["yr"] = [g1 * a1, g1 * b1, g1 * c1, 0, 0, 1, 0]
    if math.isfinite(p.q):
        sysvars["yhat"] = [g1 * a1, g1 * b1, g1 * c1, 0, 0, 1, math.sqrt(p.q)]
    return GaussianSystem(7, sysvars)


def combined_rate_via_engine(ch: OneWayChannel, p: OneWayCombinedParams) -> float:
    """Combined rate evaluated as the two-stream bound pair on the engine.

    The common-stream and private-stream bounds are clamped at 0
    individually before summation: a negative bound means that stream is
    infeasible, not a rate debt.
    """
    p.validate_power(ch.P)
    sys_ = _combined_system(ch, p)
    cmi = sys_.conditional_mutual_info

    common = min(
        cmi(["yr"], ["u"], ["ur", "xr"]),
        cmi(["u"], ["y"], ["ur", "xr"]) + sys_.mutual_info(["ur"], ["y"]),
    )
    if math.isfinite(p.q):
        private = min(
            cmi(["x"], ["y", "yhat"], ["u", "ur", "xr"]),
            cmi(["x", "xr"], ["y"], ["u", "ur"])
            - cmi(["yhat"], ["yr"], ["xr", "u", "ur", "x", "y"]),
        )
    else:
        private = min(
            cmi(["x"], ["y"], ["u", "ur", "xr"]),
            cmi(["x", "xr"], ["y"], ["u", "ur"]),
        )
    return max(0.0, common) + max(0.0, private)


def cutset_bound(ch: OneWayChannel) -> float:
    """Cut-set upper bound, maximized over the source-relay correlation."""
    P = ch.P

    def bound(rho: float) -> float:
        return min(
            capacity((ch.g**2 + ch.g1**2) * (1.0 - rho**2) * P),
            capacity(ch.g**2 * P + ch.g2**2 * P + 2.0 * rho * ch.g * ch.g2 * P),
        )

    _, val = golden_max(bound, 0.0, 1.0)
    return val


# -- optimized rates -------------------------------------------------------


def best_df(ch: OneWayChannel) -> tuple[float, float]:
    """(rho*, rate): step scan then golden-section refinement on [0, 1]."""
    return golden_max(lambda rho: df_rate(ch, rho), 0.0, 1.0)


def compress_forward_optimum(ch: OneWayChannel) -> tuple[float, float]:
    """Compression variance equalizing the two NNC bounds, and the resulting
    rate C(g^2 P + g1^2 P * g2^2 P / (g^2 P + g1^2 P + g2^2 P + 1))."""
    a0 = ch.g**2 * ch.P
    b0 = ch.g1**2 * ch.P
    e0 = ch.g2**2 * ch.P
    rate = capacity(a0 + b0 * e0 / (a0 + b0 + e0 + 1.0))
    qstar = (1.0 + a0 + b0) / e0 if e0 > 0 else math.inf
    return qstar, rate


def best_nnc(ch: OneWayChannel, budget: SearchBudget = DEFAULT_BUDGET) -> tuple[float, float]:
    """(q*, rate) over the log-scaled compression variance range plus the
    compression-off endpoint."""
    qstar, _ = compress_forward_optimum(ch)
    seeds = []
    if math.isfinite(qstar):
        seeds.append((min(max(qstar, Q_RANGE.lo), Q_RANGE.hi),))
    params, val = maximize(lambda x: nnc_rate(ch, x[0]), [Q_RANGE], budget, seeds=seeds)
    off = nnc_rate(ch, math.inf)
    if off > val:
        return math.inf, off
    return params[0], val


def _df_embedding(ch: OneWayChannel, rho: float) -> tuple[float, ...]:
    sP = math.sqrt(ch.P)
    return (rho * sP, math.sqrt(max(1.0 - rho**2, 0.0)) * sP, 0.0, sP, 0.0)


def _nnc_embedding(ch: OneWayChannel) -> tuple[float, ...]:
    sP = math.sqrt(ch.P)
    return (0.0, 0.0, sP, 0.0, sP)


def best_combined(
    ch: OneWayChannel, budget: SearchBudget = DEFAULT_BUDGET
) -> tuple[OneWayCombinedParams, float]:
    """Optimized closed-form combined rate.

    The search runs on the power spheres and is seeded with the optimized
    decode-forward and compress-forward operating points, both of which are
    feasible parameter settings of the combined family.
    """
    sP = math.sqrt(ch.P)
    domain = [SphereGroup(3, sP), SphereGroup(2, sP)]
    rho_star, _ = best_df(ch)
    seeds = [_df_embedding(ch, rho_star), _nnc_embedding(ch)]

    def obj(x):
        return combined_rate_closed_form(
            ch, OneWayCombinedParams(x[0], x[1], x[2], x[3], x[4])
        )

    params, val = maximize(obj, domain, budget, seeds=seeds)
    return OneWayCombinedParams(*params), val


def best_combined_via_engine(
    ch: OneWayChannel, budget: SearchBudget = DEFAULT_BUDGET
) -> tuple[OneWayCombinedParams, float]:
    """Optimized engine-evaluated combined rate (adds the Q dimension)."""
    sP = math.sqrt(ch.P)
    domain = [SphereGroup(3, sP), SphereGroup(2, sP), Q_RANGE]
    rho_star, _ = best_df(ch)
    qstar, _ = compress_forward_optimum(ch)
    qmid = min(max(qstar if math.isfinite(qstar) else Q_RANGE.hi, Q_RANGE.lo), Q_RANGE.hi)
    seeds = [
        (*_df_embedding(ch, rho_star), Q_RANGE.hi),
        (*_nnc_embedding(ch), qmid),
    ]

    def obj(x):
        return combined_rate_via_engine(
            ch, OneWayCombinedParams(x[0], x[1], x[2], x[3], x[4], q=x[5])
        )

    params, val = maximize(obj, domain, budget, seeds=seeds)
    return OneWayCombinedParams(*params[:5], q=params[5]), val


def private_stream_qstar(ch: OneWayChannel, p: OneWayCombinedParams) -> float:
    """Compression variance equalizing the two private-stream bounds."""
    e0 = ch.g2**2 * p.beta2**2
    if e0 <= 0:
        return math.inf
    return (1.0 + ch.g**2 * p.gamma1**2 + ch.g1**2 * p.gamma1**2) / e0


def best_engine_rate_for_params(
    ch: OneWayChannel, p: OneWayCombinedParams, budget: SearchBudget = DEFAULT_BUDGET
) -> float:
    """Engine-evaluated combined rate for a fixed power split, maximized over Q."""

    def obj(x):
        return combined_rate_via_engine(
            ch,
            OneWayCombinedParams(p.alpha1, p.beta1, p.gamma1, p.alpha2, p.beta2, q=x[0]),
        )

    qstar = private_stream_qstar(ch, p)
    seeds = []
    if math.isfinite(qstar):
        seeds.append((min(max(qstar, Q_RANGE.lo), Q_RANGE.hi),))
    _, val = maximize(obj, [Q_RANGE], budget, seeds=seeds)
    return val
