"""Gaussian relay channel definitions and the line-geometry gain model.

Noise variances are normalized to 1 and a single power budget P applies to
every transmitting node, so channels are fully described by their gains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _check_gains(**gains: float) -> None:
    for name, g in gains.items():
        if not math.isfinite(g):
            raise ValueError(f"gain {name} must be finite, got {g!r}")


@dataclass(frozen=True)
class OneWayChannel:
    """Source -> destination link with gain g, relay links g1 (in), g2 (out)."""

    g: float
    g1: float
    g2: float
    P: float

    def __post_init__(self):
        _check_gains(g=self.g, g1=self.g1, g2=self.g2)
        if not (math.isfinite(self.P) and self.P > 0):
            raise ValueError(f"power budget must be positive, got {self.P!r}")


@dataclass(frozen=True)
class TwoWayChannel:
    """Two users exchanging messages through a relay.

    gij is the gain from node j's signal into node i's receiver; r denotes
    the relay (g1r: relay->user1, gr1: user1->relay, etc.).
    """

    g12: float
    g1r: float
    g21: float
    g2r: float
    gr1: float
    gr2: float
    P: float

    def __post_init__(self):
        _check_gains(g12=self.g12, g1r=self.g1r, g21=self.g21,
                     g2r=self.g2r, gr1=self.gr1, gr2=self.gr2)
        if not (math.isfinite(self.P) and self.P > 0):
            raise ValueError(f"power budget must be positive, got {self.P!r}")


@dataclass(frozen=True)
class LineGeometry:
    """Relay at distance d from the source on a unit line, path-loss exponent gamma."""

    d: float
    gamma: float

    def __post_init__(self):
        if not (0.0 < self.d < 1.0):
            raise ValueError(f"relay position d must lie in (0, 1), got {self.d!r}")
        if self.gamma < 0:
            raise ValueError(f"path-loss exponent must be >= 0, got {self.gamma!r}")


def oneway_from_geometry(geom: LineGeometry, P: float) -> OneWayChannel:
    """Unit direct gain; relay gains follow the d^(-gamma/2) power law."""
    return OneWayChannel(
        g=1.0,
        g1=geom.d ** (-geom.gamma / 2.0),
        g2=(1.0 - geom.d) ** (-geom.gamma / 2.0),
        P=P,
    )


def twrc_from_geometry(geom: LineGeometry, P: float) -> TwoWayChannel:
    """Unit direct gains; both relay links on each side share the power-law gain."""
    near = geom.d ** (-geom.gamma / 2.0)
    far = (1.0 - geom.d) ** (-geom.gamma / 2.0)
    return TwoWayChannel(g12=1.0, g21=1.0, gr1=near, g1r=near, gr2=far, g2r=far, P=P)
