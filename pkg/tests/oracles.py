"""Independent oracles shared by the test modules.

Everything here deliberately avoids the library's own entropy/MI code
paths: Monte-Carlo plug-in estimates use sample covariances and slogdet,
the polytope area oracle scans feasibility column by column, and random
inputs come from seeded generators.
"""

from __future__ import annotations

import math

import numpy as np

from relayrates.channels import OneWayChannel
from relayrates.gaussian import GaussianSystem
from relayrates.regions import RatePolytope

LN2 = math.log(2.0)


def random_system(rng: np.random.Generator, n_vars: int, n_sources: int) -> GaussianSystem:
    """Full-rank random system (regenerates on poor conditioning)."""
    assert n_vars <= n_sources
    while True:
        m = rng.standard_normal((n_vars, n_sources))
        w = np.linalg.eigvalsh(m @ m.T)
        if w[0] > 1e-3 * w[-1]:
            break
    return GaussianSystem(n_sources, {f"v{i}": m[i] for i in range(n_vars)})


def random_oneway_channel(rng: np.random.Generator) -> OneWayChannel:
    g, g1, g2 = 10.0 ** rng.uniform(-1.0, 0.7, size=3)
    p = 10.0 ** rng.uniform(-0.3, 1.3)
    return OneWayChannel(g=g, g1=g1, g2=g2, P=p)


def mc_mutual_info(
    system: GaussianSystem,
    a: list[str],
    b: list[str],
    c: list[str],
    rng: np.random.Generator,
    total_draws: int = 1_000_000,
    batches: int = 10,
) -> tuple[float, float]:
    """Sample-covariance plug-in estimate of I(A;B|C) in bits.

    Returns (mean, standard error) over independent batches.
    """
    names = {n: i for i, n in enumerate(system.names)}
    ia = [names[n] for n in a]
    ib = [names[n] for n in b]
    ic = [names[n] for n in c]
    ac = sorted(set(ia) | set(ic))
    bc = sorted(set(ib) | set(ic))
    abc = sorted(set(ia) | set(ib) | set(ic))
    cc = sorted(set(ic))
    m = system._matrix
    per_batch = total_draws // batches

    def logdet(cov, idx):
        if not idx:
            return 0.0
        _, val = np.linalg.slogdet(cov[np.ix_(idx, idx)])
        return val

    estimates = []
    for _ in range(batches):
        z = rng.standard_normal((system.source_count, per_batch))
        x = m @ z
        cov = (x @ x.T) / per_batch
        est = 0.5 * (
            logdet(cov, ac) + logdet(cov, bc) - logdet(cov, abc) - logdet(cov, cc)
        ) / LN2
        estimates.append(est)
    arr = np.asarray(estimates)
    return float(arr.mean()), float(arr.std(ddof=1) / math.sqrt(batches))


def polytope_area_scan(p: RatePolytope, resolution: float = 1e-2) -> float:
    """Area of the feasible set by columnwise feasibility scan.

    For each R1 grid column the exact feasible R2 extent is computed from
    the constraints and integrated by the trapezoid rule.  The scan ends
    exactly at the binding R1 bound, so the only integration error is
    O(resolution^2) at interior constraint kinks.
    """
    r1_max = min(
        (c / a for a, b, c in p.constraints if b == 0 and math.isfinite(c)),
        default=None,
    )
    assert r1_max is not None, "scan oracle needs an explicit R1 bound"

    def ymax(x: float) -> float:
        best = math.inf
        for a, b, c in p.constraints:
            if b > 0 and math.isfinite(c):
                best = min(best, (c - a * x) / b)
        return best

    n = max(int(math.ceil(r1_max / resolution)), 1)
    xs = [r1_max * i / n for i in range(n + 1)]
    ys = [max(0.0, min(ymax(x), 1e18)) for x in xs]
    area = 0.0
    for i in range(n):
        area += 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i])
    return area
