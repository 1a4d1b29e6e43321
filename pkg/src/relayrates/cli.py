"""Command-line experiments: rate sweeps and region tables as CSV.

Three experiments:

    oneway-sweep    columns d,df,nnc,combined,cutset over relay positions
    twrc-sum-sweep  columns d,rankov_df,xie_df,lnnc,combined
    twrc-region     columns scheme,vertex_index,r1,r2 on a fixed-gain channel

Configuration comes from an optional key=value text file plus flag
overrides.  Nothing is randomized, so reruns with the same configuration
are byte-identical.  Exit codes: 0 success, 2 configuration error, 3 I/O
error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields, replace

from .channels import LineGeometry, TwoWayChannel, oneway_from_geometry, twrc_from_geometry
from .oneway import best_combined, best_df, best_nnc, cutset_bound
from .search import SearchBudget, TWRC_COMBINED_BUDGET
from .twrc import DEFAULT_WEIGHTS, SCHEME_NAMES, twrc_all_regions, twrc_sum_rates

EXPERIMENTS = ("oneway-sweep", "twrc-sum-sweep", "twrc-region")


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str = "oneway-sweep"
    p: float = 10.0
    gamma: float = 3.0
    d_min: float = 0.05
    d_max: float = 0.95
    d_steps: int = 21
    # Explicit gains for the region experiment (relay strongly heard by
    # user 1, asymmetric direct links).
    g12: float = 1.0
    g21: float = 0.5
    g1r: float = 2.0
    g2r: float = 3.0
    gr1: float = 6.0
    gr2: float = 2.0
    coarse_steps: int = 9
    refine_rounds: int = 4
    combined_coarse_steps: int = TWRC_COMBINED_BUDGET.coarse_steps
    combined_refine_rounds: int = TWRC_COMBINED_BUDGET.refine_rounds
    jobs: int = 0  # 0 = available parallelism
    out: str = ""

    def validate(self) -> None:
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(f"unknown experiment {self.experiment!r}")
        if not self.p > 0:
            raise ConfigError("p must be positive")
        if self.gamma < 0:
            raise ConfigError("gamma must be >= 0")
        if self.experiment != "twrc-region":
            if not (0.0 < self.d_min <= self.d_max < 1.0):
                raise ConfigError("d range must satisfy 0 < d_min <= d_max < 1")
            if self.d_steps < 2:
                raise ConfigError("d_steps must be >= 2")
        if self.coarse_steps < 2 or self.combined_coarse_steps < 2:
            raise ConfigError("coarse steps must be >= 2")
        if self.refine_rounds < 0 or self.combined_refine_rounds < 0:
            raise ConfigError("refine rounds must be >= 0")
        if self.jobs < 0:
            raise ConfigError("jobs must be >= 0")

    def budget(self) -> SearchBudget:
        return SearchBudget(coarse_steps=self.coarse_steps, refine_rounds=self.refine_rounds)

    def combined_budget(self) -> SearchBudget:
        return SearchBudget(
            coarse_steps=self.combined_coarse_steps,
            refine_rounds=self.combined_refine_rounds,
        )


_FIELDS = {f.name: f.type for f in fields(ExperimentConfig)}


def _coerce(key: str, raw: str):
    key = key.replace("-", "_")
    if key not in _FIELDS:
        raise ConfigError(f"unknown config key {key!r}")
    if key in ("experiment", "out"):
        return key, raw
    if key in ("d_steps", "coarse_steps", "refine_rounds", "jobs",
               "combined_coarse_steps", "combined_refine_rounds"):
        try:
            return key, int(raw)
        except ValueError:
            raise ConfigError(f"config key {key!r} needs an integer, got {raw!r}") from None
    try:
        return key, float(raw)
    except ValueError:
        raise ConfigError(f"config key {key!r} needs a number, got {raw!r}") from None


def load_config_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    out = {}
    for lineno, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line.strip()!r}")
        key, raw = (part.strip() for part in text.split("=", 1))
        k, v = _coerce(key, raw)
        out[k] = v
    return out


def format_value(x: float) -> str:
    """Fixed (non-scientific) notation with 6 significant digits."""
    if x == 0:
        return "0"
    if not math.isfinite(x):
        return "inf" if x > 0 else "-inf"
    exponent = math.floor(math.log10(abs(x)))
    decimals = max(0, 5 - exponent)
    text = f"{x:.{decimals}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text or "0"


def _d_grid(cfg: ExperimentConfig) -> list[float]:
    if cfg.d_steps == 1:
        return [cfg.d_min]
    step = (cfg.d_max - cfg.d_min) / (cfg.d_steps - 1)
    return [cfg.d_min + i * step for i in range(cfg.d_steps)]


def _oneway_point(args) -> list[float]:
    d, p, gamma, budget = args
    ch = oneway_from_geometry(LineGeometry(d, gamma), p)
    _, df = best_df(ch)
    _, nnc = best_nnc(ch, budget)
    _, combined = best_combined(ch, budget)
    combined = max(combined, df, nnc)
    return [d, df, nnc, combined, cutset_bound(ch)]


def _twrc_sum_point(args) -> list[float]:
    d, p, gamma, budget, combined_budget = args
    ch = twrc_from_geometry(LineGeometry(d, gamma), p)
    sums = twrc_sum_rates(ch, budget, combined_budget)
    return [d] + [sums[name] for name in SCHEME_NAMES]


def _run_pool(worker, tasks, jobs: int):
    if jobs == 0:
        jobs = os.cpu_count() or 1
    jobs = min(jobs, len(tasks))
    if jobs <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def run_oneway_sweep(cfg: ExperimentConfig) -> list[str]:
    tasks = [(d, cfg.p, cfg.gamma, cfg.budget()) for d in _d_grid(cfg)]
    rows = _run_pool(_oneway_point, tasks, cfg.jobs)
    lines = ["d,df,nnc,combined,cutset"]
    lines += [",".join(format_value(v) for v in row) for row in rows]
    return lines

def run_twrc_sum_sweep(cfg: ExperimentConfig) -> list[str]:
    tasks = [(d, cfg.p, cfg.gamma, cfg.budget(), cfg.combined_budget()) for d in _d_grid(cfg)]
    rows = _run_pool(_twrc_sum_point, tasks, cfg.jobs)
    lines = ["d," + ",".join(SCHEME_NAMES)]
    lines += [",".join(format_value(v) for v in row) for row in rows]
    return lines


def region_channel(cfg: ExperimentConfig) -> TwoWayChannel:
    return TwoWayChannel(
        g12=cfg.g12, g1r=cfg.g1r, g21=cfg.g21,
        g2r=cfg.g2r, gr1=cfg.gr1, gr2=cfg.gr2, P=cfg.p,
    )


def run_twrc_region(cfg: ExperimentConfig) -> list[str]:
    regions = twrc_all_regions(
        region_channel(cfg),
        budget=cfg.budget(),
        combined_budget=cfg.combined_budget(),
        weights=DEFAULT_WEIGHTS,
    )
    lines = ["scheme,vertex_index,r1,r2"]
    for name in SCHEME_NAMES:
        for i, (r1, r2) in enumerate(regions[name].vertices):
            lines.append(f"{name},{i},{format_value(r1)},{format_value(r2)}")
    return lines


_RUNNERS = {
    "oneway-sweep": run_oneway_sweep,
    "twrc-sum-sweep": run_twrc_sum_sweep,
    "twrc-region": run_twrc_region,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="relayrates",
        description="Relay-channel achievable-rate experiments (CSV output).",
    )
    ap.add_argument("--config", help="key=value config file")
    ap.add_argument("--experiment", choices=EXPERIMENTS)
    ap.add_argument("--p", type=float, help="per-node power budget")
    ap.add_argument("--gamma", type=float, help="path-loss exponent")
    ap.add_argument("--d-min", type=float, dest="d_min")
    ap.add_argument("--d-max", type=float, dest="d_max")
    ap.add_argument("--d-steps", type=int, dest="d_steps")
    ap.add_argument("--coarse-steps", type=int, dest="coarse_steps")
    ap.add_argument("--refine-rounds", type=int, dest="refine_rounds")
    ap.add_argument("--jobs", type=int, help="worker processes (0 = all cores)")
    ap.add_argument("--out", help="output CSV path (default <experiment>.csv)")
    return ap


def resolve_config(argv) -> ExperimentConfig:
    ns = build_parser().parse_args(argv)
    cfg = ExperimentConfig()
    if ns.config:
        cfg = replace(cfg, **load_config_file(ns.config))
    overrides = {
        key: getattr(ns, key)
        for key in ("experiment", "p", "gamma", "d_min", "d_max", "d_steps",
                    "coarse_steps", "refine_rounds", "jobs", "out")
        if getattr(ns, key) is not None
    }
    cfg = replace(cfg, **overrides)
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    try:
        cfg = resolve_config(argv)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    lines = _RUNNERS[cfg.experiment](cfg)
    out = cfg.out or f"{cfg.experiment}.csv"
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
