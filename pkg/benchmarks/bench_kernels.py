"""Benchmark the compiled log-pseudo-det kernel against the numpy fallback.

Runs itself twice in subprocesses (RELAYRATES_PURE=1 forces the fallback)
and reports per-call timings for the raw kernel, a full two-way
constraint-set evaluation, and a one-way NNC rate evaluation.

    python3 benchmarks/bench_kernels.py
"""

import json
import math
import os
import subprocess
import sys
import time

import numpy as np


def time_call(fn, min_seconds=0.4):
    fn()  # warm up
    n = 1
    while True:
        start = time.perf_counter()
        for _ in range(n):
            fn()
        elapsed = time.perf_counter() - start
        if elapsed >= min_seconds:
            return elapsed / n
        n *= 2


def run_lane():
    from relayrates import TwoWayChannel, kernel_name, nnc_rate, oneway_from_geometry
    from relayrates.channels import LineGeometry
    from relayrates.kernels import lpdet_rank
    from relayrates.twrc import TwrcEvaluator, TwrcParams, build_signaling

    rng = np.random.default_rng(1)
    m = rng.standard_normal((12, 14))
    gram = np.ascontiguousarray(m @ m.T)
    idx = np.arange(12, dtype=np.int64)

    ch = TwoWayChannel(g12=1.0, g1r=2.0, g21=0.5, g2r=3.0, gr1=6.0, gr2=2.0, P=3.0)
    evaluator = TwrcEvaluator(ch)
    u = math.sqrt(3.0 / 4.0)
    r = math.sqrt(3.0 / 5.0)
    params = TwrcParams(u, u, u, u, u, u, u, u, r, r, r, r, r, qhat=1.0, qtilde=1.0)

    ow = oneway_from_geometry(LineGeometry(0.4, 3.0), 10.0)

    def constraint_eval():
        system = build_signaling(ch, params)
        evaluator.constraint_values(system, False)
        evaluator.constraint_values(system, True)

    results = {
        "kernel": kernel_name(),
        "lpdet 12x12 (us)": time_call(lambda: lpdet_rank(gram, idx, 1e-12)) * 1e6,
        "twrc constraint set (ms)": time_call(constraint_eval) * 1e3,
        "oneway nnc rate (us)": time_call(lambda: nnc_rate(ow, 1.7)) * 1e6,
    }
    print(json.dumps(results))


def main():
    here = os.path.abspath(__file__)
    lanes = []
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("RELAYRATES_PURE", None)
        if pure:
            env["RELAYRATES_PURE"] = "1"
        out = subprocess.run(
            [sys.executable, here, "--lane"], env=env, capture_output=True, text=True, check=True
        )
        lanes.append(json.loads(out.stdout.strip().splitlines()[-1]))

    keys = [k for k in lanes[0] if k != "kernel"]
    width = max(len(k) for k in keys) + 2
    header = f"{'benchmark':<{width}}" + "".join(f"{lane['kernel']:>16}" for lane in lanes)
    print(header)
    print("-" * len(header))
    for key in keys:
        row = f"{key:<{width}}"
        for lane in lanes:
            row += f"{lane[key]:>16.2f}"
        print(row)
    print("-" * len(header))
    speedups = " ".join(
        f"{key}: {lanes[1][key] / lanes[0][key]:.1f}x" for key in keys
    )
    print(f"speedup (pure-python / compiled): {speedups}")


if __name__ == "__main__":
    if "--lane" in sys.argv:
        run_lane()
    else:
        main()
