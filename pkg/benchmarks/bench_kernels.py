"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Prints per-call time for each kernel under both backends and the speedup.
Exits non-zero if the two backends disagree on any output.
"""
from __future__ import annotations

import argparse
import sys
import timeit

import numpy as np

from poisonlab import kernels
from poisonlab.env import CELL_H, CELL_W, H_PX, PADDLE_W, ROWS, W_PX


def cases(rng: np.random.Generator) -> dict:
    T = 2048
    rewards = rng.choice([-1.0, 0.0, 1.0], size=T, p=[0.02, 0.96, 0.02])
    values = rng.normal(size=T)
    dones = (rng.random(T) < 0.01).astype(np.float64)
    img = rng.random(H_PX * W_PX)
    pixels = (img * 255).astype(np.uint8).tobytes()
    x = rng.random((102, H_PX * W_PX))
    g = rng.normal(size=x.shape)
    center = x.copy()
    out = np.zeros((H_PX, W_PX))
    return {
        "fnv1a64 (576 B)": lambda k: k.fnv1a64(pixels),
        "gae (T=2048)": lambda k: k.gae(rewards, values, dones, 0.3, 0.99, 0.95),
        "render (24x24)": lambda k: k.render(out, 3, PADDLE_W, 5, 4, True, ROWS, CELL_W, CELL_H,
                                             1.0, 170 / 255),
        "sign_step_project (102x576)": lambda k: k.sign_step_project(x, g, center, 1 / 255, 8 / 255),
    }


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if kernels.compiled_impl is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1
    rng = np.random.default_rng(0)
    bad = 0
    print(f"{'kernel':<30}{'python':>12}{'compiled':>12}{'speedup':>10}")
    for name, fn in cases(rng).items():
        py, c = kernels.python_impl, kernels.compiled_impl
        ok = _same(fn(py), fn(c))
        bad += not ok
        times = []
        for impl in (py, c):
            t = timeit.Timer(lambda: fn(impl))
            n, _ = t.autorange()
            times.append(min(t.repeat(args.repeat, n)) / n)
        flag = "" if ok else "  MISMATCH"
        print(f"{name:<30}{times[0] * 1e6:>10.1f}us{times[1] * 1e6:>10.1f}us{times[0] / times[1]:>9.1f}x{flag}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
