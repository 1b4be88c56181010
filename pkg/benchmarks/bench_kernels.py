"""Numba loop kernels vs numpy fallbacks.

Two views:

* kernel level: each ``*_loops`` kernel against its ``*_np`` twin on the
  same inputs, in one process (compile time excluded by a warm-up call);
* end to end: a few library calls timed in fresh processes, with and
  without ``NEUTRO_DISABLE_NUMBA=1``.

    python3 benchmarks/bench_kernels.py [--repeat N] [--skip-e2e]
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from neutrosophic import kernels


def sorted_triples(rng, shape):
    a = rng.random(shape + (3, 2))
    a.sort(axis=-1)
    return a.reshape(shape + (6,))


def cases(rng):
    """name -> (args tuple) sized so each call takes well over timer resolution."""
    k = 4
    a = rng.integers(0, k + 1, size=(625, 4)).astype(np.int64)
    b = rng.integers(0, k + 1, size=(625, 4)).astype(np.int64)
    ia = np.array([0, 0, 1, 1, 2, 2, 3, 3], dtype=np.int64)
    ib = np.array([0, 1, 2, 3, 0, 1, 2, 3], dtype=np.int64)
    big = rng.integers(0, k + 1, size=(200_000, 8)).astype(np.int64)
    x = np.linspace(0.0, 10.0, 2001)
    return {
        "compose": (sorted_triples(rng, (40, 60)), sorted_triples(rng, (60, 40))),
        "fire_aggregate": (sorted_triples(rng, (16,)), sorted_triples(rng, (16, 2001))),
        "trapezoid": (rng.random(2001), x),
        "grid_convex": (sorted_triples(rng, (2001,)), False),
        "image_binary": (a, b, ia, ib, kernels.OP_MIN, k),
        "image_project": (big, np.array([0, 0, 1, 1, 2, 2, 3, 3], dtype=np.int64), 4),
        "encode_rows": (big, k + 1),
    }


def bench_kernels(repeat):
    rng = np.random.default_rng(0)
    print(f"{'kernel':<16}{'numba (ms)':>12}{'numpy (ms)':>12}{'speedup':>10}")
    for name, args in cases(rng).items():
        loops, vec = getattr(kernels, name + "_loops"), getattr(kernels, name + "_np")
        loops(*args)  # compile / load from cache
        t_loops = min(timeit.repeat(lambda: loops(*args), number=1, repeat=repeat))
        t_vec = min(timeit.repeat(lambda: vec(*args), number=1, repeat=repeat))
        print(f"{name:<16}{t_loops * 1e3:>12.3f}{t_vec * 1e3:>12.3f}{t_vec / t_loops:>9.1f}x")


E2E = """
import random, time
from neutrosophic import inls, kernels
from neutrosophic.nrdm.relation import NeutroRelation, Scheme
from neutrosophic.nrdm.reps import strong_gen_check
from importlib import resources
ab = ("a", "b")
XY, YZ = Scheme.of(X=ab, Y=ab), Scheme.of(Y=ab, Z=ab)
rb = inls.parse_rulebase((resources.files("neutrosophic") / "demos" / "inls" / "two_rules.rules").read_text())
r = NeutroRelation(XY, {t: (0, 0) for t in XY.tau()})
s = NeutroRelation(YZ, {t: (0, 0) for t in YZ.tau()})
w = NeutroRelation(XY, {t: (0.5, 0.5) for t in XY.tau()})
inls.run_inference(rb, [4.5, 5]); strong_gen_check("union", w, w, k=2)  # warm-up
t = time.perf_counter()
for _ in range(50):
    inls.run_inference(rb, [4.5, 5])
t_inls = (time.perf_counter() - t) / 50
t = time.perf_counter()
strong_gen_check("join", r, s, k=4)
t_join = time.perf_counter() - t
print(kernels.BACKEND, t_inls, t_join)
"""


def bench_end_to_end():
    print()
    print(f"{'backend':<10}{'inference (ms)':>16}{'join check k=4 (s)':>20}")
    for flag in (None, "1"):
        env = dict(os.environ)
        env.pop("NEUTRO_DISABLE_NUMBA", None)
        if flag:
            env["NEUTRO_DISABLE_NUMBA"] = flag
        out = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True, check=True)
        backend, t_inls, t_join = out.stdout.split()
        print(f"{backend:<10}{float(t_inls) * 1e3:>16.3f}{float(t_join):>20.3f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-e2e", action="store_true", help="kernel-level timings only")
    args = ap.parse_args()
    bench_kernels(args.repeat)
    if not args.skip_e2e:
        bench_end_to_end()


if __name__ == "__main__":
    main()
