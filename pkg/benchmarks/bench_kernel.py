"""Compare the compiled polynomial kernel against the pure-Python fallback.

Runs the same workloads twice in subprocesses, once per backend (selected
via SONJ_PURE_KERNEL), and prints a small table.  Usage:

    python benchmarks/bench_kernel.py
"""

import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time
from sonj import kernel
from sonj.rational import Rat

def rand_coeffs(rng, deg):
    return [Rat(rng.randrange(-99, 100), rng.randrange(1, 20)) for _ in range(deg + 1)]

results = {"backend": kernel.KERNEL_BACKEND}

rng = random.Random(42)
polys = [rand_coeffs(rng, 40) for _ in range(40)]
t0 = time.perf_counter()
for a in polys:
    for b in polys[:10]:
        kernel.mul(a, b)
results["mul deg-40 (400x)"] = time.perf_counter() - t0

rng = random.Random(43)
pairs = []
for _ in range(30):
    g = rand_coeffs(rng, 6)
    pairs.append((kernel.mul(g, rand_coeffs(rng, 12)), kernel.mul(g, rand_coeffs(rng, 12))))
t0 = time.perf_counter()
for a, b in pairs:
    kernel.gcd_monic(a, b)
results["gcd deg-18 (30x)"] = time.perf_counter() - t0

from sonj.coupling import CouplingLabels, i_alpha
t0 = time.perf_counter()
i_alpha(CouplingLabels(3, 3, 4, 4, 4, 3))
results["symbolic I(3,3,4|4,4,3)"] = time.perf_counter() - t0

print(json.dumps(results))
"""


def run(pure):
    env = dict(os.environ, SONJ_PURE_KERNEL="1" if pure else "0")
    out = subprocess.run(
        [sys.executable, "-c", WORKER], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(out.stdout.splitlines()[-1])


def main():
    compiled = run(pure=False)
    pure = run(pure=True)
    if compiled["backend"] != "compiled":
        print("note: compiled kernel unavailable, comparing pure against itself")
    print(f"{'workload':<28}{'compiled':>12}{'pure':>12}{'speedup':>10}")
    for key in compiled:
        if key == "backend":
            continue
        c, p = compiled[key], pure[key]
        print(f"{key:<28}{c:>11.4f}s{p:>11.4f}s{p / c:>9.2f}x")


if __name__ == "__main__":
    main()
