"""Benchmark the compiled elimination kernel against the pure-Python
fallback.

Run as a script: it re-executes itself in two subprocesses, once with
the default backend and once with BRMULT_PURE=1, and prints a
side-by-side table.  Pass --child to run the workloads in the current
process only (this is what the subprocesses do).

Workloads:
  echelon    dense random row insertions into one Echelon
  kernel     kernel basis of a random wide matrix
  colength   certified colength of powers of the maximal ideal
  report     full invariant report of a worked-example module
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time


def _workloads():
    from brmult import family_Mabc
    from brmult.engine import certified_colength
    from brmult.ideals import Ideal, power
    from brmult.linalg import BACKEND, kernel_basis, new_echelon
    from brmult.report import report

    rng = random.Random(7)
    out = {"backend": BACKEND}

    t = time.monotonic()
    ech = new_echelon(500)
    for _ in range(600):
        ech.insert([rng.randrange(0, 1 << 31) for _ in range(500)])
    out["echelon"] = time.monotonic() - t

    t = time.monotonic()
    rows = [[rng.randrange(0, 1 << 31) for _ in range(400)] for _ in range(250)]
    kernel_basis(rows, 400)
    out["kernel"] = time.monotonic() - t

    t = time.monotonic()
    m = Ideal.parse("x, y")
    for k in (10, 14, 18):
        certified_colength([(g,) for g in power(m, k).gens], ambient_rank=1)
    out["colength"] = time.monotonic() - t

    t = time.monotonic()
    M, _ = family_Mabc(2, 4, 3)
    report(M)
    out["report"] = time.monotonic() - t

    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--child", action="store_true")
    args = ap.parse_args()

    if args.child:
        print(json.dumps(_workloads()))
        return

    results = []
    for pure in ("", "1"):
        env = dict(os.environ, BRMULT_PURE=pure)
        if not pure:
            env.pop("BRMULT_PURE")
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--child"],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        results.append(json.loads(proc.stdout.strip().splitlines()[-1]))

    fast, slow = results
    names = [k for k in fast if k != "backend"]
    print(f"{'workload':<10} {fast['backend']:>10} {slow['backend']:>10} {'speedup':>8}")
    for k in names:
        ratio = slow[k] / fast[k] if fast[k] else float("inf")
        print(f"{k:<10} {fast[k]:>9.3f}s {slow[k]:>9.3f}s {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
