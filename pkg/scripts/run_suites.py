"""Run verification suites and print one timing line per suite.

Usage: python scripts/run_suites.py [suite ...] [--threads N]
"""

from __future__ import annotations

import argparse
import time

from flagq.suites import SUITES, run_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("suites", nargs="*", default=sorted(SUITES))
    ap.add_argument("--threads", type=int, default=1)
    a = ap.parse_args()
    width = max(map(len, a.suites))
    bad = 0
    for name in a.suites:
        t0 = time.perf_counter()
        rep = run_suite(name, threads=a.threads)
        dt = time.perf_counter() - t0
        n, f = len(rep.results), len(rep.failures)
        bad += bool(f)
        print(f"{name:<{width}}  {n - f:>6}/{n:<6} {dt:7.1f}s  {rep.suite.locus}", flush=True)
        for key, _, detail in rep.failures[:5]:
            print(f"{'':<{width}}  FAIL {key!r} {detail}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
