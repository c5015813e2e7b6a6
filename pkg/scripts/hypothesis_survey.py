"""Tabulate which hypothesis set guarantees Pfaffian = tableau sum.

Two candidate hypothesis sets are compared on every flagged strict
partition in the grid:

* ``ordered``: lambda_i - f_i weakly decreasing and lambda_{r-1} > f_{r-1}
  (what the library enforces);
* ``increasing``: lambda_i - f_i positive and weakly increasing.

Usage: python scripts/hypothesis_survey.py --max-lambda 5 --max-rows 3 --max-flag 3 --nx 2
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from flagq.pfaffian import pfaffian_hypothesis_violation, q_flagged_pfaffian
from flagq.suites import GridConfig, flagged_shapes, increasing_hypothesis
from flagq.shapes_tableaux import q_flagged_tableau


@dataclass
class SurveyConfig:
    max_lambda: int = 5
    max_rows: int = 3
    max_flag: int = 3
    n_x: int = 2
    show: int = 5


def survey(cfg: SurveyConfig):
    table = Counter()
    counterexamples = []
    for sh in flagged_shapes(GridConfig(cfg.max_lambda, cfg.max_rows, cfg.max_flag)):
        eq = q_flagged_tableau(sh, cfg.n_x) == q_flagged_pfaffian(sh, cfg.n_x, checked=False)
        ordered = pfaffian_hypothesis_violation(sh) is None
        increasing = increasing_hypothesis(sh)
        table[ordered, increasing, eq] += 1
        if increasing and not eq:
            counterexamples.append(sh)
    return table, counterexamples


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-lambda", type=int, default=5)
    ap.add_argument("--max-rows", type=int, default=3)
    ap.add_argument("--max-flag", type=int, default=3)
    ap.add_argument("--nx", type=int, default=2)
    ap.add_argument("--show", type=int, default=5, help="counterexamples to print")
    a = ap.parse_args()
    cfg = SurveyConfig(a.max_lambda, a.max_rows, a.max_flag, a.nx, a.show)
    table, bad = survey(cfg)
    print(f"{'ordered':>8} {'increasing':>10} {'equal':>6} {'count':>6}")
    for (o, i, e), n in sorted(table.items(), reverse=True):
        print(f"{o!s:>8} {i!s:>10} {e!s:>6} {n:>6}")
    print(f"\nshapes meeting 'increasing' where the formula fails: {len(bad)}")
    for sh in bad[: cfg.show]:
        print(f"  lambda={sh.lam} f={sh.flag}")


if __name__ == "__main__":
    main()
