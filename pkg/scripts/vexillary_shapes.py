"""List essential triples whose flagged shape breaks the Pfaffian hypotheses.

For each such triple the script shows the shape from the minimal filling,
the failed inequality, and whether the unchecked Pfaffian still equals the
tableau sum.

Usage: python scripts/vexillary_shapes.py --max-k 3 --max-p 4 --max-q 4 --nx 2
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from flagq.vexillary import essential_triples, schubert_vexillary, triple_hypothesis_report, triple_shape


@dataclass
class TripleGrid:
    max_k: int = 3
    max_p: int = 4
    max_q: int = 4
    n_x: int = 2


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=3)
    ap.add_argument("--max-p", type=int, default=4)
    ap.add_argument("--max-q", type=int, default=4)
    ap.add_argument("--nx", type=int, default=2)
    a = ap.parse_args()
    g = TripleGrid(a.max_k, a.max_p, a.max_q, a.nx)
    triples = list(essential_triples(g.max_k, g.max_p, g.max_q))
    flagged = 0
    for t in triples:
        why = triple_hypothesis_report(t)
        if not why:
            continue
        flagged += 1
        sh = triple_shape(t)
        same = schubert_vexillary(t, g.n_x, "pfaffian") == schubert_vexillary(t, g.n_x, "tableau")
        print(f"k={t.k} p={t.p} q={t.q}  shape {sh.lam}/{sh.flag}  {why}  routes agree: {same}")
    print(f"{flagged} of {len(triples)} essential triples fall outside the hypotheses")


if __name__ == "__main__":
    main()
