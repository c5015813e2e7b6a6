"""Triples (k, p, q) for vexillary signed permutations and their polynomials.

A triple is the canonical handle on a vexillary element here; the
signed permutation itself is never built.  Everything downstream depends
only on the flagged strict partition attached to the essential triple.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .pfaffian import pfaffian_hypothesis_violation, q_flagged_pfaffian
from .polyring import Polynomial
from .shapes_tableaux import FlaggedStrictPartition, monomial_tableau_sum, q_flagged_tableau


@dataclass(frozen=True)
class Triple:
    k: tuple[int, ...]
    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self):
        k, p, q = (tuple(int(v) for v in t) for t in (self.k, self.p, self.q))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        if not (len(k) == len(p) == len(q)):
            raise ValueError("k, p, q must have equal length")
        if not k:
            raise ValueError("empty triple")
        if k[0] < 1 or any(a >= b for a, b in zip(k, k[1:])):
            raise ValueError(f"k must be strictly increasing positive integers: {k}")
        for name, seq in (("p", p), ("q", q)):
            if seq[-1] < 1 or any(a < b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{name} must be weakly decreasing positive integers: {seq}")
        for i in range(len(k) - 1):
            if self.slack(i) < 0:
                raise ValueError(
                    f"k_{i+2} - k_{i+1} <= p_{i+1} - p_{i+2} + q_{i+1} - q_{i+2} fails for {self}"
                )

    def slack(self, i: int) -> int:
        """(p_i - p_{i+1}) + (q_i - q_{i+1}) - (k_{i+1} - k_i), 0-based i."""
        k, p, q = self.k, self.p, self.q
        return (p[i] - p[i + 1]) + (q[i] - q[i + 1]) - (k[i + 1] - k[i])

    def __len__(self) -> int:
        return len(self.k)

    def is_essential(self) -> bool:
        return all(self.slack(i) > 0 for i in range(len(self) - 1))

    def drop(self, i: int) -> Triple:
        return Triple(
            self.k[:i] + self.k[i + 1:], self.p[:i] + self.p[i + 1:], self.q[:i] + self.q[i + 1:]
        )

    def to_json_obj(self) -> dict:
        return {"k": list(self.k), "p": list(self.p), "q": list(self.q)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> Triple:
        return cls(tuple(obj["k"]), tuple(obj["p"]), tuple(obj["q"]))


def reduce_to_essential(t: Triple, order: Sequence[int] | None = None) -> Triple:
    """Remove positions where the triple inequality is tight until none remain.

    ``order`` optionally ranks positions for removal (used to test that the
    result does not depend on the order); by default the leftmost tight
    position goes first.
    """
    ids = list(range(len(t)))
    rank = {i: n for n, i in enumerate(order)} if order is not None else None
    while True:
        tight = [n for n in range(len(t) - 1) if t.slack(n) == 0]
        if not tight:
            return t
        n = min(tight, key=lambda n: rank[ids[n]]) if rank else tight[0]
        t = t.drop(n)
        del ids[n]


def triples_equivalent(t1: Triple, t2: Triple) -> bool:
    return reduce_to_essential(t1) == reduce_to_essential(t2)


def invert_triple(t: Triple) -> Triple:
    """(k, p, q) -> (k, q, p); the triple of the inverse element."""
    return Triple(t.k, t.q, t.p)


def lagrangian_triple(q: Sequence[int]) -> Triple:
    """Triple ((1..r), (1,..,1), q) of the Lagrangian element with -w(i) = q_i."""
    q = tuple(int(v) for v in q)
    if not q or q[-1] < 1 or any(a <= b for a, b in zip(q, q[1:])):
        raise ValueError(f"expected strictly decreasing positive values, got {q}")
    r = len(q)
    return Triple(tuple(range(1, r + 1)), (1,) * r, q)


def shape_from_triple(t: Triple) -> FlaggedStrictPartition:
    """Flagged strict partition of an essential triple.

    Rows k_i get lambda = p_i + q_i - 1 and f = p_i - 1; the other rows up to
    k_r are filled from the bottom with the smallest values keeping lambda
    strictly and f weakly decreasing.
    """
    if not t.is_essential():
        raise ValueError(f"triple is not essential: {t}")
    n = t.k[-1]
    lam: list[int | None] = [None] * (n + 1)
    flag: list[int | None] = [None] * (n + 1)
    for ki, pi, qi in zip(t.k, t.p, t.q):
        lam[ki] = pi + qi - 1
        flag[ki] = pi - 1
    for pos in range(n - 1, 0, -1):
        if lam[pos] is None:
            lam[pos] = lam[pos + 1] + 1
            flag[pos] = flag[pos + 1]
        elif lam[pos] <= lam[pos + 1] or flag[pos] < flag[pos + 1]:
            raise ValueError(f"minimal filling contradicts row {pos} of {t}")
    return FlaggedStrictPartition(tuple(lam[1:]), tuple(flag[1:]))


def triple_shape(t: Triple) -> FlaggedStrictPartition:
    return shape_from_triple(reduce_to_essential(t))


def schubert_vexillary(t: Triple, n_x: int, method: str = "pfaffian") -> Polynomial:
    """Double Schubert polynomial of the vexillary element given by ``t``.

    ``method='tableau'`` sums over marked shifted tableaux of the attached
    flagged shape; ``method='pfaffian'`` evaluates the Schur-Pfaffian of
    q^{[f_i|l_i-f_i-1]}.  The Pfaffian is taken without the row-difference
    check of :func:`q_flagged_pfaffian`, since triple-derived shapes can break
    it between specified rows (see :func:`triple_hypothesis_report`).
    """
    shape = triple_shape(t)
    if method == "tableau":
        return q_flagged_tableau(shape, n_x)
    if method == "pfaffian":
        return q_flagged_pfaffian(shape, n_x, checked=False)
    raise ValueError(f"unknown method {method!r}")


def triple_hypothesis_report(t: Triple) -> str | None:
    """The failed Pfaffian-formula inequality for the triple's shape, or None."""
    return pfaffian_hypothesis_violation(triple_shape(t))


def ivanov_via_flagged(lam: Sequence[int], n_x: int) -> Polynomial:
    """Q_lambda(x|b) as a sum of monomials over MST(lambda, (lambda_i - 1))."""
    shape = FlaggedStrictPartition(tuple(lam), tuple(l - 1 for l in lam))
    return monomial_tableau_sum(shape, n_x)


def all_triples(max_k: int, max_p: int, max_q: int):
    """Every valid triple with k_r <= max_k, p_1 <= max_p, q_1 <= max_q."""
    for r in range(1, max_k + 1):
        for k in combinations(range(1, max_k + 1), r):
            for p in combinations_with_replacement(range(max_p, 0, -1), r):
                for q in combinations_with_replacement(range(max_q, 0, -1), r):
                    try:
                        yield Triple(k, p, q)
                    except ValueError:
                        continue


def essential_triples(max_k: int, max_p: int, max_q: int):
    return (t for t in all_triples(max_k, max_p, max_q) if t.is_essential())


__all__ = [
    "Triple",
    "reduce_to_essential",
    "triples_equivalent",
    "invert_triple",
    "lagrangian_triple",
    "shape_from_triple",
    "triple_shape",
    "schubert_vexillary",
    "triple_hypothesis_report",
    "ivanov_via_flagged",
    "essential_triples",
    "all_triples",
]
