"""Flagged strict partitions, marked shifted tableaux and row-strict tableaux.

Coordinates are 1-based ``(row, column)``.  Row ``i`` of a shifted diagram
occupies columns ``i .. i + lambda_i - 1``; row ``i`` of an unshifted skew
diagram ``lambda/mu`` occupies columns ``mu_i + 1 .. lambda_i``.

Internally an alphabet letter is an int *code* whose integer order is the
alphabet order ``1' < 1 < 2' < 2 < ... < 1o < 2o < ...``:
primed ``k`` is ``2k - 1``, unmarked ``k`` is ``2k``, circled ``k`` is
``CIRCLED + k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache, total_ordering
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .errors import HypothesisError
from .polyring import ONE, Polynomial, b, poly_sum, product, star, x, z

CIRCLED = 1 << 20


class Mark(IntEnum):
    PRIMED = 0
    UNMARKED = 1
    CIRCLED = 2


_SUFFIX = {Mark.PRIMED: "'", Mark.UNMARKED: "", Mark.CIRCLED: "o"}


@total_ordering
@dataclass(frozen=True)
class Entry:
    value: int
    mark: Mark = Mark.UNMARKED

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("entries are positive")

    @property
    def code(self) -> int:
        if self.mark == Mark.CIRCLED:
            return CIRCLED + self.value
        return 2 * self.value - (self.mark == Mark.PRIMED)

    @classmethod
    def from_code(cls, code: int) -> Entry:
        if code > CIRCLED:
            return cls(code - CIRCLED, Mark.CIRCLED)
        return cls((code + 1) // 2, Mark.UNMARKED if code % 2 == 0 else Mark.PRIMED)

    @classmethod
    def parse(cls, s: str) -> Entry:
        s = s.strip()
        if s.endswith("'"):
            return cls(int(s[:-1]), Mark.PRIMED)
        if s.endswith("o"):
            return cls(int(s[:-1]), Mark.CIRCLED)
        return cls(int(s), Mark.UNMARKED)

    def __lt__(self, other: Entry) -> bool:
        return self.code < other.code

    def __str__(self) -> str:
        return f"{self.value}{_SUFFIX[self.mark]}"


# -- shapes -------------------------------------------------------------------

def check_strict(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"strict partition parts must be positive: {parts}")
    if any(a <= b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not strictly decreasing: {parts}")
    return parts


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {parts}")
    return parts


@dataclass(frozen=True)
class FlaggedStrictPartition:
    lam: tuple[int, ...]
    flag: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lam", check_strict(self.lam))
        object.__setattr__(self, "flag", tuple(int(f) for f in self.flag))
        if len(self.flag) != len(self.lam):
            raise ValueError("flag length must equal the number of parts")
        if any(f < 0 for f in self.flag):
            raise ValueError("flags are nonnegative")

    @classmethod
    def ivanov(cls, lam: Sequence[int]) -> FlaggedStrictPartition:
        return cls(tuple(lam), (0,) * len(lam))

    @property
    def length(self) -> int:
        return len(self.lam)

    @property
    def size(self) -> int:
        return sum(self.lam)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, l in enumerate(self.lam, start=1):
            for c in range(i, i + l):
                yield i, c

    def barred(self) -> tuple[int, ...]:
        return tuple(l + i for i, l in enumerate(self.lam))

    def to_json_obj(self) -> dict:
        return {"lambda": list(self.lam), "flag": list(self.flag)}


def strict_subpartitions(lam: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All strict mu inside lam, padded with zeros to len(lam); reverse-lex order."""
    r = len(lam)

    def rec(i, bound):
        if i == r:
            yield ()
            return
        hi = min(lam[i], bound - 1)
        for m in range(hi, 0, -1):
            for rest in rec(i + 1, m):
                yield (m,) + rest
        yield (0,) * (r - i)

    yield from rec(0, 10**9)


# -- marked shifted tableaux --------------------------------------------------

@dataclass(frozen=True)
class MarkedShiftedTableau:
    shape: FlaggedStrictPartition
    rows: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != self.shape.lam:
            raise ValueError("filling does not cover the shifted diagram")

    @classmethod
    def from_codes(cls, shape, rows) -> MarkedShiftedTableau:
        return cls(shape, tuple(tuple(Entry.from_code(c) for c in row) for row in rows))

    @classmethod
    def from_strings(cls, shape, rows: Sequence[Sequence[str]]) -> MarkedShiftedTableau:
        return cls(shape, tuple(tuple(Entry.parse(s) for s in row) for row in rows))

    def entries(self) -> Iterator[tuple[int, int, Entry]]:
        for i, row in enumerate(self.rows, start=1):
            for j, e in enumerate(row):
                yield i, i + j, e

    def to_json_obj(self) -> dict:
        return {
            "shape": self.shape.to_json_obj(),
            "rows": [[str(e) for e in row] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> MarkedShiftedTableau:
        shape = FlaggedStrictPartition(tuple(obj["shape"]["lambda"]), tuple(obj["shape"]["flag"]))
        return cls.from_strings(shape, obj["rows"])


def validate_mst(shape: FlaggedStrictPartition, rows: Sequence[Sequence[Entry]]) -> tuple[bool, int | None]:
    """Check the five tableau rules; return ``(ok, lowest violated rule)``."""
    if tuple(len(r) for r in rows) != shape.lam:
        raise ValueError("filling does not cover the shifted diagram")
    codes = [[e.code for e in row] for row in rows]
    violated: set[int] = set()
    for i, row in enumerate(codes):
        for j in range(len(row) - 1):
            a, c = row[j], row[j + 1]
            if a > c:
                violated.add(1)
            elif a == c:
                if a > CIRCLED:
                    violated.add(4)
                elif a % 2 == 1:
                    violated.add(3)
        for a in row:
            if a > CIRCLED and a - CIRCLED > shape.flag[i]:
                violated.add(5)
        if i + 1 < len(codes):
            below = codes[i + 1]
            # box (i+1, c) sits under index j+1 of row i
            for j, d in enumerate(below):
                a = row[j + 1]
                if a > d:
                    violated.add(1)
                elif a == d and a < CIRCLED and a % 2 == 0:
                    violated.add(2)
    return (not violated, min(violated) if violated else None)


def _alphabet(n_x: int, f: int) -> list[int]:
    return [c for k in range(1, n_x + 1) for c in (2 * k - 1, 2 * k)] + [
        CIRCLED + k for k in range(1, f + 1)
    ]


@lru_cache(maxsize=None)
def _mst_rows(length: int, n_x: int, f: int, upper: tuple[int, ...] | None) -> tuple[tuple[int, ...], ...]:
    """All admissible rows of the given length sitting under ``upper``.

    ``upper`` is the row above (one column to the left), or None for row 1.
    """
    alpha = _alphabet(n_x, f)
    out: list[tuple[int, ...]] = []
    row: list[int] = []

    def rec(j: int, start: int):
        if j == length:
            out.append(tuple(row))
            return
        above = upper[j + 1] if upper is not None else None
        prev = row[-1] if row else None
        for idx in range(start, len(alpha)):
            c = alpha[idx]
            if above is not None and (c < above or (c == above and c < CIRCLED and c % 2 == 0)):
                continue
            if prev is not None and c == prev and (c > CIRCLED or c % 2 == 1):
                continue
            row.append(c)
            rec(j + 1, idx)
            row.pop()

    rec(0, 0)
    return tuple(out)


def enumerate_mst(shape: FlaggedStrictPartition, n_x: int) -> Iterator[MarkedShiftedTableau]:
    """All tableaux of ``shape`` with unmarked/primed values at most ``n_x``.

    Order is lexicographic in row-major reading order.
    """
    lam, flag = shape.lam, shape.flag
    r = len(lam)
    rows: list[tuple[int, ...]] = []

    def rec(i: int, upper):
        if i == r:
            yield MarkedShiftedTableau.from_codes(shape, rows)
            return
        for row in _mst_rows(lam[i], n_x, flag[i], upper):
            rows.append(row)
            yield from rec(i + 1, row)
            rows.pop()

    yield from rec(0, None)


def count_mst(shape: FlaggedStrictPartition, n_x: int) -> int:
    return _tableau_sum(shape, n_x, lambda code, i, c: 1, unit=1)


# -- weights ------------------------------------------------------------------

@lru_cache(maxsize=None)
def factorial_factor(code: int, row: int, col: int) -> Polynomial:
    """Starred linear factor of one box of an MST."""
    if code > CIRCLED:
        k = code - CIRCLED
        return star(z(k) + b(k + row - col))
    k = (code + 1) // 2
    if code % 2 == 0:
        return star(x(k) + b(col - row))
    return star(x(k) - b(col - row))


@lru_cache(maxsize=None)
def monomial_factor(code: int, row: int, col: int) -> Polynomial:
    """Box factor of the monomial weight: x_k for k and k', b_k for circled k."""
    if code > CIRCLED:
        return b(code - CIRCLED)
    return x((code + 1) // 2)


def weight_mst(T: MarkedShiftedTableau) -> Polynomial:
    return product(factorial_factor(e.code, i, c) for i, c, e in T.entries())


def monomial_weight_mst(T: MarkedShiftedTableau) -> Polynomial:
    return product(monomial_factor(e.code, i, c) for i, c, e in T.entries())


def _tableau_sum(shape: FlaggedStrictPartition, n_x: int, factor: Callable, unit=ONE):
    """Sum of box-factor products over MST(shape) via a transfer over rows.

    ``F(i, row) = w(row) * sum_{row' under row} F(i+1, row')``; rows of the
    same index share their subtotal, so no tableau is expanded in full.
    """
    lam, flag = shape.lam, shape.flag
    r = len(lam)
    if r == 0:
        return unit
    memo: dict[tuple[int, tuple[int, ...]], object] = {}

    def row_weight(i: int, row: tuple[int, ...]):
        w = unit
        for j, c in enumerate(row):
            w = w * factor(c, i + 1, i + 1 + j)
        return w

    def F(i: int, row: tuple[int, ...]):
        key = (i, row)
        hit = memo.get(key)
        if hit is not None:
            return hit
        w = row_weight(i, row)
        if i + 1 < r:
            below = [F(i + 1, nxt) for nxt in _mst_rows(lam[i + 1], n_x, flag[i + 1], row)]
            tail = sum(below) if isinstance(unit, int) else poly_sum(below)
            w = w * tail if below else 0 * w
        memo[key] = w
        return w

    tops = [F(0, row) for row in _mst_rows(lam[0], n_x, flag[0], None)]
    if isinstance(unit, int):
        return sum(tops)
    return poly_sum(tops)


def q_flagged_tableau(shape: FlaggedStrictPartition, n_x: int) -> Polynomial:
    """Flagged factorial Q-function as a sum over marked shifted tableaux."""
    if n_x < 1:
        raise ValueError("n_x must be >= 1")
    return _tableau_sum(shape, n_x, factorial_factor)


def q_flagged_tableau_naive(shape: FlaggedStrictPartition, n_x: int) -> Polynomial:
    """Same sum, one fully expanded weight per tableau (slow; for cross-checks)."""
    return poly_sum(weight_mst(T) for T in enumerate_mst(shape, n_x))


def monomial_tableau_sum(shape: FlaggedStrictPartition, n_x: int) -> Polynomial:
    """Sum of the monomial weights x_k (k, k') and b_k (circled k) over MST(shape)."""
    return _tableau_sum(shape, n_x, monomial_factor)


def ivanov_q_tableau(lam: Sequence[int], n_x: int) -> Polynomial:
    if not lam:
        return ONE
    return q_flagged_tableau(FlaggedStrictPartition.ivanov(lam), n_x)


# -- row-strict flagged skew tableaux ----------------------------------------

@dataclass(frozen=True)
class SkewShape:
    """Unshifted skew diagram lam/mu with per-row caps; mu padded to len(lam)."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]
    flag: tuple[int, ...]

    def __post_init__(self):
        lam = check_partition(self.lam)
        mu = tuple(self.mu) + (0,) * (len(lam) - len(self.mu))
        mu = check_partition(mu)
        if len(mu) != len(lam):
            raise ValueError("mu longer than lambda")
        if any(m > l for m, l in zip(mu, lam)):
            raise ValueError(f"mu={mu} not contained in lambda={lam}")
        flag = tuple(int(f) for f in self.flag)
        if len(flag) != len(lam):
            raise ValueError("flag length must equal len(lambda)")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "flag", flag)

    @property
    def length(self) -> int:
        return len(self.lam)

    def jt_compatible(self) -> bool:
        """lam_i - i - f_i weakly decreasing in i."""
        d = [l - i - f for i, (l, f) in enumerate(zip(self.lam, self.flag))]
        return all(a >= c for a, c in zip(d, d[1:]))


@dataclass(frozen=True)
class RowStrictTableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def entries(self) -> Iterator[tuple[int, int, int]]:
        for i, row in enumerate(self.rows, start=1):
            start = self.shape.mu[i - 1] + 1
            for j, v in enumerate(row):
                yield i, start + j, v


def enumerate_sst_rowstrict(shape: SkewShape) -> Iterator[RowStrictTableau]:
    """Fillings strictly increasing along rows, weakly down columns, row i <= f_i."""
    lam, mu, flag = shape.lam, shape.mu, shape.flag
    r = len(lam)
    rows: list[tuple[int, ...]] = []

    def rec(i: int):
        if i == r:
            yield RowStrictTableau(shape, tuple(rows))
            return
        width = lam[i] - mu[i]
        for combo in combinations(range(1, flag[i] + 1), width) if width >= 0 else ():
            if i > 0 and not _fits_below(rows[i - 1], mu[i - 1], combo, mu[i]):
                continue
            rows.append(combo)
            yield from rec(i + 1)
            rows.pop()

    yield from rec(0)


def _fits_below(upper, mu_up, lower, mu_low) -> bool:
    for j, v in enumerate(lower):
        col = mu_low + 1 + j
        k = col - mu_up - 1
        if 0 <= k < len(upper) and upper[k] > v:
            return False
    return True


def weight_sst(T: RowStrictTableau) -> Polynomial:
    """(z|b)^T with signed b-indices (no star)."""
    return product(z(v) + b(v + i - c) for i, c, v in T.entries())


def s_tilde(shape: SkewShape) -> Polynomial:
    """Row-strict flagged skew factorial Schur polynomial, b-indices left signed."""
    return poly_sum(weight_sst(T) for T in enumerate_sst_rowstrict(shape))


# -- decomposition into Ivanov Q-functions ------------------------------------

def expansion_hypothesis(shape: FlaggedStrictPartition) -> bool:
    lam, f = shape.lam, shape.flag
    r = len(lam)
    if r < 2:
        return True
    return lam[r - 2] > f[r - 2] or lam[r - 1] > f[r - 1]


def decompose_q(shape: FlaggedStrictPartition) -> list[tuple[tuple[int, ...], Polynomial]]:
    """Expand Q_{lam,f} over Ivanov Q_mu(x|b) with coefficients in z, b.

    Returns ``(mu, coeff)`` pairs, mu stripped of trailing zeros, in
    reverse-lex order of mu; zero coefficients are dropped.
    """
    if not expansion_hypothesis(shape):
        r = shape.length
        raise HypothesisError(
            f"decomposition needs lambda_{r-1} > f_{r-1} or lambda_{r} > f_{r}; "
            f"got lambda={shape.lam}, f={shape.flag}"
        )
    lam_bar = shape.barred()
    out = []
    for mu in strict_subpartitions(shape.lam):
        mu_bar = tuple(m + i for i, m in enumerate(mu))
        if any(a < c for a, c in zip(mu_bar, mu_bar[1:])):
            continue
        coeff = star(s_tilde(SkewShape(lam_bar, mu_bar, shape.flag)))
        if coeff:
            out.append((tuple(m for m in mu if m), coeff))
    return out


def _components(shape: SkewShape) -> list[list[tuple[int, int]]]:
    """Edge-connected components of the skew diagram, each listed row-major."""
    boxes = {(i, c) for i in range(1, shape.length + 1)
             for c in range(shape.mu[i - 1] + 1, shape.lam[i - 1] + 1)}
    seen: set[tuple[int, int]] = set()
    comps = []
    for start in sorted(boxes):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            i, c = stack.pop()
            comp.append((i, c))
            for nb in ((i + 1, c), (i - 1, c), (i, c + 1), (i, c - 1)):
                if nb in boxes and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        comps.append(sorted(comp))
    return comps


def factored_text(shape: SkewShape) -> str:
    """Starred s~ written as a product over components of the diagram.

    Components do not constrain each other, so each contributes the sum,
    over its own fillings, of the product of its linear box factors.
    """
    comps = _components(shape)
    if not comps:
        return "1"
    fillings: list[list[tuple[int, ...]]] = [[] for _ in comps]
    where = {box: n for n, comp in enumerate(comps) for box in comp}
    total = 0
    for T in enumerate_sst_rowstrict(shape):
        total += 1
        vals: dict[int, list[int]] = {}
        for i, c, v in T.entries():
            vals.setdefault(where[(i, c)], []).append(v)
        for n, vs in vals.items():
            if tuple(vs) not in fillings[n]:
                fillings[n].append(tuple(vs))
    if total == 0:
        return "0"
    count = 1
    for f in fillings:
        count *= len(f)
    assert count == total, "components are not independent"

    def linear(i, c, v):
        return star(z(v) + b(v + i - c)).to_text()

    parts = []
    for comp, fills in zip(comps, fillings):
        terms = []
        for vs in fills:
            lins = [linear(i, c, v) for (i, c), v in zip(comp, vs)]
            terms.append(lins[0] if len(lins) == 1 else "".join(f"({t})" for t in lins))
        parts.append((" + ".join(terms), len(fills) == 1 and len(comp) > 1))
    if len(parts) == 1:
        return parts[0][0]
    return "".join(t if is_prod else f"({t})" for t, is_prod in parts)


def decompose_q_factored(shape: FlaggedStrictPartition) -> list[tuple[tuple[int, ...], Polynomial, str]]:
    """:func:`decompose_q` with each coefficient also rendered in factored form."""
    lam_bar = shape.barred()
    out = []
    for mu, coeff in decompose_q(shape):
        mu_pad = tuple(mu) + (0,) * (shape.length - len(mu))
        mu_bar = tuple(m + i for i, m in enumerate(mu_pad))
        out.append((mu, coeff, factored_text(SkewShape(lam_bar, mu_bar, shape.flag))))
    return out

def recombine(terms, n_x: int) -> Polynomial:
    return poly_sum(ivanov_q_tableau(mu, n_x) * c for mu, c in terms)


# -- lattice paths ------------------------------------------------------------

Vertex = tuple[int, int]
Path = tuple[Vertex, ...]


def _row_path(start: Vertex, heights: Sequence[int]) -> Path:
    s, t = start
    hs = set(heights)
    verts = [(s, t)]
    while t > 0:
        if t in hs:
            s -= 1
        t -= 1
        verts.append((s, t))
    return tuple(verts)


def tableau_to_paths(T: RowStrictTableau) -> tuple[Path, ...]:
    """Row i becomes a path from (lam_i - i, f_i) down to (mu_i - i, 0).

    Its diagonal steps leave from the heights given by the row's entries.
    """
    sh = T.shape
    paths = []
    for i, row in enumerate(T.rows, start=1):
        paths.append(_row_path((sh.lam[i - 1] - i, sh.flag[i - 1]), row))
    return tuple(paths)


def diagonal_sources(path: Path) -> list[Vertex]:
    return [u for u, v in zip(path, path[1:]) if u[0] - v[0] == 1]


def paths_intersect(paths: Sequence[Path]) -> bool:
    seen: set[Vertex] = set()
    for p in paths:
        vs = set(p)
        if vs & seen:
            return True
        seen |= vs
    return False


def paths_to_tableau(paths: Sequence[Path]) -> RowStrictTableau:
    if paths_intersect(paths):
        raise ValueError("path tuple is intersecting")
    lam, mu, flag, rows = [], [], [], []
    for i, p in enumerate(paths, start=1):
        for u, v in zip(p, p[1:]):
            if u[1] - v[1] != 1 or u[0] - v[0] not in (0, 1):
                raise ValueError(f"illegal step {u} -> {v}")
        if p[-1][1] != 0:
            raise ValueError("paths must end on the axis t = 0")
        lam.append(p[0][0] + i)
        flag.append(p[0][1])
        mu.append(p[-1][0] + i)
        rows.append(tuple(sorted(t for _, t in diagonal_sources(p))))
    return RowStrictTableau(SkewShape(tuple(lam), tuple(mu), tuple(flag)), tuple(rows))


def path_weight(path: Path) -> Polynomial:
    return product(z(t) + b(t - s) for s, t in diagonal_sources(path))


def path_tuple_weight(paths: Sequence[Path]) -> Polynomial:
    return product(path_weight(p) for p in paths)


def enumerate_path_tuples(shape: SkewShape) -> Iterator[tuple[Path, ...]]:
    """Non-intersecting path tuples for ``shape``, enumerated on the graph side."""
    r = shape.length
    choices = []
    for i in range(r):
        width = shape.lam[i] - shape.mu[i]
        start = (shape.lam[i] - i - 1, shape.flag[i])
        choices.append([_row_path(start, hs) for hs in combinations(range(1, shape.flag[i] + 1), width)])
    acc: list[Path] = []

    def rec(i):
        if i == r:
            yield tuple(acc)
            return
        for p in choices[i]:
            if paths_intersect(acc + [p]):
                continue
            acc.append(p)
            yield from rec(i + 1)
            acc.pop()

    yield from rec(0)
