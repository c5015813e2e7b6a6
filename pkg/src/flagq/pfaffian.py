"""Schur-Pfaffians over coefficient sequences, plus matrix Pfaffians and determinants.

A coefficient sequence is any object with ``__call__(m) -> Polynomial`` that
returns 0 for ``m < 0``.  The Schur-Pfaffian of sequences ``c1..cr`` at
exponents ``alpha`` is computed two ways:

* :func:`schur_pf` -- matrix Pfaffian of pairwise terms (odd r padded with
  the delta sequence), and
* :func:`laurent_schur_pf` -- direct expansion of
  ``t^alpha prod_{i<j} (1 - t_i/t_j)/(1 + t_i/t_j)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence

from .errors import HypothesisError
from .genfun import SeriesSpec, e_kl_coeff, q_kl_coeff, q_l_coeff
from .polyring import ONE, ZERO, Polynomial, as_poly, poly_sum, star
from .shapes_tableaux import FlaggedStrictPartition, SkewShape, check_strict


# -- coefficient sequences ----------------------------------------------------

class CoeffSeq:
    """m -> c_m with c_m = 0 for m < 0; values are memoised per instance."""

    def __init__(self, fn: Callable[[int], Polynomial], name: str = "c"):
        self._fn = fn
        self._cache: dict[int, Polynomial] = {}
        self.name = name

    def __call__(self, m: int) -> Polynomial:
        if m < 0:
            return ZERO
        v = self._cache.get(m)
        if v is None:
            v = as_poly(self._fn(m))
            self._cache[m] = v
        return v

    def __repr__(self) -> str:
        return f"CoeffSeq({self.name})"


DELTA = CoeffSeq(lambda m: ONE if m == 0 else ZERO, "delta")


@lru_cache(maxsize=None)
def q_family_seq(l: int, n_x: int) -> CoeffSeq:
    """m -> q^{[l]}_m(x|b)."""
    return CoeffSeq(lambda m: q_l_coeff(l, m, n_x), f"q[{l}]")


@lru_cache(maxsize=None)
def qkl_family_seq(k: int, l: int, n_x: int) -> CoeffSeq:
    """m -> q^{[k|l]}_m(x;z|b), starred (a no-op for the unshifted b-alphabet)."""
    spec = SeriesSpec(n_x, k, l, 0)
    return CoeffSeq(lambda m: star(q_kl_coeff(spec, m)), f"q[{k}|{l}]")


# -- matrices -----------------------------------------------------------------

def _check_square(M: Sequence[Sequence]) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    return n


def matrix_pfaffian(M: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Pfaffian by expansion along the first row, memoised on index subsets."""
    n = _check_square(M)
    if n % 2:
        raise ValueError("Pfaffian needs even size")
    M = [[as_poly(e) for e in row] for row in M]
    for i in range(n):
        if M[i][i]:
            raise ValueError("matrix is not skew-symmetric (nonzero diagonal)")
        for j in range(i + 1, n):
            if M[i][j] != -M[j][i]:
                raise ValueError(f"matrix is not skew-symmetric at ({i}, {j})")

    memo: dict[tuple[int, ...], Polynomial] = {}

    def pf(idx: tuple[int, ...]) -> Polynomial:
        if not idx:
            return ONE
        hit = memo.get(idx)
        if hit is not None:
            return hit
        i0, rest = idx[0], idx[1:]
        terms = []
        for pos, j in enumerate(rest):
            if not M[i0][j]:
                continue
            sub = pf(rest[:pos] + rest[pos + 1:])
            term = M[i0][j] * sub
            terms.append(term if pos % 2 == 0 else -term)
        out = poly_sum(terms)
        memo[idx] = out
        return out

    return pf(tuple(range(n)))


def det_polynomial(M: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by Laplace expansion along rows, memoised on column subsets."""
    n = _check_square(M)
    M = [[as_poly(e) for e in row] for row in M]
    memo: dict[tuple[int, ...], Polynomial] = {}

    def det(row: int, cols: tuple[int, ...]) -> Polynomial:
        if row == n:
            return ONE
        hit = memo.get(cols)
        if hit is not None:
            return hit
        terms = []
        for pos, c in enumerate(cols):
            if not M[row][c]:
                continue
            term = M[row][c] * det(row + 1, cols[:pos] + cols[pos + 1:])
            terms.append(term if pos % 2 == 0 else -term)
        out = poly_sum(terms)
        memo[cols] = out
        return out

    return det(0, tuple(range(n)))


def det_leibniz(M: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Permutation-sum determinant; an independent check for :func:`det_polynomial`."""
    n = _check_square(M)
    terms = []
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        t = ONE
        for i in range(n):
            t = t * as_poly(M[i][perm[i]])
            if not t:
                break
        terms.append(-t if inv % 2 else t)
    return poly_sum(terms)


# -- Schur-Pfaffians ----------------------------------------------------------

def schur_pf_pair(c: CoeffSeq, alpha: int, d: CoeffSeq, beta: int) -> Polynomial:
    """c_a d_b + 2 sum_{k>=1} (-1)^k c_{a+k} d_{b-k}; terms stop once b - k < 0."""
    terms = [c(alpha) * d(beta)]
    for k in range(1, beta + 1):
        t = c(alpha + k) * d(beta - k)
        terms.append(t * (2 if k % 2 == 0 else -2))
    return poly_sum(terms)


def schur_pf(family: Sequence[CoeffSeq], alpha: Sequence[int]) -> Polynomial:
    """Schur-Pfaffian Pf[c1_{a1} ... cr_{ar}] as a matrix Pfaffian of pair terms."""
    family, alpha = list(family), list(alpha)
    if len(family) != len(alpha):
        raise ValueError("family and exponent vector differ in length")
    if len(family) % 2:
        family.append(DELTA)
        alpha.append(0)
    r = len(family)
    M = [[ZERO] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            p = schur_pf_pair(family[i], alpha[i], family[j], alpha[j])
            M[i][j], M[j][i] = p, -p
    return matrix_pfaffian(M)


def laurent_coefficients(alpha: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Integer coefficients of t^alpha prod_{i<j} (1 - t_i/t_j)/(1 + t_i/t_j).

    Only monomials with every exponent >= 0 are kept.  Each pair factor is
    ``1 + 2 sum_{m>=1} (-1)^m (t_i/t_j)^m``, truncated at m <= sum |alpha_i|.
    Pairs are processed with j descending: after all pairs (., j) are done the
    exponent of t_j never changes again, and within them it only decreases,
    so negative exponents can be pruned early.
    """
    r = len(alpha)
    N = sum(abs(a) for a in alpha)
    state: dict[tuple[int, ...], int] = {tuple(alpha): 1}
    for j in range(r - 1, 0, -1):
        for i in range(j):
            nxt: dict[tuple[int, ...], int] = {}
            for exps, c in state.items():
                top = min(N, exps[j])
                for m in range(0, top + 1):
                    w = 1 if m == 0 else (2 if m % 2 == 0 else -2)
                    e = list(exps)
                    e[i] += m
                    e[j] -= m
                    key = tuple(e)
                    nxt[key] = nxt.get(key, 0) + c * w
            state = {k: v for k, v in nxt.items() if v}
        state = {k: v for k, v in state.items() if k[j] >= 0}
    return {k: v for k, v in state.items() if all(e >= 0 for e in k)}


def laurent_schur_pf(family: Sequence[CoeffSeq], alpha: Sequence[int]) -> Polynomial:
    """Schur-Pfaffian by direct expansion of the defining Laurent series."""
    if len(family) != len(alpha):
        raise ValueError("family and exponent vector differ in length")
    terms = []
    for exps, c in laurent_coefficients(alpha).items():
        t = ONE * c
        for seq, m in zip(family, exps):
            t = t * seq(m)
            if not t:
                break
        terms.append(t)
    return poly_sum(terms)


# -- closed forms -------------------------------------------------------------

def pfaffian_hypothesis_violation(shape: FlaggedStrictPartition) -> str | None:
    """Name the first failed inequality of the Pfaffian formula's hypotheses, if any."""
    d = [l - f for l, f in zip(shape.lam, shape.flag)]
    r = len(d)
    for i in range(r - 1):
        if d[i] < d[i + 1]:
            return (
                f"lambda_{i+1} - f_{i+1} >= lambda_{i+2} - f_{i+2} fails "
                f"({d[i]} < {d[i+1]})"
            )
    if r >= 2 and d[r - 2] <= 0:
        return f"lambda_{r-1} - f_{r-1} > 0 fails ({d[r-2]} <= 0)"
    return None


def q_flagged_family(shape: FlaggedStrictPartition, n_x: int) -> list[CoeffSeq]:
    return [qkl_family_seq(f, l - f - 1, n_x) for l, f in zip(shape.lam, shape.flag)]


def q_flagged_pfaffian(shape: FlaggedStrictPartition, n_x: int, checked: bool = True) -> Polynomial:
    """Pf[q^{[f1|l1-f1-1]}_{l1} ... q^{[fr|lr-fr-1]}_{lr}] in n_x x-variables."""
    if checked:
        why = pfaffian_hypothesis_violation(shape)
        if why:
            raise HypothesisError(why)
    return schur_pf(q_flagged_family(shape, n_x), shape.lam)


def ivanov_family(alpha: Sequence[int], n_x: int) -> list[CoeffSeq]:
    return [q_family_seq(a - 1, n_x) for a in alpha]


def ivanov_q_pf(lam: Sequence[int], n_x: int) -> Polynomial:
    """Ivanov's factorial Q_lambda(x|b) as Pf[q^{[l1-1]}_{l1} ... ]."""
    lam = check_strict(lam)
    return schur_pf(ivanov_family(lam, n_x), lam)


def jt_entry(shape: SkewShape, i: int, j: int) -> Polynomial:
    """(i, j) entry (1-based) of the flagged Jacobi-Trudi matrix."""
    lam, mu, f = shape.lam, shape.mu, shape.flag
    m = lam[i - 1] - mu[j - 1] + j - i
    return e_kl_coeff(f[i - 1], m - f[i - 1] - 1, m, j - mu[j - 1] - 1)


def jacobi_trudi_s_tilde(shape: SkewShape, checked: bool = True) -> Polynomial:
    """det(e^{[f_i|m-f_i-1]}_m(z|tau^{j-mu_j-1} b)) with m = lam_i - mu_j + j - i."""
    if checked and not shape.jt_compatible():
        raise HypothesisError(
            f"lambda_i - i - f_i must be weakly decreasing; got lambda={shape.lam}, f={shape.flag}"
        )
    r = shape.length
    return det_polynomial([[jt_entry(shape, i, j) for j in range(1, r + 1)] for i in range(1, r + 1)])
