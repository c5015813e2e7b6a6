"""Coefficients of the basic generating functions.

Every family here is a power series in a formal variable ``u``; we only
ever need individual coefficients, so each function returns the
coefficient of ``u**m`` as a :class:`Polynomial`.  Negative ``m`` gives 0.

Conventions for the capped factors: ``e^[k]_u(y) = prod_{i<=k} (1 + y_i u)``
when ``k >= 0`` and ``prod_{i<=|k|} 1/(1 - y_i u)`` when ``k < 0``, where
``y`` is either ``z`` or the shifted sequence ``tau^s(b) = (b_{1+s}, b_{2+s}, ...)``.
The x-series ``q_u(x) = prod (1 + x_i u)/(1 - x_i u)`` is truncated to the
first ``n_x`` variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .polyring import ONE, ZERO, Polynomial, VarClass, b, poly_sum, product, star, x, z


@dataclass(frozen=True)
class SeriesSpec:
    """Superscripts of q^{[k|l]}_m(x; z | tau^shift b) in n_x variables."""

    n_x: int = 0
    z_cap: int = 0
    b_cap: int = 0
    b_shift: int = 0

    def __post_init__(self):
        if self.n_x < 0:
            raise ValueError("n_x must be >= 0")


@lru_cache(maxsize=None)
def q_coeff(m: int, n_x: int) -> Polynomial:
    """Coefficient of u^m in prod_{i<=n_x} (1 + x_i u)/(1 - x_i u)."""
    if m < 0:
        return ZERO
    if m == 0:
        return ONE
    if n_x == 0:
        return ZERO
    # (1 + x u)/(1 - x u) = 1 + 2 sum_{k>=1} x^k u^k
    xn = x(n_x)
    terms = [q_coeff(m, n_x - 1)]
    for k in range(1, m + 1):
        terms.append(q_coeff(m - k, n_x - 1) * (xn ** k) * 2)
    return poly_sum(terms)


def _letters(cls: VarClass, n: int, shift: int) -> list[Polynomial]:
    if cls == VarClass.Z:
        if shift:
            raise ValueError("the z-alphabet is never shifted")
        return [z(i) for i in range(1, n + 1)]
    return [b(i + shift) for i in range(1, n + 1)]


@lru_cache(maxsize=None)
def _e_coeff(cap: int, m: int, cls: VarClass, shift: int) -> Polynomial:
    if m < 0:
        return ZERO
    if m == 0:
        return ONE
    letters = _letters(cls, abs(cap), shift)
    if cap >= 0:
        if m > cap:
            return ZERO
        return poly_sum(product(c) for c in combinations(letters, m))
    return poly_sum(product(c) for c in combinations_with_replacement(letters, m))


def e_coeff(cap: int, m: int, alphabet: str = "b", shift: int = 0) -> Polynomial:
    """m-th coefficient of e^[cap]_u on z (``alphabet='z'``) or on tau^shift(b).

    ``cap >= 0`` gives the elementary symmetric polynomial in the first
    ``cap`` letters, ``cap < 0`` the complete homogeneous one in the first
    ``|cap|`` letters.
    """
    cls = {"z": VarClass.Z, "b": VarClass.B}[alphabet]
    return _e_coeff(cap, m, cls, shift)


@lru_cache(maxsize=None)
def e_kl_coeff(k: int, l: int, m: int, b_shift: int = 0) -> Polynomial:
    """Coefficient of u^m in e^[k]_u(z) e^[l]_u(tau^b_shift b).

    h^{[k|l]}_m is ``e_kl_coeff(-k, -l, m)``.
    """
    if m < 0:
        return ZERO
    return poly_sum(
        _e_coeff(k, a, VarClass.Z, 0) * _e_coeff(l, m - a, VarClass.B, b_shift)
        for a in range(m + 1)
    )


@lru_cache(maxsize=None)
def _q_kl(n_x: int, k: int, l: int, b_shift: int, m: int) -> Polynomial:
    if m < 0:
        return ZERO
    return poly_sum(q_coeff(a, n_x) * e_kl_coeff(k, l, m - a, b_shift) for a in range(m + 1))


def q_kl_coeff(spec: SeriesSpec, m: int) -> Polynomial:
    """Coefficient of u^m in q_u(x) e^[k]_u(z) e^[l]_u(tau^s b)."""
    return _q_kl(spec.n_x, spec.z_cap, spec.b_cap, spec.b_shift, m)


def q_l_coeff(l: int, m: int, n_x: int) -> Polynomial:
    """q^{[l]}_m(x|b) = q^{[0|l]}_m."""
    return _q_kl(n_x, 0, l, 0, m)


# -- identities used in the Pfaffian proof -----------------------------------

def telescope_sides(s: int, t: int, m: int, n: int, n_x: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of the telescoping identity for q^{[m]} against h on tau^{-m} b.

    LHS = sum_{l<=s} q^{[m]}_l * e^{[-n-1]}_{t-l}(tau^{-m} b)^*
    RHS = q^{[m-1]}_s * e^{[-n-1]}_{t-s}(tau^{-m} b)^*
          + sum_{l<=s-1} q^{[m-1]}_l * e^{[-n]}_{t-l}(tau^{1-m} b)^*
    Only 0 <= l <= t contributes.
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def h(cap, deg, shift):
        return star(e_coeff(cap, deg, "b", shift))

    lhs = poly_sum(
        q_l_coeff(m, l, n_x) * h(-n - 1, t - l, -m) for l in range(0, min(s, t) + 1)
    )
    rhs = q_l_coeff(m - 1, s, n_x) * h(-n - 1, t - s, -m)
    rhs = rhs + poly_sum(
        q_l_coeff(m - 1, l, n_x) * h(-n, t - l, 1 - m) for l in range(0, min(s - 1, t) + 1)
    )
    return lhs, rhs


def telescope_check(s: int, t: int, m: int, n: int, n_x: int) -> bool:
    lhs, rhs = telescope_sides(s, t, m, n, n_x)
    return lhs == rhs


def row_expansion_sides(r: int, f: int, a: int, n_x: int) -> tuple[Polynomial, Polynomial]:
    """q^{[f|r-f-1]}_{r+a} versus its expansion over one-row factorial pieces."""
    if r < 0 or f < 0:
        raise ValueError("r and f must be >= 0")
    lhs = star(q_kl_coeff(SeriesSpec(n_x, f, r - f - 1, 0), r + a))
    rhs = poly_sum(
        q_l_coeff(r - k - 1, r - k + a, n_x) * star(e_kl_coeff(f, k - 1 - f, k, k - r))
        for k in range(f + 1)
    )
    return lhs, rhs


def row_expansion_check(r: int, f: int, a: int, n_x: int) -> bool:
    lhs, rhs = row_expansion_sides(r, f, a, n_x)
    return lhs == rhs


def splitting_check(r: int, f: int, m: int) -> bool:
    """e^[r-1-f]_m(b) = sum_{a+c=m} e^[r]_a(b) * e^[-1-f]_c(tau^{-r} b)^*."""
    lhs = e_coeff(r - 1 - f, m, "b")
    rhs = poly_sum(
        e_coeff(r, a, "b") * star(e_coeff(-1 - f, m - a, "b", -r)) for a in range(m + 1)
    )
    return lhs == rhs
