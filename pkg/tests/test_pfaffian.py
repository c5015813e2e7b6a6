import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagq.errors import HypothesisError
from flagq.pfaffian import (
    DELTA,
    CoeffSeq,
    det_leibniz,
    det_polynomial,
    ivanov_family,
    ivanov_q_pf,
    jacobi_trudi_s_tilde,
    laurent_coefficients,
    laurent_schur_pf,
    matrix_pfaffian,
    pfaffian_hypothesis_violation,
    q_family_seq,
    q_flagged_pfaffian,
    schur_pf,
    schur_pf_pair,
)
from flagq.polyring import ONE, ZERO, b, var, x, z
from flagq.suites import random_skew_matrix
from flagq.shapes_tableaux import FlaggedStrictPartition, SkewShape, ivanov_q_tableau, q_flagged_tableau, s_tilde


def sym(name):
    return var(name)


def test_small_pfaffians():
    a12, a13, a14, a23, a24, a34 = (b(i) for i in range(1, 7))
    M2 = [[ZERO, a12], [-a12, ZERO]]
    assert matrix_pfaffian(M2) == a12
    M4 = [
        [ZERO, a12, a13, a14],
        [-a12, ZERO, a23, a24],
        [-a13, -a23, ZERO, a34],
        [-a14, -a24, -a34, ZERO],
    ]
    assert matrix_pfaffian(M4) == a12 * a34 - a13 * a24 + a14 * a23
    assert matrix_pfaffian([]) == ONE


def test_pfaffian_input_checks():
    with pytest.raises(ValueError):
        matrix_pfaffian([[ZERO]])
    with pytest.raises(ValueError):
        matrix_pfaffian([[ZERO, x(1)], [x(1), ZERO]])
    with pytest.raises(ValueError):
        matrix_pfaffian([[ONE, ZERO], [ZERO, ZERO]])


@given(st.sampled_from([2, 4, 6]), st.integers(0, 10_000))
def test_pfaffian_squared_is_determinant(n, seed):
    M = random_skew_matrix(n, seed)
    pf = matrix_pfaffian(M)
    assert pf * pf == det_polynomial(M)


@given(st.integers(1, 4), st.integers(0, 10_000))
def test_laplace_matches_leibniz(n, seed):
    rng = random.Random(seed)
    gens = [x(1), z(1), b(0), ONE]
    M = [[rng.choice(gens) * rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
    assert det_polynomial(M) == det_leibniz(M)


def test_laurent_coefficients_two_rows():
    # t1 t2 (1 - 2 t1/t2 + ...) keeps t1 t2 and -2 t1^2
    assert laurent_coefficients((1, 1)) == {(1, 1): 1, (2, 0): -2}
    assert laurent_coefficients((2, 0)) == {(2, 0): 1}
    assert laurent_coefficients((0, 2)) == {(0, 2): 1, (1, 1): -2, (2, 0): 2}


def test_pair_term_and_padding():
    c = CoeffSeq(lambda m: sym(f"z{m + 1}"), "c")
    d = CoeffSeq(lambda m: sym(f"b{m}"), "d")
    assert schur_pf_pair(c, 1, d, 2) == sym("z2") * sym("b2") - sym("z3") * sym("b1") * 2 + sym("z4") * sym("b0") * 2
    assert schur_pf([c], [3]) == c(3)
    assert schur_pf([c, DELTA], [3, 0]) == c(3)


alphas = st.lists(st.integers(0, 5), min_size=1, max_size=3).map(tuple)


@given(alphas)
def test_laurent_oracle_matches_matrix_route(alpha):
    fam = ivanov_family(alpha, 2)
    assert schur_pf(fam, alpha) == laurent_schur_pf(fam, alpha)


@given(st.integers(1, 6), st.integers(1, 6))
def test_pair_antisymmetry(k, l):
    ck, cl = q_family_seq(k - 1, 2), q_family_seq(l - 1, 2)
    assert schur_pf_pair(ck, k, cl, l) == -schur_pf_pair(cl, l, ck, k)


@given(st.permutations([3, 2, 1]))
def test_permuting_exponents_changes_sign(perm):
    base = (3, 2, 1)
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if base.index(perm[i]) > base.index(perm[j]))
    assert schur_pf(ivanov_family(perm, 2), perm) == schur_pf(ivanov_family(base, 2), base) * (-1) ** inv


def test_repeated_and_negative_exponents_vanish():
    fam = ivanov_family((2, 2), 2)
    assert schur_pf(fam, (2, 2)) == ZERO
    fam = ivanov_family((3, 1), 2) + [q_family_seq(1, 2)]
    assert schur_pf(fam, (3, 1, -1)) == ZERO


def test_one_row_factorial_q():
    assert ivanov_q_pf((1,), 2) == (x(1) + x(2)) * 2
    assert ivanov_q_pf((2,), 1) == ivanov_q_tableau((2,), 1)


@pytest.mark.parametrize("lam", [(1,), (2,), (3,), (2, 1), (3, 1), (3, 2), (4, 2, 1), (3, 2, 1)])
@pytest.mark.parametrize("n_x", [1, 2, 3])
def test_factorial_q_two_routes(lam, n_x):
    assert ivanov_q_pf(lam, n_x) == ivanov_q_tableau(lam, n_x)


def test_hypothesis_messages():
    assert pfaffian_hypothesis_violation(FlaggedStrictPartition((3, 1), (1, 0))) is None
    msg = pfaffian_hypothesis_violation(FlaggedStrictPartition((4, 2, 1), (3, 0, 0)))
    assert "lambda_1 - f_1 >= lambda_2 - f_2" in msg
    msg = pfaffian_hypothesis_violation(FlaggedStrictPartition((2, 1), (2, 1)))
    assert "lambda_1 - f_1 > 0" in msg
    # a single row never violates anything
    assert pfaffian_hypothesis_violation(FlaggedStrictPartition((2,), (5,))) is None
    with pytest.raises(HypothesisError):
        q_flagged_pfaffian(FlaggedStrictPartition((2, 1), (2, 1)), 1)


admissible = st.integers(1, 3).flatmap(
    lambda r: st.tuples(
        st.lists(st.integers(1, 5), min_size=r, max_size=r, unique=True).map(lambda l: tuple(sorted(l, reverse=True))),
        st.lists(st.integers(0, 3), min_size=r, max_size=r).map(tuple),
    )
).map(lambda t: FlaggedStrictPartition(*t)).filter(lambda s: pfaffian_hypothesis_violation(s) is None)


@given(admissible, st.integers(1, 2))
def test_pfaffian_formula_matches_tableau_sum(shape, n_x):
    assert q_flagged_pfaffian(shape, n_x) == q_flagged_tableau(shape, n_x)


def test_pfaffian_formula_can_fail_outside_hypotheses():
    for flag in [(2, 0), (2, 1), (2, 2)]:
        shape = FlaggedStrictPartition((2, 1), flag)
        assert q_flagged_pfaffian(shape, 1, checked=False) != q_flagged_tableau(shape, 1)


jt_shapes = st.integers(1, 3).flatmap(
    lambda r: st.tuples(
        st.lists(st.integers(1, 4), min_size=r, max_size=r).map(lambda l: tuple(sorted(l, reverse=True))),
        st.lists(st.integers(0, 4), min_size=r, max_size=r).map(lambda l: tuple(sorted(l, reverse=True))),
        st.lists(st.integers(0, 4), min_size=r, max_size=r).map(tuple),
    )
).filter(lambda t: all(m <= l for m, l in zip(t[1], t[0]))).map(lambda t: SkewShape(*t)).filter(
    lambda s: s.jt_compatible()
)


@given(jt_shapes)
def test_jacobi_trudi(shape):
    assert jacobi_trudi_s_tilde(shape) == s_tilde(shape)


def test_jacobi_trudi_rejects_incompatible_flags():
    with pytest.raises(HypothesisError):
        jacobi_trudi_s_tilde(SkewShape((2, 2), (0, 0), (3, 0)))
