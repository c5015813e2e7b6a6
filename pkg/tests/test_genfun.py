import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagq.genfun import (
    SeriesSpec,
    e_coeff,
    e_kl_coeff,
    q_coeff,
    q_kl_coeff,
    q_l_coeff,
    row_expansion_check,
    splitting_check,
    telescope_check,
)
from flagq.polyring import ONE, ZERO, b, poly_sum, star, x, z


def test_q_coeff_one_variable():
    for m in range(1, 6):
        assert q_coeff(m, 1) == x(1) ** m * 2
    assert q_coeff(0, 3) == ONE
    assert q_coeff(-1, 3) == ZERO
    assert q_coeff(2, 2) == (x(1) ** 2 + x(2) ** 2) * 2 + x(1) * x(2) * 4


def test_e_coeff_examples():
    assert e_coeff(2, 1, "z") == z(1) + z(2)
    assert e_coeff(2, 3, "z") == ZERO
    assert e_coeff(-2, 2, "b", 1) == b(2) ** 2 + b(2) * b(3) + b(3) ** 2
    assert e_coeff(3, 2, "b", -1) == b(0) * b(1) + b(0) * b(2) + b(1) * b(2)
    with pytest.raises(ValueError):
        e_coeff(1, 1, "z", 1)


@given(st.integers(0, 4), st.integers(1, 5), st.sampled_from(["z", "b"]))
def test_elementary_times_complete_is_one(k, m, alpha):
    # E(u) H(-u) = 1 on the same k letters
    s = poly_sum(e_coeff(k, a, alpha) * e_coeff(-k, m - a, alpha) * (-1) ** (m - a) for a in range(m + 1))
    assert s == ZERO


@given(st.integers(1, 3), st.integers(1, 5))
def test_q_series_is_self_inverse_at_minus_u(n_x, m):
    s = poly_sum(q_coeff(a, n_x) * q_coeff(m - a, n_x) * (-1) ** a for a in range(m + 1))
    assert s == ZERO


def test_q_kl_factorises():
    spec = SeriesSpec(1, 1, 1, 0)
    assert q_kl_coeff(spec, 1) == x(1) * 2 + z(1) + b(1)
    assert q_l_coeff(0, 2, 1) == q_coeff(2, 1)
    assert e_kl_coeff(1, -1, 2) == z(1) * b(1) + b(1) ** 2


@given(st.integers(-1, 4), st.integers(-1, 4), st.integers(0, 3), st.integers(0, 3), st.integers(1, 2))
def test_telescoping_identity(s, t, m, n, n_x):
    assert telescope_check(s, t, m, n, n_x)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(-1, 2), st.integers(1, 2))
def test_row_expansion_identity(r, f, a, n_x):
    assert row_expansion_check(r, f, a, n_x)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(1, 5))
def test_splitting_identity(r, f, m):
    assert splitting_check(r, f, m)


def test_identity_sides_are_not_trivially_zero():
    from flagq.genfun import row_expansion_sides, telescope_sides

    lhs, rhs = row_expansion_sides(3, 1, 0, 1)
    assert lhs == rhs and lhs
    assert lhs == star(q_kl_coeff(SeriesSpec(1, 1, 1, 0), 3))
    lhs, rhs = telescope_sides(2, 3, 1, 1, 1)
    assert lhs == rhs and lhs
