import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagq.polyring import (
    ONE,
    ZERO,
    Polynomial,
    VarClass,
    Variable,
    b,
    const,
    from_json_obj,
    is_symmetric_x,
    monomial_sort_key,
    parse_json,
    parse_text,
    product,
    star,
    swap_xz,
    x,
    z,
)

variables = st.one_of(
    st.builds(lambda i: Variable(VarClass.X, i), st.integers(1, 3)),
    st.builds(lambda i: Variable(VarClass.Z, i), st.integers(1, 3)),
    st.builds(lambda i: Variable(VarClass.B, i), st.integers(-2, 3)),
)
monomials = st.dictionaries(variables, st.integers(1, 3), max_size=3)
polys = st.lists(st.tuples(st.integers(-5, 5), monomials), max_size=5).map(Polynomial.from_terms)
positive_b_polys = polys.map(star)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p and p + ZERO == p
    assert p * 0 == ZERO


@given(polys, st.integers(0, 3))
def test_power_is_repeated_product(p, n):
    assert p ** n == product([p] * n)


@given(polys, polys)
def test_star_is_ring_homomorphism(p, q):
    assert star(p * q) == star(p) * star(q)
    assert star(p + q) == star(p) + star(q)


@given(polys)
def test_star_idempotent_and_clears_nonpositive_b(p):
    s = star(p)
    assert star(s) == s
    assert all(v.index >= 1 for v in s.variables() if v.cls == VarClass.B)


def test_star_values():
    assert star(b(0)) == -b(1)
    assert star(b(-2)) == -b(3)
    assert star(b(2) * b(-1)) == -b(2) ** 2
    assert star(b(0) ** 2) == b(1) ** 2


@given(positive_b_polys)
def test_swap_xz_involution(p):
    assert swap_xz(swap_xz(p)) == p


def test_swap_xz_values_and_rejection():
    assert swap_xz(x(1) + z(2) * b(3)) == x(1) + b(2) * z(3)
    with pytest.raises(ValueError):
        swap_xz(b(0))


@given(polys)
def test_text_round_trip(p):
    assert parse_text(p.to_text()) == p


@given(polys)
def test_json_round_trip(p):
    assert parse_json(p.to_json()) == p
    assert from_json_obj(json.loads(p.to_json())) == p


@given(polys)
def test_rendering_is_canonical(p):
    # construction history must not leak into the output
    q = Polynomial.from_terms(reversed([(c, e) for e, c in p.items()]))
    assert p.to_text() == q.to_text()
    assert p.to_json() == q.to_json()


@given(st.lists(monomials, min_size=2, max_size=6, unique_by=lambda m: tuple(sorted(m.items()))))
def test_monomial_order_is_total_and_graded(ms):
    keys = [monomial_sort_key(m) for m in ms]
    assert len(set(keys)) == len(keys)
    for m, k in zip(ms, keys):
        assert k[0] == sum(m.values())


def test_rendering_examples():
    p = x(1) ** 2 * b(-1) * 2 - z(1) * 3
    assert p.to_text() == "2*x1^2*b-1 - 3*z1"
    assert json.loads(p.to_json()) == {
        "terms": [{"c": "2", "m": {"x1": 2, "b-1": 1}}, {"c": "-3", "m": {"z1": 1}}]
    }
    assert ZERO.to_text() == "0"
    assert (z(1) - b(2)).to_text() == "z1 - b2"
    assert (x(2) + x(1)).to_text() == "x1 + x2"
    assert const(-4).to_text() == "-4"


@pytest.mark.parametrize("bad", ["", "x0", "y1", "x1 +", "x1 ++ x2", "2**x1", "z-1"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_text(bad)


def test_degree_overflow_is_detected():
    big = Polynomial.from_terms([(1, {Variable(VarClass.X, 1): 40000})])
    with pytest.raises(OverflowError):
        big * big
    with pytest.raises(OverflowError):
        x(1) ** 70000


def test_symmetry_check():
    assert is_symmetric_x(x(1) * x(2) + x(1) + x(2) + b(1), 2)
    assert not is_symmetric_x(x(1) ** 2 * x(2), 2)
    assert is_symmetric_x(x(1) ** 2 * x(2), 1)
    assert not is_symmetric_x(x(1) + x(2), 3)


def test_homogeneity():
    assert (x(1) * z(1) + b(2) ** 2).is_homogeneous(2)
    assert not (x(1) + b(2) ** 2).is_homogeneous()
    assert ZERO.is_homogeneous(5)
