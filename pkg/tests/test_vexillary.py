import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagq.pfaffian import ivanov_q_pf
from flagq.polyring import swap_xz
from flagq.shapes_tableaux import FlaggedStrictPartition
from flagq.vexillary import (
    Triple,
    all_triples,
    essential_triples,
    invert_triple,
    ivanov_via_flagged,
    lagrangian_triple,
    reduce_to_essential,
    schubert_vexillary,
    shape_from_triple,
    triple_hypothesis_report,
    triple_shape,
    triples_equivalent,
)


def test_triple_validation():
    with pytest.raises(ValueError):
        Triple((2, 1), (1, 1), (1, 1))
    with pytest.raises(ValueError):
        Triple((1, 2), (1, 2), (1, 1))
    with pytest.raises(ValueError):
        Triple((1, 3), (1, 1), (2, 1))  # 2 > 0 + 1
    with pytest.raises(ValueError):
        Triple((1,), (0,), (1,))
    with pytest.raises(ValueError):
        Triple((), (), ())
    t = Triple((1, 3), (2, 1), (3, 1))
    assert t.slack(0) == 1 + 2 - 2
    assert t.is_essential()
    assert Triple.from_json_obj(t.to_json_obj()) == t


def test_reduction_removes_tight_positions():
    t = Triple((1, 2), (2, 1), (2, 2))  # slack 1 + 0 - 1 = 0
    assert not t.is_essential()
    assert reduce_to_essential(t) == Triple((2,), (1,), (2,))
    assert triples_equivalent(t, Triple((2,), (1,), (2,)))


nonessential = st.sampled_from([t for t in all_triples(4, 3, 3) if not t.is_essential()])


@given(nonessential, st.randoms(use_true_random=False))
def test_reduction_is_order_independent(t, rnd):
    order = list(range(len(t)))
    rnd.shuffle(order)
    assert reduce_to_essential(t, order) == reduce_to_essential(t)


@given(st.sampled_from(list(all_triples(3, 3, 3))))
def test_inversion_is_an_involution(t):
    assert invert_triple(invert_triple(t)) == t
    assert invert_triple(t).is_essential() == t.is_essential()


@given(st.lists(st.integers(1, 6), min_size=1, max_size=3, unique=True))
def test_lagrangian_shapes(q):
    q = sorted(q, reverse=True)
    t = lagrangian_triple(q)
    shape = triple_shape(t)
    assert shape == FlaggedStrictPartition(tuple(q), (0,) * len(q))
    assert schubert_vexillary(t, 2, "tableau") == ivanov_q_pf(q, 2)


def test_shape_from_triple_examples():
    assert shape_from_triple(Triple((2,), (2,), (2,))) == FlaggedStrictPartition((4, 3), (1, 1))
    assert shape_from_triple(Triple((1, 3), (3, 1), (2, 1))) == FlaggedStrictPartition((4, 2, 1), (2, 0, 0))
    with pytest.raises(ValueError):
        shape_from_triple(Triple((1, 2), (2, 1), (2, 2)))


def test_triples_outside_the_pfaffian_hypotheses():
    bad = [t for t in essential_triples(3, 4, 4) if triple_hypothesis_report(t)]
    assert sorted((t.k, t.p, t.q) for t in bad) == [((1, 3), (4, 1), (q, q)) for q in range(1, 5)]
    for t in bad:
        assert schubert_vexillary(t, 2, "pfaffian") == schubert_vexillary(t, 2, "tableau")


@given(st.sampled_from(list(essential_triples(3, 3, 3))))
def test_routes_agree_and_inverse_swaps(t):
    tab = schubert_vexillary(t, 2, "tableau")
    assert schubert_vexillary(t, 2, "pfaffian") == tab
    assert swap_xz(tab) == schubert_vexillary(invert_triple(t), 2, "tableau")


@given(nonessential)
def test_equivalent_triples_share_polynomials(t):
    assert schubert_vexillary(t, 1, "tableau") == schubert_vexillary(reduce_to_essential(t), 1, "tableau")


@pytest.mark.parametrize("lam", [(1,), (3,), (2, 1), (4, 2), (3, 2, 1)])
def test_monomial_formula_for_factorial_q(lam):
    for n_x in (2, 3):
        assert ivanov_via_flagged(lam, n_x) == ivanov_q_pf(lam, n_x)


def test_unknown_method():
    with pytest.raises(ValueError):
        schubert_vexillary(Triple((1,), (1,), (1,)), 1, "magic")
