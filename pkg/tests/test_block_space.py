"""Vectors, supports, weights, and the metric axioms at desk scale."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pomsetblock import (
    BlockSpace,
    DimensionMismatch,
    Multiset,
    NonUnitBlocks,
    Pomset,
    SpaceMismatch,
    SpaceTooLarge,
    antichain_space,
    block_max_lee,
    chain_space,
    lee_weight,
    pw_weight,
    space_with_order,
)

from helpers import wide_space


class TestLeeWeight:
    def test_values(self):
        assert lee_weight(5, 7) == 2
        assert lee_weight(0, 7) == 0
        assert lee_weight(3, 6) == 3  # the unique heaviest residue for even m

    def test_symmetry_and_range(self):
        for m in range(2, 12):
            for x in range(m):
                w = lee_weight(x, m)
                assert 0 <= w <= m // 2
                assert w == lee_weight(m - x, m)
                assert (w == 0) == (x == 0)

    def test_block_max(self):
        assert block_max_lee((0, 1, 0, 1), 7) == 1
        assert block_max_lee((2, 0), 7) == 2
        assert block_max_lee((0, 0, 0), 7) == 0


class TestConstruction:
    def test_height_must_match_modulus(self):
        with pytest.raises(ValueError):
            BlockSpace(5, Pomset(2, 3), (1, 1))

    def test_block_count_must_match(self):
        with pytest.raises(DimensionMismatch):
            BlockSpace(5, Pomset(2, 2), (1, 1, 1))

    def test_residues_reduced_not_rejected(self):
        sp = chain_space(5, (1, 1))
        assert sp.vector((7, -1)).coords == (2, 4)

    def test_vector_length_checked(self):
        sp = chain_space(5, (1, 2))
        with pytest.raises(DimensionMismatch):
            sp.vector((1, 2))

    def test_space_mismatch_between_vectors(self):
        a = chain_space(5, (1, 1)).zero()
        b = antichain_space(5, (1, 1)).zero()
        with pytest.raises(SpaceMismatch):
            a + b

    def test_enumeration_guard(self):
        sp = chain_space(5, (1, 1))
        with pytest.raises(SpaceTooLarge):
            list(sp.vectors(cap=24))
        assert len(list(sp.vectors(cap=25))) == 25

    def test_odometer_order(self):
        sp = chain_space(3, (1, 1))
        got = [v.coords for v in sp.vectors()]
        assert got[:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]


class TestSupportAndWeight:
    def test_wide_space_block_support(self):
        sp = wide_space()
        v = sp.parse_vector("0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 2 0")
        assert v.support() == Multiset.parse("1/4 2/6", 6, 3)
        assert v.weight() == 12
        assert v.poset_weight() == 5

    def test_free_lower_blocks_do_not_change_the_weight(self):
        sp = wide_space()
        v = sp.parse_vector("3 1 2 5 6 0 0 0 0 0 1 0 1 4 2 0 2 0")
        assert v.weight() == 12

    def test_zero_vector(self):
        sp = wide_space()
        assert sp.zero().support() == Multiset.empty(6, 3)
        assert sp.zero().weight() == 0
        assert sp.zero().poset_weight() == 0

    def test_full_support(self):
        sp = antichain_space(4, (1, 2))
        v = sp.vector((2, 0, 2))
        assert v.support() == Multiset.full(2, 2)
        assert v.weight() == 4

    def test_small_chain_weight(self):
        sp = chain_space(5, (1, 1))
        assert sp.vector((0, 1)).weight() == 3  # filled bottom plus Lee 1 on top
        assert sp.vector((2, 0)).weight() == 2

    def test_antichain_poset_weight_counts_nonzero_blocks(self):
        sp = antichain_space(5, (1, 2, 1))
        assert sp.vector((1, 0, 0, 3)).poset_weight() == 2

    def test_distance_uses_difference(self):
        sp = chain_space(5, (1, 1))
        assert sp.distance(sp.vector((1, 1)), sp.vector((1, 1))) == 0
        assert sp.distance(sp.vector((0, 1)), sp.vector((0, 0))) == 3
        assert sp.poset_distance(sp.vector((0, 1)), sp.vector((0, 0))) == 2

    def test_weight_bound_and_negation(self):
        for sp in (chain_space(6, (1, 2)), antichain_space(7, (2, 1))):
            bound = sp.n * sp.max_lee
            for v in sp.vectors():
                w = v.weight()
                assert 0 <= w <= bound
                assert w == (-v).weight()


class TestUnitBlockWeights:
    def test_pw_weight_matches_hand_value(self):
        sp = chain_space(5, (1, 1))
        assert pw_weight(sp.vector((3, 1))) == 3

    def test_rejects_wide_blocks(self):
        with pytest.raises(NonUnitBlocks):
            pw_weight(chain_space(5, (1, 2)).zero())

    def test_pointwise_equal_to_block_weight(self):
        for sp in (
            chain_space(5, (1, 1)),
            antichain_space(6, (1, 1, 1)),
            space_with_order(7, (1, 1, 1), [(1, 3)]),
        ):
            for v in sp.vectors():
                assert pw_weight(v) == v.weight()


random_spaces = st.integers(4, 9).flatmap(
    lambda m: st.integers(1, 3).flatmap(
        lambda n: st.tuples(
            st.just(m),
            st.lists(st.integers(1, 2), min_size=n, max_size=n),
            st.lists(
                st.tuples(st.integers(1, n), st.integers(1, n)).filter(
                    lambda ij: ij[0] < ij[1]
                ),
                max_size=3,
            ),
        )
    )
)


@given(random_spaces, st.data())
@settings(max_examples=120)
def test_weight_subadditive_on_random_orders(config, data):
    m, pi, pairs = config
    sp = space_with_order(m, tuple(pi), pairs)
    coords = st.tuples(*[st.integers(0, m - 1)] * sp.N)
    u = sp.vector(data.draw(coords))
    v = sp.vector(data.draw(coords))
    assert (u + v).weight() <= u.weight() + v.weight()
    assert u.weight() == (-u).weight()
    assert (u.weight() == 0) == u.is_zero


@pytest.mark.parametrize("m", [4, 5])
@pytest.mark.parametrize("order", ["chain", "antichain"])
def test_metric_axioms_exhaustive(m, order):
    sp = chain_space(m, (1, 2)) if order == "chain" else antichain_space(m, (1, 2))
    vecs = list(sp.vectors())
    for u in vecs:
        for v in vecs:
            d = sp.distance(u, v)
            assert d == sp.distance(v, u)
            assert (d == 0) == (u == v)
    # triangle inequality via translation: w(x + y) <= w(x) + w(y)
    for x in vecs:
        wx = x.weight()
        for y in vecs:
            assert (x + y).weight() <= wx + y.weight()


def test_tiny_moduli_behave():
    # m = 2 and m = 3 have height 1: every ideal is full count and the
    # weight counts down-closed block positions
    for m in (2, 3):
        sp = chain_space(m, (1, 2))
        assert sp.max_lee == 1
        for v in sp.vectors():
            assert v.weight() == v.poset_weight()
            assert v.weight() == (-v).weight()
        from pomsetblock import weight_distribution, weight_distribution_enumerated

        assert (
            weight_distribution(sp).shells
            == weight_distribution_enumerated(sp).shells
        )
        assert all(i.is_full_count() for i in sp.pomset.ideals())


def test_ball_containment_between_metrics():
    # poset-ball of radius t sits inside the block-metric ball of radius
    # t*h, and stays inside for radius t*h + k as well
    sp = space_with_order(5, (1, 2), [(1, 2)])
    h = sp.max_lee
    x = sp.vector((1, 0, 3))
    for t in range(1, sp.n + 1):
        poset_ball = {v.coords for v in sp.vectors()
                      if sp.poset_distance(x, v) <= t}
        pm_ball = {v.coords for v in sp.vectors()
                   if sp.distance(x, v) <= t * h}
        assert poset_ball <= pm_ball
        if t < sp.n:
            for k in range(1, h + 1):
                bigger = {v.coords for v in sp.vectors()
                          if sp.distance(x, v) <= t * h + k}
                assert poset_ball <= bigger
