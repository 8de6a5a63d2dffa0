"""Codes: linearity, distances, perfect constructions, duals."""

import random

import pytest

from pomsetblock import (
    Code,
    DivisibilityFails,
    NotFullCount,
    NotLinear,
    SingletonCode,
    antichain_space,
    chain_space,
    construct_perfect_full,
    construct_perfect_partial,
    dual_code,
    parse_ideal,
    perp_duality_report,
    verify_perfect,
)

from helpers import random_code


def small_chain():
    return chain_space(5, (1, 1))


class TestCode:
    def test_dedup_and_order(self):
        sp = small_chain()
        c = Code(sp, [(1, 1), (0, 0), (1, 1)])
        assert [w.coords for w in c] == [(0, 0), (1, 1)]

    def test_nonempty_required(self):
        with pytest.raises(ValueError):
            Code(small_chain(), [])

    def test_linearity_is_verified(self):
        sp = small_chain()
        assert Code.from_generators(sp, [(1, 1)]).linear
        assert not Code(sp, [(0, 0), (1, 1), (2, 2)]).linear  # not closed
        assert not Code(sp, [(1, 1), (2, 2)]).linear  # no zero

    def test_span_expansion(self):
        sp = small_chain()
        c = Code.from_generators(sp, [(1, 0), (0, 1)])
        assert len(c) == 25
        assert Code.from_generators(sp, [(2, 2)]) == Code.from_generators(sp, [(1, 1)])

    def test_min_distance_small_chain(self):
        sp = small_chain()
        diagonal = Code.from_generators(sp, [(1, 1)])
        assert diagonal.min_distance("pomset") == 3
        assert diagonal.min_distance("poset") == 2

    def test_min_distance_of_whole_space(self):
        sp = small_chain()
        everything = Code(sp, [v.coords for v in sp.vectors()])
        assert everything.min_distance("pomset") == 1
        assert everything.min_distance("poset") == 1

    def test_linear_shortcut_equals_pairwise(self):
        sp = chain_space(4, (1, 2))
        rng = random.Random(5)
        for _ in range(5):
            gens = [tuple(rng.randrange(4) for _ in range(3))]
            c = Code.from_generators(sp, gens)
            if len(c) < 2:
                continue
            assert c.linear
            pairwise = min(
                (a - b).weight()
                for i, a in enumerate(c)
                for b in list(c)[i + 1:]
            )
            assert c.min_distance("pomset") == pairwise

    def test_singleton_has_no_distance(self):
        with pytest.raises(SingletonCode):
            Code(small_chain(), [(0, 0)]).min_distance()


class TestPerfectFull:
    def test_small_chain_construction(self):
        sp = small_chain()
        ideal = parse_ideal(sp, "2/1")
        code = construct_perfect_full(sp, ideal)
        assert {w.coords for w in code} == {(0, b) for b in range(5)}
        assert verify_perfect(code, ideal=ideal).is_perfect

    def test_trivial_ideals(self):
        sp = small_chain()
        assert len(construct_perfect_full(sp, parse_ideal(sp, "-"))) == 25
        assert len(construct_perfect_full(sp, parse_ideal(sp, "2/1 2/2"))) == 1

    def test_cardinality_and_distance_promise(self):
        for sp in (chain_space(4, (1, 2)), antichain_space(5, (1, 1, 1))):
            chain = sp.pomset.is_chain()
            for ideal in sp.pomset.ideals():
                if not ideal.is_full_count():
                    continue
                code = construct_perfect_full(sp, ideal)
                pinned = sum(sp.pi[i - 1] for i in ideal.root_set)
                assert len(code) == sp.m ** (sp.N - pinned)
                assert verify_perfect(code, ideal=ideal).is_perfect
                if len(code) < 2:
                    continue
                # no codeword difference fits inside the ideal (this is what
                # ball disjointness needs); on a chain, where ideals are
                # totally ordered by inclusion, it forces distance > |I|
                words = list(code)
                assert all(
                    not (a - b).support().is_submset(ideal.counts)
                    for i, a in enumerate(words)
                    for b in words[i + 1:]
                )
                if chain:
                    assert code.min_distance("pomset") > ideal.cardinality

    def test_partial_count_rejected(self):
        sp = small_chain()
        with pytest.raises(NotFullCount):
            construct_perfect_full(sp, parse_ideal(sp, "1/1"))


class TestPerfectPartial:
    def test_mod_nine_scalar(self):
        sp = antichain_space(9, (1,))
        code = construct_perfect_partial(sp, parse_ideal(sp, "1/1"))
        assert {w.coords[0] for w in code} == {0, 3, 6}
        assert verify_perfect(code, ideal=parse_ideal(sp, "1/1")).is_perfect

    def test_mod_nine_wide_block(self):
        sp = antichain_space(9, (2,))
        ideal = parse_ideal(sp, "1/1")
        code = construct_perfect_partial(sp, ideal)
        assert len(code) == 9
        assert verify_perfect(code, ideal=ideal).is_perfect

    def test_mixed_full_partial_on_chain(self):
        sp = chain_space(9, (1, 1))
        ideal = parse_ideal(sp, "4/1 1/2")
        code = construct_perfect_partial(sp, ideal)
        assert len(code) == 3  # block 1 pinned to zero, block 2 over {0,3,6}
        assert verify_perfect(code, ideal=ideal).is_perfect

    def test_free_blocks_stay_free(self):
        sp = antichain_space(9, (1, 1))
        ideal = parse_ideal(sp, "1/2")
        code = construct_perfect_partial(sp, ideal)
        assert len(code) == 27
        assert verify_perfect(code, ideal=ideal).is_perfect

    def test_divisibility_failure(self):
        sp = antichain_space(7, (1,))
        with pytest.raises(DivisibilityFails) as exc:
            construct_perfect_partial(sp, parse_ideal(sp, "1/1"))
        assert exc.value.index == 1 and exc.value.count == 1

    def test_centers_alone_are_disjoint(self):
        # the partial-block centers give disjoint balls even before the
        # free blocks are added
        sp = antichain_space(9, (1, 1))
        ideal = parse_ideal(sp, "1/2")
        centers = Code(sp, [(0, t) for t in (0, 3, 6)])
        cert = verify_perfect(centers, ideal=ideal)
        assert cert.disjoint and not cert.covering


class TestVerifyPerfect:
    def test_overlap_witness_is_genuine(self):
        sp = small_chain()
        ideal = parse_ideal(sp, "2/1")
        cert = verify_perfect(Code(sp, [(0, 0), (1, 0)]), ideal=ideal)
        assert not cert.disjoint
        v, c1, c2 = cert.overlap
        assert (v - c1).support().is_submset(ideal.counts)
        assert (v - c2).support().is_submset(ideal.counts)

    def test_uncovered_witness_is_genuine(self):
        sp = small_chain()
        ideal = parse_ideal(sp, "2/1")
        cert = verify_perfect(Code(sp, [(0, 0)]), ideal=ideal)
        assert not cert.covering
        assert not (cert.uncovered - sp.zero()).support().is_submset(ideal.counts)

    def test_single_word_with_full_ideal(self):
        sp = small_chain()
        cert = verify_perfect(Code(sp, [(0, 0)]), ideal=parse_ideal(sp, "2/1 2/2"))
        assert cert.is_perfect

    def test_radius_variant(self):
        sp = small_chain()
        diagonal = Code.from_generators(sp, [(1, 1)])
        assert verify_perfect(diagonal, radius=2).is_perfect
        assert not verify_perfect(diagonal, radius=3).is_perfect

    def test_exactly_one_parameter(self):
        sp = small_chain()
        code = Code(sp, [(0, 0)])
        with pytest.raises(ValueError):
            verify_perfect(code)
        with pytest.raises(ValueError):
            verify_perfect(code, ideal=parse_ideal(sp, "-"), radius=1)


class TestDuals:
    def test_axis_dual(self):
        sp = small_chain()
        c = Code.from_generators(sp, [(1, 0)])
        assert {w.coords for w in dual_code(c)} == {(0, b) for b in range(5)}

    def test_trivial_duals(self):
        sp = small_chain()
        zero = Code(sp, [(0, 0)])
        assert len(dual_code(zero)) == 25
        everything = Code(sp, [v.coords for v in sp.vectors()])
        assert {w.coords for w in dual_code(everything)} == {(0, 0)}

    def test_size_product(self):
        sp = small_chain()
        rng = random.Random(2)
        for _ in range(6):
            c = Code.from_generators(
                sp, [tuple(rng.randrange(5) for _ in range(2))]
            )
            assert len(c) * len(dual_code(c)) == sp.size()

    def test_requires_linearity(self):
        sp = small_chain()
        with pytest.raises(NotLinear):
            dual_code(Code(sp, [(1, 1), (2, 2)]))

    def test_perp_duality_true_and_false_instances(self):
        sp = small_chain()
        ideal = parse_ideal(sp, "2/1")
        aligned = construct_perfect_full(sp, ideal)  # the (0, b) section
        report = perp_duality_report(aligned, ideal)
        assert report.code_perfect and report.dual_perfect and report.holds
        axis = Code.from_generators(sp, [(1, 0)])
        report = perp_duality_report(axis, ideal)
        assert not report.code_perfect and not report.dual_perfect
        assert report.holds

    def test_perp_duality_random_linear_codes(self):
        sp = small_chain()
        rng = random.Random(9)
        ideal = parse_ideal(sp, "2/1")
        for _ in range(8):
            c = Code.from_generators(
                sp, [tuple(rng.randrange(5) for _ in range(2))]
            )
            assert perp_duality_report(c, ideal).holds


def test_random_codes_never_break_certificates():
    sp = chain_space(4, (1, 1))
    rng = random.Random(31)
    for _ in range(10):
        code = random_code(sp, rng, max_size=6)
        for ideal in sp.pomset.ideals():
            cert = verify_perfect(code, ideal=ideal)
            # recompute both flags naively
            balls = [
                {v.coords for v in sp.vectors()
                 if (v - c).support().is_submset(ideal.counts)}
                for c in code
            ]
            disjoint = all(
                not (balls[i] & balls[j])
                for i in range(len(balls))
                for j in range(i + 1, len(balls))
            )
            covering = set().union(*balls) == {v.coords for v in sp.vectors()}
            assert cert.disjoint == disjoint
            assert cert.covering == covering
