"""Merge engine: single merges, full reductions, order invariance."""

import itertools

import pytest

from stereograph import (
    InvalidOrder,
    PairAbsent,
    TooLarge,
    check_order_invariance,
    enumerate_all,
    from_pattern,
    merge_pairs,
    reduce_to_k2,
    two_coloring,
)
from stereograph.merge import PairedGraph


def start(g):
    return PairedGraph.from_stereotype(g)


class TestMergePairs:
    def test_all_crossed_merge_gives_four_cycle(self, k33):
        outcome = merge_pairs(start(k33), 1, 2)
        assert outcome.merged
        pg = outcome.graph
        assert pg.pairs == (1, 3)
        # Crossed wiring pairs u1.1 with u1.2 and u2.1 with u2.2.
        assert pg.class_map[0] == frozenset({0, 2})
        assert pg.class_map[1] == frozenset({1, 3})
        # The surviving two pairs induce a 4-cycle again: every vertex
        # has exactly two of the four as neighbors.
        current = sorted(pg.class_map)
        degrees = {
            v: sum(pg.has_edge(v, w) for w in current if w != v) for v in current
        }
        assert set(degrees.values()) == {2}

    def test_ladder_merge_succeeds_then_blocks(self, kl3):
        first = merge_pairs(start(kl3), 1, 2)
        assert first.merged
        pg = first.graph
        # The merged classes absorb one vertex of each side, so both are
        # now adjacent to both vertices of pair 3.
        assert pg.class_map[0] == frozenset({0, 3})
        assert all(pg.has_edge(0, w) for w in (4, 5))
        assert all(pg.has_edge(1, w) for w in (4, 5))
        second = merge_pairs(pg, 1, 3)
        assert not second.merged
        tri = second.blocking_triangle
        assert len(tri) == 3
        assert all(pg.has_edge(u, v) for u, v in itertools.combinations(tri, 2))

    def test_absent_pair_raises(self, k33):
        with pytest.raises(PairAbsent):
            merge_pairs(start(k33), 1, 4)
        with pytest.raises(PairAbsent):
            merge_pairs(start(k33), 2, 2)

    def test_each_merge_drops_one_pair_and_partitions(self, all_st4):
        for g in all_st4:
            outcome = merge_pairs(start(g), 2, 4)
            if not outcome.merged:
                continue
            pg = outcome.graph
            assert len(pg.pairs) == 3
            members = [m for _, m in pg.classes]
            assert sorted(v for s in members for v in s) == list(range(8))


class TestReduceToK2:
    def test_all_crossed_reduces_to_sides(self, k33):
        verdict = reduce_to_k2(k33)
        assert verdict.stable
        partition = {frozenset(s) for s in verdict.final_graph.class_partition()}
        assert partition == {frozenset({0, 2, 4}), frozenset({1, 3, 5})}
        assert len(verdict.steps) == 2

    def test_ladder_blocks_with_triangle_witness(self, kl3):
        verdict = reduce_to_k2(kl3)
        assert not verdict.stable
        assert verdict.blocking_witness is not None

    def test_single_pair_trivially_stable(self):
        verdict = reduce_to_k2(from_pattern(1, []))
        assert verdict.stable
        assert verdict.steps == ()

    def test_explicit_order(self, k33):
        verdict = reduce_to_k2(k33, order=[(2, 3), (1, 2)])
        assert verdict.stable

    def test_order_wrong_length(self, k33):
        with pytest.raises(InvalidOrder):
            reduce_to_k2(k33, order=[(1, 2)])

    def test_order_with_dead_pair(self, k33):
        # After merging (1, 2) the label 2 is gone.
        with pytest.raises(InvalidOrder):
            reduce_to_k2(k33, order=[(1, 2), (2, 3)])

    def test_stable_classes_are_proper_transversals(self, all_st4):
        for g in all_st4:
            verdict = reduce_to_k2(g)
            if not verdict.stable:
                continue
            sides = list(verdict.final_graph.class_partition())
            assert [len(s) for s in sides] == [4, 4]
            for side in sides:
                assert {v // 2 for v in side} == {0, 1, 2, 3}
                assert not any(
                    g.graph.has_edge(u, v) for u, v in itertools.combinations(side, 2)
                )


class TestCommutation:
    @pytest.mark.parametrize("n", [3, 4])
    def test_adjacent_merges_commute(self, n):
        for g in enumerate_all(n):
            pg = PairedGraph.from_stereotype(g)
            moves = list(itertools.combinations(pg.pairs, 2))
            for first, second in itertools.permutations(moves, 2):
                one = merge_pairs(pg, *first)
                if not one.merged:
                    continue
                survivor = min(first)
                second_alive = tuple(
                    survivor if p == max(first) else p for p in second
                )
                if second_alive[0] == second_alive[1]:
                    continue
                two = merge_pairs(one.graph, *sorted(second_alive))
                swap_one = merge_pairs(pg, *second)
                if not (two.merged and swap_one.merged):
                    continue
                swap_survivor = min(second)
                first_alive = tuple(
                    swap_survivor if p == max(second) else p for p in first
                )
                if first_alive[0] == first_alive[1]:
                    continue
                swap_two = merge_pairs(swap_one.graph, *sorted(first_alive))
                if not swap_two.merged:
                    continue
                a, b = two.graph, swap_two.graph
                assert a.pairs == b.pairs
                assert a.edges == b.edges
                assert a.classes == b.classes


class TestOrderInvariance:
    @pytest.mark.parametrize("bits", [(1, 1, 1), (0, 0, 0)])
    def test_examples(self, bits):
        assert check_order_invariance(from_pattern(3, list(bits)))

    def test_exhaustive_four_pairs(self, all_st4):
        for g in all_st4:
            assert check_order_invariance(g)

    def test_bound_enforced(self):
        with pytest.raises(TooLarge):
            check_order_invariance(from_pattern(6, [0] * 15))

    def test_verdict_matches_two_colorability(self, all_st4):
        for g in all_st4:
            stable = reduce_to_k2(g).stable
            assert stable == (two_coloring(g.graph).coloring is not None)
