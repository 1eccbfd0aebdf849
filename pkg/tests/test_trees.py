from itertools import product

import pytest

from hurwitz.trees import (
    LabeledTree,
    OracleScaleError,
    count_alternating_trees,
    is_alternating,
    prufer_decode,
)


class TestPruferDecode:
    def test_two_vertices(self):
        assert prufer_decode([]) == LabeledTree(2, ((1, 2),))

    def test_star_at_three(self):
        tree = prufer_decode([3])
        assert set(tree.edges) == {(1, 3), (2, 3)}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            prufer_decode([5, 1])

    @pytest.mark.parametrize("m", range(2, 8))
    def test_cayley_count_and_distinctness(self, m):
        seen = {
            frozenset(prufer_decode(seq).edges)
            for seq in product(range(1, m + 1), repeat=m - 2)
        }
        assert len(seen) == m ** (m - 2)


class TestIsAlternating:
    def test_path_is_not(self):
        assert not is_alternating(LabeledTree(3, ((1, 2), (2, 3))))

    def test_star_at_min_is(self):
        assert is_alternating(LabeledTree(3, ((1, 2), (1, 3))))

    def test_single_edge_is(self):
        assert is_alternating(LabeledTree(2, ((1, 2),)))


class TestCount:
    def test_small_counts(self):
        assert count_alternating_trees(1) == 1
        assert count_alternating_trees(2) == 1
        assert count_alternating_trees(3) == 2
        assert count_alternating_trees(4) == 7

    def test_cap(self):
        with pytest.raises(OracleScaleError):
            count_alternating_trees(10)

    @pytest.mark.parametrize("m", range(2, 8))
    def test_relabel_duality(self, m):
        # v -> m+1-v maps alternating trees to alternating trees bijectively
        total = 0
        reversed_total = 0
        for seq in product(range(1, m + 1), repeat=m - 2):
            tree = prufer_decode(seq)
            flipped = LabeledTree(
                m,
                tuple(
                    tuple(sorted((m + 1 - u, m + 1 - v))) for u, v in tree.edges
                ),
            )
            total += is_alternating(tree)
            reversed_total += is_alternating(flipped)
        assert total == reversed_total == count_alternating_trees(m)
