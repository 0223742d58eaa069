import math
from fractions import Fraction

import pytest

import buildseq as b
from buildseq import Family


class TestLabeledTrees:
    def test_counts_match_cayley(self):
        for n in range(2, 7):
            trees = list(b.labeled_trees(n))
            assert len(trees) == n ** (n - 2)
            assert len(set(trees)) == len(trees)

    def test_all_are_trees(self):
        for g in b.labeled_trees(5):
            assert g.q == 4
            assert g.is_connected()

    def test_three_vertices_all_paths(self):
        trees = list(b.labeled_trees(3))
        assert len(trees) == 3
        assert all(b.is_path_graph(g) for g in trees)

    def test_classification_at_five(self):
        trees = list(b.labeled_trees(5))
        assert sum(1 for g in trees if b.is_star_graph(g)) == 5
        assert sum(1 for g in trees if b.is_path_graph(g)) == 60

    def test_range(self):
        for n in (1, 9):
            with pytest.raises(ValueError):
                list(b.labeled_trees(n))


class TestGraphsPQ:
    def test_three_vertices_two_edges(self):
        graphs = list(b.graphs_pq(3, 2))
        assert len(graphs) == 3
        assert all(b.is_path_graph(g) for g in graphs)

    def test_complete_choice(self):
        graphs = list(b.graphs_pq(4, 6))
        assert graphs == [b.build_family("complete:4")]

    def test_count(self):
        assert sum(1 for _ in b.graphs_pq(4, 3)) == math.comb(6, 3) == 20

    def test_range(self):
        with pytest.raises(ValueError):
            list(b.graphs_pq(8, 1))
        with pytest.raises(ValueError):
            list(b.graphs_pq(3, 4))


class TestFamilyType:
    def test_membership(self):
        trees5 = Family.trees(5)
        assert trees5.contains(b.build_family("star:4"))
        assert not trees5.contains(b.build_family("cycle:5"))
        assert not trees5.contains(b.build_family("path:4"))
        fixed = Family.fixed_size(3, 2)
        assert fixed.contains(b.Graph(3, ((1, 2), (1, 3))))
        assert not fixed.contains(b.Graph(3, ((1, 2),)))

    def test_explicit_rejects_duplicates(self):
        g = b.build_family("path:2")
        with pytest.raises(ValueError):
            Family.explicit((g, g))

    def test_labels(self):
        assert Family.trees(5).label == "trees:5"
        assert Family.fixed_size(4, 3).label == "graphs:4:3"


class TestConstructability:
    def test_singleton_family_scores_one(self):
        g = b.build_family("cycle:4")
        family = Family.explicit((g,))
        assert b.constructability(g, family) == 1

    def test_relabelings_average_to_the_common_count(self):
        import itertools

        g = b.build_family("path:3")
        members = tuple(
            b.relabel(g, sigma) for sigma in itertools.permutations((1, 2, 3))
        )
        family = Family.explicit(members)
        assert b.family_average(family) == b.count_dp(g) == 16

    def test_star_beats_path_among_five_vertex_trees(self):
        family = Family.trees(5)
        star = b.build_family("star:4")
        path = b.build_family("path:5")
        assert b.constructability(star, family) > b.constructability(path, family)

    def test_extremes_at_six_vertices(self):
        trees = list(b.labeled_trees(6))
        counts = {g: b.count_dp(g) for g in trees}
        best = max(counts.values())
        worst = min(counts.values())
        for g, count in counts.items():
            if count == best:
                assert b.is_star_graph(g)
            if count == worst:
                assert b.is_path_graph(g)

    def test_average_is_exact(self):
        family = Family.trees(4)
        total = sum(b.count_dp(g) for g in b.labeled_trees(4))
        assert b.family_average(family) == Fraction(total, 16)

    def test_membership_required(self):
        with pytest.raises(ValueError):
            b.constructability(b.build_family("cycle:4"), Family.trees(4))

    def test_empty_family(self):
        with pytest.raises(ValueError):
            b.family_average(Family.explicit(()))
