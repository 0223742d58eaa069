import itertools
import math
import random

import pytest

import buildseq as b
from buildseq import Poset
from buildseq.errors import ResourceLimitError

from conftest import make_random_graph


def count_extensions_by_permutation_filter(poset: Poset) -> int:
    """Independent oracle: try all n! orders against the cover constraints."""
    count = 0
    for perm in itertools.permutations(range(poset.n)):
        pos = {x: i for i, x in enumerate(perm)}
        if all(pos[lo] < pos[hi] for lo, hi in poset.covers):
            count += 1
    return count


class TestPosetType:
    def test_cycle_rejected(self):
        with pytest.raises(ValueError):
            Poset(3, ((0, 1), (1, 2), (2, 0)))

    def test_redundant_cover_rejected(self):
        with pytest.raises(ValueError):
            Poset(3, ((0, 1), (1, 2), (0, 2)))

    def test_duplicate_cover_rejected(self):
        with pytest.raises(ValueError):
            Poset(2, ((0, 1), (0, 1)))

    def test_self_cover_rejected(self):
        with pytest.raises(ValueError):
            Poset(2, ((1, 1),))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            Poset(2, ((0, 2),))


class TestCounting:
    def test_antichain_counts_all_orders(self):
        for n in range(5):
            assert b.count_linear_extensions(Poset(n, ())) == math.factorial(n)

    def test_chain_counts_one(self):
        for n in range(1, 6):
            covers = tuple((i, i + 1) for i in range(n - 1))
            assert b.count_linear_extensions(Poset(n, covers)) == 1

    def test_incidence_poset_of_short_path(self):
        poset = b.incidence_poset(b.build_family("path:3"))
        assert b.count_linear_extensions(poset) == 16

    def test_extremes_characterize_structure(self):
        rng = random.Random(7)
        samples = [Poset(4, ((0, 1), (1, 2), (2, 3)))]  # a chain, count 1
        for _ in range(30):
            n = rng.randint(1, 6)
            covers = []
            for lo in range(n):
                for hi in range(lo + 1, n):
                    if rng.random() < 0.3:
                        covers.append((lo, hi))
            try:
                samples.append(Poset(n, tuple(covers)))
            except ValueError:
                continue  # redundant or otherwise invalid sample
        for poset in samples:
            count = b.count_linear_extensions(poset)
            assert 1 <= count <= math.factorial(poset.n)
            if count == math.factorial(poset.n):
                assert poset.covers == ()
            if count == 1:
                self._assert_total_order(poset)
            assert count == count_extensions_by_permutation_filter(poset)

    @staticmethod
    def _assert_total_order(poset):
        above = poset.upper_adjacency()
        reachable = []
        for start in range(poset.n):
            seen: set[int] = set()
            stack = list(above[start])
            while stack:
                x = stack.pop()
                if x not in seen:
                    seen.add(x)
                    stack.extend(above[x])
            reachable.append(seen)
        for i in range(poset.n):
            for j in range(i + 1, poset.n):
                assert j in reachable[i] or i in reachable[j]

    def test_matches_oracle_on_small_graphs(self, named_families):
        for g in named_families.values():
            if g.element_count > 8:
                continue
            poset = b.incidence_poset(g)
            assert (
                b.count_linear_extensions(poset)
                == count_extensions_by_permutation_filter(poset)
            )

    def test_renumbering_invariance(self):
        rng = random.Random(11)
        base = b.incidence_poset(b.build_family("star:3"))
        reference = b.count_linear_extensions(base)
        for _ in range(5):
            perm = list(range(base.n))
            rng.shuffle(perm)
            relabeled = b.relabel_poset(base, perm)
            assert b.count_linear_extensions(relabeled) == reference

    def test_state_cap(self):
        wide = Poset(24, ())
        with pytest.raises(ResourceLimitError):
            b.count_linear_extensions(wide, max_states=1000)


class TestHypergraphs:
    def test_single_hyperedge_over_all_vertices(self):
        poset = b.poset_from_hypergraph(3, [{1, 2, 3}])
        assert b.count_linear_extensions(poset) == 6

    def test_graph_edges_match_incidence_poset(self):
        g = b.build_family("path:3")
        poset = b.poset_from_hypergraph(3, [set(pair) for pair in g.edges])
        assert poset == b.incidence_poset(g)
        assert b.count_linear_extensions(poset) == 16

    def test_two_singleton_hyperedges(self):
        # Two independent vertex-below-edge chains; their shuffles are C(4,2).
        poset = b.poset_from_hypergraph(2, [{1}, {2}])
        assert count_extensions_by_permutation_filter(poset) == 6
        assert b.count_linear_extensions(poset) == 6

    def test_errors(self):
        with pytest.raises(ValueError):
            b.poset_from_hypergraph(2, [set()])
        with pytest.raises(ValueError):
            b.poset_from_hypergraph(2, [{3}])


TRIANGLE_BOUNDARY = [
    ("a", {1}),
    ("b", {2}),
    ("c", {3}),
    ("ab", {1, 2}),
    ("bc", {2, 3}),
    ("ac", {1, 3}),
]


class TestFacePosets:
    def test_triangle_boundary_matches_three_cycle(self):
        poset = b.poset_from_faces(TRIANGLE_BOUNDARY)
        cycle_poset = b.incidence_poset(b.build_family("cycle:3"))
        assert sorted(poset.covers) == sorted(cycle_poset.covers)
        assert b.count_linear_extensions(poset) == 48
        assert b.count_bruteforce(b.build_family("cycle:3")) == 48

    def test_solid_triangle_against_permutation_filter(self):
        poset = b.poset_from_faces(TRIANGLE_BOUNDARY + [("abc", {1, 2, 3})])
        assert poset.n == 7
        expected = count_extensions_by_permutation_filter(poset)
        assert b.count_linear_extensions(poset) == expected

    def test_single_vertex(self):
        poset = b.poset_from_faces([("a", {1})])
        assert b.count_linear_extensions(poset) == 1

    def test_duplicate_ids_rejected(self):
        with pytest.raises(ValueError):
            b.poset_from_faces([("a", {1}), ("a", {2})])

    def test_missing_singleton_rejected(self):
        with pytest.raises(ValueError):
            b.poset_from_faces([("a", {1}), ("ab", {1, 2})])


class TestAgainstGraphCounts:
    def test_incidence_counts_equal_brute_force(self):
        rng = random.Random(99)
        for _ in range(25):
            g = make_random_graph(rng, max_elements=8)
            assert b.count_linear_extensions(b.incidence_poset(g)) == b.count_bruteforce(g)


class TestTextFormat:
    def test_round_trip(self):
        poset = b.incidence_poset(b.build_family("star:2"))
        assert b.parse_poset(b.format_poset(poset)) == poset

    def test_parse(self):
        poset = b.parse_poset("3\n0 2\n1 2\n")
        assert poset == Poset(3, ((0, 2), (1, 2)))

    def test_errors(self):
        for text in ("", "x\n", "2\n0\n"):
            with pytest.raises(ValueError):
                b.parse_poset(text)
