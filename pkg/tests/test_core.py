"""Structural layer: hypergraph storage, walk checking, position shifts."""

import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bergeham import (
    BergeCycle,
    BergePath,
    DegreeSequence,
    DomainError,
    Hypergraph,
    incidence_bipartite,
    shift_left,
    shift_right,
    verify_berge_cycle,
    verify_berge_path,
)


def small_hypergraphs():
    """Strategy: hypergraphs with 1..7 vertices and simple random edges."""

    def build(draw):
        n = draw(st.integers(min_value=1, max_value=7))
        universe = [
            frozenset(c)
            for size in range(1, n + 1)
            for c in itertools.combinations(range(n), size)
        ]
        picked = draw(st.lists(st.sampled_from(universe), max_size=12, unique=True))
        return Hypergraph(n, picked)

    return st.composite(lambda draw: build(draw))()


class TestHypergraph:
    def test_edges_stored_in_size_then_lex_order(self):
        hg = Hypergraph(5, [[2, 3, 4], [0, 1], [1, 2], [0, 1, 2]])
        assert [hg.edge_tuple(i) for i in range(4)] == [
            (0, 1),
            (1, 2),
            (0, 1, 2),
            (2, 3, 4),
        ]

    def test_input_order_does_not_matter(self):
        a = Hypergraph(4, [[0, 1, 2], [2, 3]])
        b = Hypergraph(4, [[3, 2], [2, 0, 1]])
        assert a == b
        assert a.edge_masks == b.edge_masks

    def test_duplicate_edge_rejected_even_across_orderings(self):
        with pytest.raises(DomainError, match="duplicate edge"):
            Hypergraph(4, [[0, 1, 2], [2, 1, 0]])

    def test_empty_edge_rejected(self):
        with pytest.raises(DomainError, match="empty edges"):
            Hypergraph(3, [[0, 1], []])

    def test_vertex_out_of_range_rejected(self):
        with pytest.raises(DomainError, match="out of range"):
            Hypergraph(3, [[0, 3]])
        with pytest.raises(DomainError):
            Hypergraph(3, [[-1, 0]])

    def test_vertex_count_limits(self):
        with pytest.raises(DomainError):
            Hypergraph(-1)
        with pytest.raises(DomainError, match="at most 63"):
            Hypergraph(64)
        assert Hypergraph(63).n == 63
        assert Hypergraph(0).num_edges == 0

    def test_singleton_edges_are_allowed(self):
        hg = Hypergraph(3, [[1], [0, 1]])
        assert hg.edge_tuple(0) == (1,)
        assert hg.degree(1) == 2

    def test_degrees_match_naive_count(self):
        edges = [[0, 1, 2], [1, 2], [2, 3], [0, 3], [3]]
        hg = Hypergraph(4, edges)
        counts = Counter(v for e in edges for v in e)
        for v in range(4):
            assert hg.degree(v) == counts[v]
        assert hg.degree_sequence().values == tuple(
            sorted(counts[v] for v in range(4))
        )
        assert hg.degree_sequence().source == "computed"

    def test_neighborhood_excludes_self(self):
        hg = Hypergraph(5, [[0, 1, 2], [2, 3], [4]])
        assert hg.neighborhood(2) == {0, 1, 3}
        assert hg.neighborhood(4) == frozenset()

    def test_closed_neighborhood_set(self):
        hg = Hypergraph(5, [[0, 1, 2], [2, 3], [4]])
        assert hg.closed_neighborhood_set([0]) == {0, 1, 2}
        assert hg.closed_neighborhood_set([0, 3]) == {0, 1, 2, 3}
        assert hg.closed_neighborhood_set([]) == frozenset()

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_degree_sequence_invariant_under_relabelling(self, data):
        hg = data.draw(small_hypergraphs())
        perm = data.draw(st.permutations(range(hg.n)))
        relabeled = Hypergraph(hg.n, [{perm[v] for v in e} for e in hg.edges])
        assert relabeled.degree_sequence().values == hg.degree_sequence().values
        assert relabeled.num_edges == hg.num_edges


class TestDegreeSequence:
    def test_one_based_access(self):
        d = DegreeSequence((1, 2, 2, 5))
        assert d.at(1) == 1
        assert d.at(4) == 5
        assert d.n == 4
        with pytest.raises(DomainError):
            d.at(0)
        with pytest.raises(DomainError):
            d.at(5)

    def test_must_be_ascending_and_nonnegative(self):
        with pytest.raises(DomainError, match="ascending"):
            DegreeSequence((2, 1))
        with pytest.raises(DomainError, match="negative"):
            DegreeSequence((-1, 0))


class TestWalkChecking:
    def setup_method(self):
        self.hg = Hypergraph(5, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 4], [0, 3, 4]])

    def test_valid_path(self):
        p = BergePath((0, 1, 3, 4), (1, 3, 4))
        assert verify_berge_path(self.hg, p).ok

    def test_valid_cycle(self):
        c = BergeCycle((0, 1, 3, 4), (1, 3, 4, 0))
        assert verify_berge_cycle(self.hg, c).ok

    def test_cycle_needs_equal_counts(self):
        v = verify_berge_cycle(self.hg, BergeCycle((0, 1, 3), (0, 1)))
        assert not v.ok and "equally many" in v.reason

    def test_path_needs_one_more_vertex(self):
        v = verify_berge_path(self.hg, BergePath((0, 1), (0, 1)))
        assert not v.ok and "one more vertex" in v.reason

    def test_repeated_vertex_rejected(self):
        v = verify_berge_path(self.hg, BergePath((0, 1, 0), (1, 3)))
        assert not v.ok and "repeats" in v.reason

    def test_repeated_edge_rejected(self):
        v = verify_berge_path(self.hg, BergePath((0, 1, 2), (1, 1)))
        assert not v.ok and "edge id 1 repeats" in v.reason

    def test_pair_must_lie_inside_edge(self):
        v = verify_berge_path(self.hg, BergePath((0, 1, 4), (1, 3)))
        assert not v.ok and "does not contain the pair" in v.reason

    def test_wraparound_pair_checked(self):
        v = verify_berge_cycle(self.hg, BergeCycle((0, 1, 3), (1, 3, 4)))
        assert not v.ok and "step 3" in v.reason

    def test_out_of_range_ids(self):
        assert not verify_berge_path(self.hg, BergePath((0, 9), (0,))).ok
        assert not verify_berge_path(self.hg, BergePath((0, 1), (99,))).ok

    def test_empty_and_tiny_walks(self):
        assert not verify_berge_path(self.hg, BergePath((), ())).ok
        assert verify_berge_path(self.hg, BergePath((3,), ())).ok
        assert not verify_berge_cycle(self.hg, BergeCycle((3,), (1,))).ok

    def test_two_vertex_cycle_needs_two_distinct_edges(self):
        hg = Hypergraph(3, [[0, 1], [0, 1, 2]])
        assert verify_berge_cycle(hg, BergeCycle((0, 1), (0, 1))).ok
        assert not verify_berge_cycle(hg, BergeCycle((0, 1), (0, 0))).ok

    def test_path_reversal_preserves_validity(self):
        p = BergePath((0, 1, 3, 4), (1, 3, 4))
        assert verify_berge_path(self.hg, p.reversed()).ok
        assert p.reversed().vertices == (4, 3, 1, 0)
        assert p.reversed().edge_ids == (4, 3, 1)


class TestShifts:
    def setup_method(self):
        self.path = BergePath((3, 1, 4, 0, 2), (0, 1, 2, 3))

    def test_shift_left_drops_first_position(self):
        assert shift_left({1, 3, 5}, self.path) == {2, 4}
        assert shift_left({1}, self.path) == set()

    def test_shift_right_drops_last_position(self):
        assert shift_right({1, 3, 5}, self.path) == {2, 4}
        assert shift_right({5}, self.path) == set()

    def test_positions_validated(self):
        with pytest.raises(DomainError):
            shift_left({0}, self.path)
        with pytest.raises(DomainError):
            shift_right({6}, self.path)

    @settings(max_examples=60, deadline=None)
    @given(positions=st.sets(st.integers(min_value=1, max_value=5)))
    def test_shift_composition(self, positions):
        path = self.path
        assert shift_right(shift_left(positions, path), path) == positions - {1}
        assert shift_left(shift_right(positions, path), path) == positions - {5}
        assert len(shift_left(positions, path)) == len(positions) - (1 in positions)


class TestIncidenceBipartite:
    def test_structure_matches_membership(self):
        hg = Hypergraph(4, [[0, 1], [1, 2, 3]])
        inc = incidence_bipartite(hg)
        assert inc.left == (0, 1, 2, 3)
        assert inc.right == (0, 1)
        assert inc.adjacency == {(0, 0), (1, 0), (1, 1), (2, 1), (3, 1)}
        assert inc.right_degree(1) == 3
        assert inc.left_neighbors(1) == (1, 2, 3)
        assert inc.right_neighbors(1) == (0, 1)

    def test_is_bipartite_and_berge_cycle_maps_to_graph_cycle(self):
        nx = pytest.importorskip("networkx")
        hg = Hypergraph(5, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4], [0, 1, 4]])
        inc = incidence_bipartite(hg)
        g = nx.Graph()
        g.add_nodes_from(("v", v) for v in inc.left)
        g.add_nodes_from(("e", e) for e in inc.right)
        g.add_edges_from((("v", v), ("e", e)) for v, e in inc.adjacency)
        assert nx.is_bipartite(g)
        cyc = BergeCycle((0, 1, 2, 3, 4), (0, 3, 4, 2, 1))
        assert verify_berge_cycle(hg, cyc).ok
        hops = []
        for i in range(5):
            hops.append(("v", cyc.vertices[i]))
            hops.append(("e", cyc.edge_ids[i]))
        for a, b in zip(hops, hops[1:] + hops[:1]):
            assert g.has_edge(a, b)
