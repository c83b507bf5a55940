"""Path rotations: the three local operations and their reachable-end closure."""

import random
from itertools import combinations

import pytest

from bergeham import (
    BergePath,
    Hypergraph,
    PreconditionError,
    RotationNotApplicable,
    RotationState,
    SearchBudget,
    find_hamiltonian_berge_path,
    guaranteed_reachable_ends,
    rotate_defining,
    rotate_double,
    rotate_nondefining,
    rotation_closure,
    verify_berge_path,
)

from oracles import hamiltonian_path_starts

K53 = Hypergraph(5, combinations(range(5), 3))
# canonical ids in K53: 0=[0,1,2] 1=[0,1,3] 2=[0,1,4] 3=[0,2,3] 4=[0,2,4]
#                       5=[0,3,4] 6=[1,2,3] 7=[1,2,4] 8=[1,3,4] 9=[2,3,4]
BASE = BergePath((0, 1, 2, 3, 4), (0, 6, 3, 5))


def base_state():
    return RotationState.from_path(K53, BASE)


def check_state(state):
    assert verify_berge_path(state.hypergraph, state.path).ok
    assert len(state.path.vertices) == state.hypergraph.n
    assert state.path.vertices[-1] == state.fixed_end
    assert state.path.vertices[0] in state.reachable_ends
    for end, witness in state.witnesses.items():
        assert witness.vertices[0] == end
        assert witness.vertices[-1] == state.fixed_end
        assert verify_berge_path(state.hypergraph, witness).ok


class TestFromPath:
    def test_initial_state(self):
        st = base_state()
        assert st.fixed_end == 4
        assert st.reachable_ends == {0}
        assert st.witnesses == {0: BASE}
        check_state(st)

    def test_prefix_bound_on_complete_instance(self):
        # spare edges through 0 reach every vertex, so the whole path qualifies
        st = base_state()
        assert st.prefix_bound == 5
        assert st.prefix_set == {1, 2, 3, 4}

    def test_requires_hamiltonian(self):
        with pytest.raises(PreconditionError, match="rotations need"):
            RotationState.from_path(K53, BergePath((0, 1, 2), (0, 6)))

    def test_requires_valid_path(self):
        with pytest.raises(PreconditionError, match="not a Berge path"):
            RotationState.from_path(K53, BergePath((0, 1, 2, 3, 4), (0, 0, 3, 5)))


class TestDefiningRotation:
    def test_prefix_reversal_formula(self):
        st = rotate_defining(base_state(), 3)
        assert st.path.vertices == (2, 1, 0, 3, 4)
        assert st.path.edge_ids == (6, 0, 3, 5)
        assert st.reachable_ends == {0, 2}
        check_state(st)

    def test_position_one_is_identity(self):
        st = rotate_defining(base_state(), 1)
        assert st.path == BASE
        assert st.reachable_ends == {0}

    def test_edge_must_contain_start(self):
        # path edge 2 is [1,2,3]: no start inside
        with pytest.raises(RotationNotApplicable, match="does not contain the start"):
            rotate_defining(base_state(), 2)

    def test_position_range(self):
        with pytest.raises(RotationNotApplicable, match="out of range"):
            rotate_defining(base_state(), 0)
        with pytest.raises(RotationNotApplicable, match="out of range"):
            rotate_defining(base_state(), 5)


class TestNondefiningRotation:
    def test_bridge_replacement_formula(self):
        # spare edge 4=[0,2,4] joins the start to the position-3 vertex
        st = rotate_nondefining(base_state(), 2, 4)
        assert st.path.vertices == (1, 0, 2, 3, 4)
        assert st.path.edge_ids == (0, 4, 3, 5)
        assert st.reachable_ends == {0, 1}
        check_state(st)

    def test_bridge_must_be_spare(self):
        with pytest.raises(RotationNotApplicable, match="already defines"):
            rotate_nondefining(base_state(), 2, 3)

    def test_bridge_must_contain_both_endpoints(self):
        # edge 8=[1,3,4] misses the start
        with pytest.raises(RotationNotApplicable, match="must contain the start"):
            rotate_nondefining(base_state(), 2, 8)

    def test_edge_id_range(self):
        with pytest.raises(RotationNotApplicable, match="out of range"):
            rotate_nondefining(base_state(), 2, 10)


class TestDoubleRotation:
    def test_two_segment_formula(self):
        # i=3, j=2: front segment rotates behind the position-3 vertex
        st = rotate_double(base_state(), 3, 2, 8)
        assert st.path.vertices == (2, 0, 1, 3, 4)
        assert st.path.edge_ids == (3, 0, 8, 5)
        assert st.reachable_ends == {0, 2}
        check_state(st)

    def test_j_one_rotates_the_whole_prefix(self):
        # spare edge 1=[0,1,3] carries the pair {v_1, v_4} = {0, 3}
        st = rotate_double(base_state(), 3, 1, 1)
        assert st.path.vertices == (1, 2, 0, 3, 4)
        assert st.path.edge_ids == (6, 3, 1, 5)
        check_state(st)

    def test_needs_j_strictly_below_i(self):
        with pytest.raises(RotationNotApplicable, match="j < i"):
            rotate_double(base_state(), 2, 2, 4)

    def test_start_must_sit_in_edge_i(self):
        with pytest.raises(RotationNotApplicable, match="does not contain the start"):
            rotate_double(base_state(), 2, 1, 9)

    def test_bridge_checked_against_segment_endpoints(self):
        # edge 2=[0,1,4] misses the position-3 vertex 2
        with pytest.raises(RotationNotApplicable, match="must contain the position"):
            rotate_double(base_state(), 3, 2, 2)

    def test_bridge_must_be_spare(self):
        with pytest.raises(RotationNotApplicable, match="already defines"):
            rotate_double(base_state(), 3, 2, 0)


class TestOperationInvariants:
    def test_random_rotation_walks_preserve_the_contract(self):
        rng = random.Random(90125)
        for _ in range(12):
            state = base_state()
            for _ in range(15):
                ops = []
                n_edges = len(state.path.edge_ids)
                for i in range(1, n_edges + 1):
                    ops.append(("def", i, None, None))
                    for f in range(K53.num_edges):
                        ops.append(("non", i, None, f))
                        for j in range(1, i):
                            ops.append(("dbl", i, j, f))
                rng.shuffle(ops)
                prev_ends = state.reachable_ends
                for kind, i, j, f in ops:
                    try:
                        if kind == "def":
                            state = rotate_defining(state, i)
                        elif kind == "non":
                            state = rotate_nondefining(state, i, f)
                        else:
                            state = rotate_double(state, i, j, f)
                        break
                    except RotationNotApplicable:
                        continue
                assert state.fixed_end == 4
                assert sorted(state.path.vertices) == [0, 1, 2, 3, 4]
                assert prev_ends <= state.reachable_ends
                check_state(state)


class TestClosure:
    def test_complete_instance_reaches_every_other_vertex(self):
        hg = Hypergraph(6, combinations(range(6), 3))
        res = find_hamiltonian_berge_path(hg)
        st = rotation_closure(hg, res.path)
        assert st.fixed_end == res.path.vertices[-1]
        assert st.reachable_ends == set(range(6)) - {st.fixed_end}
        check_state(st)

    def test_rigid_path_keeps_one_end(self):
        hg = Hypergraph(4, [[0, 1], [1, 2], [2, 3]])
        path = BergePath((0, 1, 2, 3), (0, 1, 2))
        st = rotation_closure(hg, path)
        assert st.reachable_ends == {0}
        assert guaranteed_reachable_ends(hg, path) <= st.reachable_ends

    def test_budget_cannot_undercut_the_guarantee(self):
        hg = Hypergraph(6, combinations(range(6), 3))
        res = find_hamiltonian_berge_path(hg)
        tight = rotation_closure(hg, res.path, SearchBudget(max_nodes=1))
        assert guaranteed_reachable_ends(hg, res.path) <= tight.reachable_ends
        check_state(tight)

    def test_closure_is_sound_against_permutation_oracle(self):
        rng = random.Random(60622)
        exercised = 0
        for _ in range(20):
            n = rng.randint(5, 7)
            r = rng.choice([2, 3])
            edges = [c for c in combinations(range(n), r) if rng.random() < 0.45]
            hg = Hypergraph(n, edges)
            res = find_hamiltonian_berge_path(hg)
            if res.status != "path":
                continue
            exercised += 1
            st = rotation_closure(hg, res.path)
            check_state(st)
            truth = hamiltonian_path_starts(hg, res.path.vertices[-1])
            assert st.reachable_ends <= truth
            assert guaranteed_reachable_ends(hg, res.path) <= st.reachable_ends
        assert exercised >= 5

    def test_requires_hamiltonian_path(self):
        with pytest.raises(PreconditionError):
            rotation_closure(K53, BergePath((0, 1), (0,)))


class TestGuaranteedEnds:
    def test_complete_instance_guarantee_is_everything(self):
        st = base_state()
        assert guaranteed_reachable_ends(K53, BASE) == {0, 1, 2, 3}
        closure = rotation_closure(K53, BASE)
        assert closure.reachable_ends == {0, 1, 2, 3}
        assert st.prefix_bound == 5

    def test_guarantee_never_contains_fixed_end(self):
        rng = random.Random(41)
        for _ in range(15):
            n = rng.randint(5, 7)
            edges = [c for c in combinations(range(n), 3) if rng.random() < 0.6]
            hg = Hypergraph(n, edges)
            res = find_hamiltonian_berge_path(hg)
            if res.status != "path":
                continue
            ends = guaranteed_reachable_ends(hg, res.path)
            assert res.path.vertices[-1] not in ends
