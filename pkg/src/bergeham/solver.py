"""Exact Berge-Hamiltonicity decisions and the path rotation engine.

The exact search walks vertex orders and keeps a bipartite matching from the
consecutive pairs seen so far into the edge set, so an order is abandoned as
soon as no system of distinct edges can cover its pairs.  A ``none`` verdict
therefore means the whole order space was exhausted and is a proof of
non-existence; ``unknown`` only ever means a budget ran out.

Rotations transform one Hamiltonian Berge path into another with the same
final vertex.  ``rotation_closure`` explores the reachable paths breadth
first and reports which vertices can start such a path; the set is a sound
under-approximation of the truth, and it always covers the shift-based lower
bound computed by ``guaranteed_reachable_ends``.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations

from .core import (
    BergeCycle,
    BergePath,
    DomainError,
    Hypergraph,
    PreconditionError,
    shift_left,
    verify_berge_cycle,
    verify_berge_path,
)

CYCLE = "cycle"
PATH = "path"
NONE_EXISTS = "none"
UNKNOWN = "unknown"


class RotationNotApplicable(ValueError):
    """The requested rotation's preconditions do not hold on this path."""


@dataclass(frozen=True)
class SearchBudget:
    """Caps for a search; exceeding one yields an 'unknown' outcome."""

    max_nodes: int = 2_000_000
    time_limit: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise DomainError("max_nodes must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise DomainError("time_limit must be positive")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a search; ``nodes`` counts explored search-tree nodes."""

    status: str  # "cycle" | "path" | "none" | "unknown"
    cycle: BergeCycle | None = None
    path: BergePath | None = None
    nodes: int = 0


class _Budget(Exception):
    pass


def _pair_edge_ids(hg: Hypergraph) -> dict[tuple[int, int], tuple[int, ...]]:
    """For each vertex pair, the ascending ids of edges containing both."""
    out: dict[tuple[int, int], list[int]] = {}
    for e, members in enumerate(hg.edges):
        for a, b in combinations(sorted(members), 2):
            out.setdefault((a, b), []).append(e)
    return {pair: tuple(ids) for pair, ids in out.items()}


class _Matching:
    """Demands -> distinct edges, grown one demand at a time (Kuhn augmenting).

    A failed ``add`` leaves the matching untouched; ``snapshot``/``restore``
    rewind both the assignment and the demand list, which is how the search
    backtracks.
    """

    def __init__(self):
        self.cands: list[tuple[int, ...]] = []
        self.assigned: list[int] = []
        self.owner: dict[int, int] = {}

    def snapshot(self) -> tuple[int, ...]:
        return tuple(self.assigned)

    def restore(self, snap: tuple[int, ...]) -> None:
        self.assigned = list(snap)
        del self.cands[len(snap):]
        self.owner = {e: d for d, e in enumerate(snap)}

    def add(self, cands: tuple[int, ...]) -> bool:
        d = len(self.assigned)
        self.cands.append(cands)
        self.assigned.append(-1)
        if self._augment(d, set()):
            return True
        self.cands.pop()
        self.assigned.pop()
        return False

    def _augment(self, d: int, seen: set[int]) -> bool:
        for e in self.cands[d]:
            if e in seen:
                continue
            seen.add(e)
            o = self.owner.get(e)
            if o is None or self._augment(o, seen):
                self.owner[e] = d
                self.assigned[d] = e
                return True
        return False

    def feasible_extra(self, extras: list[tuple[int, ...]]) -> bool:
        """Could the matching also serve these demands?  Leaves state unchanged."""
        snap = self.snapshot()
        ok = True
        for cands in extras:
            if not self.add(cands):
                ok = False
                break
        self.restore(snap)
        return ok


class _Search:
    """Backtracking over vertex orders with matching-based pruning.

    In cycle mode the order starts at vertex 0 (every Hamiltonian cycle
    passes it) and must close back to it; in path mode the order starts at a
    caller-chosen vertex and any completion wins.
    """

    def __init__(self, hg: Hypergraph, budget: SearchBudget, cycle: bool):
        self.hg = hg
        self.n = hg.n
        self.budget = budget
        self.cycle = cycle
        self.nodes = 0
        self.deadline = (
            time.monotonic() + budget.time_limit if budget.time_limit else None
        )
        self.pair_cands = _pair_edge_ids(hg)
        self.vertex_edges: list[tuple[int, ...]] = [
            tuple(hg.edges_containing(v)) for v in range(self.n)
        ]
        self.adj = [0] * self.n
        for m in hg.edge_masks:
            rest = m
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                self.adj[v] |= m
                rest ^= low
        for v in range(self.n):
            self.adj[v] &= ~(1 << v)
        self.degree = [len(self.vertex_edges[v]) for v in range(self.n)]
        self.static_order = sorted(range(self.n), key=lambda v: (self.degree[v], v))
        self.full = (1 << self.n) - 1
        self.match = _Matching()
        self.order: list[int] = []
        self.visited = 0

    def run(self, start: int) -> bool:
        self.order = [start]
        self.visited = 1 << start
        self.match = _Matching()
        return self._dfs()

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _Budget
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise _Budget

    def _connected(self, active: int, seed: int) -> bool:
        reach = 1 << seed
        frontier = reach
        while frontier:
            grow = 0
            rest = frontier
            while rest:
                low = rest & -rest
                grow |= self.adj[low.bit_length() - 1]
                rest ^= low
            grow &= active & ~reach
            reach |= grow
            frontier = grow
        return reach & active == active

    def _edge_supply_ok(self) -> bool:
        """Static test: low-degree vertex sets must see enough distinct edges.

        The flanks of a vertex set T in any Hamiltonian Berge cycle are
        pairwise distinct edges meeting T, and T needs 2|T| of them minus one
        per flank lying inside T.  Scanned over degree-ascending prefixes.
        In path mode two prefix members may be endpoints with a single flank.
        """
        slack = 0 if self.cycle else 2
        count = [0] * self.hg.num_edges
        covered = 0
        internal_pool = 0
        for size, v in enumerate(self.static_order, start=1):
            for e in self.vertex_edges[v]:
                count[e] += 1
                if count[e] == 1:
                    covered += 1
                elif count[e] == 2:
                    internal_pool += 1
            cap = size if (self.cycle and size == self.n) else size - 1
            if 2 * size - slack - min(cap, internal_pool) > covered:
                return False
        return True

    def _prefix_supply_ok(self, head: int, unv: int) -> bool:
        """Low-degree vertex sets must find enough free flank slots nearby.

        For a set T of active vertices, every undetermined flank of a T
        member either pairs two T members (needing a distinct edge inside T)
        or consumes a free slot of an adjacent active vertex outside T.
        Scanned over degree-ascending prefixes of the active set.
        """
        start = self.order[0]
        if self.cycle:
            # The closing flank gives the start vertex one slot of its own.
            deficit = {head: 0} if head == start else {head: 1, start: 1}
            active = unv | (1 << head) | (1 << start)
            slack = 0
        else:
            # The start of a path search has no undetermined flank, and one
            # unvisited vertex will end the path with a single flank.
            deficit = {head: 1}
            active = unv | (1 << head)
            slack = 1
        count = [0] * self.hg.num_edges
        internal_pool = 0
        t_mask = 0
        size = 0
        demand = 0
        neigh = 0
        at_root = self.cycle and head == start
        total = bin(active).count("1")
        for v in self.static_order:
            if not active >> v & 1:
                continue
            t_mask |= 1 << v
            size += 1
            demand += 2 - deficit.get(v, 0)
            neigh |= self.adj[v]
            for e in self.vertex_edges[v]:
                count[e] += 1
                if count[e] == 2:
                    internal_pool += 1
            cap = size if (at_root and size == total) else size - 1
            ext = neigh & active & ~t_mask
            supply = 2 * bin(ext).count("1")
            for w, d in deficit.items():
                if ext >> w & 1:
                    supply -= d
            if demand - slack - 2 * min(cap, internal_pool) > supply:
                return False
        return True

    def _slot_count_ok(self, head: int, unv: int) -> bool:
        # Greedy independent set of unvisited vertices, low degree first.
        # Each member needs 2 flanks (1 if it may end a free-ended path), and
        # only its neighbours among {unvisited, head, start} can supply them.
        by_degree = sorted(
            (self.degree[v], v)
            for v in range(self.n)
            if unv >> v & 1
        )
        s_mask = 0
        neigh = 0
        for _, v in by_degree:
            if self.adj[v] & s_mask == 0 and s_mask >> v & 1 == 0:
                s_mask |= 1 << v
                neigh |= self.adj[v]
        size = bin(s_mask).count("1")
        demand = 2 * size - (0 if self.cycle else 1)
        capacity = 2 * bin(neigh & unv & ~s_mask).count("1")
        if neigh >> head & 1:
            capacity += 1
        if self.cycle and neigh >> self.order[0] & 1:
            capacity += 1
        return demand <= capacity

    def _feasible(self, head: int, unv: int) -> bool:
        start = self.order[0]
        active = unv | (1 << head)
        if self.cycle:
            active |= 1 << start
        if not self._connected(active, head):
            return False
        if self.cycle and self.adj[start] & (unv | (1 << head)) == 0:
            return False
        if not self._slot_count_ok(head, unv):
            return False
        if not self._prefix_supply_ok(head, unv):
            return False
        extras = [self.vertex_edges[head]]
        if self.cycle:
            extras.insert(0, self.vertex_edges[start])
        if not self.match.feasible_extra(extras):
            return False
        per_vertex = 2 if self.cycle else 1
        rest = unv
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            if not self.match.feasible_extra([self.vertex_edges[u]] * per_vertex):
                return False
        return True

    def _dfs(self) -> bool:
        self._tick()
        head = self.order[-1]
        unv = self.full & ~self.visited
        if unv == 0:
            if not self.cycle:
                return True
            start = self.order[0]
            pair = (start, head) if start < head else (head, start)
            cands = self.pair_cands.get(pair, ())
            return bool(cands) and self.match.add(cands)
        if not self._feasible(head, unv):
            return False
        options = []
        rest = self.adj[head] & unv
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            pair = (head, u) if head < u else (u, head)
            cands = self.pair_cands.get(pair)
            if cands:
                options.append((len(cands), self.degree[u], u, cands))
        options.sort()
        for _, _, u, cands in options:
            snap = self.match.snapshot()
            if not self.match.add(cands):
                continue
            self.order.append(u)
            self.visited |= 1 << u
            if self._dfs():
                return True
            self.visited &= ~(1 << u)
            self.order.pop()
            self.match.restore(snap)
        return False


def find_hamiltonian_berge_cycle(
    hg: Hypergraph, budget: SearchBudget | None = None
) -> SolveResult:
    """Decide whether a Hamiltonian Berge cycle exists; 'none' is a proof.

    Needs at least 3 vertices.  The search is deterministic, so equal inputs
    and budgets give byte-equal results.
    """
    if hg.n < 3:
        raise PreconditionError(f"need at least 3 vertices, got {hg.n}")
    budget = budget or SearchBudget()
    if hg.num_edges < hg.n:
        return SolveResult(NONE_EXISTS)
    search = _Search(hg, budget, cycle=True)
    for v in range(hg.n):
        if search.degree[v] < 2 or bin(search.adj[v]).count("1") < 2:
            return SolveResult(NONE_EXISTS)
    if not search._connected(search.full, 0):
        return SolveResult(NONE_EXISTS)
    if not search._edge_supply_ok():
        return SolveResult(NONE_EXISTS)
    try:
        found = search.run(0)
    except _Budget:
        return SolveResult(UNKNOWN, nodes=search.nodes)
    if not found:
        return SolveResult(NONE_EXISTS, nodes=search.nodes)
    cycle = BergeCycle(tuple(search.order), tuple(search.match.assigned))
    check = verify_berge_cycle(hg, cycle)
    if not check or len(cycle.vertices) != hg.n:
        raise AssertionError(f"search produced an invalid cycle: {check.reason}")
    return SolveResult(CYCLE, cycle=cycle, nodes=search.nodes)


def find_hamiltonian_berge_path(
    hg: Hypergraph, budget: SearchBudget | None = None, end: int | None = None
) -> SolveResult:
    """Search for a Hamiltonian Berge path, optionally with a fixed final vertex.

    Shares the exact machinery of the cycle search, so 'none' is again a
    proof.  Mostly a building block for experiments and tests.
    """
    if hg.n < 2:
        raise PreconditionError(f"need at least 2 vertices, got {hg.n}")
    if end is not None and not 0 <= end < hg.n:
        raise DomainError(f"vertex {end} out of range 0..{hg.n - 1}")
    budget = budget or SearchBudget()
    if hg.num_edges < hg.n - 1:
        return SolveResult(NONE_EXISTS)
    search = _Search(hg, budget, cycle=False)
    if not search._edge_supply_ok():
        return SolveResult(NONE_EXISTS)
    # A path visits the fixed final vertex first here and is reversed on return.
    starts = range(hg.n) if end is None else (end,)
    try:
        for s in starts:
            if search.run(s):
                path = BergePath(
                    tuple(reversed(search.order)),
                    tuple(reversed(search.match.assigned)),
                )
                check = verify_berge_path(hg, path)
                if not check or len(path.vertices) != hg.n:
                    raise AssertionError(
                        f"search produced an invalid path: {check.reason}"
                    )
                return SolveResult(PATH, path=path, nodes=search.nodes)
    except _Budget:
        return SolveResult(UNKNOWN, nodes=search.nodes)
    return SolveResult(NONE_EXISTS, nodes=search.nodes)


def is_hamiltonian_bruteforce(hg: Hypergraph) -> bool:
    """Factorial-time oracle: try every cyclic vertex order.

    Deliberately independent of the pruned search: for each order it looks
    for a system of distinct representative edges by plain backtracking.
    Limited to 3 <= n <= 8 vertices.
    """
    if not 3 <= hg.n <= 8:
        raise PreconditionError(f"the oracle handles 3..8 vertices, got {hg.n}")
    n = hg.n
    pair_cands = _pair_edge_ids(hg)

    def sdr_exists(lists: list[tuple[int, ...]]) -> bool:
        lists = sorted(lists, key=len)
        used: set[int] = set()

        def rec(i: int) -> bool:
            if i == len(lists):
                return True
            for e in lists[i]:
                if e not in used:
                    used.add(e)
                    if rec(i + 1):
                        return True
                    used.remove(e)
            return False

        return rec(0)

    for perm in permutations(range(1, n)):
        if perm[0] > perm[-1]:  # each cyclic order once per orientation
            continue
        order = (0,) + perm
        lists = []
        ok = True
        for i in range(n):
            a, b = order[i], order[(i + 1) % n]
            cands = pair_cands.get((a, b) if a < b else (b, a))
            if not cands:
                ok = False
                break
            lists.append(cands)
        if ok and sdr_exists(lists):
            return True
    return False


def extend_and_close(hg: Hypergraph, budget: SearchBudget | None = None) -> SolveResult:
    """Heuristic: grow a path greedily, rotate to expose endpoints, close one.

    Returns a verified cycle or 'unknown'; it never asserts non-existence.
    The budget's seed picks the greedy start vertex.
    """
    if hg.n < 3:
        raise PreconditionError(f"need at least 3 vertices, got {hg.n}")
    budget = budget or SearchBudget()
    n = hg.n
    pair_cands = _pair_edge_ids(hg)
    free_count = [len(hg.edges_containing(v)) for v in range(n)]
    rng = random.Random(budget.seed)
    verts = deque([rng.randrange(n)])
    edges: deque[int] = deque()
    used: set[int] = set()
    in_path = {verts[0]}
    grew = True
    while grew and len(verts) < n:
        grew = False
        for at_right in (True, False):
            endv = verts[-1] if at_right else verts[0]
            best = None
            for u in range(n):
                if u in in_path:
                    continue
                pair = (endv, u) if endv < u else (u, endv)
                for e in pair_cands.get(pair, ()):
                    if e not in used:
                        key = (free_count[u], u, e)
                        if best is None or key < best:
                            best = key
                        break
            if best is None:
                continue
            _, u, e = best
            if at_right:
                verts.append(u)
                edges.append(e)
            else:
                verts.appendleft(u)
                edges.appendleft(e)
            in_path.add(u)
            used.add(e)
            for w in hg.edges[e]:
                free_count[w] -= 1
            grew = True
    if len(verts) < n:
        return SolveResult(UNKNOWN)
    path = BergePath(tuple(verts), tuple(edges))
    fixed = path.vertices[-1]
    # A shallow closure usually suffices on dense inputs; escalate once.
    for cap in (8, min(budget.max_nodes, 4000)):
        state = rotation_closure(
            hg,
            path,
            SearchBudget(max_nodes=cap, time_limit=budget.time_limit),
        )
        for w in sorted(state.reachable_ends):
            witness = state.witnesses[w]
            pair = (w, fixed) if w < fixed else (fixed, w)
            for e in pair_cands.get(pair, ()):
                if e not in witness.edge_ids:
                    cycle = BergeCycle(witness.vertices, witness.edge_ids + (e,))
                    check = verify_berge_cycle(hg, cycle)
                    if not check:
                        raise AssertionError(f"bad closed cycle: {check.reason}")
                    return SolveResult(CYCLE, cycle=cycle)
    return SolveResult(UNKNOWN)


# --- rotations ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RotationState:
    """A Hamiltonian Berge path plus everything learned by rotating it.

    ``reachable_ends`` holds every vertex known to start a Hamiltonian Berge
    path with the same final vertex, each certified by a witness path.
    ``prefix_bound`` is the longest p such that the first p path vertices all
    lie in the closed non-defining neighborhood of the start; ``prefix_set``
    holds the 1-based positions strictly before it (at least position 1).
    """

    hypergraph: Hypergraph
    path: BergePath
    fixed_end: int
    reachable_ends: frozenset[int]
    prefix_set: frozenset[int]
    prefix_bound: int
    witnesses: dict[int, BergePath]

    @classmethod
    def from_path(cls, hg: Hypergraph, path: BergePath) -> "RotationState":
        _require_hamiltonian(hg, path)
        x, prefix = _prefix_data(hg, path)
        start = path.vertices[0]
        return cls(
            hypergraph=hg,
            path=path,
            fixed_end=path.vertices[-1],
            reachable_ends=frozenset((start,)),
            prefix_set=prefix,
            prefix_bound=x,
            witnesses={start: path},
        )


def _require_hamiltonian(hg: Hypergraph, path: BergePath) -> None:
    check = verify_berge_path(hg, path)
    if not check:
        raise PreconditionError(f"not a Berge path: {check.reason}")
    if len(path.vertices) != hg.n:
        raise PreconditionError(
            f"path covers {len(path.vertices)} of {hg.n} vertices; "
            "rotations need a Hamiltonian path"
        )


def _prefix_data(hg: Hypergraph, path: BergePath) -> tuple[int, frozenset[int]]:
    defining = set(path.edge_ids)
    start = path.vertices[0]
    hood = {start}
    for e in range(hg.num_edges):
        if e not in defining and start in hg.edges[e]:
            hood |= hg.edges[e]
    x = 0
    for v in path.vertices:
        if v not in hood:
            break
        x += 1
    return x, frozenset(range(1, max(1, x - 1) + 1))


def _apply_defining(vs: tuple[int, ...], es: tuple[int, ...], i: int):
    nv = tuple(reversed(vs[:i])) + vs[i:]
    ne = tuple(reversed(es[: i - 1])) + (es[i - 1],) + es[i:]
    return nv, ne


def _apply_nondefining(vs: tuple[int, ...], es: tuple[int, ...], i: int, f: int):
    nv = tuple(reversed(vs[:i])) + vs[i:]
    ne = tuple(reversed(es[: i - 1])) + (f,) + es[i:]
    return nv, ne


def _apply_double(vs: tuple[int, ...], es: tuple[int, ...], i: int, j: int, f: int):
    nv = vs[j:i] + vs[:j] + vs[i:]
    ne = es[j: i - 1] + (es[i - 1],) + es[: j - 1] + (f,) + es[i:]
    return nv, ne


def _evolved(state: RotationState, nv: tuple[int, ...], ne: tuple[int, ...]) -> RotationState:
    hg = state.hypergraph
    new_path = BergePath(nv, ne)
    x, prefix = _prefix_data(hg, new_path)
    witnesses = dict(state.witnesses)
    witnesses.setdefault(nv[0], new_path)
    return RotationState(
        hypergraph=hg,
        path=new_path,
        fixed_end=state.fixed_end,
        reachable_ends=state.reachable_ends | {nv[0]},
        prefix_set=prefix,
        prefix_bound=x,
        witnesses=witnesses,
    )


def rotate_defining(state: RotationState, i: int) -> RotationState:
    """Reverse the prefix through the i-th path edge, which must see the start.

    New start: the old position-i vertex.  i = 1 reproduces the same path.
    """
    vs, es = state.path.vertices, state.path.edge_ids
    if not 1 <= i <= len(es):
        raise RotationNotApplicable(f"edge position {i} out of range 1..{len(es)}")
    if vs[0] not in state.hypergraph.edges[es[i - 1]]:
        raise RotationNotApplicable(
            f"path edge at position {i} does not contain the start vertex {vs[0]}"
        )
    return _evolved(state, *_apply_defining(vs, es, i))


def rotate_nondefining(state: RotationState, i: int, f: int) -> RotationState:
    """Reverse the prefix before position i+1 using a spare edge f.

    f must not be a path edge and must contain both the start and the vertex
    at position i+1; the path edge at position i drops out.
    """
    hg = state.hypergraph
    vs, es = state.path.vertices, state.path.edge_ids
    if not 1 <= i <= len(es):
        raise RotationNotApplicable(f"edge position {i} out of range 1..{len(es)}")
    if not 0 <= f < hg.num_edges:
        raise RotationNotApplicable(f"edge id {f} out of range")
    if f in es:
        raise RotationNotApplicable(f"edge {f} already defines a step of the path")
    if not {vs[0], vs[i]} <= hg.edges[f]:
        raise RotationNotApplicable(
            f"edge {f} must contain the start {vs[0]} and position-{i + 1} vertex {vs[i]}"
        )
    return _evolved(state, *_apply_nondefining(vs, es, i, f))


def rotate_double(state: RotationState, i: int, j: int, f: int) -> RotationState:
    """Two-segment reshuffle: needs j < i, the start in path edge i, and a
    spare edge f containing the position-j and position-(i+1) vertices."""
    hg = state.hypergraph
    vs, es = state.path.vertices, state.path.edge_ids
    if not 1 <= j < i <= len(es):
        raise RotationNotApplicable(
            f"need 1 <= j < i <= {len(es)}, got i={i}, j={j}"
        )
    if vs[0] not in hg.edges[es[i - 1]]:
        raise RotationNotApplicable(
            f"path edge at position {i} does not contain the start vertex {vs[0]}"
        )
    if not 0 <= f < hg.num_edges:
        raise RotationNotApplicable(f"edge id {f} out of range")
    if f in es:
        raise RotationNotApplicable(f"edge {f} already defines a step of the path")
    if not {vs[j - 1], vs[i]} <= hg.edges[f]:
        raise RotationNotApplicable(
            f"edge {f} must contain the position-{j} vertex {vs[j - 1]} "
            f"and the position-{i + 1} vertex {vs[i]}"
        )
    return _evolved(state, *_apply_double(vs, es, i, j, f))


def _enumerate_rotations(hg, pair_cands, vs, es):
    defining = set(es)
    start = vs[0]
    n = len(vs)
    out = []
    for i in range(2, n):
        if start in hg.edges[es[i - 1]]:
            out.append(_apply_defining(vs, es, i))
    for i in range(1, n):
        other = vs[i]
        pair = (start, other) if start < other else (other, start)
        for f in pair_cands.get(pair, ()):
            if f not in defining:
                out.append(_apply_nondefining(vs, es, i, f))
    for i in range(2, n):
        if start not in hg.edges[es[i - 1]]:
            continue
        for j in range(1, i):
            a, b = vs[j - 1], vs[i]
            pair = (a, b) if a < b else (b, a)
            for f in pair_cands.get(pair, ()):
                if f not in defining:
                    out.append(_apply_double(vs, es, i, j, f))
    return out


def rotation_closure(
    hg: Hypergraph, path: BergePath, budget: SearchBudget | None = None
) -> RotationState:
    """Breadth-first closure of the three rotations, from a Hamiltonian path.

    Explores distinct paths up to ``budget.max_nodes`` (default 2000 here;
    the guarantee below may slightly exceed a smaller cap).  Before the
    general sweep it explicitly expands the paths witnessing the shift-based
    lower bound, so the returned ``reachable_ends`` always contains
    ``guaranteed_reachable_ends(hg, path)`` no matter the budget.
    """
    _require_hamiltonian(hg, path)
    budget = budget or SearchBudget(max_nodes=2000)
    deadline = time.monotonic() + budget.time_limit if budget.time_limit else None
    pair_cands = _pair_edge_ids(hg)
    vs, es = path.vertices, path.edge_ids
    x, prefix = _prefix_data(hg, path)
    defining = set(es)

    seeds = [(vs, es)]
    for j in range(1, x):
        # vs[j] is the (j+1)-th path vertex; the prefix bound promises a
        # spare edge through it and the start.
        a, b = vs[0], vs[j]
        pair = (a, b) if a < b else (b, a)
        bridge = None
        for f in pair_cands.get(pair, ()):
            if f not in defining:
                bridge = f
                break
        if bridge is None:
            continue
        seeds.append(_apply_nondefining(vs, es, j, bridge))

    ends: dict[int, BergePath] = {}
    memo: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    queue: deque[tuple[tuple[int, ...], tuple[int, ...]]] = deque()
    for item in seeds:
        if item not in memo:
            memo.add(item)
            if item[0][0] not in ends:
                ends[item[0][0]] = BergePath(*item)
            queue.append(item)

    explored = 0
    must_explore = len(seeds)
    # Discovered-but-unexplored paths are only remembered up to this cap;
    # newly found start vertices are always recorded regardless.
    memo_cap = max(must_explore, budget.max_nodes) * 8
    while queue:
        if explored >= must_explore:
            if explored >= budget.max_nodes:
                break
            if deadline is not None and explored % 64 == 0:
                if time.monotonic() > deadline:
                    break
        cur_vs, cur_es = queue.popleft()
        explored += 1
        for item in _enumerate_rotations(hg, pair_cands, cur_vs, cur_es):
            if item[0][0] not in ends:
                ends[item[0][0]] = BergePath(*item)
            if item not in memo and len(memo) < memo_cap:
                memo.add(item)
                queue.append(item)

    return RotationState(
        hypergraph=hg,
        path=path,
        fixed_end=vs[-1],
        reachable_ends=frozenset(ends),
        prefix_set=prefix,
        prefix_bound=x,
        witnesses=ends,
    )


def guaranteed_reachable_ends(hg: Hypergraph, path: BergePath) -> frozenset[int]:
    """Vertices that provably start some Hamiltonian Berge path to the same end.

    Computed from the path alone: take the closed neighborhood of the
    start-anchored prefix within the spare edges plus the prefix's own
    defining edges, shift it one step toward the start, and add the vertices
    whose following edge reaches back into the prefix.  ``rotation_closure``
    is required to discover at least this set.
    """
    _require_hamiltonian(hg, path)
    vs, es = path.vertices, path.edge_ids
    n = len(vs)
    x, prefix = _prefix_data(hg, path)
    defining = set(es)
    allowed = [e for e in range(hg.num_edges) if e not in defining]
    allowed.extend(es[: x - 1])
    prefix_vertices = {vs[p - 1] for p in prefix}
    hood = set(prefix_vertices)
    for e in allowed:
        if hg.edges[e] & prefix_vertices:
            hood |= hg.edges[e]
    positions = {idx + 1 for idx, v in enumerate(vs) if v in hood}
    result = {vs[p - 1] for p in shift_left(positions, path)}
    early = set(vs[: max(0, x - 1)])
    for y in range(x, n):
        if hg.edges[es[y - 1]] & early:
            result.add(vs[y - 1])
    return frozenset(result)
