"""Hypergraphs, Berge paths and cycles, and the set operations everything else builds on.

Vertices are integers 0..n-1 with n <= 63, so every vertex set fits in one
machine word as a bitmask.  Edges live in a canonical order (by size, then by
sorted vertex tuple) and an "edge id" is an index into that order; certificates
and path records refer to edges by id, which makes the order part of the
contract.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 63


class DomainError(ValueError):
    """An argument fell outside an operation's stated domain."""


class PreconditionError(ValueError):
    """A documented precondition of an operation was violated."""


def _mask_of(vertices: Iterable[int], n: int, what: str) -> int:
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or isinstance(v, bool):
            raise DomainError(f"{what}: vertex {v!r} is not an integer")
        if not 0 <= v < n:
            raise DomainError(f"{what}: vertex {v} out of range 0..{n - 1}")
        mask |= 1 << v
    return mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Hypergraph:
    """Simple hypergraph on vertex set {0, ..., n-1}.

    ``edges`` may be given in any order and as any iterables of vertex ids;
    they are stored as frozensets sorted by (size, vertex tuple).  Duplicate
    edges are rejected: only simple hypergraphs are representable.  Edges of
    size one are admitted; they contribute to degrees but can never join two
    vertices on a walk.  The empty edge is rejected.
    """

    n: int
    edges: tuple[frozenset[int], ...]
    edge_masks: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"vertex count must be a non-negative integer, got {n!r}")
        if n > MAX_VERTICES:
            raise DomainError(f"at most {MAX_VERTICES} vertices are supported, got {n}")
        masks = []
        for e in edges:
            mask = _mask_of(e, n, "edge")
            if mask == 0:
                raise DomainError("empty edges are not allowed")
            masks.append(mask)
        keyed = sorted(masks, key=lambda m: (bin(m).count("1"), tuple(_bits(m))))
        for a, b in zip(keyed, keyed[1:]):
            if a == b:
                raise DomainError(
                    f"duplicate edge {{{', '.join(map(str, _bits(a)))}}}: "
                    "only simple hypergraphs are supported"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(frozenset(_bits(m)) for m in keyed))
        object.__setattr__(self, "edge_masks", tuple(keyed))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_tuple(self, edge_id: int) -> tuple[int, ...]:
        """Members of one edge, ascending."""
        return tuple(sorted(self.edges[edge_id]))

    def edges_containing(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} out of range 0..{self.n - 1}")
        bit = 1 << v
        return tuple(i for i, m in enumerate(self.edge_masks) if m & bit)

    def degree(self, v: int) -> int:
        """Number of edges containing v."""
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} out of range 0..{self.n - 1}")
        bit = 1 << v
        return sum(1 for m in self.edge_masks if m & bit)

    def degree_sequence(self) -> "DegreeSequence":
        counts = [0] * self.n
        for m in self.edge_masks:
            for v in _bits(m):
                counts[v] += 1
        return DegreeSequence(tuple(sorted(counts)), source="computed")

    def neighborhood(self, v: int) -> frozenset[int]:
        """Vertices sharing at least one edge with v, excluding v itself."""
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} out of range 0..{self.n - 1}")
        bit = 1 << v
        acc = 0
        for m in self.edge_masks:
            if m & bit:
                acc |= m
        return frozenset(_bits(acc & ~bit))

    def closed_neighborhood_set(self, vertices: Iterable[int]) -> frozenset[int]:
        """Union of closed neighborhoods N[v] over a vertex set; empty in, empty out."""
        want = _mask_of(vertices, self.n, "vertex set")
        acc = want
        for m in self.edge_masks:
            if m & want:
                acc |= m
        return frozenset(_bits(acc))


@dataclass(frozen=True)
class DegreeSequence:
    """Ascending degree sequence; d_i in the 1-based sense is ``at(i)``."""

    values: tuple[int, ...]
    source: str = "given"

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        for v in vals:
            if v < 0:
                raise DomainError(f"degree {v} is negative")
        for a, b in zip(vals, vals[1:]):
            if a > b:
                raise DomainError("degree sequence must be ascending")

    @property
    def n(self) -> int:
        return len(self.values)

    def at(self, i: int) -> int:
        """1-based access: at(1) is the smallest degree."""
        if not 1 <= i <= len(self.values):
            raise DomainError(f"index {i} out of range 1..{len(self.values)}")
        return self.values[i - 1]


@dataclass(frozen=True)
class BergePath:
    """Alternating vertex/edge record: t+1 vertices, t edge ids.

    Construction is permissive so that malformed certificates can still be
    represented and audited; ``verify_berge_path`` is the authority on
    validity.
    """

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    def __init__(self, vertices: Iterable[int], edge_ids: Iterable[int]):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "edge_ids", tuple(edge_ids))

    def __len__(self) -> int:
        return len(self.edge_ids)

    def reversed(self) -> "BergePath":
        return BergePath(tuple(reversed(self.vertices)), tuple(reversed(self.edge_ids)))


@dataclass(frozen=True)
class BergeCycle:
    """Cyclic alternating record: t vertices, t edge ids, indices mod t."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    def __init__(self, vertices: Iterable[int], edge_ids: Iterable[int]):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "edge_ids", tuple(edge_ids))

    def __len__(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a structural check; ``reason`` names the first violation."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_ids(hg: Hypergraph, vertices: Sequence[int], edge_ids: Sequence[int]) -> str | None:
    seen_v: set[int] = set()
    for pos, v in enumerate(vertices, start=1):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < hg.n:
            return f"vertex at position {pos} is out of range: {v!r}"
        if v in seen_v:
            return f"vertex {v} repeats at position {pos}"
        seen_v.add(v)
    seen_e: set[int] = set()
    for pos, e in enumerate(edge_ids, start=1):
        if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < hg.num_edges:
            return f"edge id at position {pos} is out of range: {e!r}"
        if e in seen_e:
            return f"edge id {e} repeats at position {pos}"
        seen_e.add(e)
    return None


def verify_berge_path(hg: Hypergraph, path: BergePath) -> Verdict:
    """Check the Berge path invariants against ``hg``; report the first violation."""
    if len(path.vertices) != len(path.edge_ids) + 1:
        return Verdict(
            False,
            f"a Berge path needs one more vertex than edges, got "
            f"{len(path.vertices)} vertices and {len(path.edge_ids)} edges",
        )
    if not path.vertices:
        return Verdict(False, "a Berge path needs at least one vertex")
    bad = _check_ids(hg, path.vertices, path.edge_ids)
    if bad:
        return Verdict(False, bad)
    for i, e in enumerate(path.edge_ids):
        a, b = path.vertices[i], path.vertices[i + 1]
        if not {a, b} <= hg.edges[e]:
            return Verdict(
                False,
                f"edge {e} at step {i + 1} does not contain the pair {{{a}, {b}}}",
            )
    return Verdict(True)


def verify_berge_cycle(hg: Hypergraph, cycle: BergeCycle) -> Verdict:
    """Check the Berge cycle invariants against ``hg``; report the first violation."""
    if len(cycle.vertices) != len(cycle.edge_ids):
        return Verdict(
            False,
            f"a Berge cycle needs equally many vertices and edges, got "
            f"{len(cycle.vertices)} and {len(cycle.edge_ids)}",
        )
    if len(cycle.vertices) < 2:
        return Verdict(False, "a Berge cycle needs at least two vertices")
    bad = _check_ids(hg, cycle.vertices, cycle.edge_ids)
    if bad:
        return Verdict(False, bad)
    t = len(cycle.vertices)
    for i, e in enumerate(cycle.edge_ids):
        a, b = cycle.vertices[i], cycle.vertices[(i + 1) % t]
        if not {a, b} <= hg.edges[e]:
            return Verdict(
                False,
                f"edge {e} at step {i + 1} does not contain the pair {{{a}, {b}}}",
            )
    return Verdict(True)


def _check_positions(positions: Iterable[int], path: BergePath) -> set[int]:
    length = len(path.vertices)
    out = set()
    for p in positions:
        if not isinstance(p, int) or isinstance(p, bool) or not 1 <= p <= length:
            raise DomainError(f"path position {p!r} out of range 1..{length}")
        out.add(p)
    return out


def shift_left(positions: Iterable[int], path: BergePath) -> set[int]:
    """One-step shift toward the path start: position p maps to p-1.

    Position 1 contributes nothing, so the result can be one element smaller
    than the input.  Positions are 1-based along ``path``.
    """
    pos = _check_positions(positions, path)
    return {p - 1 for p in pos if p >= 2}


def shift_right(positions: Iterable[int], path: BergePath) -> set[int]:
    """Mirror of ``shift_left``: position p maps to p+1, the last one drops out."""
    pos = _check_positions(positions, path)
    length = len(path.vertices)
    return {p + 1 for p in pos if p + 1 <= length}


@dataclass(frozen=True)
class IncidenceBipartite:
    """Bipartite containment graph: left = vertices, right = edge ids."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    adjacency: frozenset[tuple[int, int]]

    def left_neighbors(self, edge_id: int) -> tuple[int, ...]:
        return tuple(sorted(v for v, e in self.adjacency if e == edge_id))

    def right_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(e for w, e in self.adjacency if w == v))

    def right_degree(self, edge_id: int) -> int:
        return sum(1 for _, e in self.adjacency if e == edge_id)


def incidence_bipartite(hg: Hypergraph) -> IncidenceBipartite:
    """Incidence structure of ``hg``; Berge walks correspond to walks here."""
    pairs = frozenset(
        (v, e) for e, members in enumerate(hg.edges) for v in members
    )
    return IncidenceBipartite(
        left=tuple(range(hg.n)),
        right=tuple(range(hg.num_edges)),
        adjacency=pairs,
    )
