"""Extremal families showing the degree conditions cannot be weakened.

Three generators, each producing a non-Hamiltonian r-uniform hypergraph whose
ascending degree sequence misses exactly one bound of ``posa_r_uniform``:

* ``example1`` (family H1): k vertices of degree exactly k, so tag 1 fails
  at index k.
* ``example2`` (family H2): k vertices of degree C(k, r-1), so tag 2 fails
  at index k.
* ``example3`` (family H3): even n; the middle entries sit exactly one above
  the base bound, so only the strengthened tag-3 bound fails.

``predicted_degree_sequence`` reproduces the expected sequence from the
parameters alone, without building the hypergraph, and is used to cross-check
the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .core import DegreeSequence, Hypergraph, PreconditionError

FAMILIES = ("H1", "H2", "H3")


class InfeasibleConstruction(PreconditionError):
    """Parameters are in range but the requested structure cannot exist."""


@dataclass(frozen=True)
class ConstructionSpec:
    """Which family was built, with the vertex classes actually used.

    ``v1``/``v2``/``v3`` are the contiguous vertex classes (``v3`` only for
    H2).  ``special_edges`` holds the edges added beside the combinatorially
    complete part: the k supersets of V1 for H1, the single extra edge inside
    V1 for H3, nothing for H2.
    """

    family: str
    n: int
    r: int
    k: int | None
    v1: tuple[int, ...]
    v2: tuple[int, ...]
    v3: tuple[int, ...] | None = None
    special_edges: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown family {self.family!r}")


def _colex_subsets(pool: Sequence[int], size: int) -> Iterator[tuple[int, ...]]:
    """Subsets of ``pool`` of the given size, in colexicographic order.

    Colex compares subsets by their largest differing member, so the first
    subsets use the smallest pool members.
    """

    def rec(limit: int, need: int) -> Iterator[tuple[int, ...]]:
        if need == 0:
            yield ()
            return
        for top in range(need - 1, limit):
            for rest in rec(top, need - 1):
                yield rest + (top,)

    for idx in rec(len(pool), size):
        yield tuple(pool[i] for i in idx)


def example1(n: int, r: int, k: int) -> tuple[Hypergraph, ConstructionSpec]:
    """k low-degree vertices covered only by k shared edges.

    Needs n > 2r > 2k > 0.  V1 = {0..k-1}; every r-subset of V2 is an edge,
    plus k edges of the form V1 + S with S drawn from V2 in colex order (the
    first k choices, which keeps the generator deterministic).
    """
    if not (n > 2 * r > 2 * k > 0):
        raise PreconditionError(f"need n > 2r > 2k > 0, got n={n}, r={r}, k={k}")
    v1 = tuple(range(k))
    v2 = tuple(range(k, n))
    available = comb(n - k, r - k)
    if k > available:
        raise InfeasibleConstruction(
            f"need {k} distinct supersets of V1 but only {available} exist"
        )
    edges: list[frozenset[int]] = [frozenset(c) for c in combinations(v2, r)]
    specials = []
    for count, s in enumerate(_colex_subsets(v2, r - k)):
        if count == k:
            break
        specials.append(frozenset(v1) | frozenset(s))
    edges.extend(specials)
    spec = ConstructionSpec("H1", n, r, k, v1, v2, None, tuple(specials))
    return Hypergraph(n, edges), spec


def example2(n: int, r: int, k: int) -> tuple[Hypergraph, ConstructionSpec]:
    """An independent class V1 reachable only through a small class V2.

    Needs 3 <= r <= k < n/2.  V1, V2 have k vertices each; edges are the
    r-sets meeting V1 in exactly one vertex and otherwise inside V2, plus all
    r-sets inside V2 + V3.
    """
    if not (3 <= r <= k and 2 * k < n):
        raise PreconditionError(f"need 3 <= r <= k < n/2, got n={n}, r={r}, k={k}")
    v1 = tuple(range(k))
    v2 = tuple(range(k, 2 * k))
    v3 = tuple(range(2 * k, n))
    edges: list[frozenset[int]] = []
    for v in v1:
        for rest in combinations(v2, r - 1):
            edges.append(frozenset((v,) + rest))
    for c in combinations(v2 + v3, r):
        edges.append(frozenset(c))
    spec = ConstructionSpec("H2", n, r, k, v1, v2, v3)
    return Hypergraph(n, edges), spec


def example3(n: int, r: int) -> tuple[Hypergraph, ConstructionSpec]:
    """An oversized nearly independent class, plus one edge inside it.

    Needs n even and 3 <= r < n/2.  V1 = {0..n/2} (one more than half);
    edges are all r-sets meeting V1 at most once, plus the single edge
    {0..r-1} inside V1.
    """
    if n % 2 != 0:
        raise PreconditionError(f"need n even, got n={n}")
    if not (3 <= r and 2 * r < n):
        raise PreconditionError(f"need 3 <= r < n/2, got n={n}, r={r}")
    half = n // 2
    v1 = tuple(range(half + 1))
    v2 = tuple(range(half + 1, n))
    extra = frozenset(range(r))
    edges: list[frozenset[int]] = [extra]
    for take in (0, 1):
        for ones in combinations(v1, take):
            for rest in combinations(v2, r - take):
                edges.append(frozenset(ones + rest))
    spec = ConstructionSpec("H3", n, r, None, v1, v2, None, (extra,))
    return Hypergraph(n, edges), spec


def generate(family: str, n: int, r: int, k: int | None = None):
    """Dispatch by family name; H3 ignores k."""
    name = family.upper()
    if name == "H1":
        if k is None:
            raise PreconditionError("family H1 needs k")
        return example1(n, r, k)
    if name == "H2":
        if k is None:
            raise PreconditionError("family H2 needs k")
        return example2(n, r, k)
    if name == "H3":
        return example3(n, r)
    raise PreconditionError(f"unknown family {family!r}")


def predicted_degree_sequence(spec: ConstructionSpec) -> DegreeSequence:
    """The degree sequence the construction is designed to have.

    For H2 and H3 this is a closed formula.  For H1 the V2 side depends on
    which supersets of V1 the generator picked, so the prediction recounts the
    same colex-first choices; the V1 side is exactly k throughout.
    """
    n, r, k = spec.n, spec.r, spec.k
    if spec.family == "H1":
        assert k is not None
        base = comb(n - k - 1, r - 1)
        extra = {v: 0 for v in spec.v2}
        for count, s in enumerate(_colex_subsets(spec.v2, r - k)):
            if count == k:
                break
            for v in s:
                extra[v] += 1
        values = [k] * k + [base + extra[v] for v in spec.v2]
        return DegreeSequence(tuple(sorted(values)), source="predicted")
    if spec.family == "H2":
        assert k is not None
        low = comb(k, r - 1)
        mid = comb(n - k - 1, r - 1)
        high = mid + k * comb(k - 1, r - 2)
        values = [low] * k + [mid] * (n - 2 * k) + [high] * k
        return DegreeSequence(tuple(sorted(values)), source="predicted")
    if spec.family == "H3":
        half = n // 2
        low = comb(half - 1, r - 1)
        high = comb(half - 2, r - 1) + (half + 1) * comb(half - 2, r - 2)
        values = [low] * (half + 1 - r) + [low + 1] * r + [high] * (half - 1)
        return DegreeSequence(tuple(sorted(values)), source="predicted")
    raise PreconditionError(f"unknown family {spec.family!r}")


def designated_violation_tag(family: str) -> str:
    """Which single condition tag each family is built to violate."""
    return {"H1": "1", "H2": "2", "H3": "3"}[family.upper()]
