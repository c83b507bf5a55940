"""Berge paths and cycles on a small hypergraph, and what the verifiers reject.

A Berge walk alternates distinct vertices and distinct edges, each edge
containing the pair it joins. The walk records are deliberately permissive;
verify_berge_path / verify_berge_cycle are the authorities.
"""

from bergeham import (
    BergeCycle,
    BergePath,
    Hypergraph,
    verify_berge_cycle,
    verify_berge_path,
)

hg = Hypergraph(5, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 4], [0, 3, 4]])
print(f"{hg.n} vertices, {hg.num_edges} edges (canonical order):")
for e in range(hg.num_edges):
    print(f"  edge {e}: {hg.edge_tuple(e)}")

# Edge ids refer to the canonical (size, lex) order printed above.
path = BergePath((0, 1, 3, 4), (1, 3, 4))
print(f"\npath {path.vertices} via edges {path.edge_ids}:",
      verify_berge_path(hg, path))

cycle = BergeCycle((0, 1, 3, 4), (1, 3, 4, 0))
print(f"cycle {cycle.vertices} via edges {cycle.edge_ids}:",
      verify_berge_cycle(hg, cycle))

# Reusing an edge is the classic mistake; the verdict names the position.
bad = BergePath((0, 1, 2), (1, 1))
print(f"\nreused edge: {verify_berge_path(hg, bad).reason}")

# So is a pair the claimed edge does not contain.
bad = BergePath((0, 1, 4), (1, 3))
print(f"wrong edge:  {verify_berge_path(hg, bad).reason}")

degrees = hg.degree_sequence()
print(f"\nascending degree sequence: {degrees.values} (d_1 = {degrees.at(1)})")
