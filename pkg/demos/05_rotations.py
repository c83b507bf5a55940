"""Path rotations: trading one Hamiltonian Berge path for many.

Three local operations each produce a new Hamiltonian path with the same
final vertex but a different start. Their closure collects every start
reachable this way, with a witness path for each; a shift-based lower
bound says which starts the closure must find regardless of budget.
"""

from itertools import combinations

from bergeham import (
    BergePath,
    Hypergraph,
    RotationState,
    guaranteed_reachable_ends,
    rotate_defining,
    rotate_double,
    rotate_nondefining,
    rotation_closure,
)

hg = Hypergraph(5, combinations(range(5), 3))
path = BergePath((0, 1, 2, 3, 4), (0, 6, 3, 5))
state = RotationState.from_path(hg, path)
print(f"start {path.vertices[0]}, fixed end {state.fixed_end}, "
      f"prefix bound {state.prefix_bound}")

# Through a defining edge containing the start: reverse the prefix.
s1 = rotate_defining(state, 3)
print(f"\nrotate_defining(i=3):    {s1.path.vertices} via {s1.path.edge_ids}")

# Through a spare edge: same reversal, the bridge replaces a path edge.
s2 = rotate_nondefining(state, 2, 4)
print(f"rotate_nondefining(2,4): {s2.path.vertices} via {s2.path.edge_ids}")

# Two segments at once; needs the start in edge i and a spare bridge.
s3 = rotate_double(state, 3, 2, 8)
print(f"rotate_double(3,2,8):    {s3.path.vertices} via {s3.path.edge_ids}")

closure = rotation_closure(hg, path)
guaranteed = guaranteed_reachable_ends(hg, path)
print(f"\nclosure reachable ends:  {sorted(closure.reachable_ends)}")
print(f"guaranteed lower bound:  {sorted(guaranteed)}")
print(f"lower bound contained:   {guaranteed <= closure.reachable_ends}")
for end in sorted(closure.reachable_ends):
    witness = closure.witnesses[end]
    print(f"  end {end}: witness {witness.vertices} via {witness.edge_ids}")

# On a path graph nothing rotates: the closure is just the original start.
rigid = Hypergraph(4, [[0, 1], [1, 2], [2, 3]])
stuck = rotation_closure(rigid, BergePath((0, 1, 2, 3), (0, 1, 2)))
print(f"\nrigid path instance: reachable ends {sorted(stuck.reachable_ends)}")
