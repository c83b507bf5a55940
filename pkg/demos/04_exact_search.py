"""Exact Hamiltonicity decisions, budgets, and shareable certificates.

The search returns one of four statuses. 'cycle' and 'none' are proofs
(the first carries a certificate, the second exhausted the space under
sound pruning); 'unknown' only ever means the budget ran out.
"""

from itertools import combinations

from bergeham import (
    Hypergraph,
    SearchBudget,
    example2,
    extend_and_close,
    find_hamiltonian_berge_cycle,
    is_hamiltonian_bruteforce,
    read_certificate,
    verify_certificate,
    write_certificate,
)

# A rich instance: every 3-subset of a 7-set.
k7 = Hypergraph(7, combinations(range(7), 3))
res = find_hamiltonian_berge_cycle(k7)
print(f"complete 3-uniform, n=7: {res.status} in {res.nodes} nodes")
print(f"  cycle: {res.cycle.vertices} via {res.cycle.edge_ids}")

# The certificate is plain text; anyone can re-check it without the solver.
cert_text = write_certificate(k7, res.cycle)
verdict = verify_certificate(read_certificate(cert_text), k7)
print(f"  certificate re-verifies: {verdict.ok}")

# A tight construction: the search proves absence. Here the counting
# prunes refute at the root, so the node count stays at 1.
h2, _ = example2(9, 3, 4)
res = find_hamiltonian_berge_cycle(h2)
print(f"\nH2(9,3,4): {res.status} in {res.nodes} nodes (a proof of absence)")

# An instance that genuinely needs search, under a starvation budget:
# honest 'unknown', never a guess.
res = find_hamiltonian_berge_cycle(k7, SearchBudget(max_nodes=1))
print(f"n=7 with a 1-node budget: {res.status}")

# For n <= 8 a permutation bruteforce provides an independent second opinion.
print(f"\nbruteforce agrees on n=7: {is_hamiltonian_bruteforce(k7)}")

# The greedy grower is fast and one-sided: cycle or unknown, never 'none'.
res = extend_and_close(k7)
print(f"greedy extend-and-close on n=7: {res.status}")
res = extend_and_close(h2)
print(f"greedy extend-and-close on H2(9,3,4): {res.status}")
