"""The three extremal families: each misses exactly one bound and has no
Hamiltonian Berge cycle, so no bound can be dropped or weakened.
"""

from bergeham import (
    designated_violation_tag,
    find_hamiltonian_berge_cycle,
    generate,
    posa_r_uniform,
    predicted_degree_sequence,
)

for family, n, r, k in (("H1", 8, 3, 2), ("H2", 9, 3, 4), ("H3", 10, 3, None)):
    hg, spec = generate(family, n, r, k)
    label = f"{family}({n},{r}{',' + str(k) if k else ''})"
    predicted = predicted_degree_sequence(spec)
    realized = hg.degree_sequence()
    report = posa_r_uniform(realized, r)
    result = find_hamiltonian_berge_cycle(hg)

    print(f"{label}: {hg.num_edges} edges")
    print(f"  classes: V1={spec.v1} V2={spec.v2}"
          + (f" V3={spec.v3}" if spec.v3 else ""))
    print(f"  predicted degrees: {predicted.values}")
    print(f"  realized degrees:  {realized.values}"
          f"  (match: {predicted.values == realized.values})")
    for v in report.violations:
        print(f"  violation: tag {v.tag} at index {v.index} ({v.detail})")
    print(f"  designated tag: {designated_violation_tag(family)}")
    print(f"  exact search: {result.status} after {result.nodes} nodes\n")

# The whole point: change any class size and the instance stops being tight.
hg, spec = generate("H2", 9, 3, 4)
looser = posa_r_uniform(tuple(d + 1 for d in hg.degree_sequence().values), 3)
print(f"same H2 sequence shifted up by one: satisfied={looser.satisfied}")
