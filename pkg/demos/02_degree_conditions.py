"""The degree-sequence conditions, from the graph case to hypergraphs.

Each checker reports every violated bound with the exact inequality that
failed, so a 'violated' verdict is always actionable.
"""

from bergeham import (
    chvatal_graph,
    conjecture_r_uniform,
    posa_graph,
    posa_nonuniform,
    posa_r_uniform,
)


def show(title, report):
    word = "satisfied" if report.satisfied else "violated"
    print(f"{title}: {word}")
    for v in report.violations:
        print(f"  tag {v.tag} at index {v.index}: {v.detail}")


# Graph case: d_k > k for k < n/2. The second sequence fails at k = 2,
# but the weaker pairing condition excuses it through d_3 >= 3.
show("posa    (2,3,3,3,3)", posa_graph((2, 3, 3, 3, 3)))
show("posa    (2,2,3,3,3)", posa_graph((2, 2, 3, 3, 3)))
show("chvatal (2,2,3,3,3)", chvatal_graph((2, 2, 3, 3, 3)))

# 3-uniform on 9 vertices: bounds are i below r, C(i, r-1) up to (n-1)/2.
# This sequence sits exactly at the tag-2 bound at index 4.
print()
show("r-uniform, tight at index 4", posa_r_uniform((6, 6, 6, 6, 6, 18, 18, 18, 18), 3))

# Even n adds a strengthened bound at index (n-2)/2. An entry exactly one
# above the base bound trips only the strengthened tag.
show("r-uniform, even-n bound", posa_r_uniform((6, 6, 6, 7, 7, 7, 21, 21, 21, 21), 3))

# The conjectured weakening lets a high d_{n-i} compensate for a low d_i.
print()
show("conjecture, compensated", conjecture_r_uniform((6, 6, 6, 6, 7, 18, 18, 18, 18), 3))
show("conjecture, uncompensated", conjecture_r_uniform((6, 6, 6, 6, 6, 18, 18, 18, 18), 3))

# Non-uniform (any edge sizes): 2^i replaces C(i, r-1). Proved for n > 40;
# force evaluates smaller n anyway and flags the report.
print()
values = [(1 << i) + 2 for i in range(1, 21)] + [(1 << 20) + 2] * 22
show("non-uniform, n = 42", posa_nonuniform(values))
rep = posa_nonuniform((3, 5, 10, 17, 17, 17, 17, 17), force=True)
print(f"non-uniform, n = 8 forced: satisfied={rep.satisfied}, forced={rep.forced}")
