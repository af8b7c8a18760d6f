"""
Forts
=====

A set is l-leaky forcing exactly when it meets every l-leaky fort.  Small
graphs let us list all of them.
"""

from hopi import build_hopi, degree_two_set, enumerate_leaky_forts, minimal_fort_hitting_number
from hopi.render import render_ascii

g = build_hopi(1, 2)
for ell in range(5):
    forts = enumerate_leaky_forts(g, ell, minimal_only=True)
    sizes = sorted({len(f.members) for f in forts})
    k = minimal_fort_hitting_number(g.graph, ell)
    print(f"l={ell}: {len(forts):3d} minimal forts, sizes {sizes}, hitting number {k}")

# every fort with at most three leaks touches the degree-2 boundary
deg2 = set(degree_two_set(1, 2))
print("all 3-leaky forts meet degree-2 vertices:",
      all(deg2 & set(f.members) for f in enumerate_leaky_forts(g, 3)))

smallest = enumerate_leaky_forts(g, 2, minimal_only=True)[0]
print(render_ascii(g, fort=smallest.members))
