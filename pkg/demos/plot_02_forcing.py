"""
Zero forcing and leaks
======================

A blue vertex with a single white neighbour turns it blue.  A leak is a
vertex that never forces.
"""

from itertools import combinations

from hopi import build_hopi, canonical_B, closure, is_leaky_forcing_set
from hopi.render import render_ascii

g = build_hopi(2, 3)
B = canonical_B(2, 3)
print("starting set:", [str(v) for v in B])
print(render_ascii(g, blue=B))

st = closure(g, B)
print(f"all blue after {st.rounds()} rounds: {st.complete}")
for f in st.log[:6]:
    print(f"  round {f.round}: {f.src} -> {f.dst}")

# one leak anywhere does not stop it
print("survives every single leak:", is_leaky_forcing_set(g, B, 1))

# two leaks can
print("survives every pair of leaks:", is_leaky_forcing_set(g, B, 2))
# find a pair of leaks that blocks it
for a, b in combinations(g.vertices, 2):
    stuck = closure(g, B, leaks=[a, b])
    if not stuck.complete:
        print(f"with leaks at {a} and {b} the closure stops at",
              len(stuck.blue_set), "of", len(g), "vertices")
        print(render_ascii(g, blue=stuck.blue_set, leaks=[a, b]))
        break
