"""
Building a Hopi rectangle
=========================

Vertices are lattice points (i, j) in a tilted band; edges join points at
distance one.
"""

from hopi import build_hopi, rotate_iso
from hopi.lattice import build_hopi_chessboard, chessboard_square, is_isomorphism
from hopi.render import render_ascii

g = build_hopi(2, 3)
print(f"HD(2,3): {len(g)} vertices, {len(g.edges())} edges")

# the degree census: boundary corners have degree 2, the interior degree 4
census = {}
for v in g.vertices:
    census[g.degree(v)] = census.get(g.degree(v), 0) + 1
print("degrees:", dict(sorted(census.items())))

print(render_ascii(g))

# swapping m and n gives the same graph up to a quarter turn
iso = rotate_iso(2, 3)
print("HD(2,3) ~ HD(3,2):", is_isomorphism(iso, g.graph, build_hopi(3, 2).graph))

# and the white squares of a (2m+1) x (2n+1) board, touching at corners, give it too
board = build_hopi_chessboard(2, 3)
print("chessboard model agrees:",
      is_isomorphism(lambda v: chessboard_square(2, v), g.graph, board))
