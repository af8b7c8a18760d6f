"""
A low-rank matrix on the graph
==============================

Half of the unit squares cover every edge once.  Each square gets a rank-2
matrix, and their sum has rank 2mn, so the nullity is m+n.
"""

from hopi import c4_cover, exact_rank, minrank_witness
from hopi.lattice import build_hopi

m, n = 2, 3
tiles = c4_cover(m, n)
print(f"{len(tiles)} tiles at", " ".join(f"({t.corner})" for t in tiles))

A = minrank_witness(m, n, seed=1)
r = exact_rank(A)
print(f"{A.n}x{A.n} matrix, rank {r}, nullity {A.n - r}")
print("nonzero pattern is exactly the edge set:", A.pattern() == set(build_hopi(m, n).edges()))

# a corner of the matrix, exact rationals
for row in A.rows[:5]:
    print(" ".join(f"{str(x):>6}" for x in row[:5]))
