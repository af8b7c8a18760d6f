"""Exact rank witnesses for the minimum rank of ``HD(m, n)``.

The edges of ``HD(m, n)`` are covered by ``mn`` unit lattice squares (every
other square, chosen by the parity of its lower-left corner).  Each square
carries a rank-2 symmetric matrix whose off-diagonal pattern is the 4-cycle;
summing generic multiples of them gives a matrix in ``S(HD(m, n))`` whose
rank is at most ``2mn``.  All arithmetic uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from .lattice import Coord, _check_order, build_hopi, in_hopi

MAX_RETRIES = 32

# rank-one generators of the tile matrix, corners taken around the cycle
_V = (Fraction(1), Fraction(1), Fraction(1), Fraction(1))
_W = (Fraction(1), Fraction(2), Fraction(-1), Fraction(-1, 2))


class WitnessError(RuntimeError):
    pass


class RationalSymMatrix:
    """Dense symmetric matrix of exact rationals, optionally indexed by vertex labels."""

    def __init__(self, n: int, labels: Optional[Sequence[Coord]] = None):
        self.n = n
        self.rows: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
        self.labels = None if labels is None else tuple(Coord(*c) for c in labels)
        self._index = {} if labels is None else {c: k for k, c in enumerate(self.labels)}

    def index(self, v) -> int:
        if isinstance(v, int):
            return v
        return self._index[Coord(*v)]

    def __getitem__(self, key) -> Fraction:
        u, v = key
        return self.rows[self.index(u)][self.index(v)]

    def add(self, u, v, value) -> None:
        a, b = self.index(u), self.index(v)
        self.rows[a][b] += value
        if a != b:
            self.rows[b][a] += value

    def is_symmetric(self) -> bool:
        return all(self.rows[a][b] == self.rows[b][a] for a in range(self.n) for b in range(a))

    def pattern(self) -> set:
        """Off-diagonal nonzero positions as a set of sorted label (or index) pairs."""
        name = (lambda k: self.labels[k]) if self.labels else (lambda k: k)
        return {tuple(sorted((name(a), name(b)))) for a in range(self.n)
                for b in range(a + 1, self.n) if self.rows[a][b] != 0}

    def to_triplets(self) -> str:
        lines = [f"# N={self.n}"]
        for a in range(self.n):
            for b in range(self.n):
                x = self.rows[a][b]
                if x:
                    lines.append(f"{a} {b} {x.numerator}/{x.denominator}")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "labels": None if self.labels is None else [list(c) for c in self.labels],
            "entries": [[a, b, f"{x.numerator}/{x.denominator}"]
                        for a in range(self.n) for b in range(self.n)
                        for x in (self.rows[a][b],) if x],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "RationalSymMatrix":
        A = cls(d["n"], d.get("labels"))
        for a, b, x in d["entries"]:
            A.rows[a][b] = Fraction(x)
        return A


@dataclass(frozen=True, order=True)
class C4Tile:
    corner: Coord

    @property
    def corners(self) -> Tuple[Coord, Coord, Coord, Coord]:
        i, j = self.corner
        return (Coord(i, j), Coord(i + 1, j), Coord(i + 1, j + 1), Coord(i, j + 1))

    def edges(self) -> List[Tuple[Coord, Coord]]:
        c = self.corners
        return [tuple(sorted((c[k], c[(k + 1) % 4]))) for k in range(4)]


def c4_cover(m: int, n: int) -> List[C4Tile]:
    _check_order(m, n)
    tiles = []
    for i in range(m + n - 1):
        for j in range(m + n - 1):
            if (i + j - (m - 1)) % 2:
                continue
            t = C4Tile(Coord(i, j))
            if all(in_hopi(m, n, *c) for c in t.corners):
                tiles.append(t)
    return tiles


def c4_realization(tile: C4Tile, scale=1) -> RationalSymMatrix:
    """``scale * (v v^T + w w^T)`` on the tile corners; rank 2, zero across both diagonals."""
    scale = Fraction(scale)
    if scale == 0:
        raise ValueError("scale must be nonzero")
    A = RationalSymMatrix(4, tile.corners)
    for a in range(4):
        for b in range(4):
            A.rows[a][b] = scale * (_V[a] * _V[b] + _W[a] * _W[b])
    return A


def _random_scale(rng: random.Random) -> Fraction:
    num = rng.choice([k for k in range(-9, 10) if k])
    return Fraction(num, rng.randint(1, 9))


def minrank_witness(m: int, n: int, seed: int = 0) -> RationalSymMatrix:
    """A matrix of ``S(HD(m, n))`` built as a generic sum of tile realizations."""
    g = build_hopi(m, n)
    tiles = c4_cover(m, n)
    edges = set(g.edges())
    rng = random.Random(seed)
    cancelled = None
    for _ in range(MAX_RETRIES):
        A = RationalSymMatrix(len(g), g.vertices)
        for t in tiles:
            part = c4_realization(t, _random_scale(rng))
            for a, u in enumerate(t.corners):
                for b, v in enumerate(t.corners):
                    if a <= b:
                        A.add(u, v, part.rows[a][b])
        pat = A.pattern()
        if pat == edges:
            return A
        missing = sorted(edges - pat)
        if pat - edges:
            raise WitnessError(f"non-edge entries became nonzero: {sorted(pat - edges)[:4]}")
        cancelled = missing[0]
    raise WitnessError(f"edge {cancelled[0]}~{cancelled[1]} cancelled in all {MAX_RETRIES} draws")


def _integer_rows(A) -> List[List[int]]:
    rows = A.rows if isinstance(A, RationalSymMatrix) else A
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def exact_rank(A) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    Accepts a :class:`RationalSymMatrix` or any rectangular nested sequence of
    rationals.  The pivot in each column is the nonzero entry of least absolute
    value among the remaining rows.
    """
    M = _integer_rows(A)
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        cands = [r for r in range(rank, nrows) if M[r][col]]
        if not cands:
            continue
        p = min(cands, key=lambda r: (abs(M[r][col]), r))
        M[rank], M[p] = M[p], M[rank]
        piv = M[rank][col]
        prow = M[rank]
        for r in range(rank + 1, nrows):
            row = M[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (piv * row[c] - f * prow[c]) // prev
            row[col] = 0
        prev = piv
        rank += 1
    return rank


def nullity(A: RationalSymMatrix) -> int:
    return A.n - exact_rank(A)


def witness_report(m: int, n: int, seed: int = 0) -> Dict:
    A = minrank_witness(m, n, seed)
    g = build_hopi(m, n)
    r = exact_rank(A)
    return {"m": m, "n": n, "seed": seed, "order": A.n, "tiles": len(c4_cover(m, n)),
            "rank": r, "nullity": A.n - r, "bound": 2 * m * n,
            "pattern_matches": A.pattern() == set(g.edges()), "matrix": A.as_dict()}
