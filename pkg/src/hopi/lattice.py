"""Hopi rectangle graphs on the integer lattice, plus a small bitmask graph type.

``HD(m, n)`` is the induced subgraph of the grid ``P_{m+n} x P_{m+n}`` on

    {(i, j) : m - 1 <= i + j <= 2n + m - 1  and  |i - j| <= m}

with the usual unit-step lattice edges.  Vertices are always ordered
lexicographically on ``(i, j)``; that order fixes the integer ids used by
:class:`SimpleGraph` and every serialized output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple


class Coord(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"{self.i},{self.j}"

    @classmethod
    def parse(cls, text: str) -> "Coord":
        a, b = text.strip().split(",")
        return cls(int(a), int(b))


class GraphTooLarge(ValueError):
    """Raised by the exhaustive searches when a graph exceeds their vertex limit."""


def _check_order(m: int, n: int) -> None:
    for name, value in (("m", m), ("n", n)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")


def in_hopi(m: int, n: int, i: int, j: int) -> bool:
    """Membership test for ``(i, j)`` in ``V(HD(m, n))``."""
    return m - 1 <= i + j <= 2 * n + m - 1 and abs(i - j) <= m


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loop-free graph on ids ``0..N-1``.

    ``nbr[v]`` is the neighbourhood of ``v`` as a Python int bitmask.
    ``labels`` optionally attaches a coordinate to each id.
    """

    nbr: Tuple[int, ...]
    labels: Optional[Tuple[Coord, ...]] = None
    _index: Dict[Coord, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.nbr)
        for v, mask in enumerate(self.nbr):
            if mask >> n:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if mask >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(mask):
                if not self.nbr[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        index: Dict[Coord, int] = {}
        if self.labels is not None:
            if len(self.labels) != n:
                raise ValueError("labels must have one entry per vertex")
            index = {Coord(*c): k for k, c in enumerate(self.labels)}
            if len(index) != n:
                raise ValueError("labels must be distinct")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[Coord]] = None) -> "SimpleGraph":
        nbr = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        lab = None if labels is None else tuple(Coord(*c) for c in labels)
        return cls(tuple(nbr), lab)

    @property
    def order(self) -> int:
        return len(self.nbr)

    @property
    def full(self) -> int:
        return (1 << len(self.nbr)) - 1

    def degree(self, v: int) -> int:
        return self.nbr[v].bit_count()

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in iter_bits(self.nbr[u]) if u < v]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.nbr) // 2

    def vertex_id(self, v) -> int:
        """Resolve an int id or a coordinate label to an id."""
        if isinstance(v, int) and not isinstance(v, bool):
            if not 0 <= v < self.order:
                raise KeyError(v)
            return v
        try:
            return self._index[Coord(*v)]
        except (TypeError, KeyError):
            raise KeyError(f"{v!r} is not a vertex of this graph") from None

    def mask(self, vertices) -> int:
        """Bitmask for a vertex subset given as an int mask or an iterable of ids/labels."""
        if isinstance(vertices, int) and not isinstance(vertices, bool):
            if vertices < 0 or vertices >> self.order:
                raise ValueError("mask has bits outside the vertex range")
            return vertices
        out = 0
        for v in vertices:
            out |= 1 << self.vertex_id(v)
        return out

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def members(self, mask: int) -> list:
        """Labels (or ids) of the vertices in ``mask``, in id order."""
        return [self.label(v) for v in iter_bits(mask)]

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.nbr[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``; labels travel with vertices."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of 0..N-1")
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        labels = None
        if self.labels is not None:
            new = [None] * n
            for v, c in enumerate(self.labels):
                new[perm[v]] = c
            labels = new
        return SimpleGraph.from_edges(n, edges, labels)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class HopiRectangle:
    m: int
    n: int
    vertices: Tuple[Coord, ...]
    adjacency: Mapping[Coord, Tuple[Coord, ...]]

    def __contains__(self, v) -> bool:
        return in_hopi(self.m, self.n, *v)

    def __len__(self) -> int:
        return len(self.vertices)

    def degree(self, v) -> int:
        return len(self.adjacency[Coord(*v)])

    def neighbors(self, v) -> Tuple[Coord, ...]:
        return self.adjacency[Coord(*v)]

    def edges(self) -> List[Tuple[Coord, Coord]]:
        return [(u, v) for u in self.vertices for v in self.adjacency[u] if u < v]

    @cached_property
    def graph(self) -> SimpleGraph:
        return to_simple_graph(self)

    def __repr__(self) -> str:
        return f"HopiRectangle(m={self.m}, n={self.n}, order={len(self.vertices)})"


@lru_cache(maxsize=256)
def build_hopi(m: int, n: int) -> HopiRectangle:
    """Construct ``HD(m, n)`` from its lattice definition (cached; the result is immutable)."""
    _check_order(m, n)
    side = m + n
    verts = tuple(Coord(i, j) for i in range(side) for j in range(side) if in_hopi(m, n, i, j))
    adj = {}
    for i, j in verts:
        adj[Coord(i, j)] = tuple(sorted(
            Coord(a, b) for a, b in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1))
            if in_hopi(m, n, a, b)
        ))
    return HopiRectangle(m, n, verts, MappingProxyType(adj))


def as_simple_graph(g) -> SimpleGraph:
    if isinstance(g, SimpleGraph):
        return g
    if isinstance(g, HopiRectangle):
        return g.graph
    raise TypeError(f"expected SimpleGraph or HopiRectangle, got {type(g).__name__}")


def to_simple_graph(g: HopiRectangle) -> SimpleGraph:
    ids = {v: k for k, v in enumerate(g.vertices)}
    edges = [(ids[u], ids[v]) for u, v in g.edges()]
    return SimpleGraph.from_edges(len(g.vertices), edges, g.vertices)


def build_hopi_chessboard(m: int, n: int) -> SimpleGraph:
    """Even Hopi rectangle as the white squares of a ``(2m+1) x (2n+1)`` board.

    Squares are indexed by ``(x, y)`` with ``0 <= x <= 2m`` and ``0 <= y <= 2n``.
    The corners are black, so white squares are those with ``x + y`` odd; two
    white squares are adjacent when they touch diagonally.
    """
    _check_order(m, n)
    white = [Coord(x, y) for x in range(2 * m + 1) for y in range(2 * n + 1) if (x + y) % 2]
    ids = {c: k for k, c in enumerate(white)}
    edges = []
    for (x, y), k in ids.items():
        for dx, dy in ((1, 1), (1, -1)):
            other = ids.get(Coord(x + dx, y + dy))
            if other is not None:
                edges.append((k, other))
    return SimpleGraph.from_edges(len(white), edges, white)


def chessboard_square(m: int, v) -> Coord:
    """The 45-degree correspondence taking lattice vertex ``(i, j)`` to its white square."""
    i, j = v
    return Coord(i - j + m, i + j - m + 1)


def rotate_iso(m: int, n: int):
    """Explicit isomorphism ``HD(m, n) -> HD(n, m)``: ``(i, j) -> (j, m + n - 1 - i)``."""
    _check_order(m, n)
    top = m + n - 1

    def iso(v) -> Coord:
        i, j = v
        return Coord(j, top - i)

    return iso


def is_isomorphism(f, src: SimpleGraph, dst: SimpleGraph) -> bool:
    """Check that label map ``f`` is a bijection preserving adjacency and non-adjacency."""
    if src.order != dst.order or src.labels is None or dst.labels is None:
        return False
    try:
        image = [dst.vertex_id(f(c)) for c in src.labels]
    except KeyError:
        return False
    if len(set(image)) != src.order:
        return False
    for u in range(src.order):
        want = 0
        for w in iter_bits(src.nbr[u]):
            want |= 1 << image[w]
        if dst.nbr[image[u]] != want:
            return False
    return True


# -- edge-list text format ----------------------------------------------------

def to_edgelist(g: HopiRectangle) -> str:
    lines = [f"# HD({g.m},{g.n}) order={len(g.vertices)}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> HopiRectangle:
    """Read the edge-list format back, checking it against the lattice definition."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("# HD("):
        raise ValueError("missing '# HD(m,n) order=N' header")
    head = lines[0][len("# HD("):]
    dims, _, rest = head.partition(")")
    m, n = (int(x) for x in dims.split(","))
    order = int(rest.strip().removeprefix("order="))
    g = build_hopi(m, n)
    if order != len(g.vertices):
        raise ValueError(f"header order {order} does not match HD({m},{n})")
    edges = set()
    for ln in lines[1:]:
        a, b = ln.split()
        u, v = sorted((Coord.parse(a), Coord.parse(b)))
        edges.add((u, v))
    if edges != set(g.edges()):
        raise ValueError("edge list does not match HD(m,n)")
    return g
