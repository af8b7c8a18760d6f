"""Leaky forts and the fort / forcing-set duality.

A nonempty set ``S`` is an ``ell``-leaky fort when at most ``ell`` vertices
outside ``S`` have exactly one neighbour in ``S`` (those vertices are the
fort's *violators*).  ``B`` is an ``ell``-leaky forcing set exactly when it
meets every ``ell``-leaky fort.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from . import _batch
from .lattice import Coord, GraphTooLarge, HopiRectangle, as_simple_graph, iter_bits

FORT_SEARCH_LIMIT = 24


@dataclass(frozen=True)
class Fort:
    mask: int
    ell: int
    members: Tuple
    violators: Tuple

    def as_dict(self) -> dict:
        return {"members": [list(v) if isinstance(v, tuple) else v for v in self.members],
                "ell": self.ell,
                "violators": [list(v) if isinstance(v, tuple) else v for v in self.violators]}


def violator_mask(g, S) -> int:
    sg = as_simple_graph(g)
    s = sg.mask(S)
    out = 0
    for v in iter_bits(sg.full & ~s):
        if (sg.nbr[v] & s).bit_count() == 1:
            out |= 1 << v
    return out


def is_leaky_fort(g, S, ell: int) -> bool:
    sg = as_simple_graph(g)
    s = sg.mask(S)
    return s != 0 and violator_mask(sg, s).bit_count() <= ell


def make_fort(g, S, ell: int) -> Fort:
    sg = as_simple_graph(g)
    s = sg.mask(S)
    if not is_leaky_fort(sg, s, ell):
        raise ValueError(f"not an {ell}-leaky fort: {sg.members(s)}")
    viol = violator_mask(sg, s)
    return Fort(s, ell, tuple(sg.members(s)), tuple(sg.members(viol)))


def _check_size(sg) -> None:
    if sg.order > FORT_SEARCH_LIMIT:
        raise GraphTooLarge(f"exhaustive fort search supports at most {FORT_SEARCH_LIMIT} "
                            f"vertices, graph has {sg.order}")


def _fort_masks(sg, ell: int, minimal_only: bool) -> Tuple[int, ...]:
    if minimal_only:
        return _minimal_fort_masks(sg, ell)
    table = _batch.fort_table(_batch.neighbor_array(sg), ell)
    return tuple(int(x) for x in np.flatnonzero(table))


@lru_cache(maxsize=64)
def _minimal_fort_masks(sg, ell: int) -> Tuple[int, ...]:
    table = _batch.fort_table(_batch.neighbor_array(sg), ell)
    table &= ~_batch.has_proper_subset(table, sg.order)
    return tuple(int(x) for x in np.flatnonzero(table))


def _sort_key(mask: int):
    return (mask.bit_count(), [v for v in iter_bits(mask)])


def enumerate_leaky_forts(g, ell: int, minimal_only: bool = False) -> List[Fort]:
    """All (or all inclusion-minimal) ``ell``-leaky forts, by size then vertex ids."""
    sg = as_simple_graph(g)
    _check_size(sg)
    masks = sorted(_fort_masks(sg, ell, minimal_only), key=_sort_key)
    return [make_fort(sg, s, ell) for s in masks]


def minimal_fort_masks(g, ell: int) -> List[int]:
    sg = as_simple_graph(g)
    _check_size(sg)
    return sorted(_fort_masks(sg, ell, True), key=_sort_key)


def fort_cover_check(g, B, ell: int) -> bool:
    """Whether ``B`` meets every ``ell``-leaky fort."""
    sg = as_simple_graph(g)
    b = sg.mask(B)
    return all(s & b for s in minimal_fort_masks(sg, ell))


def minimal_fort_hitting_number(g, ell: int, witness: bool = False):
    """Size of a smallest set meeting every ``ell``-leaky fort (exact branch and bound)."""
    sg = as_simple_graph(g)
    forts = minimal_fort_masks(sg, ell)
    best = [sg.full.bit_count() + 1, sg.full]

    def packing_bound(open_forts):
        # disjoint unhit forts each need their own vertex
        used = count = 0
        for s in open_forts:
            if not s & used:
                used |= s
                count += 1
        return count

    def search(chosen: int, size: int, open_forts: List[int]) -> None:
        if not open_forts:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        if size + packing_bound(open_forts) >= best[0]:
            return
        pivot = open_forts[0]
        for v in iter_bits(pivot):
            bit = 1 << v
            search(chosen | bit, size + 1, [s for s in open_forts if not s & bit])

    search(0, 0, forts)
    return (best[0], best[1]) if witness else best[0]


def forts_json(forts: List[Fort], ell: int) -> str:
    return json.dumps({"ell": ell, "forts": [f.as_dict() for f in forts]})


def deg4_witnesses(g: HopiRectangle, R) -> Tuple[Coord, Coord, Coord, Coord]:
    """Four outside vertices each having exactly one neighbour in ``R``.

    ``R`` must be a nonempty set of degree-4 vertices.  Returns the vertex above
    a topmost member, below a bottommost, right of a rightmost and left of a
    leftmost member (ties broken toward the smaller coordinate).
    """
    if not isinstance(g, HopiRectangle):
        raise TypeError("deg4_witnesses needs a HopiRectangle")
    Rs = sorted({Coord(*v) for v in R})
    if not Rs:
        raise ValueError("R must be nonempty")
    bad = [v for v in Rs if v not in g or g.degree(v) != 4]
    if bad:
        raise ValueError(f"vertices of degree other than 4 in R: {bad}")
    # extreme member of each column (north/south) and each row (east/west)
    cols = {}
    rows = {}
    for v in Rs:
        cols.setdefault(v.i, []).append(v)
        rows.setdefault(v.j, []).append(v)
    r_north = [max(c, key=lambda v: v.j) for c in cols.values()]
    r_south = [min(c, key=lambda v: v.j) for c in cols.values()]
    r_east = [max(r, key=lambda v: v.i) for r in rows.values()]
    r_west = [min(r, key=lambda v: v.i) for r in rows.values()]
    x1 = min(r_north, key=lambda v: (-v.j, v.i))
    x2 = min(r_south, key=lambda v: (v.j, v.i))
    x3 = min(r_east, key=lambda v: (-v.i, v.j))
    x4 = min(r_west, key=lambda v: (v.i, v.j))
    return (Coord(x1.i, x1.j + 1), Coord(x2.i, x2.j - 1),
            Coord(x3.i + 1, x3.j), Coord(x4.i - 1, x4.j))
