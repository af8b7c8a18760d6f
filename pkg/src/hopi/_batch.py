"""Vectorised bitmask kernels shared by the exhaustive searches.

A batch is a 1-d ``uint64`` array of vertex subsets of one graph, so these
helpers work for graphs of at most 64 vertices.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import numpy as np

from .lattice import GraphTooLarge

BATCH_LIMIT = 64


def worker_count(workers=None) -> int:
    if workers is not None:
        return max(1, int(workers))
    try:
        return max(1, int(os.environ.get("HOPI_THREADS", "1")))
    except ValueError:
        return 1


def neighbor_array(g) -> np.ndarray:
    if g.order > BATCH_LIMIT:
        raise GraphTooLarge(f"batch kernels support at most {BATCH_LIMIT} vertices")
    return np.array(g.nbr, dtype=np.uint64)


def masks_of_size(n: int, k: int) -> np.ndarray:
    """All ``k``-subsets of ``n`` vertices as masks, ascending."""
    if n <= 24:
        allm = np.arange(1 << n, dtype=np.uint64)
        return allm[np.bitwise_count(allm) == k]
    out = np.fromiter((sum(1 << v for v in c) for c in combinations(range(n), k)), dtype=np.uint64)
    return np.sort(out)


def closure_batch(nbr: np.ndarray, blue: np.ndarray, leaks: int = 0) -> np.ndarray:
    """Final blue sets for many starting sets under the same leak placement."""
    one = np.uint64(1)
    active = [v for v in range(len(nbr)) if not leaks >> v & 1]
    blue = blue.astype(np.uint64, copy=True)
    todo = np.arange(len(blue))
    while todo.size:
        cur = blue[todo]
        new = cur.copy()
        for v in active:
            white = nbr[v] & ~cur
            fire = ((cur >> np.uint64(v)) & one).astype(bool) & (np.bitwise_count(white) == 1)
            new |= np.where(fire, white, np.uint64(0))
        changed = new != cur
        blue[todo] = new
        todo = todo[changed]
    return blue


def leaky_survivors(nbr: np.ndarray, cands: np.ndarray, ell: int) -> np.ndarray:
    """Subset of ``cands`` that force the whole graph for every ``ell``-leak placement."""
    n = len(nbr)
    full = np.uint64((1 << n) - 1)
    k = min(ell, n)
    alive = cands
    for leak in combinations(range(n), k):
        if not alive.size:
            break
        lmask = sum(1 << v for v in leak)
        alive = alive[closure_batch(nbr, alive, lmask) == full]
    return alive


def parallel_filter(fn, cands: np.ndarray, workers: int) -> np.ndarray:
    """Apply a filtering kernel to chunks of ``cands``; result order is preserved."""
    if workers <= 1 or cands.size < 2 * workers:
        return fn(cands)
    chunks = np.array_split(cands, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(fn, chunks))
    return np.concatenate(parts)


def fort_table(nbr: np.ndarray, ell: int, chunk: int = 1 << 20) -> np.ndarray:
    """Boolean table over all ``2**N`` masks: is the mask an ``ell``-leaky fort."""
    n = len(nbr)
    out = np.zeros(1 << n, dtype=bool)
    one = np.uint64(1)
    for start in range(0, 1 << n, chunk):
        s = np.arange(start, min(start + chunk, 1 << n), dtype=np.uint64)
        viol = np.zeros(s.shape, dtype=np.int16)
        for v in range(n):
            outside = ((s >> np.uint64(v)) & one) == 0
            viol += outside & (np.bitwise_count(s & nbr[v]) == 1)
        out[start:start + len(s)] = (viol <= ell) & (s != 0)
    return out


def has_proper_subset(table: np.ndarray, n: int) -> np.ndarray:
    """For each mask, whether some proper subset is flagged in ``table``."""
    down = table.copy()
    for b in range(n):
        view = down.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    # down[s]: some flagged subset of s (s included); strip s itself
    strict = np.zeros_like(table)
    for b in range(n):
        tv = strict.reshape(-1, 2, 1 << b)
        dv = down.reshape(-1, 2, 1 << b)
        tv[:, 1, :] |= dv[:, 0, :]
    return strict
