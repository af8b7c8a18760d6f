"""The verification sweep behind ``hopi verify``.

Each check yields one record (see :func:`hopi.oracle.verification_record`);
``oracle`` is what the computation produced and ``formula`` what the closed
form predicts.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _batch
from .forcing import double_force_check, is_leaky_forcing_set, is_zero_forcing_set
from .forts import deg4_witnesses, violator_mask
from .lattice import build_hopi, build_hopi_chessboard, chessboard_square, is_isomorphism, rotate_iso
from .minrank import c4_cover, exact_rank, minrank_witness
from .oracle import cross_validate, min_leaky_forcing, min_zero_forcing, verification_record
from .witness import VARIANTS, canonical_B, degree_two_set, force_schedule, leaky_number_formula, schedule_is_valid

LEVELS = {
    # |V| caps for the exhaustive checks; chess and rank cap m and n instead
    "fast": dict(oracle=17, forts=12, chess=4, rank=5, duality=10, deg4=12),
    "full": dict(oracle=17, forts=20, chess=4, rank=5, duality=12, deg4=31),
}


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, round((time.perf_counter() - t0) * 1e3, 3)


def forts_all_meet_degree_two(g, ell: int) -> bool:
    sg = g.graph
    table = _batch.fort_table(_batch.neighbor_array(sg), ell)
    deg2 = np.uint64(sg.mask(degree_two_set(g.m, g.n)))
    masks = np.flatnonzero(table).astype(np.uint64)
    return bool(np.all(masks & deg2))


def deg4_ok(g, sub) -> bool:
    xs = deg4_witnesses(g, sub)
    if len(set(xs)) != 4:
        return False
    sg = g.graph
    viol = violator_mask(sg, sub)
    return all(x in g and viol >> sg.vertex_id(x) & 1 for x in xs)


def instance_checks(m: int, n: int, level: str = "fast", timing: bool = False) -> list:
    caps = LEVELS[level]
    g = build_hopi(m, n)
    N = len(g)
    recs = []

    def add(claim, ell, oracle, formula, witness=None, ms=None):
        recs.append(verification_record(m, n, ell, oracle, formula, witness,
                                        ms if timing else None, claim))

    add("order", None, N, m + n + 2 * m * n)
    add("degree_two_count", None, len(degree_two_set(m, n)), 2 * (m + n))
    iso = rotate_iso(m, n)
    add("rotation_isomorphism", None,
        is_isomorphism(iso, g.graph, build_hopi(n, m).graph), True)
    if m <= caps["chess"] and n <= caps["chess"]:
        add("chessboard_isomorphism", None,
            is_isomorphism(lambda v: chessboard_square(m, v), g.graph, build_hopi_chessboard(m, n)), True)
    B = canonical_B(m, n)
    add("canonical_set_size", 0, len(B), m + n, B)
    add("canonical_set_forces", 0, is_zero_forcing_set(g, B), True)
    schedules = [force_schedule(m, n, v) for v in VARIANTS]
    add("schedules_valid", None, all(schedule_is_valid(m, n, fs) for fs in schedules), True)
    counts = double_force_check(g, B, schedules)
    add("double_force", 1, min(counts.values(), default=2) >= 2, True)
    if N <= 30:
        add("canonical_set_one_leak", 1, is_leaky_forcing_set(g, B, 1), True)
    tiles = c4_cover(m, n)
    covered = {e for t in tiles for e in t.edges()}
    add("c4_cover", None, [len(tiles), covered == set(g.edges())], [m * n, True])
    if m <= caps["rank"] and n <= caps["rank"]:
        A, ms = _timed(lambda: minrank_witness(m, n, seed=0))
        add("rank_witness", None, [exact_rank(A), A.pattern() == set(g.edges())],
            [2 * m * n, True], ms=ms)
    if N <= caps["oracle"]:
        for ell in range(4):
            res = min_zero_forcing(g) if ell == 0 else min_leaky_forcing(g, ell)
            add("zero_forcing" if ell == 0 else "leaky_forcing", ell, res.value,
                leaky_number_formula(m, n, ell), res.witness, round(res.elapsed_ms, 3))
    if N <= 12:
        full = g.graph.full
        proper = [full & ~(1 << v) for v in range(N)]
        add("four_leaks_need_everything", 4,
            any(is_leaky_forcing_set(g, s, 4) for s in proper), False)
    if N <= caps["forts"]:
        add("forts_contain_degree_two", "0-3",
            all(forts_all_meet_degree_two(g, ell) for ell in range(4)), True)
    if N <= caps["duality"]:
        bad = sum(len(cross_validate(g, ell).mismatches) for ell in range(4))
        add("fort_duality", "0-3", bad, 0)
    R = [v for v in g.vertices if g.degree(v) == 4]
    if R and N <= caps["deg4"]:
        if len(R) <= 10:
            subsets = [[R[k] for k in range(len(R)) if s >> k & 1] for s in range(1, 1 << len(R))]
        else:
            rng = random.Random(0)
            subsets = [[v for v in R if rng.random() < 0.5] or [R[0]] for _ in range(2000)]
        add("degree_four_witnesses", None, all(deg4_ok(g, s) for s in subsets), True)
    return recs


def run_verification(max_m: int = 3, max_n: int = 3, level: str = "fast",
                     timing: bool = False, workers=None) -> list:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {sorted(LEVELS)}")
    pairs = [(m, n) for m in range(1, max_m + 1) for n in range(1, max_n + 1)]
    nw = _batch.worker_count(workers)
    if nw > 1:
        with ThreadPoolExecutor(max_workers=nw) as pool:
            parts = list(pool.map(lambda p: instance_checks(*p, level=level, timing=timing), pairs))
    else:
        parts = [instance_checks(m, n, level, timing) for m, n in pairs]
    return [r for part in parts for r in part]


def report(checks) -> dict:
    return {"schema": 1, "checks": list(checks)}
