"""Brute-force forcing numbers for small graphs.

``min_leaky_forcing`` computes the answer twice: by simulating every leak
placement for increasing candidate sizes, and as a minimum hitting set of the
leaky forts.  The two must agree.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from typing import List, Optional


from . import _batch
from .forcing import is_leaky_forcing_set
from .forts import FORT_SEARCH_LIMIT, fort_cover_check, minimal_fort_hitting_number
from .lattice import as_simple_graph, build_hopi
from .witness import leaky_number_formula


class BudgetExceeded(RuntimeError):
    pass


class OracleDisagreement(AssertionError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = FORT_SEARCH_LIMIT
    max_subset_size: Optional[int] = None
    time_limit: Optional[float] = None

    def check(self, g) -> None:
        if g.order > min(self.max_vertices, _batch.BATCH_LIMIT):
            raise BudgetExceeded(f"graph has {g.order} vertices, budget allows {self.max_vertices}")


@dataclass
class SearchResult:
    value: int
    witness: list
    mask: int
    elapsed_ms: float


def _min_by_enumeration(sg, ell: int, budget: SearchBudget, workers=None):
    budget.check(sg)
    nbr = _batch.neighbor_array(sg)
    kmax = sg.order if budget.max_subset_size is None else min(budget.max_subset_size, sg.order)
    start = time.perf_counter()
    nw = _batch.worker_count(workers)
    for k in range(kmax + 1):
        if budget.time_limit is not None and time.perf_counter() - start > budget.time_limit:
            raise BudgetExceeded(f"time limit of {budget.time_limit}s reached at size {k}")
        cands = _batch.masks_of_size(sg.order, k)
        alive = _batch.parallel_filter(lambda c: _batch.leaky_survivors(nbr, c, ell), cands, nw)
        if alive.size:
            return k, int(alive.min())
    raise BudgetExceeded(f"no forcing set of size <= {kmax}")


def min_zero_forcing(g, budget: SearchBudget = SearchBudget(), workers=None) -> SearchResult:
    """Smallest zero forcing set, scanning sizes upward; returns the first (least) mask found."""
    sg = as_simple_graph(g)
    t0 = time.perf_counter()
    k, mask = _min_by_enumeration(sg, 0, budget, workers)
    return SearchResult(k, sg.members(mask), mask, (time.perf_counter() - t0) * 1e3)


def min_leaky_forcing(g, ell: int, budget: SearchBudget = SearchBudget(), workers=None) -> SearchResult:
    sg = as_simple_graph(g)
    t0 = time.perf_counter()
    k, mask = _min_by_enumeration(sg, ell, budget, workers)
    if not is_leaky_forcing_set(sg, mask, ell):
        raise OracleDisagreement(f"batch kernel accepted a set the scalar check rejects: {sg.members(mask)}")
    hit, hmask = minimal_fort_hitting_number(sg, ell, witness=True)
    if hit != k:
        raise OracleDisagreement(f"leak enumeration gives {k}, fort hitting gives {hit} (ell={ell})")
    if not is_leaky_forcing_set(sg, hmask, ell):
        raise OracleDisagreement(f"fort-hitting witness fails leak enumeration: {sg.members(hmask)}")
    return SearchResult(k, sg.members(mask), mask, (time.perf_counter() - t0) * 1e3)


@dataclass
class CrossValidation:
    ell: int
    checked: int
    exhaustive: bool
    mismatches: List[list]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_validate(g, ell: int, samples: int = 1000, seed: int = 0,
                   exhaustive: Optional[bool] = None) -> CrossValidation:
    """Compare fort cover and leak enumeration on many sets ``B``.

    Exhaustive over all ``2**N`` sets when ``N <= 12`` (unless told otherwise),
    otherwise ``samples`` seeded random sets.
    """
    sg = as_simple_graph(g)
    if sg.order > FORT_SEARCH_LIMIT:
        raise BudgetExceeded(f"cross validation supports at most {FORT_SEARCH_LIMIT} vertices")
    if exhaustive is None:
        exhaustive = sg.order <= 12
    if exhaustive:
        masks = range(1 << sg.order)
    else:
        rng = random.Random(seed)
        masks = [rng.getrandbits(sg.order) for _ in range(samples)]
    bad = []
    count = 0
    for b in masks:
        count += 1
        if fort_cover_check(sg, b, ell) != is_leaky_forcing_set(sg, b, ell):
            bad.append(sg.members(b))
    return CrossValidation(ell, count, exhaustive, bad)


def verification_record(m: int, n: int, ell, oracle, formula, witness=None, elapsed_ms=None,
                        claim: str = "") -> dict:
    """One VerificationReport entry."""
    rec = {"claim": claim, "m": m, "n": n, "ell": ell, "oracle": oracle, "formula": formula,
           "agree": oracle == formula,
           "witness": None if witness is None else [list(v) if isinstance(v, tuple) else v
                                                    for v in witness],
           "elapsed_ms": elapsed_ms}
    return rec


def forcing_report(m: int, n: int, ell: int, budget: SearchBudget = SearchBudget(),
                   timing: bool = False) -> dict:
    g = build_hopi(m, n)
    res = min_zero_forcing(g, budget) if ell == 0 else min_leaky_forcing(g, ell, budget)
    return verification_record(m, n, ell, res.value, leaky_number_formula(m, n, ell), res.witness,
                               round(res.elapsed_ms, 3) if timing else None,
                               claim="zero_forcing" if ell == 0 else "leaky_forcing")


def report_json(records) -> str:
    return json.dumps(records, sort_keys=True)
