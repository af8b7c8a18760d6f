import random

import pytest
from hypothesis import given, settings, strategies as st

from hopi.forcing import is_leaky_forcing_set
from hopi.lattice import SimpleGraph, build_hopi
from hopi.oracle import (BudgetExceeded, SearchBudget, cross_validate, forcing_report,
                         min_leaky_forcing, min_zero_forcing, verification_record)

from tests.test_forcing import graphs


def path(n):
    return SimpleGraph.from_edges(n, [(k, k + 1) for k in range(n - 1)])


def brute_min(g, ell):
    # independent scalar route: smallest mask in (size, value) order
    for k in range(g.order + 1):
        for b in sorted(b for b in range(1 << g.order) if bin(b).count("1") == k):
            if is_leaky_forcing_set(g, b, ell):
                return k, b


def test_examples():
    assert min_zero_forcing(build_hopi(1, 1)).value == 2
    assert min_zero_forcing(path(3)).value == 1
    assert min_zero_forcing(path(3)).witness == [0]
    assert min_zero_forcing(build_hopi(1, 2)).value == 3
    assert min_leaky_forcing(build_hopi(1, 1), 1).value == 2
    assert min_leaky_forcing(build_hopi(1, 1), 2).value == 4
    assert min_leaky_forcing(build_hopi(1, 2), 2).value == 6


def test_witness_is_a_forcing_set():
    g = build_hopi(2, 2)
    for ell in range(3):
        r = min_leaky_forcing(g, ell) if ell else min_zero_forcing(g)
        assert len(r.witness) == r.value
        assert is_leaky_forcing_set(g, r.witness, ell)


def test_budget():
    with pytest.raises(BudgetExceeded):
        min_zero_forcing(build_hopi(2, 5))
    with pytest.raises(BudgetExceeded):
        min_zero_forcing(build_hopi(2, 2), SearchBudget(max_subset_size=3))
    with pytest.raises(BudgetExceeded):
        min_zero_forcing(build_hopi(2, 2), SearchBudget(max_vertices=10))
    with pytest.raises(BudgetExceeded):
        cross_validate(build_hopi(2, 5), 1)
    assert min_zero_forcing(build_hopi(2, 2), SearchBudget(max_subset_size=4)).value == 4


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8), st.integers(0, 3))
def test_matches_scalar_search(g, ell):
    r = min_leaky_forcing(g, ell) if ell else min_zero_forcing(g)
    assert (r.value, r.mask) == brute_min(g, ell)


def test_cross_validate_examples():
    cv = cross_validate(build_hopi(1, 1), 1)
    assert cv.ok and cv.exhaustive and cv.checked == 16
    cv = cross_validate(build_hopi(2, 2), 2, samples=1000, exhaustive=False)
    assert cv.ok and not cv.exhaustive and cv.checked == 1000
    cv = cross_validate(build_hopi(1, 2), 0)
    assert cv.ok and cv.checked == 128


def test_workers_do_not_change_results(monkeypatch):
    g = build_hopi(2, 2)
    ref = [min_leaky_forcing(g, ell, workers=1) for ell in (1, 2)]
    for w in (2, 4):
        got = [min_leaky_forcing(g, ell, workers=w) for ell in (1, 2)]
        assert [(r.value, r.mask) for r in got] == [(r.value, r.mask) for r in ref]
    monkeypatch.setenv("HOPI_THREADS", "3")
    assert min_leaky_forcing(g, 1).mask == ref[0].mask


def test_permutation_invariance():
    sg = build_hopi(1, 2).graph
    rng = random.Random(4)
    for ell in range(3):
        want = min_leaky_forcing(sg, ell).value if ell else min_zero_forcing(sg).value
        for _ in range(3):
            perm = list(range(sg.order))
            rng.shuffle(perm)
            h = sg.relabel(perm)
            got = min_leaky_forcing(h, ell).value if ell else min_zero_forcing(h).value
            assert got == want


def test_monotone_in_ell():
    g = build_hopi(1, 2)
    vals = [min_zero_forcing(g).value] + [min_leaky_forcing(g, ell).value for ell in range(1, 5)]
    assert vals == sorted(vals) and vals[-1] == len(g)


def test_records():
    rec = verification_record(1, 1, 0, 2, 2, [(0, 0), (0, 1)], None, "zero_forcing")
    assert list(rec) == ["claim", "m", "n", "ell", "oracle", "formula", "agree", "witness", "elapsed_ms"]
    assert rec["agree"] and rec["witness"] == [[0, 0], [0, 1]]
    assert not verification_record(1, 1, 0, 3, 2)["agree"]
    rep = forcing_report(1, 1, 1)
    assert rep["agree"] and rep["oracle"] == 2 and rep["elapsed_ms"] is None
    assert isinstance(forcing_report(1, 1, 1, timing=True)["elapsed_ms"], float)


def test_batch_width_limit():
    from hopi import _batch
    from hopi.lattice import GraphTooLarge
    big = path(70)
    with pytest.raises(BudgetExceeded):
        min_zero_forcing(big, SearchBudget(max_vertices=100))
    with pytest.raises(GraphTooLarge):
        _batch.neighbor_array(big)
