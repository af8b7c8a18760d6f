import logging
import warnings

import pytest

from hopi.forcing import is_leaky_forcing_set, is_zero_forcing_set, validate_force_schedule
from hopi.forts import fort_cover_check
from hopi.lattice import build_hopi
from hopi.witness import (RangeWarning, canonical_B, degree_two_set, force_schedule,
                          leaky_number_formula, range_gaps, schedule_is_valid)

GRID = [(m, n) for m in range(1, 11) for n in range(1, 11)]


def test_canonical_examples():
    assert canonical_B(1, 1) == [(0, 0), (0, 1)]
    assert sorted(canonical_B(2, 3)) == [(0, 1), (0, 2), (1, 0), (1, 3), (2, 4)]
    assert len(canonical_B(3, 1)) == 4


@pytest.mark.parametrize("m,n", GRID)
def test_canonical_set(m, n):
    g = build_hopi(m, n)
    B = canonical_B(m, n)
    assert len(B) == m + n
    assert set(B) == {v for v in g.vertices if v.i + v.j == m - 1} | {v for v in g.vertices if v.j == v.i + m}
    assert is_zero_forcing_set(g, B)
    # one member at the left end of every row
    for j in range(m + n):
        row = [v for v in g.vertices if v.j == j]
        assert [v for v in B if v.j == j] == [min(row)]


def test_f1_hd11():
    assert sorted((tuple(f.src), tuple(f.dst)) for f in force_schedule(1, 1, "F1")) == [
        ((0, 0), (1, 0)), ((0, 1), (1, 1))]


def test_f2_prefix_hd23():
    g = build_hopi(2, 3)
    sched = validate_force_schedule(g, canonical_B(2, 3), force_schedule(2, 3, "F2"))
    assert [(tuple(f.src), tuple(f.dst)) for f in sched[:5]] == [
        ((0, 1), (1, 1)), ((1, 0), (2, 0)), ((2, 0), (2, 1)), ((1, 1), (1, 2)), ((1, 2), (2, 2))]


@pytest.mark.parametrize("m,n", GRID)
@pytest.mark.parametrize("variant", ["F1", "F2", "F3"])
def test_schedules_cover_and_validate(m, n, variant):
    g = build_hopi(m, n)
    B = set(canonical_B(m, n))
    fs = force_schedule(m, n, variant)
    assert sorted(fs.targets()) == sorted(set(g.vertices) - B)
    assert all(f.src in g and f.dst in g for f in fs)
    assert all(f.dst not in g for f in fs.clipped)
    sched = validate_force_schedule(g, list(B), fs)
    assert len(sched) == len(fs)


def test_f2_directions():
    for m, n in [(2, 3), (3, 2), (4, 4)]:
        for f in force_schedule(m, n, "F2"):
            assert (f.dst.i - f.src.i, f.dst.j - f.src.j) in {(1, 0), (0, 1)}
        for f in force_schedule(m, n, "F3"):
            assert (f.dst.i - f.src.i, f.dst.j - f.src.j) in {(1, 0), (0, -1)}


def test_printed_ranges():
    # n > m: the printed F3 ranges agree with the default
    assert range_gaps(2, 3, "F3") == {"missing": [], "extra": []}
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert schedule_is_valid(2, 3, force_schedule(2, 3, "F3", ranges="printed"))
    # n <= m: the printed ranges leave diagonals unforced
    for m, n in [(1, 1), (2, 2), (3, 2), (4, 1)]:
        assert range_gaps(m, n, "F3")["missing"]
        with pytest.warns(RangeWarning):
            fs = force_schedule(m, n, "F3", ranges="printed")
        assert not schedule_is_valid(m, n, fs)
    for m, n in GRID[:30]:
        assert range_gaps(m, n, "F2") == {"missing": [], "extra": []}


def test_clipped_forces_are_logged(caplog):
    with caplog.at_level(logging.INFO, logger="hopi.witness"):
        fs = force_schedule(2, 3, "F3")
    assert fs.clipped
    assert "clipped" in caplog.text


def test_bad_variant():
    with pytest.raises(ValueError):
        force_schedule(2, 3, "F4")
    with pytest.raises(ValueError):
        force_schedule(2, 3, "F1", ranges="other")


def test_degree_two_examples():
    assert sorted(degree_two_set(1, 1)) == sorted(build_hopi(1, 1).vertices)
    assert len(degree_two_set(2, 3)) == 10
    assert sorted(degree_two_set(1, 2)) == sorted(v for v in build_hopi(1, 2).vertices if v != (1, 1))


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 7) for n in range(1, 7) if m + n + 2 * m * n <= 20])
def test_degree_two_set_is_three_leaky(m, n):
    g = build_hopi(m, n)
    S = degree_two_set(m, n)
    assert len(S) == 2 * (m + n)
    assert fort_cover_check(g, S, 3)
    if len(g) <= 12:
        assert is_leaky_forcing_set(g, S, 3)


def test_formula():
    assert leaky_number_formula(2, 3, 0) == 5
    assert leaky_number_formula(2, 3, 1) == 5
    assert leaky_number_formula(2, 3, 2) == 10
    assert leaky_number_formula(2, 3, 3) == 10
    assert leaky_number_formula(2, 3, 4) == 17
    assert leaky_number_formula(2, 3, 40) == 17
    with pytest.raises(ValueError):
        leaky_number_formula(2, 3, -1)
