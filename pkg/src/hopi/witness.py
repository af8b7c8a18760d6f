"""Closed-form forcing sets and force schedules for ``HD(m, n)``.

The canonical forcing set is the lower-left boundary ``i + j = m - 1`` together
with the upper-left boundary ``j = i + m``: one vertex at the left end of every
lattice row.  Three force sets start from it:

* ``F1`` pushes every row rightward, ``(i, j) -> (i + 1, j)``.
* ``F2`` pushes rightward from the anti-diagonals ``i + j = m - 1 + 2k``
  (``0 <= k <= n - 1``) and upward from the diagonals ``j = i + m - 2k``
  (``1 <= k <= m``).
* ``F3`` pushes rightward from the diagonals ``j = i - m + 2k`` and downward
  from the diagonals ``j = i + m - (2k + 1)``.

For ``F3`` the commonly printed ranges ``1 <= k <= n - 1`` and
``0 <= k <= n - 1`` leave the schedule stuck whenever ``n <= m``.  The
diagonals of ``HD(m, n)`` are indexed by ``m``, so by default ``k`` runs over
``1..m`` and ``0..m - 1`` respectively.  Pass ``ranges="printed"`` to get the
literal ranges instead.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Iterator, Tuple

from .forcing import Force, ScheduleError, validate_force_schedule
from .lattice import Coord, _check_order, build_hopi, in_hopi

log = logging.getLogger(__name__)

VARIANTS = ("F1", "F2", "F3")


class RangeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ForceSet:
    name: str
    forces: Tuple[Force, ...]
    #: generated forces with an endpoint outside V(HD(m, n)), dropped from ``forces``
    clipped: Tuple[Force, ...] = ()

    def __iter__(self) -> Iterator[Force]:
        return iter(self.forces)

    def __len__(self) -> int:
        return len(self.forces)

    def targets(self):
        return [f.dst for f in self.forces]


def canonical_B(m: int, n: int) -> list:
    _check_order(m, n)
    return [v for v in build_hopi(m, n).vertices if v.i + v.j == m - 1 or v.j == v.i + m]


def degree_two_set(m: int, n: int) -> list:
    g = build_hopi(m, n)
    return [v for v in g.vertices if g.degree(v) == 2]


def leaky_number_formula(m: int, n: int, ell: int) -> int:
    _check_order(m, n)
    if ell < 0:
        raise ValueError("ell must be non-negative")
    if ell <= 1:
        return m + n
    if ell <= 3:
        return 2 * (m + n)
    return m + n + 2 * m * n


def _k_ranges(m: int, n: int, variant: str, ranges: str):
    # (first, last) inclusive ranges for the rightward and the vertical family
    if variant == "F2":
        return (0, n - 1), (1, m)
    if ranges == "printed":
        return (1, n - 1), (0, n - 1)
    return (1, m), (0, m - 1)


def _generate(m: int, n: int, variant: str, ranges: str):
    g = build_hopi(m, n)
    (h0, h1), (v0, v1) = _k_ranges(m, n, variant, ranges)
    raw = []
    for i, j in g.vertices:
        src = Coord(i, j)
        if variant == "F1":
            raw.append(Force(src, Coord(i + 1, j)))
            continue
        if variant == "F2":
            right = (i + j - (m - 1)) % 2 == 0 and h0 <= (i + j - (m - 1)) // 2 <= h1
            vert = (i + m - j) % 2 == 0 and v0 <= (i + m - j) // 2 <= v1
            step = Coord(i, j + 1)
        else:
            right = (j - i + m) % 2 == 0 and h0 <= (j - i + m) // 2 <= h1
            vert = (i + m - 1 - j) % 2 == 0 and v0 <= (i + m - 1 - j) // 2 <= v1
            step = Coord(i, j - 1)
        if right:
            raw.append(Force(src, Coord(i + 1, j)))
        if vert:
            raw.append(Force(src, step))
    kept = tuple(f for f in raw if in_hopi(m, n, *f.dst))
    clipped = tuple(f for f in raw if not in_hopi(m, n, *f.dst))
    return kept, clipped


def force_schedule(m: int, n: int, variant: str, ranges: str = "corrected") -> ForceSet:
    """Force set ``F1``, ``F2`` or ``F3`` of ``HD(m, n)`` from the canonical set.

    Generated forces whose target leaves the lattice are dropped and listed in
    ``ForceSet.clipped``.  With ``ranges="printed"`` a :class:`RangeWarning` is
    issued when the result does not cover ``V - B``.
    """
    _check_order(m, n)
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if ranges not in ("corrected", "printed"):
        raise ValueError("ranges must be 'corrected' or 'printed'")
    kept, clipped = _generate(m, n, variant, ranges)
    if clipped:
        log.info("%s of HD(%d,%d): clipped %d force(s) leaving the lattice: %s",
                 variant, m, n, len(clipped), ", ".join(f"{f.src}->{f.dst}" for f in clipped))
    fs = ForceSet(variant, kept, clipped)
    if ranges == "printed":
        g = build_hopi(m, n)
        if len(fs) != len(g) - (m + n):
            warnings.warn(f"printed ranges give {len(fs)} forces for {variant} of HD({m},{n}); "
                          f"{len(g) - (m + n)} vertices need forcing", RangeWarning, stacklevel=2)
    return fs


def range_gaps(m: int, n: int, variant: str) -> dict:
    """Forces that the printed and corrected index ranges disagree on."""
    printed = set(_generate(m, n, variant, "printed")[0])
    corrected = set(_generate(m, n, variant, "corrected")[0])
    return {"missing": sorted(corrected - printed), "extra": sorted(printed - corrected)}


def schedule_is_valid(m: int, n: int, fs) -> bool:
    try:
        validate_force_schedule(build_hopi(m, n), canonical_B(m, n), fs)
    except ScheduleError:
        return False
    return True
