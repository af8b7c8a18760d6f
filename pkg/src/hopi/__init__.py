"""Zero forcing, leaky forcing and minimum rank on Hopi (Aztec) rectangle graphs.

Modules
-------
lattice   construction of ``HD(m, n)``, the chessboard model, symmetry
forcing   color change rule, closures, leaky forcing, force schedules
forts     leaky forts, fort enumeration, hitting numbers
witness   closed-form forcing sets and force schedules
minrank   C4 edge cover and exact rank witness
oracle    brute-force forcing numbers with two independent routes
render    ASCII / DOT / SVG pictures
cli       the ``hopi`` command
"""

from .forcing import (ColorState, Force, ScheduleError, closure, double_force_check,
                      is_leaky_forcing_set, is_zero_forcing_set, validate_force_schedule)
from .forts import (Fort, deg4_witnesses, enumerate_leaky_forts, fort_cover_check, is_leaky_fort,
                    minimal_fort_hitting_number)
from .lattice import (Coord, HopiRectangle, SimpleGraph, build_hopi, build_hopi_chessboard,
                      rotate_iso, to_simple_graph)
from .minrank import (C4Tile, RationalSymMatrix, c4_cover, c4_realization, exact_rank,
                      minrank_witness)
from .oracle import SearchBudget, cross_validate, min_leaky_forcing, min_zero_forcing
from .witness import (ForceSet, canonical_B, degree_two_set, force_schedule,
                      leaky_number_formula)

__version__ = "0.1.0"

__all__ = [
    "ColorState", "Force", "ScheduleError", "closure", "double_force_check",
    "is_leaky_forcing_set", "is_zero_forcing_set", "validate_force_schedule",
    "Fort", "deg4_witnesses", "enumerate_leaky_forts", "fort_cover_check", "is_leaky_fort",
    "minimal_fort_hitting_number",
    "Coord", "HopiRectangle", "SimpleGraph", "build_hopi", "build_hopi_chessboard", "rotate_iso",
    "to_simple_graph",
    "C4Tile", "RationalSymMatrix", "c4_cover", "c4_realization", "exact_rank", "minrank_witness",
    "SearchBudget", "cross_validate", "min_leaky_forcing", "min_zero_forcing",
    "ForceSet", "canonical_B", "degree_two_set", "force_schedule", "leaky_number_formula",
]
