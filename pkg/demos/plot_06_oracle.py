"""
Checking the formulas by brute force
====================================

The forcing numbers are computed by trying every set of each size, and again
as a minimum hitting set of the forts.
"""

from hopi import build_hopi, leaky_number_formula, min_leaky_forcing, min_zero_forcing
from hopi.verify import run_verification

for m, n in [(1, 1), (1, 2), (2, 2)]:
    g = build_hopi(m, n)
    got = [min_zero_forcing(g).value] + [min_leaky_forcing(g, ell).value for ell in (1, 2, 3, 4)]
    want = [leaky_number_formula(m, n, ell) for ell in range(5)]
    print(f"HD({m},{n}) l=0..4: {got}  formula {want}")

checks = run_verification(2, 2)
bad = [c for c in checks if not c["agree"]]
print(f"{len(checks)} checks on m,n <= 2, {len(bad)} disagreements")
