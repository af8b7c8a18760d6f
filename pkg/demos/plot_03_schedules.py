"""
Three force schedules
=====================

Horizontal, vertical and diagonal schedules from the same starting set.
Every vertex outside the set is reached from two different sources, which is
why a single leak cannot block the process.
"""

from hopi import build_hopi, canonical_B, double_force_check, force_schedule
from hopi.forcing import validate_force_schedule
from hopi.witness import range_gaps

m, n = 2, 3
g = build_hopi(m, n)
B = canonical_B(m, n)
schedules = [force_schedule(m, n, v) for v in ("F1", "F2", "F3")]
for fs in schedules:
    order = validate_force_schedule(g, B, fs)
    print(fs.name, "fires", len(order), "forces, first:", ", ".join(f"{f.src}->{f.dst}" for f in order[:3]))

counts = double_force_check(g, B, schedules)
print("fewest distinct sources for a vertex:", min(counts.values()))

# taken literally, the diagonal index ranges do not cover everything when n <= m
gaps = range_gaps(2, 2, "F3")
print("forces missed on HD(2,2):", ", ".join(f"{f.src}->{f.dst}" for f in gaps["missing"]))
