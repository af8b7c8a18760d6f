"""Zero forcing and leaky forcing.

Color change rule: a blue vertex that is not leaked and has exactly one white
neighbour forces that neighbour blue.  :func:`closure` applies the rule in
synchronous rounds; the final blue set does not depend on the order in which
forces are applied, only the recorded log does.

Vertex subsets may be passed as int bitmasks or as iterables of ids/labels.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, NamedTuple, Tuple

from .lattice import SimpleGraph, as_simple_graph, iter_bits


class Force(NamedTuple):
    src: object
    dst: object


class LoggedForce(NamedTuple):
    src: object
    dst: object
    round: int


@dataclass
class ColorState:
    blue: int
    leaks: int
    log: List[LoggedForce] = field(default_factory=list)
    graph: SimpleGraph = field(default=None, repr=False)

    @property
    def blue_set(self) -> list:
        return self.graph.members(self.blue)

    @property
    def complete(self) -> bool:
        return self.blue == self.graph.full

    def rounds(self) -> int:
        return self.log[-1].round if self.log else 0

    def log_json(self) -> str:
        return force_log_json(self.log)


def force_log_json(log: Iterable[LoggedForce]) -> str:
    return json.dumps([{"src": str(f.src), "dst": str(f.dst), "round": f.round} for f in log])


class ScheduleError(ValueError):
    """A listed force set could not be fully executed; ``stuck`` holds the unfired forces."""

    def __init__(self, stuck, done=()):
        self.stuck = list(stuck)
        self.done = list(done)
        shown = ", ".join(f"{f.src}->{f.dst}" for f in self.stuck[:8])
        more = "" if len(self.stuck) <= 8 else f" (+{len(self.stuck) - 8} more)"
        super().__init__(f"{len(self.stuck)} force(s) never became valid: {shown}{more}")


def closure(g, blue=0, leaks=0) -> ColorState:
    """Round-synchronous closure of ``blue`` under the color change rule.

    When several sources could force the same white vertex in one round the
    log keeps the smallest source id.
    """
    sg = as_simple_graph(g)
    b = sg.mask(blue)
    lk = sg.mask(leaks)
    log: List[LoggedForce] = []
    rnd = 0
    while True:
        rnd += 1
        hits: Dict[int, int] = {}
        for u in iter_bits(b & ~lk):
            white = sg.nbr[u] & ~b
            if white and white & (white - 1) == 0:
                t = white.bit_length() - 1
                if t not in hits:
                    hits[t] = u
        if not hits:
            break
        for t, u in sorted(hits.items(), key=lambda kv: (kv[1], kv[0])):
            log.append(LoggedForce(sg.label(u), sg.label(t), rnd))
            b |= 1 << t
    return ColorState(b, lk, log, sg)


def is_zero_forcing_set(g, B) -> bool:
    sg = as_simple_graph(g)
    return closure(sg, B).blue == sg.full


def is_leaky_forcing_set(g, B, ell: int) -> bool:
    """True iff ``B`` forces everything for every placement of ``min(ell, N)`` leaks.

    Leaks may land on any vertex, initially blue ones included.
    """
    if ell < 0:
        raise ValueError("ell must be non-negative")
    sg = as_simple_graph(g)
    b = sg.mask(B)
    if b == sg.full:
        return True
    for leak in combinations(range(sg.order), min(ell, sg.order)):
        lk = 0
        for v in leak:
            lk |= 1 << v
        if closure(sg, b, lk).blue != sg.full:
            return False
    return True


def _resolve_forces(sg: SimpleGraph, fs) -> List[Tuple[int, int]]:
    out = []
    for f in fs:
        src, dst = f[0], f[1]
        out.append((sg.vertex_id(src), sg.vertex_id(dst)))
    return sorted(set(out))


def validate_force_schedule(g, B, fs, leaks=0) -> List[Force]:
    """Arrange a set of forces into a chronological schedule starting from ``B``.

    Repeatedly fires the smallest listed force that is currently valid.  Firing
    a force never disables another listed force, so this greedy order succeeds
    whenever any order does.  Raises :class:`ScheduleError` naming the stuck
    forces otherwise.
    """
    sg = as_simple_graph(g)
    b = sg.mask(B)
    lk = sg.mask(leaks)
    pending = _resolve_forces(sg, fs)
    targets = [t for _, t in pending]
    if len(set(targets)) != len(targets):
        dup = sorted({t for t in targets if targets.count(t) > 1})
        raise ValueError(f"targets forced more than once: {sg.members(sum(1 << t for t in dup))}")
    if any(b >> t & 1 for t in targets):
        raise ValueError("force targets must lie outside the initial blue set")
    done: List[Force] = []
    while pending:
        for k, (u, t) in enumerate(pending):
            if b >> u & 1 and not lk >> u & 1 and sg.nbr[u] & ~b == 1 << t:
                b |= 1 << t
                done.append(Force(sg.label(u), sg.label(t)))
                del pending[k]
                break
        else:
            raise ScheduleError([Force(sg.label(u), sg.label(t)) for u, t in pending], done)
    return done


def double_force_check(g, B, schedules) -> Dict[object, int]:
    """Count distinct sources forcing each vertex outside ``B`` across schedules.

    Every schedule must validate on its own.  ``B`` is certified 1-leaky when
    all counts are at least 2.
    """
    sg = as_simple_graph(g)
    b = sg.mask(B)
    sources = defaultdict(set)
    for fs in schedules:
        for f in validate_force_schedule(sg, b, fs):
            sources[f.dst].add(f.src)
    return {sg.label(v): len(sources.get(sg.label(v), ())) for v in iter_bits(sg.full & ~b)}
