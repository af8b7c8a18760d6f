"""Command-line front end.

    hopi build   --m 2 --n 3 --format edgelist
    hopi zf      --m 2 --n 3 [--set "0,1;1,0;..."] [--leaks "..."]
    hopi leaky   --m 2 --n 3 --ell 2 [--set ...]
    hopi forts   --m 1 --n 2 --ell 2 [--minimal]
    hopi minrank --m 1 --n 1 --seed 7 [--format json|triplet]
    hopi verify  --max-m 3 --max-n 3 --level fast
    hopi render  --m 2 --n 3 --set canonical --format svg

Exit status: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import render as _render
from .forcing import closure, is_leaky_forcing_set
from .forts import FORT_SEARCH_LIMIT, enumerate_leaky_forts, fort_cover_check
from .lattice import Coord, build_hopi, to_edgelist
from .minrank import witness_report, minrank_witness
from .oracle import SearchBudget, forcing_report
from .verify import report as make_report, run_verification
from .witness import canonical_B, degree_two_set

BUILD_FORMATS = ("json", "dot", "edgelist", "ascii", "svg")


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def parse_set(text: Optional[str], m: int, n: int) -> List[Coord]:
    if text is None:
        return []
    text = text.strip()
    if text == "canonical":
        return canonical_B(m, n)
    if text in ("degree2", "degree-two"):
        return degree_two_set(m, n)
    g = build_hopi(m, n)
    out = []
    for part in filter(None, (p.strip() for p in text.split(";"))):
        try:
            v = Coord.parse(part)
        except ValueError:
            raise UsageError(f"bad vertex {part!r}; expected 'i,j'") from None
        if v not in g:
            raise UsageError(f"vertex {v} is not in HD({m},{n})")
        out.append(v)
    return sorted(set(out))


def _coords(vs) -> list:
    return [list(v) for v in vs]


def build_payload(g, fmt: str) -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "json":
        return dumps({"schema": 1, "m": g.m, "n": g.n, "order": len(g),
                      "vertices": _coords(g.vertices),
                      "edges": [[list(u), list(v)] for u, v in g.edges()],
                      "degrees": [g.degree(v) for v in g.vertices]}) + "\n"
    return _render.render(g, fmt)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hopi", description="Forcing computations on Hopi rectangle graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, needs_mn=True):
        if needs_mn:
            sp.add_argument("--m", type=int, required=True)
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--out", help="write to this file instead of standard output")

    sp = sub.add_parser("build", help="construct HD(m,n) and export it")
    common(sp)
    sp.add_argument("--format", choices=BUILD_FORMATS, default="edgelist")

    for name, hlp in (("zf", "zero forcing closure or zero forcing number"),
                      ("leaky", "leaky forcing check or leaky forcing number")):
        sp = sub.add_parser(name, help=hlp)
        common(sp)
        sp.add_argument("--set", help='vertex set "i,j;i,j;..." or canonical / degree2')
        sp.add_argument("--leaks", help='leak placement "i,j;..." for a single closure')
        sp.add_argument("--ell", type=int, default=0 if name == "zf" else 1)
        sp.add_argument("--timing", action="store_true", help="record elapsed_ms")

    sp = sub.add_parser("forts", help="enumerate ell-leaky forts")
    common(sp)
    sp.add_argument("--ell", type=int, default=0)
    sp.add_argument("--minimal", action="store_true")
    sp.add_argument("--set", help="also report whether this set meets every fort")

    sp = sub.add_parser("minrank", help="exact rank witness from the C4 cover")
    common(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("json", "triplet"), default="json")

    sp = sub.add_parser("verify", help="run the verification sweep")
    common(sp, needs_mn=False)
    sp.add_argument("--max-m", type=int, default=3)
    sp.add_argument("--max-n", type=int, default=3)
    sp.add_argument("--level", choices=("fast", "full"), default="fast")
    sp.add_argument("--timing", action="store_true")

    sp = sub.add_parser("render", help="draw HD(m,n) with highlighted sets")
    common(sp)
    sp.add_argument("--set", help="vertices drawn blue")
    sp.add_argument("--leaks", help="vertices drawn as leaks")
    sp.add_argument("--fort", help="vertices drawn as fort members")
    sp.add_argument("--format", choices=_render.FORMATS, default="ascii")
    return p


def _forcing(args) -> tuple:
    m, n = args.m, args.n
    g = build_hopi(m, n)
    if args.ell < 0:
        raise UsageError("--ell must be non-negative")
    if args.set is None:
        if args.leaks:
            raise UsageError("--leaks needs --set")
        rec = forcing_report(m, n, args.ell if args.command == "leaky" else 0, SearchBudget(),
                             timing=args.timing)
        return make_report([rec]), 0 if rec["agree"] else 1
    B = parse_set(args.set, m, n)
    leaks = parse_set(args.leaks, m, n)
    st = closure(g, B, leaks)
    out = {"schema": 1, "m": m, "n": n, "set": _coords(B), "leaks": _coords(leaks),
           "complete": st.complete, "final_blue": _coords(st.blue_set),
           "log": [{"src": str(f.src), "dst": str(f.dst), "round": f.round} for f in st.log]}
    if args.command == "zf":
        out["zero_forcing"] = st.complete if not leaks else closure(g, B).complete
    else:
        out["ell"] = args.ell
        out["leaky_forcing"] = is_leaky_forcing_set(g, B, args.ell)
        if len(g) <= FORT_SEARCH_LIMIT:
            out["meets_every_fort"] = fort_cover_check(g, B, args.ell)
    return out, 0


def dispatch(args) -> tuple:
    """Return (payload, exit status); payload is a str or a JSON-able object."""
    cmd = args.command
    if cmd == "verify":
        if args.max_m < 1 or args.max_n < 1:
            raise UsageError("--max-m and --max-n must be positive")
        rep = make_report(run_verification(args.max_m, args.max_n, args.level, args.timing))
        return rep, 0 if all(c["agree"] for c in rep["checks"]) else 1
    if args.m < 1 or args.n < 1:
        raise UsageError("--m and --n must be positive")
    g = build_hopi(args.m, args.n)
    if cmd == "build":
        return build_payload(g, args.format), 0
    if cmd in ("zf", "leaky"):
        return _forcing(args)
    if cmd == "forts":
        if len(g) > FORT_SEARCH_LIMIT:
            raise UsageError(f"fort enumeration supports at most {FORT_SEARCH_LIMIT} vertices")
        forts = enumerate_leaky_forts(g, args.ell, args.minimal)
        out = {"schema": 1, "m": args.m, "n": args.n, "ell": args.ell, "minimal": args.minimal,
               "count": len(forts), "forts": [f.as_dict() for f in forts]}
        if args.set is not None:
            out["meets_every_fort"] = fort_cover_check(g, parse_set(args.set, args.m, args.n), args.ell)
        return out, 0
    if cmd == "minrank":
        if args.format == "triplet":
            return minrank_witness(args.m, args.n, args.seed).to_triplets(), 0
        rep = witness_report(args.m, args.n, args.seed)
        ok = rep["rank"] <= rep["bound"] and rep["pattern_matches"]
        return dict(schema=1, **rep), 0 if ok else 1
    if cmd == "render":
        return _render.render(g, args.format, parse_set(args.set, args.m, args.n),
                              parse_set(args.leaks, args.m, args.n),
                              parse_set(args.fort, args.m, args.n)), 0
    raise UsageError(f"unknown command {cmd!r}")


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = make_parser().parse_args(argv)
        payload, status = dispatch(args)
    except UsageError as exc:
        print(f"hopi: usage error: {exc}", file=sys.stderr)
        return 2
    text = payload if isinstance(payload, str) else dumps(payload) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
