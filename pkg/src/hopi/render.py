"""Text, DOT and SVG pictures of ``HD(m, n)`` with highlighted vertex sets.

Orientation follows the usual lattice drawing: ``i`` grows to the right and
``j`` grows upward.  Output is a pure function of the inputs.
"""

from __future__ import annotations

from .lattice import Coord, HopiRectangle

FORMATS = ("ascii", "dot", "svg")

FILL = {"blue": "#3b7dd8", "leak": "#d8553b", "fort": "#e0b000", "both": "#7a3bd8"}


def _sets(blue, leaks, fort):
    return ({Coord(*v) for v in blue}, {Coord(*v) for v in leaks}, {Coord(*v) for v in fort})


def _kind(v, blue, leaks, fort):
    if v in blue and v in leaks:
        return "both"
    if v in leaks:
        return "leak"
    if v in blue:
        return "blue"
    if v in fort:
        return "fort"
    return None


def render_ascii(g: HopiRectangle, blue=(), leaks=(), fort=()) -> str:
    """Grid drawing; ``B`` blue, ``L`` leak, ``X`` blue leak, ``F`` fort, ``o`` other."""
    blue, leaks, fort = _sets(blue, leaks, fort)
    glyph = {"blue": "B", "leak": "L", "both": "X", "fort": "F", None: "o"}
    top = max(v.j for v in g.vertices)
    right = max(v.i for v in g.vertices)
    width = 2 * right + 1
    lines = []
    for j in range(top, -1, -1):
        row = [" "] * width
        below = [" "] * width
        for i in range(right + 1):
            v = Coord(i, j)
            if v not in g:
                continue
            row[2 * i] = glyph[_kind(v, blue, leaks, fort)]
            if Coord(i + 1, j) in g:
                row[2 * i + 1] = "-"
            if j > 0 and Coord(i, j - 1) in g:
                below[2 * i] = "|"
        lines.append("".join(row).rstrip())
        if j > 0:
            lines.append("".join(below).rstrip())
    return "\n".join(lines) + "\n"


def render_dot(g: HopiRectangle, blue=(), leaks=(), fort=()) -> str:
    blue, leaks, fort = _sets(blue, leaks, fort)
    out = [f'graph "HD({g.m},{g.n})" {{', "  node [shape=circle, width=0.3, label=\"\"];"]
    for v in g.vertices:
        attrs = [f'pos="{v.i},{v.j}!"']
        kind = _kind(v, blue, leaks, fort)
        if kind:
            attrs += ["style=filled", f'fillcolor="{FILL[kind]}"', f'class="{kind}"']
        out.append(f'  "{v}" [{", ".join(attrs)}];')
    for u, v in g.edges():
        out.append(f'  "{u}" -- "{v}";')
    out.append("}")
    return "\n".join(out) + "\n"


def render_svg(g: HopiRectangle, blue=(), leaks=(), fort=(), step: int = 40) -> str:
    blue, leaks, fort = _sets(blue, leaks, fort)
    top = max(v.j for v in g.vertices)
    right = max(v.i for v in g.vertices)
    pad = step // 2
    w, h = right * step + 2 * pad, top * step + 2 * pad

    def xy(v):
        return pad + v.i * step, pad + (top - v.j) * step

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">',
           f"<title>HD({g.m},{g.n})</title>"]
    for u, v in g.edges():
        (x1, y1), (x2, y2) = xy(u), xy(v)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>')
    for v in g.vertices:
        x, y = xy(v)
        kind = _kind(v, blue, leaks, fort)
        fill = FILL[kind] if kind else "white"
        cls = f' class="vertex {kind}"' if kind else ' class="vertex"'
        out.append(f'<circle{cls} data-ij="{v}" cx="{x}" cy="{y}" r="{step // 6}" '
                   f'fill="{fill}" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(g: HopiRectangle, fmt: str = "ascii", blue=(), leaks=(), fort=()) -> str:
    if fmt == "ascii":
        return render_ascii(g, blue, leaks, fort)
    if fmt == "dot":
        return render_dot(g, blue, leaks, fort)
    if fmt == "svg":
        return render_svg(g, blue, leaks, fort)
    raise ValueError(f"unsupported render format {fmt!r}; choose from {FORMATS}")
