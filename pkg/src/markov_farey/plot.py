"""g-vector scatter: every g-vector lies on x+y+z=1, so project that plane to 2D."""

from __future__ import annotations

import math

from .closedform import g_matrix
from .farey import iter_tree

MAX_PLOT_DEPTH = 14

_SQRT2 = math.sqrt(2.0)
_SQRT6 = math.sqrt(6.0)


def collect_gvectors(depth: int) -> list[tuple[int, int, int]]:
    if depth > MAX_PLOT_DEPTH:
        raise ValueError(f"plot depth {depth} exceeds the cap {MAX_PLOT_DEPTH}")
    seen = set()
    for T, _ in iter_tree(depth):
        g = g_matrix(T)
        for j in range(3):
            seen.add((g[0][j], g[1][j], g[2][j]))
    return sorted(seen)


def project(v: tuple[int, int, int]) -> tuple[float, float]:
    """Coordinates in the basis u=(1,-1,0)/√2, v=(1,1,-2)/√6 around (1/3,1/3,1/3)."""
    x, y, z = (c - 1 / 3 for c in v)
    return (x - y) / _SQRT2, (x + y - 2 * z) / _SQRT6


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def to_csv(points: list[tuple[int, int, int]]) -> str:
    lines = ["gx,gy,gz,px,py"]
    for p in points:
        px, py = project(p)
        lines.append(f"{p[0]},{p[1]},{p[2]},{_fmt(px)},{_fmt(py)}")
    return "\n".join(lines) + "\n"


def to_svg(points: list[tuple[int, int, int]], size: int = 600) -> str:
    proj = [project(p) for p in points]
    xs = [x for x, _ in proj] + [0.0]
    ys = [-y for _, y in proj] + [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    pad = 0.05 * span
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    r = span / 300
    stroke = span / 1000
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        f'<line x1="{_fmt(x0)}" y1="0.000000" x2="{_fmt(x0 + w)}" y2="0.000000" stroke="#999" stroke-width="{_fmt(stroke)}"/>',
        f'<line x1="0.000000" y1="{_fmt(y0)}" x2="0.000000" y2="{_fmt(y0 + h)}" stroke="#999" stroke-width="{_fmt(stroke)}"/>',
    ]
    for p, (x, y) in zip(points, proj):
        out.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(-y)}" r="{_fmt(r)}" fill="black">'
            f"<title>({p[0]},{p[1]},{p[2]})</title></circle>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
