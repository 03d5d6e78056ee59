"""Static pictures of staircases and their generating arrows (ASCII or SVG).

Coordinates follow the usual convention: origin at the bottom-left, x to the
right, y upward.  Three-variable staircases are drawn as a stack of z-slices.
"""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .arrows2d import Arrow, ArrowKind, arrow_kind, basis_arrows
from .cubic import permute, rectangular_layers_orientation, type_families
from .errors import HypothesisViolated, StaircaseError
from .monomial import MonomialIdeal

FILTERS_2D = ("all", "P", "Q", "kind1", "kind3")
FILTERS_3D = ("all", "type1", "type2", "type3")
UNIT = 40
MARGIN = 30


class UnsupportedRender(StaircaseError):
    pass


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    show_arrows: bool = False
    arrow_filter: str = "all"


def arrows_2d(ideal: MonomialIdeal, which: str = "all") -> list[tuple[str, Arrow]]:
    """Generating arrows of the basis, one per basis morphism, filtered."""
    if which not in FILTERS_2D:
        raise UnsupportedRender(f"filter {which!r} applies to three variables or is unknown")
    out = []
    for tag, a in basis_arrows(ideal):
        kind = arrow_kind(a, ideal)
        if which == "all" or which == tag or (which == "kind1" and kind is ArrowKind.K1) \
                or (which == "kind3" and kind is ArrowKind.K3):
            out.append((tag, a))
    return out


def arrows_3d(ideal: MonomialIdeal, which: str = "all") -> list[tuple[str, int, tuple]]:
    """(family, tail index, head) for the three arrow families, in the ideal's own axes."""
    if which not in FILTERS_3D:
        raise UnsupportedRender(f"filter {which!r} applies to two variables or is unknown")
    perm = rectangular_layers_orientation(ideal)
    if perm is None:
        raise HypothesisViolated(f"{ideal} has no orientation with rectangular layers")
    oriented = permute(ideal, perm)
    fam = type_families(oriented)
    gens = oriented.generators
    inv = [perm.index(k) for k in range(3)]
    back = {g: tuple(g[inv[k]] for k in range(3)) for g in gens}
    index = {g: i for i, g in enumerate(ideal.generators)}
    out = []
    for name, table in (("type1", fam.type1), ("type2", fam.type2)):
        for i, fs in table.items():
            for f in fs:
                out.append((name, i, f))
    for f in fam.type3:
        tail = min(f.support, key=lambda j: (gens[j][2], j))
        out.append(("type3", tail, f))
    res = []
    for name, i, f in out:
        if which not in ("all", name):
            continue
        head = tuple(gens[i][k] + f.weight[k] for k in range(3))
        head = tuple(head[inv[k]] for k in range(3))
        res.append((name, index[back[gens[i]]], head))
    return res


def _cell_grid_2d(ideal: MonomialIdeal, z_boxes=None, gens=None) -> list[str]:
    boxes = ideal.staircase.boxes if z_boxes is None else z_boxes
    gens = list(enumerate(ideal.generators)) if gens is None else gens
    labels = {g: f"a{i}" for i, g in gens}
    W = max([b[0] for b in boxes] + [g[0] for g in labels]) + 1
    H = max([b[1] for b in boxes] + [g[1] for g in labels]) + 1
    lines = []
    for y in range(H - 1, -1, -1):
        cells = []
        for x in range(W):
            if (x, y) in boxes:
                cells.append("[ ]")
            elif (x, y) in labels:
                cells.append(labels[(x, y)].ljust(3))
            else:
                cells.append(" . ")
        lines.append(f"{y:>2} " + "".join(cells).rstrip())
    lines.append("   " + "".join(f"{x:^3}" for x in range(W)).rstrip())
    return lines


def ascii_2d(ideal: MonomialIdeal, spec: RenderSpec) -> str:
    lines = [f"ideal {ideal}  n={ideal.colength}"]
    lines += _cell_grid_2d(ideal, gens=list(enumerate(ideal.generators)))
    if spec.show_arrows:
        arrows = arrows_2d(ideal, spec.arrow_filter)
        lines.append(f"arrows ({spec.arrow_filter}): {len(arrows)}")
        for tag, a in arrows:
            lines.append(f"  {tag} a{a.tail} -> ({a.head[0]},{a.head[1]})")
    return "\n".join(lines) + "\n"


def ascii_3d(ideal: MonomialIdeal, spec: RenderSpec) -> str:
    lines = [f"ideal {ideal}  n={ideal.colength}"]
    boxes = ideal.staircase.boxes
    for z in range(ideal.staircase.bounds[2]):
        flat = frozenset((x, y) for x, y, c in boxes if c == z)
        w = max(x for x, _ in flat) + 1
        h = max(y for _, y in flat) + 1
        shape = f"{w}x{h}" if len(flat) == w * h else f"{len(flat)} boxes"
        lines.append(f"layer z={z} ({shape})")
        gens = [(i, (g[0], g[1])) for i, g in enumerate(ideal.generators) if g[2] == z]
        lines += _cell_grid_2d(ideal, flat, gens)
    top = [(i, (g[0], g[1])) for i, g in enumerate(ideal.generators)
           if g[2] == ideal.staircase.bounds[2]]
    lines.append("above: " + ", ".join(f"a{i}" for i, _ in top))
    if spec.show_arrows:
        arrows = arrows_3d(ideal, spec.arrow_filter)
        lines.append(f"arrows ({spec.arrow_filter}): {len(arrows)}")
        for name, i, h in arrows:
            lines.append(f"  {name} a{i} -> ({h[0]},{h[1]},{h[2]})")
    return "\n".join(lines) + "\n"


def svg_2d(ideal: MonomialIdeal, spec: RenderSpec) -> str:
    boxes = ideal.staircase.boxes
    gens = ideal.generators
    W = max(g[0] for g in gens) + 2
    H = max(g[1] for g in gens) + 2
    width, height = W * UNIT + 2 * MARGIN, H * UNIT + 2 * MARGIN

    def px(x: float, y: float) -> tuple[float, float]:
        return MARGIN + (x + 1) * UNIT, height - MARGIN - (y + 1) * UNIT

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           '<defs><marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" '
           'orient="auto"><path d="M0,0 L8,4 L0,8 z" fill="#c0392b"/></marker></defs>',
           f'<title>{escape(str(ideal))}</title>']
    x0, y0 = px(-1, -1)
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{width - MARGIN / 2}" y2="{y0}" stroke="#888"/>')
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{MARGIN / 2}" stroke="#888"/>')
    for (x, y) in sorted(boxes):
        bx, by = px(x - 1, y)
        out.append(f'<rect class="box" x="{bx}" y="{by}" width="{UNIT}" height="{UNIT}" '
                   f'fill="#dde6f0" stroke="#334"/>')
    for i, (x, y) in enumerate(gens):
        cx, cy = px(x - 0.5, y - 0.5)
        out.append(f'<circle class="generator" cx="{cx}" cy="{cy}" r="5" fill="#222"/>')
        out.append(f'<text x="{cx + 7}" y="{cy - 7}" font-size="12">α{i}</text>')
    if spec.show_arrows:
        for tag, a in arrows_2d(ideal, spec.arrow_filter):
            tx, ty = px(gens[a.tail][0] - 0.5, gens[a.tail][1] - 0.5)
            hx, hy = px(a.head[0] - 0.5, a.head[1] - 0.5)
            out.append(f'<line class="arrow {tag}" x1="{tx}" y1="{ty}" x2="{hx}" y2="{hy}" '
                       f'stroke="#c0392b" stroke-width="1.5" marker-end="url(#head)"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(ideal: MonomialIdeal, spec: RenderSpec) -> str:
    if spec.format == "ascii":
        return ascii_2d(ideal, spec) if ideal.dim == 2 else ascii_3d(ideal, spec)
    if spec.format == "svg":
        if ideal.dim == 3:
            raise UnsupportedRender("three-variable staircases render as ASCII layer slices only")
        return svg_2d(ideal, spec)
    raise UnsupportedRender(f"unknown render format {spec.format!r}")
