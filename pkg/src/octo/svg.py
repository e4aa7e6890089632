"""SVG rendering of the seven-hexagon fundamental domain.

Output is byte-stable: fixed 700x700 canvas, fixed colours, coordinates
printed with three decimals, elements emitted in a fixed order.
"""

from __future__ import annotations

from .eisenstein import OMEGA, OMEGA2, ONE, UNITS, ZERO, HexagonMap, PlanePoint, embed

CANVAS = 700
SCALE = 100.0  # lattice unit; hexagon circumradius is SCALE / sqrt(3) = 57.735
CIRCLE_R = 7

CELL_FILL = "#c9d7e8"
CELL_STROKE = "#2b3a55"
TRANSLATE_STROKE = "#8a8a8a"
MARK_STROKE = "#b22222"

NAMES = {ZERO: "0", ONE: "1", -ONE: "−1", OMEGA: "ω", -OMEGA: "−ω", OMEGA2: "ω²", -OMEGA2: "−ω²"}


def _xy(p: PlanePoint) -> tuple[float, float]:
    x, y = p.to_float()
    return CANVAS / 2 + SCALE * x, CANVAS / 2 - SCALE * y


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _points(pts) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(_xy, pts))


def render_svg(geo: HexagonMap, translates: bool = True, edges: bool = False, labels: bool = True) -> str:
    title = "Hexagon map, mirror lattice" if geo.mirror else "Hexagon map"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        f"<title>{title}</title>",
        f'<rect x="0" y="0" width="{CANVAS}" height="{CANVAS}" fill="#ffffff"/>',
    ]
    if translates:
        out.append('<g id="translates">')
        for ring in geo.translates:
            out.append(
                f'<polygon class="translate" points="{_points(ring)}" fill="none" '
                f'stroke="{TRANSLATE_STROKE}" stroke-width="1" stroke-dasharray="4 3"/>'
            )
        out.append("</g>")
    out.append('<g id="cells">')
    for cell in geo.cells:
        out.append(
            f'<polygon class="cell" data-residue="{cell.residue}" points="{_points(k.point for k in cell.corners)}" '
            f'fill="{CELL_FILL}" stroke="{CELL_STROKE}" stroke-width="1.5"/>'
        )
    out.append("</g>")
    out.append(
        f'<polygon class="outline" points="{_points(geo.outline)}" fill="none" stroke="{CELL_STROKE}" stroke-width="3"/>'
    )
    if edges:
        out.append('<g id="edges">')
        centers = [c.center for c in geo.cells]
        pairs = [(ZERO, u) for u in UNITS] + [(UNITS[k], UNITS[(k + 1) % 6]) for k in range(6)]
        for a, b in pairs:
            if a in centers and b in centers:
                (x1, y1), (x2, y2) = _xy(embed(a)), _xy(embed(b))
                out.append(
                    f'<line class="edge" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                    f'stroke="{CELL_STROKE}" stroke-width="1"/>'
                )
        out.append("</g>")
    if labels:
        out.append('<g id="labels" font-family="serif" text-anchor="middle">')
        for cell in geo.cells:
            x, y = _xy(embed(cell.center))
            out.append(f'<text class="label" x="{_fmt(x)}" y="{_fmt(y - 2)}" font-size="18">{NAMES[cell.center]}</text>')
            out.append(f'<text class="residue" x="{_fmt(x)}" y="{_fmt(y + 18)}" font-size="13">({cell.residue})</text>')
        out.append("</g>")
    out.append('<g id="circled">')
    for corner in geo.circled:
        x, y = _xy(corner.point)
        labels_attr = " ".join(map(str, corner.labels))
        out.append(
            f'<circle class="circled" data-labels="{labels_attr}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{CIRCLE_R}" '
            f'fill="none" stroke="{MARK_STROKE}" stroke-width="2"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
