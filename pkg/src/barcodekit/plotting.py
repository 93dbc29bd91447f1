"""Static barcode plots: a small hand-written SVG and a CSV of diagram points."""

from __future__ import annotations

from .barcode import Barcode, format_number

WIDTH, ROW, MARGIN = 640, 14, 40


def barcode_csv(barcode: Barcode) -> str:
    rows = ["degree,birth,death"]
    for b in barcode:
        deg = "" if b.degree is None else str(b.degree)
        rows.append(f"{deg},{format_number(b.birth)},{format_number(b.death)}")
    return "\n".join(rows) + "\n"


def barcode_svg(barcode: Barcode) -> str:
    """One horizontal segment per bar; semi-infinite bars run to the right edge."""
    bars = list(barcode)
    finite = [x for b in bars for x in (b.birth, b.death) if x != float("inf")]
    lo, hi = (min(finite), max(finite)) if finite else (0.0, 1.0)
    if hi == lo:
        hi = lo + 1.0
    span = hi - lo
    lo, hi = lo - 0.05 * span, hi + 0.15 * span
    plot_w = WIDTH - 2 * MARGIN
    height = 2 * MARGIN + ROW * max(len(bars), 1)

    def x(v: float) -> float:
        return MARGIN + plot_w * (min(v, hi) - lo) / (hi - lo)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}">',
        f'<rect width="{WIDTH}" height="{height}" fill="white"/>',
        f'<line x1="{MARGIN}" y1="{height - MARGIN + 4}" x2="{WIDTH - MARGIN}" '
        f'y2="{height - MARGIN + 4}" stroke="black"/>',
        f'<text x="{MARGIN}" y="{height - MARGIN + 20}" font-size="11">{format_number(lo)}</text>',
        f'<text x="{WIDTH - MARGIN}" y="{height - MARGIN + 20}" font-size="11" '
        f'text-anchor="end">{format_number(hi)}</text>',
    ]
    palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"]
    for i, b in enumerate(bars):
        y = MARGIN + ROW * i + ROW / 2
        colour = palette[(b.degree or 0) % len(palette)]
        end = WIDTH - MARGIN if b.is_infinite else x(b.death)
        out.append(f'<line x1="{x(b.birth):.2f}" y1="{y}" x2="{end:.2f}" y2="{y}" '
                   f'stroke="{colour}" stroke-width="4"/>')
        if b.is_infinite:
            out.append(f'<polygon points="{end:.2f},{y - 5} {end + 8:.2f},{y} {end:.2f},{y + 5}" '
                       f'fill="{colour}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
