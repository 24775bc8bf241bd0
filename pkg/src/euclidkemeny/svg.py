"""Standalone SVG drawings of embeddings.

Every dot carries ``data-x``/``data-y`` attributes holding its world
coordinates (from :func:`~euclidkemeny.geometry.to_float_points`), so the
output can be checked structurally as well as viewed.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .geometry import CircularEmbedding, Embedding, Norm, to_float_points

SIZE = 480
PAD = 40

_HEADER = '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'


def _fmt(v: float) -> str:
    return f"{v:.6f}".rstrip("0").rstrip(".") if v else "0"


def render_svg(e: Embedding, labels: bool = False, guides: bool = False,
               names: dict[int, str] | None = None, precision: int = 12) -> str:
    pts = to_float_points(e, precision)
    everything = [(x, y) for _, x, y in pts["candidates"] + pts["voters"]]
    if isinstance(e, CircularEmbedding):
        half = 1.0
        cx = cy = 0.0
    else:
        xs = [p[0] for p in everything] or [0.0]
        ys = [p[1] for p in everything] or [0.0]
        cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
        half = max(max(xs) - min(xs), max(ys) - min(ys), 1.0) / 2
    scale = (SIZE - 2 * PAD) / (2 * half)

    def screen(x, y):
        # y axis points up in world coordinates
        return SIZE / 2 + (x - cx) * scale, SIZE / 2 - (y - cy) * scale

    out = [_HEADER.format(w=SIZE, h=SIZE), '<rect width="100%" height="100%" fill="white"/>\n']
    if isinstance(e, CircularEmbedding):
        ox, oy = screen(0.0, 0.0)
        out.append(f'<circle class="outline" cx="{_fmt(ox)}" cy="{_fmt(oy)}" r="{_fmt(scale)}" '
                   'fill="none" stroke="black"/>\n')
    elif everything:
        if e.norm is Norm.L1:
            corners = [(cx - half, cy - half), (cx + half, cy - half), (cx + half, cy + half), (cx - half, cy + half)]
        else:
            r = max(abs(x - cx) + abs(y - cy) for x, y in everything)
            corners = [(cx + r, cy), (cx, cy + r), (cx - r, cy), (cx, cy - r)]
        path = " ".join(f"{_fmt(sx)},{_fmt(sy)}" for sx, sy in (screen(*c) for c in corners))
        out.append(f'<polygon class="outline" points="{path}" fill="none" stroke="black"/>\n')

    if guides:
        by_label = {label: (x, y) for label, x, y in pts["voters"]}
        for label, (x, y) in by_label.items():
            if label.startswith("f_") and "g_" + label[2:] in by_label:
                (x1, y1), (x2, y2) = screen(x, y), screen(*by_label["g_" + label[2:]])
                out.append(f'<line class="guide" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                           'stroke="grey" stroke-dasharray="4 3"/>\n')

    for c, x, y in pts["candidates"]:
        sx, sy = screen(x, y)
        out.append(f'<circle class="candidate" data-id="{c}" data-x="{x!r}" data-y="{y!r}" '
                   f'cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="5" fill="black"/>\n')
        if labels:
            text = escape(names.get(c, f"c{c}") if names else f"c{c}")
            out.append(f'<text x="{_fmt(sx + 7)}" y="{_fmt(sy - 7)}" font-family="sans-serif" '
                       f'font-size="12">{text}</text>\n')
    for label, x, y in pts["voters"]:
        sx, sy = screen(x, y)
        out.append(f'<circle class="voter" data-label="{escape(label)}" data-x="{x!r}" data-y="{y!r}" '
                   f'cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="3" fill="crimson"/>\n')
        if labels:
            out.append(f'<text x="{_fmt(sx + 5)}" y="{_fmt(sy + 12)}" font-family="sans-serif" '
                       f'font-size="9" fill="crimson">{escape(label)}</text>\n')
    out.append("</svg>\n")
    return "".join(out)
