"""SVG rendering of the model and exact step functions on one set of axes."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .index import SortedClassification

WIDTH, HEIGHT = 720, 400
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 60, 210, 30, 50

STYLES = {
    "model": {"stroke": "#1f77b4", "dash": None, "label": "classification function"},
    "exact": {"stroke": "#d62728", "dash": "6,4", "label": "perfect classification function"},
}


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def step_function_svg(sc: SortedClassification, title: str | None = None) -> str:
    """Return an SVG document with both step functions over ``[0, 1]``.

    Each function is a ``<g class="step-function" id="f-model|f-exact">``
    holding exactly ``N`` horizontal ``<line class="step">`` elements in
    position order; ``data-value`` carries the class of each step.
    """
    n = sc.n_observations
    m = sc.n_classes
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    y_lo, y_hi = 0.5, m + 0.5

    def sx(x):
        return MARGIN_LEFT + x * plot_w

    def sy(v):
        return MARGIN_TOP + (y_hi - v) / (y_hi - y_lo) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" data-n="{n}" data-m="{m}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(
            f'<text x="{WIDTH / 2:.1f}" y="18" text-anchor="middle" font-size="14">'
            f"{escape(title)}</text>"
        )

    # axes
    x0, x1 = sx(0.0), sx(1.0)
    ybot, ytop = sy(y_lo), sy(y_hi)
    out.append('<g class="axes" stroke="black" stroke-width="1">')
    out.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(ybot)}" x2="{_fmt(x1)}" y2="{_fmt(ybot)}"/>')
    out.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(ybot)}" x2="{_fmt(x0)}" y2="{_fmt(ytop)}"/>')
    for k in range(11):
        x = sx(k / 10)
        out.append(f'<line x1="{_fmt(x)}" y1="{_fmt(ybot)}" x2="{_fmt(x)}" y2="{_fmt(ybot + 5)}"/>')
    for c in range(1, m + 1):
        y = sy(c)
        out.append(f'<line x1="{_fmt(x0 - 5)}" y1="{_fmt(y)}" x2="{_fmt(x0)}" y2="{_fmt(y)}"/>')
    out.append("</g>")
    out.append('<g class="tick-labels" font-size="11" fill="black">')
    for k in range(11):
        out.append(
            f'<text x="{_fmt(sx(k / 10))}" y="{_fmt(ybot + 18)}" text-anchor="middle">{k / 10:.1f}</text>'
        )
    for c in range(1, m + 1):
        out.append(
            f'<text x="{_fmt(x0 - 9)}" y="{_fmt(sy(c) + 4)}" text-anchor="end">{c}</text>'
        )
    out.append("</g>")
    out.append(
        f'<text class="axis-label" x="{_fmt((x0 + x1) / 2)}" y="{HEIGHT - 10}" '
        'text-anchor="middle" font-size="12">x</text>'
    )
    out.append(
        f'<text class="axis-label" x="15" y="{_fmt((ybot + ytop) / 2)}" text-anchor="middle" '
        f'font-size="12" transform="rotate(-90 15 {_fmt((ybot + ytop) / 2)})">class</text>'
    )

    # block boundaries
    out.append('<g class="block-boundaries" stroke="#bbbbbb" stroke-width="1">')
    for b in sc.boundaries[1:-1]:
        x = sx(int(b) / n)
        out.append(f'<line x1="{_fmt(x)}" y1="{_fmt(ybot)}" x2="{_fmt(x)}" y2="{_fmt(ytop)}"/>')
    out.append("</g>")

    for key, values in (("model", sc.sorted_actual), ("exact", sc.sorted_predicted)):
        style = STYLES[key]
        dash = f' stroke-dasharray="{style["dash"]}"' if style["dash"] else ""
        out.append(
            f'<g class="step-function" id="f-{key}" stroke="{style["stroke"]}" '
            f'stroke-width="2.5" fill="none"{dash}>'
        )
        prev = None
        for i, v in enumerate(values):
            xa, xb, y = sx(i / n), sx((i + 1) / n), sy(int(v))
            if prev is not None and prev != v:
                out.append(
                    f'<line class="riser" x1="{_fmt(xa)}" y1="{_fmt(sy(prev))}" '
                    f'x2="{_fmt(xa)}" y2="{_fmt(y)}" stroke-width="1"/>'
                )
            out.append(
                f'<line class="step" data-position="{i + 1}" data-value="{int(v)}" '
                f'x1="{_fmt(xa)}" y1="{_fmt(y)}" x2="{_fmt(xb)}" y2="{_fmt(y)}"/>'
            )
            prev = v
        out.append("</g>")

    # legend
    lx = WIDTH - MARGIN_RIGHT + 15
    out.append('<g class="legend" font-size="11">')
    for k, key in enumerate(("model", "exact")):
        style = STYLES[key]
        y = MARGIN_TOP + 10 + 20 * k
        dash = f' stroke-dasharray="{style["dash"]}"' if style["dash"] else ""
        out.append(
            f'<line x1="{lx}" y1="{y}" x2="{lx + 20}" y2="{y}" stroke="{style["stroke"]}" '
            f'stroke-width="2.5"{dash}/>'
        )
        out.append(f'<text x="{lx + 25}" y="{y + 4}">{style["label"]}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
