"""String diagrams of 2-cells as SVG.

Layers are stacked bottom to top.  Wire p of a word sits at
``MARGIN + p * PITCH + PITCH / 2``; a generator node is centred at
``MARGIN + (offset + |source| / 2) * PITCH``.  All coordinates are integers,
so the output is byte-for-byte deterministic.
"""

from html import escape

PITCH = 40
LAYER = 60
MARGIN = 40
RADIUS = 14


def _wx(p):
    return MARGIN + p * PITCH + PITCH // 2


def _nx(a, s):
    return MARGIN + a * PITCH + (s * PITCH) // 2


def render_svg(nf, sig, title=None):
    words = [nf.source.gens]
    for w in nf.layers:
        s, t = sig.c2[w.gen]
        W = words[-1]
        words.append(W[: w.offset] + t.gens + W[w.offset + len(s):])
    n = len(nf.layers)
    widest = max([len(W) for W in words] + [max((w.offset + 1 for w in nf.layers), default=0), 1])
    width = 2 * MARGIN + widest * PITCH
    height = 2 * MARGIN + (n + 1) * LAYER
    bottom, top = height - MARGIN, MARGIN

    def ylevel(j):
        # level j sits just above layer j-1
        return bottom - LAYER // 2 - j * LAYER

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<g fill="none" stroke="black" stroke-width="2">')
    for p, _ in enumerate(words[0]):
        out.append(f'<line class="wire input" x1="{_wx(p)}" y1="{bottom}" x2="{_wx(p)}" y2="{ylevel(0)}"/>')
    for j, w in enumerate(nf.layers):
        s, t = sig.ar(w.gen)
        a = w.offset
        y0, y1 = ylevel(j), ylevel(j + 1)
        cx, cy = _nx(a, s), (y0 + y1) // 2
        for p in range(len(words[j])):
            if a <= p < a + s:
                out.append(f'<line class="wire" x1="{_wx(p)}" y1="{y0}" x2="{cx}" y2="{cy}"/>')
                continue
            q = p if p < a else p - s + t
            if q == p:
                out.append(f'<line class="wire" x1="{_wx(p)}" y1="{y0}" x2="{_wx(q)}" y2="{y1}"/>')
            else:
                out.append(
                    f'<path class="wire" d="M {_wx(p)} {y0} C {_wx(p)} {cy}, {_wx(q)} {cy}, {_wx(q)} {y1}"/>'
                )
        for r in range(t):
            out.append(f'<line class="wire" x1="{cx}" y1="{cy}" x2="{_wx(a + r)}" y2="{y1}"/>')
    for p, _ in enumerate(words[-1]):
        out.append(f'<line class="wire output" x1="{_wx(p)}" y1="{ylevel(n)}" x2="{_wx(p)}" y2="{top}"/>')
    out.append("</g>")
    out.append('<g font-family="monospace" font-size="12" text-anchor="middle">')
    for j, w in enumerate(nf.layers):
        s, _ = sig.ar(w.gen)
        cx, cy = _nx(w.offset, s), (ylevel(j) + ylevel(j + 1)) // 2
        out.append(f'<circle class="node" cx="{cx}" cy="{cy}" r="{RADIUS}" fill="white" stroke="black" stroke-width="2"/>')
        out.append(f'<text class="label" x="{cx}" y="{cy + 4}">{escape(w.gen)}</text>')
    for p, f in enumerate(words[0]):
        out.append(f'<text class="wire-label" x="{_wx(p)}" y="{bottom + 16}">{escape(f)}</text>')
    for p, f in enumerate(words[-1]):
        out.append(f'<text class="wire-label" x="{_wx(p)}" y="{top - 6}">{escape(f)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
