"""Static SVG scatter of detection quality versus throughput.

Each series is one (label, rate, el, size) tuple: x = inference rate in
nuclei/s, y = localization error, circle area proportional to the supplied
size value (e.g. model memory). The SVG is assembled from strings with
repr-formatted coordinates and no timestamps, so identical inputs give a
byte-identical file. A companion CSV carries the plotted tuples.
"""

import csv
import io as _io
import math

__all__ = ["normalize_series", "render_scatter_svg", "scatter_csv_text"]

_WIDTH, _HEIGHT = 640, 480
_BOX = (80.0, 20.0, 600.0, 420.0)  # plot area: left, top, right, bottom
_MAX_RADIUS = 36.0
_TICKS = 5


def normalize_series(series):
    """Validate (label, rate, el, size) tuples; empty labels become
    "series-<position>" (1-based)."""
    out = []
    for i, (label, rate, el, size) in enumerate(series, start=1):
        rate, el, size = float(rate), float(el), float(size)
        for name, v in (("rate", rate), ("el", el), ("size", size)):
            if not math.isfinite(v):
                raise ValueError(f"series {i}: {name} must be finite, got {v}")
        if size <= 0:
            raise ValueError(f"series {i}: size must be positive, got {size}")
        out.append((str(label) or f"series-{i}", rate, el, size))
    return out


def _axis(values, box_lo, box_hi):
    hi = max(values)
    hi = hi * 1.1 if hi > 0 else 1.0
    span = box_hi - box_lo

    def to_px(v):
        return box_lo + (v / hi) * span

    ticks = [hi * k / (_TICKS - 1) for k in range(_TICKS)]
    return to_px, ticks


def render_scatter_svg(series):
    """SVG text for the scatter; one <circle> plus one <text
    class="point-label"> per series, in input order."""
    pts = normalize_series(series)
    if not pts:
        raise ValueError("nothing to plot")
    left, top, right, bottom = _BOX
    x_of, x_ticks = _axis([p[1] for p in pts], left, right)
    # y axis is inverted: larger error lower on screen would be misleading,
    # so error grows upward from the bottom edge like a conventional plot.
    y_of_raw, y_ticks = _axis([p[2] for p in pts], 0.0, bottom - top)
    y_of = lambda v: bottom - y_of_raw(v)
    r_scale = _MAX_RADIUS / math.sqrt(max(p[3] for p in pts))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<line x1="{left!r}" y1="{bottom!r}" x2="{right!r}" y2="{bottom!r}" stroke="black"/>',
        f'<line x1="{left!r}" y1="{top!r}" x2="{left!r}" y2="{bottom!r}" stroke="black"/>',
        f'<text x="{(left + right) / 2!r}" y="{_HEIGHT - 8}" text-anchor="middle" '
        f'font-size="14">inference rate (nuclei/s)</text>',
        f'<text x="16" y="{(top + bottom) / 2!r}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 16 {(top + bottom) / 2!r})">localization error</text>',
    ]
    for tv in x_ticks:
        px = x_of(tv)
        parts.append(
            f'<line x1="{px!r}" y1="{bottom!r}" x2="{px!r}" y2="{bottom + 5!r}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px!r}" y="{bottom + 18!r}" text-anchor="middle" font-size="11">{tv:g}</text>'
        )
    for tv in y_ticks:
        py = y_of(tv)
        parts.append(
            f'<line x1="{left - 5!r}" y1="{py!r}" x2="{left!r}" y2="{py!r}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{left - 8!r}" y="{py + 4!r}" text-anchor="end" font-size="11">{tv:g}</text>'
        )
    for label, rate, el, size in pts:
        cx, cy = x_of(rate), y_of(el)
        r = r_scale * math.sqrt(size)
        parts.append(
            f'<circle cx="{cx!r}" cy="{cy!r}" r="{r!r}" fill="steelblue" fill-opacity="0.5" '
            f'stroke="steelblue"/>'
        )
        parts.append(
            f'<text class="point-label" x="{cx + r + 4!r}" y="{cy + 4!r}" '
            f'font-size="12">{_escape(label)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def scatter_csv_text(series):
    pts = normalize_series(series)
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "rate", "el", "size"])
    for label, rate, el, size in pts:
        writer.writerow([label, repr(rate), repr(el), repr(size)])
    return buf.getvalue()


def _escape(text):
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
