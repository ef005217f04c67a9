"""Minimal SVG writers for the scatter and CUSUM figures.

Output depends only on the inputs (fixed formatting, no timestamps), so
files are byte-identical across runs.
"""
import math

import numpy as np

WIDTH, HEIGHT = 480, 360
MARGIN = {"left": 60, "right": 20, "top": 30, "bottom": 50}


def _f(v):
    return f"{v:.2f}"


def nice_ticks(lo, hi, target=5):
    """Round tick positions covering ``[lo, hi]``."""
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / target
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    start = math.floor(lo / step) * step
    stop = math.ceil(hi / step) * step
    count = int(round((stop - start) / step)) + 1
    return [round(start + i * step, 10) for i in range(count)]


class _Axes:
    def __init__(self, xticks, yticks):
        self.x0, self.x1 = xticks[0], xticks[-1]
        self.y0, self.y1 = yticks[0], yticks[-1]
        self.left = MARGIN["left"]
        self.right = WIDTH - MARGIN["right"]
        self.top = MARGIN["top"]
        self.bottom = HEIGHT - MARGIN["bottom"]
        self.xticks, self.yticks = xticks, yticks

    def px(self, x):
        return self.left + (x - self.x0) / (self.x1 - self.x0) * (self.right - self.left)

    def py(self, y):
        return self.bottom - (y - self.y0) / (self.y1 - self.y0) * (self.bottom - self.top)

    def frame(self, title, xlabel, ylabel):
        out = [
            f'<text x="{WIDTH / 2:.2f}" y="18" text-anchor="middle" font-size="13">{title}</text>',
            f'<rect x="{self.left}" y="{self.top}" width="{self.right - self.left}" '
            f'height="{self.bottom - self.top}" fill="none" stroke="black"/>',
        ]
        for t in self.xticks:
            x = _f(self.px(t))
            out.append(f'<line x1="{x}" y1="{self.bottom}" x2="{x}" y2="{self.bottom + 5}" stroke="black"/>')
            out.append(
                f'<text x="{x}" y="{self.bottom + 18}" text-anchor="middle" font-size="10">{t:g}</text>'
            )
        for t in self.yticks:
            y = _f(self.py(t))
            out.append(f'<line x1="{self.left - 5}" y1="{y}" x2="{self.left}" y2="{y}" stroke="black"/>')
            out.append(
                f'<text x="{self.left - 8}" y="{y}" text-anchor="end" '
                f'dominant-baseline="middle" font-size="10">{t:g}</text>'
            )
        out.append(
            f'<text x="{WIDTH / 2:.2f}" y="{HEIGHT - 12}" text-anchor="middle" font-size="11">{xlabel}</text>'
        )
        cy = (self.top + self.bottom) / 2
        out.append(
            f'<text x="16" y="{cy:.2f}" text-anchor="middle" font-size="11" '
            f'transform="rotate(-90 16 {cy:.2f})">{ylabel}</text>'
        )
        return out


def _document(body):
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def _points(ax, xs, ys):
    return " ".join(f"{_f(ax.px(x))},{_f(ax.py(y))}" for x, y in zip(xs, ys))


def scatter_svg(points, curve=None, xlabel="Government spending (% of GDP)",
                ylabel="GDP growth rate (%)", title=""):
    """One dot per observation plus an optional dashed fitted curve.

    Parameters
    ----------
    points : array_like, shape (n, 2)
    curve : array_like, shape (m, 2), optional
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    allx, ally = pts[:, 0], pts[:, 1]
    if curve is not None:
        curve = np.asarray(curve, dtype=float)
        allx = np.concatenate([allx, curve[:, 0]])
        ally = np.concatenate([ally, curve[:, 1]])
    pad = lambda lo, hi: (lo - 0.5, hi + 0.5) if hi == lo else (lo, hi)
    ax = _Axes(nice_ticks(*pad(allx.min(), allx.max())), nice_ticks(*pad(ally.min(), ally.max())))
    body = ax.frame(title, xlabel, ylabel)
    body.append('<g id="observations" fill="black">')
    for x, y in pts:
        body.append(f'<circle cx="{_f(ax.px(x))}" cy="{_f(ax.py(y))}" r="3"/>')
    body.append("</g>")
    if curve is not None:
        d = "M " + " L ".join(f"{_f(ax.px(x))},{_f(ax.py(y))}" for x, y in curve)
        body.append(f'<path id="fitted-curve" d="{d}" fill="none" stroke="black" stroke-dasharray="6,4"/>')
    return _document(body)


def cusum_svg(years, path, lower, upper, level_label="5%", title="CUSUM"):
    """Cumulative-sum path over a shaded band between ``lower`` and ``upper``."""
    years = np.asarray(years, dtype=float)
    lo = min(np.min(path), np.min(lower))
    hi = max(np.max(path), np.max(upper))
    ax = _Axes(nice_ticks(years.min(), years.max()), nice_ticks(lo, hi))
    body = ax.frame(title, "Year", "CUSUM")
    band = _points(ax, years, upper) + " " + _points(ax, years[::-1], np.asarray(lower)[::-1])
    body.append(f'<polygon id="band" points="{band}" fill="#d9d9d9" stroke="none"/>')
    body.append(
        f'<polyline id="band-upper" points="{_points(ax, years, upper)}" fill="none" '
        'stroke="gray" stroke-dasharray="4,3"/>'
    )
    body.append(
        f'<polyline id="band-lower" points="{_points(ax, years, lower)}" fill="none" '
        'stroke="gray" stroke-dasharray="4,3"/>'
    )
    y0 = _f(ax.py(0.0))
    body.append(f'<line x1="{ax.left}" y1="{y0}" x2="{ax.right}" y2="{y0}" stroke="gray"/>')
    body.append(
        f'<polyline id="cusum-path" points="{_points(ax, years, path)}" fill="none" '
        'stroke="black" stroke-width="1.5"/>'
    )
    body.append(
        f'<text x="{ax.right - 4}" y="{ax.top + 14}" text-anchor="end" font-size="10">'
        f"band: {level_label} significance</text>"
    )
    return _document(body)


def parse_polyline(svg_text, element_id):
    """``(x, y)`` pixel arrays of the polyline with the given id."""
    marker = f'id="{element_id}" points="'
    start = svg_text.index(marker) + len(marker)
    stop = svg_text.index('"', start)
    pairs = [p.split(",") for p in svg_text[start:stop].split()]
    arr = np.array(pairs, dtype=float)
    return arr[:, 0], arr[:, 1]
