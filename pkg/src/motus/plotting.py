"""Standalone SVG rendering of result tables.

Output depends only on the table: fixed canvas, fixed number formatting,
no timestamps or random ids, so identical tables give identical bytes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import PlotError
from .runner import ResultTable

WIDTH, HEIGHT = 720, 480
LEFT, RIGHT, TOP, BOTTOM = 70, 30, 50, 60
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd")
KINDS = ("curve", "diagram", "scan")


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def _number(cell: str) -> Optional[float]:
    if cell == "":
        return None
    try:
        return float(Fraction(cell))
    except (ValueError, ZeroDivisionError):
        return None


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _tick(x: float) -> str:
    return f"{x:.4g}"


class _Frame:
    def __init__(self, xs: Sequence[float], ys: Sequence[float]):
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(min(ys), 0.0), max(max(ys), 0.0)
        if self.x1 == self.x0:
            self.x0, self.x1 = self.x0 - 1, self.x1 + 1
        if self.y1 == self.y0:
            self.y1 = self.y0 + 1
        pad = (self.y1 - self.y0) * 0.05
        self.y0 -= pad if self.y0 < 0 else 0
        self.y1 += pad

    def px(self, x: float) -> float:
        return LEFT + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - LEFT - RIGHT)

    def py(self, y: float) -> float:
        return HEIGHT - BOTTOM - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - TOP - BOTTOM)


def _series(table: ResultTable, x_col: str, y_cols: Sequence[str]) -> List[Tuple[str, List[Tuple[float, float]]]]:
    missing = [c for c in (x_col, *y_cols) if c not in table.columns]
    if not x_col or not y_cols or missing:
        raise PlotError(f"table lacks columns for this plot: {', '.join(missing) or 'no x/y declared'}")
    xs = [_number(c) for c in table.column(x_col)]
    out = []
    for y_col in y_cols:
        pts = [(x, y) for x, y in zip(xs, (_number(c) for c in table.column(y_col)))
               if x is not None and y is not None]
        out.append((y_col, pts))
    if not any(pts for _, pts in out):
        raise PlotError("no numeric points to plot")
    return out


def _axes(frame: _Frame, x_label: str, y_label: str) -> List[str]:
    base_y = frame.py(max(frame.y0, 0.0) if frame.y0 <= 0 <= frame.y1 else frame.y0)
    parts = [
        f'<line x1="{_fmt(LEFT)}" y1="{_fmt(base_y)}" x2="{_fmt(WIDTH - RIGHT)}" y2="{_fmt(base_y)}" stroke="#000"/>',
        f'<line x1="{_fmt(LEFT)}" y1="{_fmt(TOP)}" x2="{_fmt(LEFT)}" y2="{_fmt(HEIGHT - BOTTOM)}" stroke="#000"/>',
    ]
    for k in range(5):
        xv = frame.x0 + (frame.x1 - frame.x0) * k / 4
        yv = frame.y0 + (frame.y1 - frame.y0) * k / 4
        parts.append(f'<text x="{_fmt(frame.px(xv))}" y="{_fmt(HEIGHT - BOTTOM + 18)}" '
                     f'text-anchor="middle" font-size="11">{_tick(xv)}</text>')
        parts.append(f'<text x="{_fmt(LEFT - 6)}" y="{_fmt(frame.py(yv) + 4)}" '
                     f'text-anchor="end" font-size="11">{_tick(yv)}</text>')
    parts.append(f'<text x="{_fmt((LEFT + WIDTH - RIGHT) / 2)}" y="{_fmt(HEIGHT - 15)}" '
                 f'text-anchor="middle" font-size="13">{_escape(x_label)}</text>')
    parts.append(f'<text x="16" y="{_fmt((TOP + HEIGHT - BOTTOM) / 2)}" font-size="13" '
                 f'transform="rotate(-90 16 {_fmt((TOP + HEIGHT - BOTTOM) / 2)})" '
                 f'text-anchor="middle">{_escape(y_label)}</text>')
    return parts


def _legend(names: Sequence[str]) -> List[str]:
    parts = []
    for i, name in enumerate(names):
        y = TOP + 14 * i
        color = COLORS[i % len(COLORS)]
        parts.append(f'<rect x="{_fmt(WIDTH - RIGHT - 130)}" y="{_fmt(y - 8)}" width="10" height="10" fill="{color}"/>')
        parts.append(f'<text x="{_fmt(WIDTH - RIGHT - 115)}" y="{_fmt(y + 1)}" font-size="11">{_escape(name)}</text>')
    return parts


def _document(title: str, body: List[str]) -> str:
    head = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#fff"/>',
        f'<text x="{_fmt(WIDTH / 2)}" y="28" text-anchor="middle" font-size="16">{_escape(title)}</text>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _polyline(frame: _Frame, pts: Sequence[Tuple[float, float]], color: str) -> str:
    coords = " ".join(f"{_fmt(frame.px(x))},{_fmt(frame.py(y))}" for x, y in pts)
    return f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>'


def _curve(table: ResultTable, series, frame: _Frame) -> List[str]:
    return [_polyline(frame, pts, COLORS[i % len(COLORS)]) for i, (_, pts) in enumerate(series)]


def _diagram(table: ResultTable, series, frame: _Frame) -> List[str]:
    """Area under the speed curve, with vertical speed segments at each sample."""
    _, pts = series[0]
    base = frame.py(0.0)
    outline = [(pts[0][0], 0.0)] + list(pts) + [(pts[-1][0], 0.0)]
    coords = " ".join(f"{_fmt(frame.px(x))},{_fmt(frame.py(y))}" for x, y in outline)
    parts = [f'<polygon points="{coords}" fill="#c6dbef" stroke="{COLORS[0]}" stroke-width="2"/>']
    for x, y in pts:
        parts.append(f'<line x1="{_fmt(frame.px(x))}" y1="{_fmt(base)}" x2="{_fmt(frame.px(x))}" '
                     f'y2="{_fmt(frame.py(y))}" stroke="{COLORS[0]}" stroke-width="1"/>')
    return parts


def _scan(table: ResultTable, series, frame: _Frame) -> List[str]:
    parts = []
    for i, (_, pts) in enumerate(series):
        color = COLORS[i % len(COLORS)]
        for x, y in pts:
            parts.append(f'<circle cx="{_fmt(frame.px(x))}" cy="{_fmt(frame.py(y))}" r="2" fill="{color}"/>')
    if "jump" in table.columns:
        for x_cell, j_cell in zip(table.column(table.plot_x), table.column("jump")):
            x = _number(x_cell)
            if j_cell and x is not None:
                parts.append(f'<line x1="{_fmt(frame.px(x))}" y1="{_fmt(TOP)}" x2="{_fmt(frame.px(x))}" '
                             f'y2="{_fmt(HEIGHT - BOTTOM)}" stroke="#444" stroke-dasharray="4 3"/>')
    return parts


def plot(table: ResultTable, kind: Optional[str] = None) -> str:
    """Render ``table`` as an SVG document string."""
    kind = kind or table.plot_kind
    if kind not in KINDS:
        raise PlotError(f"unknown plot kind {kind!r}")
    if not table.rows:
        raise PlotError("empty table")
    if kind == "diagram":
        x_col, y_cols = "t", ("v",)
    else:
        x_col, y_cols = table.plot_x, table.plot_y
    series = _series(table, x_col, y_cols)
    xs = [x for _, pts in series for x, _ in pts]
    ys = [y for _, pts in series for _, y in pts]
    frame = _Frame(xs, ys)
    draw = {"curve": _curve, "diagram": _diagram, "scan": _scan}[kind]
    body = _axes(frame, x_col, ", ".join(y_cols)) + draw(table, series, frame)
    if len(series) > 1:
        body += _legend([name for name, _ in series])
    return _document(table.title, body)
