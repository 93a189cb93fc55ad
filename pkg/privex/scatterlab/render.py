"""
Static SVG diagrams. 1-D terms are drawn at a given enumeration depth (intervals as bars, points as ticks, an
ellipsis glyph over every limit point the depth truncates); cube unions and frames are drawn to scale in 2-D.

Output is a plain string and byte stable for equal inputs.
"""
import logging
from fractions import Fraction
from typing import List, Tuple

from privex.scatterlab import settings
from privex.scatterlab.cubes import Box, BoxUnion, FrameRegion, LiftedFamily
from privex.scatterlab.derive import derive
from privex.scatterlab.exceptions import DimensionMismatch, NotSupported, ScatterLabException
from privex.scatterlab.setcore import enumerate_term
from privex.scatterlab.terms import PtSetTerm, bounds

log = logging.getLogger(__name__)

WIDTH, HEIGHT, MARGIN = 800, 160, 20
SQUARE = 480


def _num(x) -> str:
    return f'{float(x):.3f}'


def svg_wrap(width: int, height: int, label: str, body: str) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" role="img" aria-label="{label}">\n'
        f'{body}\n'
        f'</svg>\n'
    )


def _scale_1d(lo: Fraction, hi: Fraction):
    span = hi - lo or Fraction(1)
    return lambda x: MARGIN + (x - lo) * (WIDTH - 2 * MARGIN) / span


def render_linear(t: PtSetTerm, depth: int = settings.DEPTH_DEFAULT) -> str:
    """Bars for listed intervals, ticks for listed points, and an ellipsis above each listed limit point"""
    approx = enumerate_term(t, depth)
    b = bounds(t)
    if b is None:
        return svg_wrap(WIDTH, HEIGHT, 'empty set', f'<text x="{MARGIN}" y="{HEIGHT // 2}">empty</text>')
    sx = _scale_1d(*b)
    axis = HEIGHT // 2
    parts = [f'<line x1="{MARGIN}" y1="{axis}" x2="{WIDTH - MARGIN}" y2="{axis}" stroke="#999"/>']
    for lo, hi in approx.intervals:
        parts.append(
            f'<rect x="{_num(sx(lo))}" y="{axis - 6}" width="{_num(max(sx(hi) - sx(lo), Fraction(1, 2)))}" '
            f'height="12" fill="#2a6"/>'
        )
    for p in approx.points:
        x = _num(sx(p))
        parts.append(f'<line x1="{x}" y1="{axis - 10}" x2="{x}" y2="{axis + 10}" stroke="#222"/>')
    try:
        limits = enumerate_term(derive(t), max(1, depth // 2)).points
    except ScatterLabException:
        limits = []
    for x in limits:
        parts.append(f'<text x="{_num(sx(x))}" y="{axis - 16}" text-anchor="middle">…</text>')
    parts.append(f'<text x="{MARGIN}" y="{HEIGHT - 6}" font-size="10">depth {depth}</text>')
    return svg_wrap(WIDTH, HEIGHT, f'{t.kind} at depth {depth}', '\n'.join(parts))


def _extent(boxes: List[Box]) -> Tuple[Fraction, Fraction]:
    lo = min(min(b.corner) for b in boxes)
    hi = max(max(b.upper) for b in boxes)
    return lo, hi


def _rects(boxes: List[Box], lo: Fraction, hi: Fraction, fill: str) -> List[str]:
    span = hi - lo or Fraction(1)

    def sc(v):
        return MARGIN + (v - lo) * SQUARE / span

    out = []
    for b in boxes:
        if b.dimension != 2:
            raise DimensionMismatch('only 2-dimensional boxes can be drawn', details=dict(dimension=b.dimension))
        x, y = sc(b.corner[0]), MARGIN + SQUARE - (sc(b.upper[1]) - MARGIN)
        dash = ' stroke-dasharray="4 2"' if b.open else ''
        out.append(
            f'<rect x="{_num(x)}" y="{_num(y)}" width="{_num(b.edge * SQUARE / span)}" '
            f'height="{_num(b.edge * SQUARE / span)}" fill="{fill}" stroke="#222"{dash}/>'
        )
    return out


def render_boxes(u: BoxUnion) -> str:
    if not u.boxes:
        return svg_wrap(SQUARE + 2 * MARGIN, SQUARE + 2 * MARGIN, 'empty union', '')
    lo, hi = _extent(u.boxes)
    body = '\n'.join(_rects(u.boxes, lo, hi, '#8cf'))
    return svg_wrap(SQUARE + 2 * MARGIN, SQUARE + 2 * MARGIN, f'{len(u.boxes)} cubes', body)


def render_frames(frames: List[FrameRegion], base: Box = None) -> str:
    """Outer squares filled, holes drawn white on top; the base square is included when given"""
    boxes = [f.outer for f in frames] + [h for f in frames for h in f.holes] + ([base] if base else [])
    lo, hi = _extent(boxes)
    body = _rects([f.outer for f in frames] + ([base] if base else []), lo, hi, '#fc8')
    body += _rects([h for f in frames for h in f.holes], lo, hi, '#fff')
    return svg_wrap(SQUARE + 2 * MARGIN, SQUARE + 2 * MARGIN, f'{len(frames)} frames', '\n'.join(body))


def render(value, depth: int = settings.DEPTH_DEFAULT) -> str:
    if isinstance(value, PtSetTerm):
        return render_linear(value, depth)
    if isinstance(value, BoxUnion):
        return render_boxes(value)
    if isinstance(value, FrameRegion):
        return render_frames([value])
    if isinstance(value, tuple) and len(value) == 2 and isinstance(value[1], Box):
        return render_frames(*value)
    if isinstance(value, LiftedFamily):
        return render_boxes(value.boxes)
    raise NotSupported(f'Cannot render {type(value).__name__}', details=dict(type=type(value).__name__))
