"""
Decidable semantics of the term algebra: membership, depth-bounded enumeration, order queries on compact
well-ordered / totally disconnected terms, the exact "sets meet" predicate and probe equality.

**Copyright**::

    +===================================================+
    |                 © 2020 Privex Inc.                |
    |               https://www.privex.io               |
    +===================================================+
    |                                                   |
    |        Privex's ScatterLab                        |
    |        License: X11 / MIT                         |
    |                                                   |
    +===================================================+

"""
import logging
from fractions import Fraction
from typing import List, Optional, Tuple, Iterable

from privex.scatterlab.exceptions import UndecidablePair, NotSupported, NotWellOrdered, NotIntervalUnion, RangeError
from privex.scatterlab.objects import Approximation
from privex.scatterlab.rational import rat, pow2, window_start, window_index
from privex.scatterlab.terms import (
    PtSetTerm, Empty, Point, Interval, OpenInterval, Ladder, IntervalLadder, Cantor, FWrap, Affine, Union, Thicken,
    Mirror, EndpointSet, GapLadders, bounds, validate, canonical
)

log = logging.getLogger(__name__)

THIRD, TWO_THIRDS = Fraction(1, 3), Fraction(2, 3)


def copy_k(k: int, y: Fraction) -> Fraction:
    """Image of ``y`` in ``[0, 1]`` inside the window ``W_k``"""
    return window_start(k) + y * pow2(-k)


def pull_k(k: int, x: Fraction) -> Fraction:
    return (x - window_start(k)) * pow2(k)


#############
# Membership
#############

def member(t: PtSetTerm, x) -> bool:
    """
    Return ``True`` iff ``x`` lies in the denotation of ``t``.

        >>> member(Cantor(0, 1), '1/4')
        True

    :raises TermValidationError: when ``t`` violates a structural invariant
    """
    return _member(validate(t), rat(x))


def _ladder_member(t: Ladder, x: Fraction) -> bool:
    if x == t.target:
        return t.include_target
    d = t.target - x
    if d <= 0 or d > t.offset0:
        return False
    o = t.offset0
    while o > d:
        o *= t.ratio
    return o == d


def _interval_ladder_member(t: IntervalLadder, x: Fraction) -> bool:
    d = t.target - x
    if d <= 0 or d > t.offset0:
        return False
    o = t.offset0
    while o >= d:
        near = o * (1 - t.fill)
        if (near <= d <= o) if t.closed else (near < d < o):
            return True
        o *= t.ratio
    return False


def cantor_member01(y: Fraction) -> bool:
    """Ternary Cantor set membership of a rational, through its eventually periodic expansion"""
    if y < 0 or y > 1:
        return False
    seen = set()
    while True:
        if y == 0 or y == 1:
            return True
        if THIRD < y < TWO_THIRDS:
            return False
        y = 3 * y if y <= THIRD else 3 * y - 2
        if y in seen:
            return True
        seen.add(y)


def _member(t: PtSetTerm, x: Fraction) -> bool:
    if isinstance(t, Empty):
        return False
    if isinstance(t, Point):
        return x == t.a
    if isinstance(t, Interval):
        return t.a <= x <= t.b
    if isinstance(t, OpenInterval):
        return t.a < x < t.b
    if isinstance(t, Ladder):
        return _ladder_member(t, x)
    if isinstance(t, IntervalLadder):
        return _interval_ladder_member(t, x)
    if isinstance(t, Cantor):
        return cantor_member01((x - t.a) / (t.b - t.a))
    if isinstance(t, FWrap):
        if x == 1:
            return t.include_top
        if x < 0 or x > 1:
            return False
        k = window_index(x)
        if _member(t.inner, pull_k(k, x)):
            return True
        # the left end of W_k is also the right end of W_(k-1)
        return k > 1 and x == window_start(k) and _member(t.inner, Fraction(1))
    if isinstance(t, Affine):
        return _member(t.inner, t.pull(x))
    if isinstance(t, Union):
        return any(_member(p, x) for p in t.parts)
    if isinstance(t, Thicken):
        a = floor_point(t.inner, x)
        return a is not None and x <= a + epsilon(t, a)
    if isinstance(t, Mirror):
        return _member(t.inner, x) or _member(t.inner, t.reflect(x))
    if isinstance(t, EndpointSet):
        return _endpoint_member(t.of, x)
    if isinstance(t, GapLadders):
        return _gap_member(t.of, x)
    raise NotSupported(f'member: unknown term {t!r}')


def epsilon(t: Thicken, a: Fraction) -> Fraction:
    """Thickening radius of the point ``a`` of ``t.inner``"""
    s = succ_point(t.inner, a)
    return t.cap if s is None else min(t.cap, (s - a) / 2)


def _endpoint_member(of: PtSetTerm, x: Fraction) -> bool:
    if isinstance(of, Interval):
        return x == of.a or x == of.b
    if isinstance(of, Thicken):
        a = floor_point(of.inner, x)
        return a is not None and (x == a or x == a + epsilon(of, a))
    if isinstance(of, Mirror):
        return x != of.center and (_endpoint_member(of.inner, x) or _endpoint_member(of.inner, of.reflect(x)))
    if isinstance(of, Affine):
        return _endpoint_member(of.inner, of.pull(x))
    if isinstance(of, Union):
        return any(_endpoint_member(p, x) for p in of.parts)
    if isinstance(of, FWrap):
        if x < 0 or x >= 1:
            return False
        return _endpoint_member(of.inner, pull_k(window_index(x), x))
    raise NotIntervalUnion(f'No endpoint structure for {of.kind}', details=dict(kind=of.kind))


def is_dyadic_fraction(q: Fraction) -> bool:
    """``q == 2**-k`` for some ``k >= 1``"""
    return q.numerator == 1 and q.denominator >= 2 and q.denominator & (q.denominator - 1) == 0


def _gap_member(a: PtSetTerm, x: Fraction) -> bool:
    if _member(a, x):
        return False
    left, right = floor_point(a, x), ceil_point(a, x)
    if left is None or right is None:
        return False
    gap = right - left
    return is_dyadic_fraction((x - left) / gap) or is_dyadic_fraction((right - x) / gap)


################
# Order queries
################

def _cantor_descend(y: Fraction, pick_right: bool) -> Fraction:
    """Nearest Cantor point above (``pick_right``) or below a non-member ``y`` in ``[0, 1]``"""
    off, scale = Fraction(0), Fraction(1)
    while True:
        if THIRD < y < TWO_THIRDS:
            return off + scale * (TWO_THIRDS if pick_right else THIRD)
        if y <= THIRD:
            y, scale = 3 * y, scale / 3
        else:
            off, y, scale = off + scale * TWO_THIRDS, 3 * y - 2, scale / 3


def floor_point(t: PtSetTerm, x: Fraction) -> Optional[Fraction]:
    """Largest element of the compact ``t`` which is ``<= x``, or ``None``"""
    if isinstance(t, Empty):
        return None
    if isinstance(t, Point):
        return t.a if t.a <= x else None
    if isinstance(t, Ladder):
        if x >= t.target:
            if not t.include_target:
                raise NotWellOrdered('floor on a ladder without its target', details=dict(x=str(x)))
            return t.target
        if x < t.point(0):
            return None
        o = t.offset0
        while t.target - o * t.ratio <= x:
            o *= t.ratio
        return t.target - o
    if isinstance(t, Cantor):
        y = (x - t.a) / (t.b - t.a)
        if y < 0:
            return None
        if y >= 1:
            return t.b
        if cantor_member01(y):
            return x
        return t.a + (t.b - t.a) * _cantor_descend(y, False)
    if isinstance(t, FWrap):
        if x >= 1:
            if not t.include_top:
                raise NotWellOrdered('floor at the top of an FWrap without its top point')
            return Fraction(1)
        if x < 0:
            return None
        k = window_index(x)
        f = floor_point(t.inner, pull_k(k, x))
        if f is not None:
            return copy_k(k, f)
        if k == 1:
            return None
        return copy_k(k - 1, floor_point(t.inner, Fraction(1)))
    if isinstance(t, Affine):
        y = t.pull(x)
        r = floor_point(t.inner, y) if t.scale > 0 else ceil_point(t.inner, y)
        return None if r is None else t.apply(r)
    if isinstance(t, Mirror):
        return _best(max, [floor_point(t.inner, x), _reflect_opt(t, ceil_point(t.inner, t.reflect(x)))])
    if isinstance(t, Union):
        return _best(max, [floor_point(p, x) for p in t.parts])
    raise NotSupported(f'floor_point is undefined for {t.kind}', details=dict(kind=t.kind))


def ceil_point(t: PtSetTerm, x: Fraction) -> Optional[Fraction]:
    """Smallest element of the compact ``t`` which is ``>= x``, or ``None``"""
    if isinstance(t, Empty):
        return None
    if isinstance(t, Point):
        return t.a if t.a >= x else None
    if isinstance(t, Ladder):
        if x <= t.point(0):
            return t.point(0)
        if x > t.target:
            return None
        if x == t.target:
            return t.target if t.include_target else None
        o = t.offset0
        while t.target - o < x:
            o *= t.ratio
        return t.target - o
    if isinstance(t, Cantor):
        y = (x - t.a) / (t.b - t.a)
        if y <= 0:
            return t.a
        if y > 1:
            return None
        if cantor_member01(y):
            return x
        return t.a + (t.b - t.a) * _cantor_descend(y, True)
    if isinstance(t, FWrap):
        if x > 1:
            return None
        if x == 1:
            return Fraction(1) if t.include_top else None
        x = max(x, Fraction(0))
        k = window_index(x)
        c = ceil_point(t.inner, pull_k(k, x))
        if c is not None:
            return copy_k(k, c)
        lowest = ceil_point(t.inner, Fraction(0))
        return None if lowest is None else copy_k(k + 1, lowest)
    if isinstance(t, Affine):
        y = t.pull(x)
        r = ceil_point(t.inner, y) if t.scale > 0 else floor_point(t.inner, y)
        return None if r is None else t.apply(r)
    if isinstance(t, Mirror):
        return _best(min, [ceil_point(t.inner, x), _reflect_opt(t, floor_point(t.inner, t.reflect(x)))])
    if isinstance(t, Union):
        return _best(min, [ceil_point(p, x) for p in t.parts])
    raise NotSupported(f'ceil_point is undefined for {t.kind}', details=dict(kind=t.kind))


def succ_point(t: PtSetTerm, x: Fraction) -> Optional[Fraction]:
    """Smallest element of the well-ordered ``t`` strictly above ``x``, or ``None``"""
    if isinstance(t, Empty):
        return None
    if isinstance(t, Point):
        return t.a if t.a > x else None
    if isinstance(t, Ladder):
        if x < t.point(0):
            return t.point(0)
        if x >= t.target:
            return None
        o = t.offset0
        while t.target - o <= x:
            o *= t.ratio
        return t.target - o
    if isinstance(t, FWrap):
        if x >= 1:
            return None
        if x < 0:
            return ceil_point(t, Fraction(0))
        k = window_index(x)
        s = succ_point(t.inner, pull_k(k, x))
        if s is not None:
            return copy_k(k, s)
        lowest = ceil_point(t.inner, Fraction(0))
        return None if lowest is None else copy_k(k + 1, lowest)
    if isinstance(t, Affine):
        if t.scale < 0:
            raise NotWellOrdered('successor through an order reversing map', details=dict(scale=str(t.scale)))
        r = succ_point(t.inner, t.pull(x))
        return None if r is None else t.apply(r)
    if isinstance(t, Union):
        return _best(min, [succ_point(p, x) for p in t.parts])
    raise NotWellOrdered(f'succ_point is undefined for {t.kind}', details=dict(kind=t.kind))


def _reflect_opt(t: Mirror, v: Optional[Fraction]) -> Optional[Fraction]:
    return None if v is None else t.reflect(v)


def _best(fn, values: Iterable[Optional[Fraction]]) -> Optional[Fraction]:
    values = [v for v in values if v is not None]
    return fn(values) if values else None


def min_point(t: PtSetTerm) -> Optional[Fraction]:
    b = bounds(t)
    return None if b is None else ceil_point(t, b[0])


def max_point(t: PtSetTerm) -> Optional[Fraction]:
    b = bounds(t)
    return None if b is None else floor_point(t, b[1])


##############
# Enumeration
##############

_Enum = Tuple[List[Fraction], List[Tuple[Fraction, Fraction]], Fraction]


def enumerate_term(t: PtSetTerm, depth: int) -> Approximation:
    """
    Depth-bounded finite enumeration of ``t``. Every listed point / interval lies in the set, and every point of
    the set lies within ``tolerance`` of a listed one.

        >>> enumerate_term(Ladder(1, 1, '1/2', True), 3).points
        [Fraction(0, 1), Fraction(1, 2), Fraction(3, 4), Fraction(1, 1)]

    """
    depth = int(depth)
    if depth < 1:
        raise RangeError('enumeration depth must be >= 1')
    pts, ivs, tol = _enum(validate(t), depth)
    return Approximation(depth=depth, points=pts, intervals=ivs, tolerance=tol)


def _map_enum(e: _Enum, fn, scale: Fraction) -> _Enum:
    pts, ivs, tol = e
    mapped = []
    for a, b in ivs:
        x, y = fn(a), fn(b)
        mapped.append((min(x, y), max(x, y)))
    return [fn(p) for p in pts], mapped, tol * abs(scale)


def cantor_endpoints(a: Fraction, b: Fraction, depth: int) -> List[Fraction]:
    lefts, width = [a], b - a
    for _ in range(depth):
        width /= 3
        lefts = [x for l in lefts for x in (l, l + 2 * width)]
    return sorted(set(x for l in lefts for x in (l, l + width)))


def _enum(t: PtSetTerm, d: int) -> _Enum:
    small = pow2(-d)
    if isinstance(t, Empty):
        return [], [], small
    if isinstance(t, Point):
        return [t.a], [], small
    if isinstance(t, Interval):
        return [], [(t.a, t.b)], small
    if isinstance(t, OpenInterval):
        inset = (t.b - t.a) * pow2(-(d + 1))
        return [], [(t.a + inset, t.b - inset)], inset
    if isinstance(t, Ladder):
        pts = [t.point(k) for k in range(d)]
        if t.include_target:
            return pts + [t.target], [], t.offset0 * t.ratio ** d
        return pts, [], t.offset0 * t.ratio ** (d - 1)
    if isinstance(t, IntervalLadder):
        ivs = [t.interval(k) for k in range(d)]
        return [], ivs, t.offset0 * t.ratio ** (d - 1)
    if isinstance(t, Cantor):
        return cantor_endpoints(t.a, t.b, d), [], (t.b - t.a) / 3 ** d / 2
    if isinstance(t, FWrap):
        inner = _enum(t.inner, d)
        pts, ivs = [], []
        for k in range(1, d + 1):
            kp, ki, _ = _map_enum(inner, lambda y, k=k: copy_k(k, y), pow2(-k))
            pts += kp
            ivs += ki
        if t.include_top:
            pts.append(Fraction(1))
        tail = pow2(-d) if t.include_top else pow2(1 - d)
        return pts, ivs, max(inner[2] / 2, tail)
    if isinstance(t, Affine):
        return _map_enum(_enum(t.inner, d), t.apply, t.scale)
    if isinstance(t, Union):
        pts, ivs, tol = [], [], small
        for p in t.parts:
            pp, pi, pt = _enum(p, d)
            pts, ivs, tol = pts + pp, ivs + pi, max(tol, pt)
        return pts, ivs, tol
    if isinstance(t, Thicken):
        kp, _, ktol = _enum(t.inner, d)
        return [], [(a, a + epsilon(t, a)) for a in kp], 2 * ktol
    if isinstance(t, Mirror):
        pts, ivs, tol = _enum(t.inner, d)
        rp, ri, _ = _map_enum((pts, ivs, tol), t.reflect, Fraction(-1))
        return pts + rp, ivs + ri, tol
    if isinstance(t, EndpointSet):
        return _enum_endpoints(t.of, d)
    if isinstance(t, GapLadders):
        return _enum_gaps(t.of, d)
    raise NotSupported(f'enumerate: unknown term {t!r}')


def _enum_endpoints(of: PtSetTerm, d: int) -> _Enum:
    if isinstance(of, Interval):
        return [of.a, of.b], [], pow2(-d)
    if isinstance(of, Thicken):
        kp, _, ktol = _enum(of.inner, d)
        return [x for a in kp for x in (a, a + epsilon(of, a))], [], 2 * ktol
    if isinstance(of, Mirror):
        pts, _, tol = _enum_endpoints(of.inner, d)
        both = pts + [of.reflect(p) for p in pts]
        return [p for p in both if p != of.center], [], tol
    if isinstance(of, Affine):
        return _map_enum(_enum_endpoints(of.inner, d), of.apply, of.scale)
    if isinstance(of, Union):
        pts, tol = [], pow2(-d)
        for p in of.parts:
            pp, _, pt = _enum_endpoints(p, d)
            pts, tol = pts + pp, max(tol, pt)
        return pts, [], tol
    if isinstance(of, FWrap):
        inner = _enum_endpoints(of.inner, d)
        pts = []
        for k in range(1, d + 1):
            pts += _map_enum(inner, lambda y, k=k: copy_k(k, y), pow2(-k))[0]
        return pts, [], max(inner[2] / 2, pow2(1 - d))
    raise NotIntervalUnion(f'No endpoint structure for {of.kind}', details=dict(kind=of.kind))


def gaps_upto(a: PtSetTerm, depth: int) -> Tuple[List[Tuple[Fraction, Fraction]], Fraction]:
    """
    The complementary gaps ``(x, y)`` of the compact totally disconnected ``a`` whose endpoints both appear in
    the depth-``depth`` enumeration, plus the length of the longest unresolved stretch between enumerated points.
    """
    pts = sorted(set(_enum(a, depth)[0]))
    gaps, unresolved = [], Fraction(0)
    for p, q in zip(pts, pts[1:]):
        mid = (p + q) / 2
        if floor_point(a, mid) == p and ceil_point(a, mid) == q:
            gaps.append((p, q))
        else:
            unresolved = max(unresolved, q - p)
    return gaps, unresolved


def _enum_gaps(a: PtSetTerm, d: int) -> _Enum:
    gaps, unresolved = gaps_upto(a, d)
    pts = []
    for x, y in gaps:
        g = y - x
        for k in range(1, d + 1):
            pts += [x + g * pow2(-k), y - g * pow2(-k)]
    widest = max((y - x for x, y in gaps), default=Fraction(0))
    return pts, [], max(unresolved, widest * pow2(-d), pow2(-d))


###############
# Meets / touch
###############

def _apply_map(leaf: PtSetTerm, s: Fraction, c: Fraction) -> PtSetTerm:
    if s == 1 and c == 0:
        return leaf
    if isinstance(leaf, Point):
        return Point(s * leaf.a + c)
    if isinstance(leaf, (Interval, OpenInterval, Cantor)):
        x, y = s * leaf.a + c, s * leaf.b + c
        return leaf.__class__(min(x, y), max(x, y))
    if isinstance(leaf, Ladder) and s > 0:
        return Ladder(s * leaf.target + c, s * leaf.offset0, leaf.ratio, leaf.include_target)
    return Affine(s, c, leaf)


def pieces(t: PtSetTerm, s: Fraction = Fraction(1), c: Fraction = Fraction(0)) -> List[PtSetTerm]:
    """Flatten ``t`` into leaf pieces with the enclosing affine maps pushed onto the leaves"""
    if isinstance(t, Empty):
        return []
    if isinstance(t, Union):
        return [p for part in t.parts for p in pieces(part, s, c)]
    if isinstance(t, Affine):
        return pieces(t.inner, s * t.scale, s * t.shift + c)
    if isinstance(t, Mirror):
        return pieces(t.inner, s, c) + pieces(t.inner, -s, 2 * t.center * s + c)
    return [_apply_map(t, s, c)]


def _is_fwrap(p: PtSetTerm) -> bool:
    return isinstance(p, FWrap) or (isinstance(p, Affine) and isinstance(p.inner, FWrap))


def _expand_fwrap(p: PtSetTerm, lo: Fraction, hi: Fraction) -> Optional[List[PtSetTerm]]:
    """Window pieces of an (affine image of an) FWrap meeting ``[lo, hi]``; ``None`` if infinitely many do"""
    s, c, fw = (Fraction(1), Fraction(0), p) if isinstance(p, FWrap) else (p.scale, p.shift, p.inner)
    l, h = sorted(((lo - c) / s, (hi - c) / s))
    out = []
    if l <= 1 <= h and fw.include_top:
        out.append(Point(s + c))
    if l >= 1:
        return out
    if h >= 1:
        return None
    first = max(1, window_index(max(l, Fraction(0))) - 1)
    for k in range(first, window_index(h) + 1):
        out += pieces(fw.inner, s * pow2(-k), s * window_start(k) + c)
    return out


def _ladder_points_in(t: Ladder, lo: Fraction, hi: Fraction) -> Optional[List[Fraction]]:
    if hi >= t.target and lo < t.target:
        return None
    out, k = [], 0
    while True:
        p = t.point(k)
        if p > hi:
            break
        if p >= lo:
            out.append(p)
        k += 1
    if t.include_target and lo <= t.target <= hi:
        out.append(t.target)
    return out


def _aligned(outer: Cantor, inner: Cantor) -> bool:
    """``inner`` is the Cantor set of a stage interval of ``outer``"""
    width = outer.b - outer.a
    ratio = (inner.b - inner.a) / width
    if ratio.numerator != 1 or ratio > 1:
        return False
    j, den = 0, ratio.denominator
    while den % 3 == 0:
        den, j = den // 3, j + 1
    if den != 1:
        return False
    pos = (inner.a - outer.a) / width * 3 ** j
    if pos.denominator != 1 or not 0 <= pos < 3 ** j:
        return False
    n = pos.numerator
    for _ in range(j):
        if n % 3 == 1:
            return False
        n //= 3
    return True


def _pair(p: PtSetTerm, q: PtSetTerm, want_points: bool) -> List[Fraction]:
    """
    Intersection points of two leaf pieces. In ``want_points`` mode the intersection must be finite; otherwise a
    single witness is enough and ``[None]`` marks a nonempty intersection without a listed point.
    """
    bp, bq = bounds(p), bounds(q)
    if bp is None or bq is None:
        return []
    lo, hi = max(bp[0], bq[0]), min(bp[1], bq[1])
    if lo > hi:
        return []
    if lo == hi:
        return [lo] if _member(p, lo) and _member(q, lo) else []
    for a, b in ((p, q), (q, p)):
        if isinstance(a, Point):
            return [a.a] if _member(b, a.a) else []
    for a, b in ((p, q), (q, p)):
        if _is_fwrap(a):
            expanded = _expand_fwrap(a, lo, hi)
            if expanded is None:
                raise UndecidablePair('an FWrap top meets a non-point piece', details=dict(left=p.kind, right=q.kind))
            out = []
            for e in expanded:
                out += _pair(e, b, want_points)
                if out and not want_points:
                    return out
            return out
    for a, b in ((p, q), (q, p)):
        if isinstance(a, (Interval, OpenInterval)) and isinstance(b, Affine):
            s, c = b.scale, b.shift
            hits = _pair(_apply_map(a, 1 / s, -c / s), b.inner, want_points)
            return [None if x is None else b.apply(x) for x in hits]
    if {type(p), type(q)} <= {Interval, OpenInterval}:
        return _infinite(p, q, want_points)
    for a, b in ((p, q), (q, p)):
        if not isinstance(a, (Interval, OpenInterval)):
            continue
        if isinstance(b, Cantor):
            c = ceil_point(b, lo)
            if c is None or c > hi:
                return []
            if c < hi and _member(a, c):
                return _infinite(p, q, want_points)
            if c == hi:
                return [c] if _member(a, c) else []
            break
        if isinstance(b, Ladder):
            found = _ladder_points_in(b, lo, hi)
            if found is None:
                return _infinite(p, q, want_points)
            return [x for x in found if _member(a, x)]
        if isinstance(b, Thicken):
            return [x for x in _thicken_hits(b, lo, hi, p, q, want_points) if _member(a, x)]
        if isinstance(b, IntervalLadder):
            return [x for x in _interval_ladder_hits(b, lo, hi, p, q, want_points) if _member(a, x)]
    if isinstance(p, Cantor) and isinstance(q, Cantor):
        if _aligned(p, q) or _aligned(q, p):
            return _infinite(p, q, want_points)
    raise UndecidablePair(
        f'cannot decide the intersection of {p.kind} and {q.kind}',
        details=dict(left=p.kind, right=q.kind, lo=str(lo), hi=str(hi))
    )


def _infinite(p, q, want_points):
    if want_points:
        raise UndecidablePair('the intersection is not a finite set of points', details=dict(left=p.kind, right=q.kind))
    return [None]


def _thicken_hits(t: Thicken, lo: Fraction, hi: Fraction, p, q, want_points) -> List[Fraction]:
    """Points where ``t`` meets ``[lo, hi]`` (``lo < hi``), or the infinite marker"""
    out = []
    c = ceil_point(t.inner, lo)
    if c is not None and c < hi:
        return _infinite(p, q, want_points)
    if c == hi:
        out.append(hi)
    f = floor_point(t.inner, lo)
    if f is not None:
        reach = f + epsilon(t, f)
        if reach > lo:
            return _infinite(p, q, want_points)
        if reach == lo:
            out.append(lo)
    return out


def _interval_ladder_hits(t: IntervalLadder, lo: Fraction, hi: Fraction, p, q, want_points) -> List[Fraction]:
    if hi >= t.target:
        return _infinite(p, q, want_points)
    out, k = [], 0
    while True:
        a, b = t.interval(k)
        if a > hi:
            return out
        if a < hi and b > lo:
            return _infinite(p, q, want_points)
        if t.closed and b == lo:
            out.append(lo)
        if t.closed and a == hi:
            out.append(hi)
        k += 1


def _pairs(a: PtSetTerm, b: PtSetTerm):
    pa, pb = pieces(validate(a)), pieces(validate(b))
    for p in pa:
        for q in pb:
            yield p, q


def meets(a: PtSetTerm, b: PtSetTerm) -> bool:
    """
    Return ``True`` iff the denotations of ``a`` and ``b`` intersect.

        >>> meets(Interval(0, 1), Interval(1, 2))
        True

    :raises UndecidablePair: when a pair of pieces falls outside the decidable pair classes
    """
    for p, q in _pairs(a, b):
        if _pair(p, q, want_points=False):
            return True
    return False


def touch_points(a: PtSetTerm, b: PtSetTerm) -> List[Fraction]:
    """
    The intersection of ``a`` and ``b`` as a sorted list of points.

    :raises UndecidablePair: if some pair of pieces meets in more than finitely many points
    """
    out = set()
    for p, q in _pairs(a, b):
        out.update(_pair(p, q, want_points=True))
    return sorted(out)


###################
# Probe equality
###################

def probe_points(t: PtSetTerm, depth: int) -> List[Fraction]:
    """Enumeration points, interval endpoints and bounding endpoints of ``t`` at ``depth``"""
    approx = enumerate_term(t, depth)
    pts = set(approx.points)
    for a, b in approx.intervals:
        pts.update((a, b))
    b = bounds(t)
    if b is not None:
        pts.update(b)
    return sorted(pts)


def probe_equal(a: PtSetTerm, b: PtSetTerm, depth: int = 6) -> bool:
    """
    Set equality by canonical structure, falling back to membership probing in both directions on the probe
    points of both terms.
    """
    if canonical(a) == canonical(b):
        return True
    for x in probe_points(a, depth) + probe_points(b, depth):
        if _member(a, x) != _member(b, x):
            log.debug('probe_equal: terms disagree at %s', x)
            return False
    return True
