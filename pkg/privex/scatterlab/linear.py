"""
Component structure of subsets of the line: boundaries, depth-bounded ordered component listings, two-sided
components and the recovery of ``S`` from ``X_S``, plus the window bit profile of ``U_g`` style unions.

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
from typing import List, Tuple, FrozenSet, Optional

import attr

from privex.scatterlab import settings
from privex.scatterlab.derive import derive
from privex.scatterlab.exceptions import NotIntervalUnion, NotSupported, HorizonExceeded, ProfileMismatch
from privex.scatterlab.objects import Component, ComponentList
from privex.scatterlab.rational import pow2, window_start
from privex.scatterlab.setcore import member, meets, epsilon, enumerate_term
from privex.scatterlab.terms import (
    PtSetTerm, Empty, Point, Interval, OpenInterval, Ladder, IntervalLadder, Cantor, FWrap, Affine, Union, Thicken,
    Mirror, EndpointSet, GapLadders, EMPTY, bounds, canonical, validate, is_interval_union
)

log = logging.getLogger(__name__)

__all__ = [
    'boundary', 'components_upto', 'two_sided_components', 'recover_S_linear', 'component_limits', 'bits_profile',
]


def boundary(t: PtSetTerm) -> PtSetTerm:
    """
    The endpoints of all components of a closed union of nondegenerate intervals.

        >>> boundary(Interval(0, 1))
        Union(parts=(Point(a=Fraction(0, 1)), Point(a=Fraction(1, 1))))

    :raises NotIntervalUnion: when ``t`` has degenerate or non-closed components
    """
    t = canonical(validate(t))
    if not is_interval_union(t):
        raise NotIntervalUnion(f'boundary needs a closed interval union, got {t.kind}', details=dict(kind=t.kind))
    if isinstance(t, Interval):
        return canonical(Union((Point(t.a), Point(t.b))))
    return EndpointSet(t)


#############
# Components
#############

@attr.s(frozen=True)
class _Piece:
    lo = attr.ib(type=Fraction)
    hi = attr.ib(type=Fraction)
    left_closed = attr.ib(type=bool, default=True)
    right_closed = attr.ib(type=bool, default=True)

    def mapped(self, scale: Fraction, shift: Fraction) -> '_Piece':
        x, y = scale * self.lo + shift, scale * self.hi + shift
        if scale > 0:
            return _Piece(x, y, self.left_closed, self.right_closed)
        return _Piece(y, x, self.right_closed, self.left_closed)


_Missing = List[Tuple[Fraction, Fraction]]


def _map_missing(missing: _Missing, scale: Fraction, shift: Fraction) -> _Missing:
    return [tuple(sorted((scale * a + shift, scale * b + shift))) for a, b in missing]


def _point(a: Fraction) -> _Piece:
    return _Piece(a, a)


def _pieces(t: PtSetTerm, d: int) -> Tuple[List[_Piece], _Missing]:
    """Component pieces of ``t`` resolved at depth ``d``, plus the regions where unlisted pieces may lie"""
    if isinstance(t, Empty):
        return [], []
    if isinstance(t, Point):
        return [_point(t.a)], []
    if isinstance(t, Interval):
        return [_Piece(t.a, t.b)], []
    if isinstance(t, OpenInterval):
        return [_Piece(t.a, t.b, False, False)], []
    if isinstance(t, Ladder):
        pts = [_point(t.point(k)) for k in range(d)]
        if t.include_target:
            pts.append(_point(t.target))
        return pts, [(t.point(d), t.target)]
    if isinstance(t, IntervalLadder):
        ivs = [_Piece(*t.interval(k), t.closed, t.closed) for k in range(d)]
        return ivs, [(t.interval(d)[0], t.target)]
    if isinstance(t, Cantor):
        raise NotSupported('Cantor parts have singleton components; use the derivative machinery instead')
    if isinstance(t, FWrap):
        inner, imiss = _pieces(t.inner, d)
        out, miss = [], []
        for k in range(1, d + 1):
            s, c = pow2(-k), window_start(k)
            out += [p.mapped(s, c) for p in inner]
            miss += _map_missing(imiss, s, c)
        if t.include_top:
            out.append(_point(Fraction(1)))
        if bounds(t.inner) is not None:
            miss.append((window_start(d + 1), Fraction(1)))
        return out, miss
    if isinstance(t, Affine):
        inner, imiss = _pieces(t.inner, d)
        return [p.mapped(t.scale, t.shift) for p in inner], _map_missing(imiss, t.scale, t.shift)
    if isinstance(t, Union):
        out, miss = [], []
        for part in t.parts:
            po, pm = _pieces(part, d)
            out, miss = out + po, miss + pm
        return out, miss
    if isinstance(t, Thicken):
        inner, imiss = _pieces(t.inner, d)
        out = [_Piece(p.lo, p.lo + epsilon(t, p.lo)) for p in inner]
        return out, [(a, b + t.cap) for a, b in imiss]
    if isinstance(t, Mirror):
        inner, imiss = _pieces(t.inner, d)
        refl = [p.mapped(Fraction(-1), 2 * t.center) for p in inner]
        return inner + refl, imiss + _map_missing(imiss, Fraction(-1), 2 * t.center)
    if isinstance(t, EndpointSet):
        _, omiss = _pieces(t.of, d)
        approx = enumerate_term(t, d)
        return [_point(p) for p in approx.points], omiss
    if isinstance(t, GapLadders):
        approx = enumerate_term(t, d)
        b = bounds(t)
        return [_point(p) for p in approx.points], [] if b is None else [b]
    raise NotSupported(f'components_upto: unknown term {t!r}')


def _merge(pieces: List[_Piece]) -> List[_Piece]:
    pieces = sorted(set(pieces), key=lambda p: (p.lo, p.hi, not p.left_closed, p.right_closed))
    merged: List[_Piece] = []
    for p in pieces:
        if merged:
            cur = merged[-1]
            touching = p.lo == cur.hi and (cur.right_closed or p.left_closed)
            if p.lo < cur.hi or touching:
                if p.hi > cur.hi:
                    hi, rc = p.hi, p.right_closed
                elif p.hi == cur.hi:
                    hi, rc = cur.hi, cur.right_closed or p.right_closed
                else:
                    hi, rc = cur.hi, cur.right_closed
                lc = cur.left_closed or (p.lo == cur.lo and p.left_closed)
                merged[-1] = _Piece(cur.lo, hi, lc, rc)
                continue
        merged.append(p)
    return merged


def components_upto(t: PtSetTerm, depth: int = settings.DEPTH_DEFAULT) -> ComponentList:
    """
    Ordered list of the components of ``t`` resolved at ``depth``. Touching pieces (at a closed end) are merged,
    so every entry is a true component. ``complete_below`` marks the point below which nothing is missing.

    :raises NotSupported: for terms with Cantor parts
    """
    t = canonical(validate(t))
    pieces, missing = _pieces(t, depth)
    comps = []
    for p in _merge(pieces):
        kind = 'point' if p.lo == p.hi else 'interval'
        comps.append(Component(kind=kind, lo=p.lo, hi=p.hi, left_closed=p.left_closed, right_closed=p.right_closed))
    complete_below = min((a for a, _ in missing), default=None)
    return ComponentList(components=comps, depth=depth, complete_below=complete_below)


###########
# Recovery
###########

def two_sided_components(t: PtSetTerm, depth: int = settings.RECOVERY_DEPTH) -> List[Component]:
    """
    Components containing exactly two limit points of the boundary. Boundary points inside a component are its
    endpoints, so those two limit points are always the two endpoints.
    """
    acc = derive(boundary(t))
    return [
        c for c in components_upto(t, depth)
        if c.kind == 'interval' and member(acc, c.lo) and member(acc, c.hi)
    ]


def recover_S_linear(t: PtSetTerm, k_max: int = settings.K_MAX_DEFAULT,
                     depth: int = settings.RECOVERY_DEPTH) -> FrozenSet[int]:
    """
    Recover ``S`` from ``X_S``: for every two-sided component ``C`` the least ``m >= 1`` for which the
    ``(m + 1)``-th derivative of the boundary misses ``C``.

        >>> sorted(recover_S_linear(build_XS({2, 4}), 6))
        [2, 4]

    :raises HorizonExceeded: if some two-sided component is still met after ``k_max + 1`` derivatives
    :raises NotIntervalUnion: if ``t`` isn't a closed union of nondegenerate intervals
    """
    b = boundary(t)
    cands = two_sided_components(t, depth)
    if not cands:
        return frozenset()
    iterates = [b]
    for _ in range(k_max + 1):
        iterates.append(derive(iterates[-1]))
    found = set()
    for c in cands:
        region = Interval(c.lo, c.hi)
        m = next((m for m in range(1, k_max + 1) if not meets(iterates[m + 1], region)), None)
        if m is None:
            raise HorizonExceeded(
                'two-sided component still met at the derivative horizon',
                details=dict(k_max=k_max, lo=str(c.lo), hi=str(c.hi))
            )
        log.debug('recover_S_linear: component [%s, %s] -> %d', c.lo, c.hi, m)
        found.add(m)
    return frozenset(found)


##############
# Bit profile
##############

def component_limits(t: PtSetTerm) -> PtSetTerm:
    """Canonical term denoting the accumulation points of the component family of ``t``"""
    return canonical(_limits(canonical(validate(t))))


def _limits(t: PtSetTerm) -> PtSetTerm:
    if isinstance(t, (Empty, Point, Interval, OpenInterval)):
        return EMPTY
    if isinstance(t, (Ladder, IntervalLadder)):
        return Point(t.target)
    if isinstance(t, Thicken):
        return derive(t.inner)
    if isinstance(t, (EndpointSet, GapLadders)):
        return derive(t)
    if isinstance(t, Union):
        return Union(tuple(_limits(p) for p in t.parts))
    if isinstance(t, Affine):
        return Affine(t.scale, t.shift, _limits(t.inner))
    if isinstance(t, Mirror):
        return Mirror(t.center, _limits(t.inner))
    if isinstance(t, FWrap):
        return FWrap(canonical(_limits(t.inner)), True)
    raise NotSupported(f'component_limits is undefined for {t.kind}', details=dict(kind=t.kind))


def _runs(t: PtSetTerm, depth: int) -> List[Optional[int]]:
    """
    Walk the gaps between consecutive accumulation points of the component family. Returns one entry per gap
    (plus the stretch below the first accumulation point): the number of components in it, or ``None`` when the
    count still grows with the depth (a two-sided accumulation block).
    """
    acc = enumerate_term(component_limits(t), depth).points
    if not acc:
        raise ProfileMismatch('no accumulation points in the component family')
    shallow = components_upto(t, depth).components
    deep = components_upto(t, depth + 1).components

    def count(comps, lo, hi):
        return sum(1 for c in comps if c.hi > lo and c.lo < hi)

    runs = [sum(1 for c in deep if c.lo < acc[0])]
    for x, y in zip(acc, acc[1:]):
        n1, n2 = count(shallow, x, y), count(deep, x, y)
        runs.append(None if n2 > n1 else n2)
    return runs


def bits_profile(t: PtSetTerm, count: int, depth: int = settings.DEPTH_DEFAULT) -> List[int]:
    """
    Recover the bit list ``g(1..count)`` of ``U_g`` (open, its closure, or its representative points): between
    consecutive accumulation blocks there are exactly ``2 + g(i)`` isolated components.

        >>> bits_profile(build_Ug([1, 1, 0]), 3)
        [1, 1, 0]

    :raises ProfileMismatch: if the component order does not follow the ``1 + z + (2 + g(1)) + z + ...`` grammar
    """
    runs = _runs(t, depth)
    if runs[0] != 1:
        raise ProfileMismatch('expected exactly one component before the first block', details=dict(found=runs[0]))
    bits, expect_block = [], True
    for r in runs[1:]:
        if expect_block:
            if r is not None:
                raise ProfileMismatch('expected an accumulation block', details=dict(found=r, position=len(bits)))
        else:
            if r is None or r - 2 not in (0, 1):
                raise ProfileMismatch('isolated run outside {2, 3}', details=dict(found=r, position=len(bits)))
            bits.append(r - 2)
        expect_block = not expect_block
    if len(bits) < count:
        raise ProfileMismatch(
            f'only {len(bits)} windows are enclosed by accumulation blocks', details=dict(wanted=count)
        )
    return bits[:count]
