"""
The point-set term algebra.

A :class:`.PtSetTerm` is a small immutable tree with exact rational parameters denoting a subset of the real
line. Terms are :mod:`attr` frozen classes, so structural equality and hashing come for free, and terms can be
shared between threads without copying.

Example::

    >>> from privex.scatterlab.terms import Ladder, Affine, canonical
    >>> k1 = Affine(1, 5, Ladder(1, 1, '1/2', True))
    >>> canonical(Affine(1, 0, k1)) == k1
    True

"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, List

import attr

from privex.scatterlab.exceptions import TermValidationError
from privex.scatterlab.rational import rat

log = logging.getLogger(__name__)

Bounds = Optional[Tuple[Fraction, Fraction]]


def _parts_converter(parts) -> tuple:
    return tuple(parts)


class PtSetTerm:
    """Base class of every term variant. ``kind`` is the JSON discriminator."""
    kind = None

    def __or__(self, other):
        return Union((self, other))


@attr.s(frozen=True, cache_hash=True)
class Empty(PtSetTerm):
    kind = 'empty'


EMPTY = Empty()


@attr.s(frozen=True, cache_hash=True)
class Point(PtSetTerm):
    kind = 'point'
    a = attr.ib(type=Fraction, converter=rat)


@attr.s(frozen=True, cache_hash=True)
class Interval(PtSetTerm):
    """The closed interval ``[a, b]``"""
    kind = 'interval'
    a = attr.ib(type=Fraction, converter=rat)
    b = attr.ib(type=Fraction, converter=rat)


@attr.s(frozen=True, cache_hash=True)
class OpenInterval(PtSetTerm):
    """The open interval ``]a, b[``"""
    kind = 'open_interval'
    a = attr.ib(type=Fraction, converter=rat)
    b = attr.ib(type=Fraction, converter=rat)


@attr.s(frozen=True, cache_hash=True)
class Ladder(PtSetTerm):
    """
    The ascending sequence ``{ target - offset0 * ratio**k : k >= 0 }``, plus ``target`` when
    ``include_target`` is true.
    """
    kind = 'ladder'
    target = attr.ib(type=Fraction, converter=rat)
    offset0 = attr.ib(type=Fraction, converter=rat)
    ratio = attr.ib(type=Fraction, converter=rat)
    include_target = attr.ib(type=bool, default=True, converter=bool)

    def point(self, k: int) -> Fraction:
        return self.target - self.offset0 * self.ratio ** k


@attr.s(frozen=True, cache_hash=True)
class IntervalLadder(PtSetTerm):
    """
    The intervals ``I_k = [target - o_k, target - o_k + fill * o_k]`` with ``o_k = offset0 * ratio**k``,
    accumulating at ``target`` from below. Open intervals when ``closed`` is false.
    """
    kind = 'interval_ladder'
    target = attr.ib(type=Fraction, converter=rat)
    offset0 = attr.ib(type=Fraction, converter=rat)
    ratio = attr.ib(type=Fraction, converter=rat)
    fill = attr.ib(type=Fraction, converter=rat)
    closed = attr.ib(type=bool, default=True, converter=bool)

    def interval(self, k: int) -> Tuple[Fraction, Fraction]:
        o = self.offset0 * self.ratio ** k
        return self.target - o, self.target - o + self.fill * o


@attr.s(frozen=True, cache_hash=True)
class Cantor(PtSetTerm):
    """The ternary Cantor set placed affinely on ``[a, b]``"""
    kind = 'cantor'
    a = attr.ib(type=Fraction, converter=rat)
    b = attr.ib(type=Fraction, converter=rat)


@attr.s(frozen=True, cache_hash=True)
class FWrap(PtSetTerm):
    """
    ``inner`` (a subset of ``[0, 1]``) copied into every window ``W_k = [1 - 2^(1-k), 1 - 2^(-k)]``, ``k >= 1``,
    plus the point ``1`` when ``include_top`` is true.
    """
    kind = 'fwrap'
    inner = attr.ib(type=PtSetTerm)
    include_top = attr.ib(type=bool, default=True, converter=bool)


@attr.s(frozen=True, cache_hash=True)
class Affine(PtSetTerm):
    """Image of ``inner`` under ``x -> scale * x + shift``"""
    kind = 'affine'
    scale = attr.ib(type=Fraction, converter=rat)
    shift = attr.ib(type=Fraction, converter=rat)
    inner = attr.ib(type=PtSetTerm)

    def apply(self, x: Fraction) -> Fraction:
        return self.scale * x + self.shift

    def pull(self, x: Fraction) -> Fraction:
        return (x - self.shift) / self.scale


@attr.s(frozen=True, cache_hash=True)
class Union(PtSetTerm):
    kind = 'union'
    parts = attr.ib(type=tuple, converter=_parts_converter, factory=tuple)


@attr.s(frozen=True, cache_hash=True)
class Thicken(PtSetTerm):
    """
    ``[a, a + eps(a)]`` for every ``a`` in the compact well-ordered ``inner``, where ``eps(a)`` is
    ``min(cap, (succ(a) - a) / 2)`` and ``eps(max) = cap``.
    """
    kind = 'thicken'
    inner = attr.ib(type=PtSetTerm)
    cap = attr.ib(type=Fraction, default=Fraction(1), converter=rat)


@attr.s(frozen=True, cache_hash=True)
class Mirror(PtSetTerm):
    """``inner`` together with its reflection ``x -> 2 * center - x``"""
    kind = 'mirror'
    center = attr.ib(type=Fraction, converter=rat)
    inner = attr.ib(type=PtSetTerm)

    def reflect(self, x: Fraction) -> Fraction:
        return 2 * self.center - x


@attr.s(frozen=True, cache_hash=True)
class EndpointSet(PtSetTerm):
    """Endpoints of the components of an interval-union term"""
    kind = 'endpoints'
    of = attr.ib(type=PtSetTerm)


@attr.s(frozen=True, cache_hash=True)
class GapLadders(PtSetTerm):
    """
    For every complementary gap ``]x, y[`` of the compact totally disconnected ``of`` inside its hull, the
    points ``x + (y - x) 2^-k`` and ``y - (y - x) 2^-k`` for ``k >= 1``.
    """
    kind = 'gap_ladders'
    of = attr.ib(type=PtSetTerm)


TERM_TYPES = (
    Empty, Point, Interval, OpenInterval, Ladder, IntervalLadder, Cantor, FWrap, Affine, Union, Thicken, Mirror,
    EndpointSet, GapLadders,
)
TERM_KINDS = {c.kind: c for c in TERM_TYPES}

_KIND_ORDER = {c.kind: i for i, c in enumerate(TERM_TYPES)}


def children(t: PtSetTerm) -> List[PtSetTerm]:
    if isinstance(t, Union):
        return list(t.parts)
    if isinstance(t, (FWrap, Affine, Thicken, Mirror)):
        return [t.inner]
    if isinstance(t, (EndpointSet, GapLadders)):
        return [t.of]
    return []


#############
# Bounds
#############

@lru_cache(maxsize=8192)
def bounds(t: PtSetTerm) -> Bounds:
    """
    Return the bounding interval ``(lo, hi)`` of ``t`` (a closed interval containing its denotation and
    touching it at both ends), or ``None`` for the empty set.
    """
    if isinstance(t, Empty):
        return None
    if isinstance(t, Point):
        return t.a, t.a
    if isinstance(t, (Interval, OpenInterval, Cantor)):
        return t.a, t.b
    if isinstance(t, (Ladder, IntervalLadder)):
        return t.target - t.offset0, t.target
    if isinstance(t, FWrap):
        ib = bounds(t.inner)
        if ib is None:
            return (Fraction(1), Fraction(1)) if t.include_top else None
        return ib[0] / 2, Fraction(1)
    if isinstance(t, Affine):
        ib = bounds(t.inner)
        if ib is None:
            return None
        x, y = t.apply(ib[0]), t.apply(ib[1])
        return min(x, y), max(x, y)
    if isinstance(t, Union):
        bs = [b for b in (bounds(p) for p in t.parts) if b is not None]
        if not bs:
            return None
        return min(b[0] for b in bs), max(b[1] for b in bs)
    if isinstance(t, Thicken):
        ib = bounds(t.inner)
        return None if ib is None else (ib[0], ib[1] + t.cap)
    if isinstance(t, Mirror):
        ib = bounds(t.inner)
        if ib is None:
            return None
        return min(ib[0], t.reflect(ib[1])), max(ib[1], t.reflect(ib[0]))
    if isinstance(t, (EndpointSet, GapLadders)):
        return bounds(t.of)
    raise TermValidationError(f'Unknown term type: {type(t).__name__}')


#############
# Validation
#############

def _fail(msg: str, t: PtSetTerm, **details):
    raise TermValidationError(msg, details=dict(kind=t.kind, **details))


def is_well_ordered(t: PtSetTerm) -> bool:
    """
    Structural check that ``t`` denotes a compact, well-ordered, scattered set: Points, Ladders including
    their target, FWrap including the top over such, positive Affine images and Unions whose parts have
    pairwise disjoint bounding intervals.
    """
    if isinstance(t, (Empty, Point)):
        return True
    if isinstance(t, Ladder):
        return t.include_target
    if isinstance(t, FWrap):
        return t.include_top and is_well_ordered(t.inner)
    if isinstance(t, Affine):
        return t.scale > 0 and is_well_ordered(t.inner)
    if isinstance(t, Union):
        if not all(is_well_ordered(p) for p in t.parts):
            return False
        return _separated(t.parts)
    return False


def _separated(parts, touching_ok=False) -> bool:
    bs = sorted(b for b in (bounds(p) for p in parts) if b is not None)
    for (lo1, hi1), (lo2, hi2) in zip(bs, bs[1:]):
        if hi1 > lo2 or (hi1 == lo2 and not touching_ok):
            return False
    return True


def is_totally_disconnected(t: PtSetTerm) -> bool:
    """Structural check that ``t`` denotes a compact set without nondegenerate intervals"""
    if isinstance(t, (Empty, Point, Cantor)):
        return True
    if isinstance(t, Ladder):
        return t.include_target
    if isinstance(t, FWrap):
        return (t.include_top or isinstance(t.inner, Empty)) and is_totally_disconnected(t.inner)
    if isinstance(t, (Affine, Mirror)):
        return is_totally_disconnected(t.inner)
    if isinstance(t, Union):
        return all(is_totally_disconnected(p) for p in t.parts)
    return False


def is_interval_union(t: PtSetTerm) -> bool:
    """Structural check for closed unions of nondegenerate intervals with computable endpoints"""
    if isinstance(t, (Interval, Thicken)):
        return True
    if isinstance(t, Mirror):
        return isinstance(t.inner, (Interval, Thicken))
    if isinstance(t, Affine):
        return is_interval_union(t.inner)
    if isinstance(t, FWrap):
        ib = bounds(t.inner)
        return not t.include_top and ib is not None and 0 < ib[0] and ib[1] < 1 and is_interval_union(t.inner)
    if isinstance(t, Union):
        return all(is_interval_union(p) for p in t.parts) and _separated(t.parts)
    return False


@lru_cache(maxsize=8192)
def validate(t: PtSetTerm) -> PtSetTerm:
    """
    Check every structural invariant of ``t`` (recursively) and return it unchanged.

    :raises TermValidationError: naming the offending variant
    """
    if not isinstance(t, PtSetTerm):
        raise TermValidationError(f'Not a term: {t!r}')
    for c in children(t):
        validate(c)

    if isinstance(t, (Interval, OpenInterval, Cantor)) and not t.a < t.b:
        _fail(f'{t.kind} requires a < b', t, a=str(t.a), b=str(t.b))
    if isinstance(t, (Ladder, IntervalLadder)):
        if t.offset0 <= 0:
            _fail('offset0 must be positive', t)
        if not 0 < t.ratio < 1:
            _fail('ratio must lie strictly between 0 and 1', t)
    if isinstance(t, IntervalLadder) and not 0 < t.fill < 1 - t.ratio:
        _fail('fill must lie strictly between 0 and 1 - ratio', t)
    if isinstance(t, FWrap):
        ib = bounds(t.inner)
        if ib is not None and (ib[0] < 0 or ib[1] > 1):
            _fail('FWrap inner must lie inside [0, 1]', t, lo=str(ib[0]), hi=str(ib[1]))
    if isinstance(t, Affine) and t.scale == 0:
        _fail('Affine scale must be non-zero', t)
    if isinstance(t, Thicken):
        if t.cap <= 0:
            _fail('Thicken cap must be positive', t)
        if not is_well_ordered(t.inner):
            _fail('Thicken inner must be compact, well-ordered and scattered', t, inner=t.inner.kind)
    if isinstance(t, Mirror):
        ib = bounds(t.inner)
        if ib is not None and ib[0] < t.center < ib[1]:
            _fail('Mirror inner must lie on one side of the centre', t, center=str(t.center))
    if isinstance(t, EndpointSet) and not is_interval_union(t.of):
        _fail('EndpointSet requires a separated union of closed intervals / thickenings', t, of=t.of.kind)
    if isinstance(t, GapLadders) and not is_totally_disconnected(t.of):
        _fail('GapLadders requires a compact totally disconnected scaffold', t, of=t.of.kind)
    return t


#################
# Canonical form
#################

def sort_key(t: PtSetTerm):
    b = bounds(t)
    lo, hi = b if b is not None else (Fraction(0), Fraction(0))
    return lo, hi, _KIND_ORDER[t.kind], repr(t)


def _merge_intervals(parts: List[PtSetTerm]) -> List[PtSetTerm]:
    ivs = sorted((p for p in parts if isinstance(p, Interval)), key=lambda p: (p.a, p.b))
    rest = [p for p in parts if not isinstance(p, Interval)]
    merged = []
    for iv in ivs:
        if merged and iv.a <= merged[-1].b:
            last = merged[-1]
            merged[-1] = Interval(last.a, max(last.b, iv.b))
        else:
            merged.append(iv)
    return rest + merged


@lru_cache(maxsize=8192)
def canonical(t: PtSetTerm) -> PtSetTerm:
    """
    Bring ``t`` into canonical form: flattened and sorted Unions without Empty parts or duplicates, overlapping
    Intervals merged, nested Affine maps composed and folded into Points / Intervals, and empty wrappers
    collapsed. ``canonical(canonical(t)) == canonical(t)``.
    """
    if isinstance(t, Union):
        flat = []
        for p in t.parts:
            p = canonical(p)
            if isinstance(p, Union):
                flat.extend(p.parts)
            elif not isinstance(p, Empty):
                flat.append(p)
        flat = _merge_intervals(list(dict.fromkeys(flat)))
        flat.sort(key=sort_key)
        if not flat:
            return EMPTY
        return flat[0] if len(flat) == 1 else Union(flat)
    if isinstance(t, Affine):
        return _affine(t.scale, t.shift, canonical(t.inner))
    if isinstance(t, FWrap):
        inner = canonical(t.inner)
        if isinstance(inner, Empty):
            return Point(1) if t.include_top else EMPTY
        return FWrap(inner, t.include_top)
    if isinstance(t, (Mirror, Thicken)):
        inner = canonical(t.inner)
        if isinstance(inner, Empty):
            return EMPTY
        return attr.evolve(t, inner=inner)
    if isinstance(t, (EndpointSet, GapLadders)):
        of = canonical(t.of)
        return EMPTY if isinstance(of, Empty) else attr.evolve(t, of=of)
    return t


def _affine(scale: Fraction, shift: Fraction, inner: PtSetTerm) -> PtSetTerm:
    while isinstance(inner, Affine):
        scale, shift, inner = scale * inner.scale, scale * inner.shift + shift, inner.inner
    if scale == 1 and shift == 0:
        return inner
    if isinstance(inner, Empty):
        return EMPTY
    if isinstance(inner, Point):
        return Point(scale * inner.a + shift)
    if isinstance(inner, (Interval, OpenInterval)):
        x, y = scale * inner.a + shift, scale * inner.b + shift
        return inner.__class__(min(x, y), max(x, y))
    return Affine(scale, shift, inner)


def affine(scale, shift, inner: PtSetTerm) -> PtSetTerm:
    """Canonical ``Affine(scale, shift, inner)``"""
    return _affine(rat(scale), rat(shift), canonical(inner))


def union(*parts: PtSetTerm) -> PtSetTerm:
    """Canonical union of ``parts``"""
    return canonical(Union(parts))
