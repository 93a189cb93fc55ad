"""
Cantor-Bendixson machinery: the derivative rewrite, iterated profiles, the kernel / scattered split, the
signature of the scattered layers against the kernel, and closures.

All rewrites return canonical terms, so an iterate is empty exactly when it is :data:`.EMPTY`.

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
from typing import Tuple, FrozenSet

from privex.scatterlab import settings
from privex.scatterlab.exceptions import UnsupportedSplit, HorizonExceeded, NotSupported, RangeError
from privex.scatterlab.objects import CBProfile
from privex.scatterlab.setcore import member, touch_points
from privex.scatterlab.terms import (
    PtSetTerm, Empty, Point, Interval, OpenInterval, Ladder, IntervalLadder, Cantor, FWrap, Affine, Union, Thicken,
    Mirror, EndpointSet, GapLadders, EMPTY, bounds, canonical, validate
)

log = logging.getLogger(__name__)

__all__ = [
    'derive', 'derive_n', 'cb_profile', 'kernel_split', 'signature', 'close_components', 'closure',
    'compactification_signature',
]


def derive(t: PtSetTerm) -> PtSetTerm:
    """
    Return a canonical term denoting the set of limit points of ``t`` in the real line.

        >>> derive(Ladder(1, 1, '1/2', False))
        Point(a=Fraction(1, 1))

    """
    return canonical(_derive(canonical(validate(t))))


def _derive(t: PtSetTerm) -> PtSetTerm:
    if isinstance(t, (Empty, Point)):
        return EMPTY
    if isinstance(t, (Interval, Cantor, Thicken)):
        return t
    if isinstance(t, OpenInterval):
        return Interval(t.a, t.b)
    if isinstance(t, Ladder):
        return Point(t.target)
    if isinstance(t, IntervalLadder):
        closed = IntervalLadder(t.target, t.offset0, t.ratio, t.fill, True)
        return Union((closed, Point(t.target)))
    if isinstance(t, Union):
        return Union(tuple(_derive(p) for p in t.parts))
    if isinstance(t, Affine):
        return Affine(t.scale, t.shift, _derive(t.inner))
    if isinstance(t, Mirror):
        return Mirror(t.center, _derive(t.inner))
    if isinstance(t, FWrap):
        if isinstance(t.inner, Empty):
            return EMPTY
        return FWrap(canonical(_derive(t.inner)), True)
    if isinstance(t, EndpointSet):
        return _derive_endpoints(t.of)
    if isinstance(t, GapLadders):
        b = bounds(t.of)
        return EMPTY if b is None or b[0] == b[1] else t.of
    raise NotSupported(f'derive: unknown term {t!r}')


def _derive_endpoints(of: PtSetTerm) -> PtSetTerm:
    """Limit points of the endpoint set of an interval union"""
    if isinstance(of, Interval):
        return EMPTY
    if isinstance(of, Thicken):
        # a and a + eps(a) share their limit points, which are those of the scaffold
        return _derive(of.inner)
    if isinstance(of, Mirror):
        return Mirror(of.center, _derive_endpoints(of.inner))
    if isinstance(of, Affine):
        return Affine(of.scale, of.shift, _derive_endpoints(of.inner))
    if isinstance(of, Union):
        return Union(tuple(_derive_endpoints(p) for p in of.parts))
    if isinstance(of, FWrap):
        return FWrap(canonical(_derive_endpoints(of.inner)), True)
    raise NotSupported(f'derive: no endpoint rule for {of.kind}', details=dict(kind=of.kind))


def derive_n(t: PtSetTerm, k: int) -> PtSetTerm:
    """The ``k``-th derivative of ``t`` (``k = 0`` returns ``t`` canonicalized)"""
    t = canonical(validate(t))
    for _ in range(k):
        if isinstance(t, Empty):
            break
        t = derive(t)
    return t


def cb_profile(t: PtSetTerm, k_max: int = settings.K_MAX_DEFAULT) -> CBProfile:
    """
    Iterate :func:`.derive` on ``t`` until the iterate is empty, reaches a nonempty fixed point, or ``k_max``
    derivatives have been taken.

        >>> cb_profile(build_Kn(3), 10).vanishing_index
        4

    """
    if k_max < 1:
        raise RangeError('k_max must be >= 1')
    cur = canonical(validate(t))
    prof = CBProfile(iterates=[cur], horizon=k_max)
    for k in range(k_max + 1):
        if isinstance(cur, Empty):
            prof.vanishing_index = k
            break
        if k == k_max:
            break
        nxt = derive(cur)
        if nxt == cur:
            prof.fixed_at = k
            break
        prof.iterates.append(nxt)
        cur = nxt
    log.debug('cb_profile: %d iterates, vanishing=%s fixed=%s', len(prof.iterates), prof.vanishing_index,
              prof.fixed_at)
    return prof


#################
# Kernel / split
#################

def kernel_split(t: PtSetTerm) -> Tuple[PtSetTerm, PtSetTerm]:
    """
    Split ``t`` into its perfect kernel and the scattered remainder, structurally.

    For closed subsets of the line the kernel of a finite union is the union of the kernels: a perfect set
    can't have a nonempty countable relatively open part, so every kernel point of the union is a kernel point
    of some part. Point classes shared by both sides of the split (e.g. the maximum of a ``K_n`` block lying on a
    Cantor block) stay in both outputs; the derivative layers of the scattered part are unaffected.

        >>> kernel_split(Union([Cantor(0, 1), Point(2)]))
        (Cantor(a=Fraction(0, 1), b=Fraction(1, 1)), Point(a=Fraction(2, 1)))

    :raises UnsupportedSplit: for leaves outside the kernel / scattered classification
    """
    k, s = _split(canonical(validate(t)))
    return canonical(k), canonical(s)


def _split(t: PtSetTerm) -> Tuple[PtSetTerm, PtSetTerm]:
    if isinstance(t, Empty):
        return EMPTY, EMPTY
    if isinstance(t, (Interval, OpenInterval, Cantor, Thicken, IntervalLadder)):
        return t, EMPTY
    if isinstance(t, (Point, Ladder, EndpointSet, GapLadders)):
        return EMPTY, t
    if isinstance(t, Union):
        pairs = [_split(p) for p in t.parts]
        return Union(tuple(k for k, _ in pairs)), Union(tuple(s for _, s in pairs))
    if isinstance(t, Affine):
        k, s = _split(t.inner)
        return Affine(t.scale, t.shift, k), Affine(t.scale, t.shift, s)
    if isinstance(t, Mirror):
        k, s = _split(t.inner)
        return Mirror(t.center, k), Mirror(t.center, s)
    if isinstance(t, FWrap):
        k, s = (canonical(x) for x in _split(t.inner))
        has_kernel = not isinstance(k, Empty)
        return FWrap(k, t.include_top and has_kernel), FWrap(s, t.include_top and not has_kernel)
    raise UnsupportedSplit(f'No kernel classification for {t.kind}', details=dict(kind=t.kind))


def signature(t: PtSetTerm, k_max: int = settings.K_MAX_DEFAULT) -> FrozenSet[int]:
    """
    The set of ``k >= 1`` for which the ``k``-th derivative layer of the scattered part (points of
    ``P^(k)`` which are not in ``P^(k+1)``) meets the perfect kernel.

        >>> sorted(signature(build_YS_td({1, 3}), 6))
        [1, 3]

    :raises HorizonExceeded: if the scattered part does not vanish within ``k_max`` derivatives
    """
    kernel, scattered = kernel_split(t)
    if isinstance(kernel, Empty):
        return frozenset()
    prof = cb_profile(scattered, k_max)
    if not prof.vanishes:
        raise HorizonExceeded(
            'scattered part does not vanish within the derivative horizon', details=dict(k_max=k_max)
        )
    its = prof.iterates
    sig = set()
    for k in range(1, prof.vanishing_index):
        nxt = its[k + 1] if k + 1 < len(its) else EMPTY
        for x in touch_points(its[k], kernel):
            if not member(nxt, x):
                log.debug('signature: layer %d meets the kernel at %s', k, x)
                sig.add(k)
                break
    return frozenset(sig)


###########
# Closures
###########

def close_components(t: PtSetTerm) -> PtSetTerm:
    """Replace every open component piece by its closure (``]a, b[`` becomes ``[a, b]``)"""
    t = canonical(t)
    if isinstance(t, OpenInterval):
        return Interval(t.a, t.b)
    if isinstance(t, IntervalLadder):
        return IntervalLadder(t.target, t.offset0, t.ratio, t.fill, True)
    if isinstance(t, Union):
        return canonical(Union(tuple(close_components(p) for p in t.parts)))
    if isinstance(t, Affine):
        return canonical(Affine(t.scale, t.shift, close_components(t.inner)))
    if isinstance(t, Mirror):
        return Mirror(t.center, close_components(t.inner))
    if isinstance(t, FWrap):
        return FWrap(close_components(t.inner), t.include_top)
    return t


def closure(t: PtSetTerm) -> PtSetTerm:
    """
    Topological closure of ``t``: its components closed, together with its limit points.

        >>> closure(OpenInterval(0, 1))
        Interval(a=Fraction(0, 1), b=Fraction(1, 1))

    """
    return canonical(Union((close_components(t), derive(t))))


def compactification_signature(z: PtSetTerm, k_max: int = settings.K_MAX_DEFAULT) -> FrozenSet[int]:
    """
    Signature of the remainder of the closure compactification of a bounded discrete ``z``. The scattered part
    of the closure accumulates on all of ``z'``, so the signature is taken on the derived set of the closure.
    """
    return signature(derive(closure(z)), k_max)
