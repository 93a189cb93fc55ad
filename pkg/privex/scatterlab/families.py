"""
Constructors for the catalog families, at finite desk scale.

Every constructor validates its parameters against the ranges in :mod:`privex.scatterlab.settings` and returns
a canonical term (or a cube / frame value), so identical parameters always give structurally identical output.
:func:`.build_family` dispatches a :class:`.FamilySpec` to the matching constructor.

Blocks living in ``[5n, 5n + 5]`` are compressed into the window ``W_n = [1 - 2^(1-n), 1 - 2^(-n)]`` by
:func:`.place`, the same window map :class:`.FWrap` uses.

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
import itertools
import logging
from fractions import Fraction
from typing import Iterable, List, Tuple, Union as TUnion

from privex.helpers import empty, is_true

from privex.scatterlab import settings
from privex.scatterlab.cubes import Box, BoxUnion, FrameRegion, LiftedFamily
from privex.scatterlab.derive import closure
from privex.scatterlab.exceptions import RangeError, NotTotallyDisconnected, NotSupported
from privex.scatterlab.linear import components_upto
from privex.scatterlab.objects import FamilySpec
from privex.scatterlab.ordertype import OMEGA_OMEGA, component_order_type
from privex.scatterlab.rational import rat, pow2, window_start
from privex.scatterlab.terms import (
    PtSetTerm, Empty, Point, Interval, OpenInterval, Ladder, IntervalLadder, Cantor, FWrap, Affine, Union, Thicken,
    Mirror, GapLadders, affine, union, canonical, validate, is_totally_disconnected, bounds
)

log = logging.getLogger(__name__)

FAMILIES = (
    'kn', 'xs', 'xs_tilde', 'xs_cubes', 'frames_zs', 'ys_prop3', 'ug', 'ug_closure', 'ys_closure', 'ys_td',
    'discrete', 'as_primes', 'xu',
)

BASE_LADDER = Ladder(1, 1, Fraction(1, 2), True)
"""``A_1``: the points ``1 - 2^-k`` (``k >= 0``) together with ``1``"""


def _check_range(name: str, value: int, allowed: Iterable[int]):
    allowed = list(allowed)
    if value not in allowed:
        raise RangeError(f'{name}={value} outside {allowed[0]}..{allowed[-1]}', details={name: value})


def _check_set(name: str, values: Iterable[int], allowed: Iterable[int], nonempty: bool = True) -> List[int]:
    values = sorted(set(int(v) for v in values))
    if nonempty and not values:
        raise RangeError(f'{name} must be nonempty')
    for v in values:
        _check_range(name, v, allowed)
    return values


def parse_set(value) -> List[int]:
    """``'1,3'`` / ``'1..4'`` / ``[1, 3]`` into a sorted list of ints"""
    if isinstance(value, str):
        value = value.strip()
        if empty(value):
            return []
        if '..' in value:
            a, b = value.split('..', 1)
            return list(range(int(a), int(b) + 1))
        return sorted(set(int(v) for v in value.split(',') if v.strip()))
    return sorted(set(int(v) for v in value))


def parse_bits(value) -> List[int]:
    """``'101'`` or ``[1, 0, 1]`` into a list of 0 / 1 ints"""
    bits = [int(c) for c in value.strip()] if isinstance(value, str) else [int(b) for b in value]
    if any(b not in (0, 1) for b in bits):
        raise RangeError(f'bits must be 0 or 1: {value!r}', details=dict(bits=str(value)))
    return bits


def place(t: PtSetTerm, n: int) -> PtSetTerm:
    """Map the block ``[5n, 5n + 5]`` affinely onto the window ``W_n``"""
    scale = pow2(-n) / 5
    return affine(scale, window_start(n) - 5 * n * scale, t)


#######
# K_n
#######

def build_Kn(n: int) -> PtSetTerm:
    """
    ``K_n``: the ``n``-fold FWrap tower over :data:`.BASE_LADDER`, shifted to ``[5n, 5n + 1]``. Its order
    type is ``w^n+1`` and its ``n``-th derivative is the single point ``5n + 1``.
    """
    _check_range('n', n, settings.KN_RANGE)
    t = BASE_LADDER
    for _ in range(n - 1):
        t = FWrap(t, True)
    return affine(1, 5 * n, t)


#######
# X_S
#######

def block_XS(n: int, cap=settings.DEFAULT_CAP) -> PtSetTerm:
    """``K_n`` thickened and mirrored about ``5n + 2``; the glued component is ``[5n + 1, 5n + 3]``"""
    return canonical(Mirror(5 * n + 2, Thicken(build_Kn(n), cap)))


def build_XS(S: Iterable[int]) -> PtSetTerm:
    """
    ``X_S``: compressed two-sided blocks for ``n`` in ``S`` plus the top interval ``[1, 2]``.

        >>> sorted(recover_S_linear(build_XS({2, 3})))
        [2, 3]

    """
    S = _check_set('S', S, settings.XS_RANGE)
    return union(*[place(block_XS(n), n) for n in S], Interval(1, 2))


def build_XS_tilde(S: Iterable[int]) -> PtSetTerm:
    """
    One-sided variant of ``X_S``: the thickened ``K_n`` blocks are not mirrored, so no component is approached
    from both sides. Members with equal ``max(S)`` have order isomorphic component families.
    """
    S = _check_set('S', S, settings.XS_RANGE)
    blocks = [place(Thicken(build_Kn(n), settings.DEFAULT_CAP), n) for n in S]
    return union(*blocks, Interval(1, 2))


def xs_tilde_limit_type(S: Iterable[int] = None):
    """
    Order type of the component family of the one-sided lift: ``w^w`` for the full index set (``S=None``), the
    exact CNF of the finite member otherwise.
    """
    if S is None:
        return OMEGA_OMEGA
    return component_order_type(build_XS_tilde(S))


def lift_cubes(t: PtSetTerm, n: int, depth: int = settings.RECOVERY_DEPTH) -> LiftedFamily:
    """Replace every linear component ``[a, b]`` (resolved at ``depth``) by the cube ``[a, b]^n``"""
    _check_range('dimension', n, settings.DIMENSIONS)
    comps = [c for c in components_upto(t, depth).components if c.kind == 'interval']
    return LiftedFamily(linear=canonical(t), dimension=n, components=comps)


def build_XS_cubes(S: Iterable[int], n: int, depth: int = settings.RECOVERY_DEPTH) -> LiftedFamily:
    return lift_cubes(build_XS(S), n, depth)


#########
# Frames
#########

def frame_scale(m: int) -> int:
    """``t_m = 4^m (2m + 1)``, which makes every corner of frame ``m`` an integer"""
    return 4 ** m * (2 * m + 1)


def frame_region(m: int) -> FrameRegion:
    """
    ``D_m`` minus the open interiors of the ``m`` diagonal squares of ``W_m``. The holes are the cells
    ``1, 3, ..., 2m - 1`` on the diagonal of the ``(2m + 1)``-grid over ``D_m``.
    """
    if m < 0:
        raise RangeError('frame index must be >= 0', details=dict(m=m))
    side = pow2(-m)
    cell = side / (2 * m + 1)
    holes = [Box((side + (2 * k - 1) * cell,) * 2, cell, open=True) for k in range(1, m + 1)]
    return FrameRegion(outer=Box((side, side), side), holes=holes, m=m)


def build_frames(S: Iterable[int], integer_scaled: bool = False) -> Tuple[List[FrameRegion], Box]:
    """
    Frames for ``m`` in ``S`` (positive even, at most 20) plus the base square ``[-1, 0]^2``. When
    ``integer_scaled`` is true each frame is scaled by :func:`.frame_scale`; the base square already has integer
    corners and is returned unscaled.
    """
    S = _check_set('S', S, settings.FRAME_RANGE)
    frames = [frame_region(m) for m in S]
    if is_true(integer_scaled):
        frames = [f.scaled(frame_scale(f.m)) for f in frames]
    return frames, Box((-1, -1), 1)


def subcube_count(m: int, n: int = 2) -> int:
    """Number of cubes of edge ``l = 2^-m / (2m + 1)`` tiling ``(D_m - W_m) x I^(n-2)``"""
    return ((2 * m + 1) ** 2 - m) * (2 ** m * (2 * m + 1)) ** (n - 2)


def frame_subcubes(m: int, n: int = 2) -> BoxUnion:
    """Explicit tiling of ``(D_m - W_m) x I^(n-2)`` by cubes of edge ``2^-m / (2m + 1)``"""
    side = pow2(-m)
    cell = side / (2 * m + 1)
    holes = {(2 * k - 1, 2 * k - 1) for k in range(1, m + 1)}
    plane = [
        (side + i * cell, side + j * cell)
        for i in range(2 * m + 1) for j in range(2 * m + 1) if (i, j) not in holes
    ]
    extra = [tuple(k * cell for k in ks) for ks in itertools.product(range(2 ** m * (2 * m + 1)), repeat=n - 2)]
    return BoxUnion([Box(p + e, cell) for p in plane for e in extra], dimension=n)


###################
# Open cube chains
###################

def build_YS_prop3(S: Iterable[int], n: int, depth: int = None) -> BoxUnion:
    """
    ``]-1, 0[^n`` plus one open cube ``]2^-2m, 2^(-2m+1)[^n`` per window ``m <= depth``; windows with ``m`` in
    ``S`` are cut by the grid hyperplanes into ``(m + 1)^n`` open cubes.
    """
    S = _check_set('S', S, settings.PROP3_RANGE, nonempty=False)
    _check_range('dimension', n, settings.DIMENSIONS)
    depth = (max(S, default=0) + 1) if depth is None else int(depth)
    _check_range('depth', depth, range(1, settings.MAX_PROP3_DEPTH + 1))
    boxes = [Box((-1,) * n, 1, open=True)]
    for m in range(1, depth + 1):
        lo, width = pow2(-2 * m), pow2(-2 * m)
        if m not in S:
            boxes.append(Box((lo,) * n, width, open=True))
            continue
        edge = width / (m + 1)
        for idx in itertools.product(range(m + 1), repeat=n):
            boxes.append(Box(tuple(lo + i * edge for i in idx), edge, open=True))
    return BoxUnion(boxes, dimension=n)


#######
# U_g
#######

def build_Zn(n: int) -> PtSetTerm:
    """Open intervals in ``]6n + 1, 6n + 2[`` accumulating at both ends"""
    inner = IntervalLadder(6 * n + 2, Fraction(1, 3), Fraction(1, 9), Fraction(2, 3), closed=False)
    return Mirror(6 * n + Fraction(3, 2), inner)


def build_Ug(bits) -> PtSetTerm:
    """
    ``U_g`` over the windows ``1..len(bits)``: ``]6n, 6n + 1[``, ``Z_n``, ``]6n + 2, 6n + 3[`` and, when the bit is
    set, ``]6n + 4, 6n + 5[``. Window ``len(bits) + 1`` contributes its leading interval and ``Z_n`` so the last
    bit is enclosed between two accumulation blocks.
    """
    bits = parse_bits(bits)
    if len(bits) > settings.MAX_BITS:
        raise RangeError(f'at most {settings.MAX_BITS} bits', details=dict(length=len(bits)))
    parts = []
    for n, b in enumerate(bits, start=1):
        parts += [OpenInterval(6 * n, 6 * n + 1), build_Zn(n), OpenInterval(6 * n + 2, 6 * n + 3)]
        if b:
            parts.append(OpenInterval(6 * n + 4, 6 * n + 5))
    last = len(bits) + 1
    parts += [OpenInterval(6 * last, 6 * last + 1), build_Zn(last)]
    return union(*parts)


def closure_Ug(bits) -> PtSetTerm:
    return closure(build_Ug(bits))


def representative_points(t: PtSetTerm, depth: int = None) -> PtSetTerm:
    """
    Discrete set of component midpoints of an open catalog term. Without ``depth`` the result is exact (ladders
    of midpoints); with ``depth`` it is the finite set of midpoints of the components resolved at ``depth``.
    """
    t = canonical(validate(t))
    if depth is not None:
        return union(*[Point(c.midpoint) for c in components_upto(t, depth)])
    return canonical(_midpoints(t))


def _midpoints(t: PtSetTerm) -> PtSetTerm:
    if isinstance(t, (Empty, Point, Ladder)):
        return t
    if isinstance(t, (Interval, OpenInterval)):
        return Point((t.a + t.b) / 2)
    if isinstance(t, IntervalLadder):
        return Ladder(t.target, t.offset0 * (1 - t.fill / 2), t.ratio, False)
    if isinstance(t, Union):
        return Union(tuple(_midpoints(p) for p in t.parts))
    if isinstance(t, Affine):
        return Affine(t.scale, t.shift, _midpoints(t.inner))
    if isinstance(t, Mirror):
        return Mirror(t.center, _midpoints(t.inner))
    raise NotSupported(f'representative_points is undefined for {t.kind}', details=dict(kind=t.kind))


#######
# Y_S
#######

def build_YS_td(S: Iterable[int]) -> PtSetTerm:
    """
    Totally disconnected ``Y_S``: per ``n`` in ``S`` the block ``K_n`` followed by a Cantor set on
    ``[5n + 1, 5n + 2]`` (they share the point ``5n + 1``), compressed into ``W_n``, then a tail of Cantor sets
    accumulating at the top point ``1``.
    """
    S = _check_set('S', S, settings.YS_TD_RANGE)
    blocks = [place(Union((build_Kn(n), affine(1, 5 * n + 1, Cantor(0, 1)))), n) for n in S]
    top = max(S)
    tail = affine(pow2(-top), 1 - pow2(-top), FWrap(Cantor(0, 1), True))
    return union(*blocks, tail)


def discrete_approximant(a: PtSetTerm) -> PtSetTerm:
    """
    A discrete set ``Z`` disjoint from ``a`` with ``Z' = a``: two dyadic ladders inside every complementary gap of
    the compact totally disconnected ``a``.

    :raises NotTotallyDisconnected: if ``a`` contains an interval or is empty
    """
    a = canonical(validate(a))
    if bounds(a) is None or not is_totally_disconnected(a):
        raise NotTotallyDisconnected(f'{a.kind} is not a nonempty compact totally disconnected set',
                                     details=dict(kind=a.kind))
    return GapLadders(a)


##########
# Primes
##########

def _is_prime(p: int) -> bool:
    return p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def prime_group(p: int, n: int) -> PtSetTerm:
    """``G[p; n]``: the ``p`` points ``p^n + 1 / (k p^n)``, ``k = 1..p``, inside ``]p^n, p^n + 1[``"""
    base = Fraction(p) ** n
    return union(*[Point(base + 1 / (k * base)) for k in range(1, p + 1)])


def build_AS(S: Iterable[int], N: int) -> PtSetTerm:
    """Union of the prime clusters ``G[p; n]`` for ``p`` in ``S`` and ``n = 1..N``"""
    S = sorted(set(int(p) for p in S))
    for p in S:
        if not _is_prime(p):
            raise RangeError(f'{p} is not prime', details=dict(p=p))
    S = _check_set('S', S, settings.PRIMES)
    _check_range('N', N, range(1, settings.MAX_AS_WINDOWS + 1))
    return union(*[prime_group(p, n) for p in S for n in range(1, N + 1)])


#######
# X_u
#######

def build_Xu(u, N: int, open_variant: bool = False) -> PtSetTerm:
    """
    ``N`` intervals of widths ``u, u^2, ..., u^N`` starting at ``1``, separated by gaps of exactly ``1``.
    ``open_variant`` gives their interiors.
    """
    u = rat(u)
    if u < 2:
        raise RangeError('u must be >= 2', details=dict(u=str(u)))
    _check_range('N', N, range(1, settings.MAX_XU_PREFIX + 1))
    cls = OpenInterval if open_variant else Interval
    parts, a = [], Fraction(1)
    for n in range(1, N + 1):
        b = a + u ** n
        parts.append(cls(a, b))
        a = b + 1
    return union(*parts)


###############
# Dispatching
###############

def build_family(spec: TUnion[FamilySpec, dict]):
    """
    Build the catalog member described by ``spec``.

        >>> build_family(dict(family='kn', params=dict(n=2)))
        Affine(scale=Fraction(1, 1), shift=Fraction(10, 1), inner=FWrap(...))

    :raises RangeError: for unknown families or out of range parameters
    """
    spec = FamilySpec.from_dict(spec)
    p, fam = spec.params, spec.family
    if fam not in FAMILIES:
        raise RangeError(f'Unknown family: {fam!r}', details=dict(family=fam))
    log.debug('building %s with %s', fam, dict(p))
    if fam == 'kn':
        return build_Kn(int(p.n))
    if fam == 'xs':
        return build_XS(parse_set(p.S))
    if fam == 'xs_tilde':
        return build_XS_tilde(parse_set(p.S))
    if fam == 'xs_cubes':
        return build_XS_cubes(parse_set(p.S), int(p.get('dimension', 2)))
    if fam == 'frames_zs':
        return build_frames(parse_set(p.S), p.get('integer_scaled', False))
    if fam == 'ys_prop3':
        return build_YS_prop3(parse_set(p.get('S', [])), int(p.get('dimension', 2)), p.get('depth'))
    if fam == 'ug':
        return build_Ug(p.bits)
    if fam in ('ug_closure', 'ys_closure'):
        return closure_Ug(p.bits)
    if fam == 'ys_td':
        return build_YS_td(parse_set(p.S))
    if fam == 'discrete':
        return discrete_approximant(build_YS_td(parse_set(p.S)))
    if fam == 'as_primes':
        return build_AS(parse_set(p.S), int(p.get('N', 6)))
    return build_Xu(p.get('u', 2), int(p.get('N', 4)), is_true(p.get('open', False)))
