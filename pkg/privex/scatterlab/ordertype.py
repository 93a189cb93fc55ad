"""
Ordinals below ``w^w`` in Cantor normal form, order types of compact well-ordered terms, and the ``z``-sum
fragment of linear order types describing the component order of ``U_g``.

Text rendering is stable (used for golden tests)::

    >>> str(OrdCNF.omega(2) + OrdCNF.omega(1) + OrdCNF.finite(5))
    'w^2+w+5'
    >>> str(ug_order_type([1, 0]))
    '1+z+3+z+2+...'

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
from functools import total_ordering
from typing import Tuple, List, Sequence, Union as TUnion

import attr

from privex.scatterlab.exceptions import NotWellOrdered, NotSupported, RangeError
from privex.scatterlab.terms import (
    PtSetTerm, Empty, Point, Ladder, FWrap, Affine, Union, Interval, Thicken, canonical, validate, sort_key,
    _separated
)

log = logging.getLogger(__name__)

__all__ = [
    'OrdCNF', 'OmegaOmega', 'OMEGA_OMEGA', 'ord_arith', 'scattered_order_type', 'component_order_type',
    'LinType', 'Fin', 'Zeta', 'Sum', 'OmegaSeq', 'lin_canonical', 'ug_order_type',
]


def _cnf_terms(terms) -> Tuple[Tuple[int, int], ...]:
    out = tuple((int(e), int(c)) for e, c in terms)
    for e, c in out:
        if e < 0 or c < 1:
            raise RangeError(f'Invalid CNF term w^{e}*{c}')
    if any(a[0] <= b[0] for a, b in zip(out, out[1:])):
        raise RangeError('CNF exponents must be strictly decreasing')
    return out


@total_ordering
@attr.s(frozen=True, eq=True, order=False)
class OrdCNF:
    """An ordinal ``w^e1*c1 + w^e2*c2 + ...`` with ``e1 > e2 > ...``. The empty list is zero."""
    terms = attr.ib(type=tuple, converter=_cnf_terms, factory=tuple)

    @classmethod
    def finite(cls, n: int) -> 'OrdCNF':
        return cls(((0, n),)) if n else cls()

    @classmethod
    def omega(cls, e: int = 1, c: int = 1) -> 'OrdCNF':
        return cls(((e, c),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: 'OrdCNF') -> 'OrdCNF':
        if not isinstance(other, OrdCNF):
            return NotImplemented
        if other.is_zero:
            return self
        e, c = other.terms[0]
        head = [t for t in self.terms if t[0] > e]
        same = [t for t in self.terms if t[0] == e]
        if same:
            c += same[0][1]
        return OrdCNF(tuple(head) + ((e, c),) + other.terms[1:])

    def mul_omega(self) -> 'OrdCNF':
        """``self * w``: a nonzero ordinal with leading exponent ``e`` becomes ``w^(e+1)``"""
        return self if self.is_zero else OrdCNF.omega(self.terms[0][0] + 1)

    def cmp(self, other: 'OrdCNF') -> int:
        if isinstance(other, OmegaOmega):
            return -1
        a, b = list(self.terms), list(other.terms)
        for x, y in zip(a, b):
            if x != y:
                return 1 if x > y else -1
        return (len(a) > len(b)) - (len(a) < len(b))

    def __lt__(self, other):
        if not isinstance(other, (OrdCNF, OmegaOmega)):
            return NotImplemented
        return self.cmp(other) < 0

    def __str__(self):
        if self.is_zero:
            return '0'
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
                continue
            base = 'w' if e == 1 else f'w^{e}'
            parts.append(base if c == 1 else f'{base}·{c}')
        return '+'.join(parts)


class OmegaOmega:
    """
    Display-only sentinel for ``w^w``, the order type of the component family of the one-sided lift over an
    infinite index set. It compares above every :class:`.OrdCNF` and supports no arithmetic.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __str__(self):
        return 'w^w'

    def __repr__(self):
        return 'OMEGA_OMEGA'

    def __gt__(self, other):
        return isinstance(other, OrdCNF)

    def __lt__(self, other):
        return False

    def __add__(self, other):
        raise NotSupported('w^w is a display sentinel and supports no arithmetic')

    __radd__ = __add__


OMEGA_OMEGA = OmegaOmega()


def ord_arith(op: str, a: OrdCNF, b: OrdCNF = None):
    """
    ``add`` (left absorbing CNF addition), ``mul_omega`` (unary) or ``cmp`` (returns ``-1``, ``0`` or ``1``).

        >>> str(ord_arith('add', OrdCNF.omega(1), OrdCNF.omega(2)))
        'w^2'

    """
    if op == 'add':
        return a + b
    if op == 'mul_omega':
        return a.mul_omega()
    if op == 'cmp':
        return a.cmp(b)
    raise RangeError(f'Unknown ordinal operation: {op!r}')


def scattered_order_type(t: PtSetTerm) -> OrdCNF:
    """
    Order type of a compact well-ordered term, e.g. ``w^n+1`` for ``K_n``.

    :raises NotWellOrdered: for descending pieces or shapes outside the well-ordered fragment
    """
    return _otype(canonical(validate(t)))


def _otype(t: PtSetTerm) -> OrdCNF:
    if isinstance(t, Empty):
        return OrdCNF()
    if isinstance(t, Point):
        return OrdCNF.finite(1)
    if isinstance(t, Ladder):
        if not t.include_target:
            raise NotWellOrdered('a ladder without its target is not compact')
        return OrdCNF.omega(1) + OrdCNF.finite(1)
    if isinstance(t, FWrap):
        if not t.include_top:
            raise NotWellOrdered('an FWrap without its top point is not compact')
        return _otype(t.inner).mul_omega() + OrdCNF.finite(1)
    if isinstance(t, Affine):
        if t.scale < 0:
            raise NotWellOrdered('order reversing map in a well-ordered term', details=dict(scale=str(t.scale)))
        return _otype(t.inner)
    if isinstance(t, Union):
        if not _separated(t.parts):
            raise NotWellOrdered('union parts overlap')
        total = OrdCNF()
        for p in sorted(t.parts, key=sort_key):
            total = total + _otype(p)
        return total
    raise NotWellOrdered(f'no order type rule for {t.kind}', details=dict(kind=t.kind))


def component_order_type(t: PtSetTerm) -> OrdCNF:
    """
    Order type of the component family of a union of thickened well-ordered blocks and closed intervals.
    Each ``[a, a + eps(a)]`` is one component, so a thickened block has the order type of its scaffold.
    """
    t = canonical(validate(t))
    if isinstance(t, Thicken):
        return _otype(t.inner)
    if isinstance(t, Interval):
        return OrdCNF.finite(1)
    if isinstance(t, Affine) and t.scale > 0:
        return component_order_type(t.inner)
    if isinstance(t, Union):
        total = OrdCNF()
        for p in sorted(t.parts, key=sort_key):
            total = total + component_order_type(p)
        return total
    raise NotWellOrdered(f'component order type is undefined for {t.kind}', details=dict(kind=t.kind))


###########
# LinType
###########

@attr.s(frozen=True)
class Fin:
    n = attr.ib(type=int, converter=int)

    def __str__(self):
        return str(self.n)


@attr.s(frozen=True)
class Zeta:
    """The order type of the integers"""

    def __str__(self):
        return 'z'


@attr.s(frozen=True)
class Sum:
    items = attr.ib(type=tuple, converter=tuple, factory=tuple)

    def __str__(self):
        return '+'.join(str(i) for i in self.items) if self.items else '0'


@attr.s(frozen=True)
class OmegaSeq:
    """An w-indexed concatenation of which only the finite ``prefix`` is known"""
    prefix = attr.ib(type=tuple, converter=tuple, factory=tuple)

    def __str__(self):
        return '+'.join([str(i) for i in self.prefix] + ['...'])

    def same_prefix_length(self, other: 'OmegaSeq') -> bool:
        return len(self.prefix) == len(other.prefix)


LinType = TUnion[Fin, Zeta, Sum, OmegaSeq]


def _flatten(items: Sequence) -> List:
    out = []
    for i in items:
        i = lin_canonical(i)
        for j in (i.items if isinstance(i, Sum) else (i,)):
            if isinstance(j, Fin) and j.n == 0:
                continue
            if isinstance(j, Fin) and out and isinstance(out[-1], Fin):
                out[-1] = Fin(out[-1].n + j.n)
            else:
                out.append(j)
    return out


def lin_canonical(t):
    """Flatten nested sums, merge adjacent finite blocks and drop empty ones"""
    if isinstance(t, Sum):
        items = _flatten(t.items)
        if not items:
            return Fin(0)
        return items[0] if len(items) == 1 else Sum(items)
    if isinstance(t, OmegaSeq):
        return OmegaSeq(_flatten(t.prefix))
    return t


def ug_order_type(bits: Sequence[int]) -> OmegaSeq:
    """
    Order type of the component family of ``U_g``: ``1 + z + (2 + g(1)) + z + (2 + g(2)) + ...``.

        >>> [str(i) for i in ug_order_type([1, 0]).prefix]
        ['1', 'z', '3', 'z', '2']

    """
    bits = [int(b) for b in bits]
    if not bits:
        raise RangeError('ug_order_type needs a nonempty bit list')
    prefix = [Fin(1)]
    for b in bits:
        if b not in (0, 1):
            raise RangeError(f'bits must be 0 or 1, got {b}')
        prefix += [Zeta(), Fin(2 + b)]
    return lin_canonical(OmegaSeq(prefix))
