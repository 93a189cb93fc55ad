from bisect import bisect_left
from fractions import Fraction
from typing import List, Optional, Tuple

import attr
from privex.helpers import DictObject, empty

from privex.scatterlab.rational import rat
from privex.scatterlab.terms import PtSetTerm


def attr_dict(cls: type, data: dict):
    """
    Removes keys from the passed dict ``data`` which don't exist on ``cls`` (thus would get rejected as kwargs),
    then create and return an instance of ``cls``, passing the filtered data as keyword args.

    Example::

        >>> spec = attr_dict(FamilySpec, dict(family='xs', params={'S': [1, 2]}, comment='ignored'))

    """
    if hasattr(cls, '__attrs_attrs__'):
        cls_keys = [atr.name for atr in cls.__attrs_attrs__]
    else:
        cls_keys = [k for k in cls.__dict__.keys() if k[0] != '_']

    clean_data = {x: y for x, y in data.items() if x in cls_keys}
    return cls(**clean_data)


def _rat_list(values) -> List[Fraction]:
    return sorted(set(rat(v) for v in values))


def _interval_list(values) -> List[Tuple[Fraction, Fraction]]:
    return sorted(set((rat(a), rat(b)) for a, b in values))


@attr.s
class Approximation:
    """
    A finite, depth-bounded stand-in for a term: every listed point / interval lies in the denotation, and every
    point of the denotation lies within ``tolerance`` of something listed.
    """
    depth = attr.ib(type=int)
    points = attr.ib(type=List[Fraction], factory=list, converter=_rat_list)
    intervals = attr.ib(type=List[Tuple[Fraction, Fraction]], factory=list, converter=_interval_list)
    tolerance = attr.ib(type=Fraction, default=Fraction(1), converter=rat)

    def nearest_distance(self, x: Fraction) -> Optional[Fraction]:
        """Distance from ``x`` to the nearest listed point or interval other than ``x`` itself"""
        best = None
        i = bisect_left(self.points, x)
        for j in (i - 1, i, i + 1):
            if 0 <= j < len(self.points) and self.points[j] != x:
                d = abs(self.points[j] - x)
                best = d if best is None else min(best, d)
        for a, b in self.intervals:
            d = Fraction(0) if a <= x <= b else min(abs(a - x), abs(b - x))
            best = d if best is None else min(best, d)
        return best

    def covers(self, x: Fraction) -> bool:
        return any(a <= x <= b for a, b in self.intervals)


@attr.s
class CBProfile:
    iterates = attr.ib(type=List[PtSetTerm], factory=list)
    vanishing_index = attr.ib(type=Optional[int], default=None)
    """Least ``k`` with ``iterates[k]`` empty, or ``None`` (does not vanish / horizon reached)"""
    fixed_at = attr.ib(type=Optional[int], default=None)
    """Index of the first iterate which is a nonempty fixed point of the derivative"""
    horizon = attr.ib(type=int, default=0)

    @property
    def vanishes(self) -> bool:
        return self.vanishing_index is not None

    @property
    def does_not_vanish(self) -> bool:
        return self.fixed_at is not None


@attr.s
class Component:
    kind = attr.ib(type=str)
    """``point`` or ``interval``"""
    lo = attr.ib(type=Fraction, converter=rat)
    hi = attr.ib(type=Fraction, converter=rat)
    left_closed = attr.ib(type=bool, default=True)
    right_closed = attr.ib(type=bool, default=True)
    tag = attr.ib(type=Optional[str], default=None)

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_open(self) -> bool:
        return self.kind == 'interval' and not self.left_closed and not self.right_closed

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.left_closed:
            return False
        if x == self.hi and not self.right_closed:
            return False
        return True


@attr.s
class ComponentList:
    components = attr.ib(type=List[Component], factory=list)
    depth = attr.ib(type=int, default=1)
    complete_below = attr.ib(type=Optional[Fraction], default=None)
    """Every component with ``lo < complete_below`` is listed. ``None`` means the listing is complete."""

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, item):
        return self.components[item]

    def intervals(self) -> List[Tuple[Fraction, Fraction]]:
        return [(c.lo, c.hi) for c in self.components]


@attr.s
class FamilySpec:
    family = attr.ib(type=str)
    params = attr.ib(type=DictObject, factory=DictObject, converter=DictObject)
    label = attr.ib(type=str, default=None)

    @label.validator
    def _label_check(self, attribute, value):
        if not empty(value) and not isinstance(value, str):
            raise TypeError('FamilySpec label must be a string')

    @staticmethod
    def from_dict(data: dict):
        if isinstance(data, FamilySpec):
            return data
        return attr_dict(FamilySpec, data)


@attr.s
class ChainComponent:
    indices = attr.ib(type=List[int], factory=list)
    max_chain = attr.ib(type=int, default=1)
    path = attr.ib(type=List[int], factory=list)
    method = attr.ib(type=str, default='exact')
    """``exact`` (branch and bound search) or ``grid`` (boustrophedon witness)"""

    @property
    def size(self) -> int:
        return len(self.indices)


@attr.s
class ChainReport:
    components = attr.ib(type=List[ChainComponent], factory=list)

    @property
    def sizes(self) -> List[int]:
        return sorted(c.size for c in self.components)

    @property
    def max_chains(self) -> List[int]:
        return sorted(c.max_chain for c in self.components)


@attr.s
class FrameReport:
    hole_count = attr.ib(type=int)
    checks = attr.ib(type=List[str], factory=list)
    valid = attr.ib(type=bool, default=True)


@attr.s
class LemmaVerdict:
    kind = attr.ib(type=str)
    accepted = attr.ib(type=bool)
    result = attr.ib(default=None)
    witness = attr.ib(type=DictObject, factory=DictObject, converter=DictObject)


@attr.s
class OracleReport:
    label = attr.ib(type=str)
    probes = attr.ib(type=List[Fraction], factory=list)
    stabilization_depth = attr.ib(type=Optional[int], default=None)
    disagreements = attr.ib(type=list, factory=list)
    """``(depth, point, detected, expected)`` tuples at or after the stabilization depth"""

    @property
    def agrees(self) -> bool:
        return self.stabilization_depth is not None and not self.disagreements


@attr.s
class DistinguishReport:
    family = attr.ib(type=str)
    labels = attr.ib(type=List[str], factory=list)
    invariant = attr.ib(type=str, default=None)
    values = attr.ib(type=list, factory=list)
    """Canonically rendered invariant value per member (``None`` when the invariant errored)"""
    matrix = attr.ib(type=List[List[str]], factory=list)
    witnesses = attr.ib(type=DictObject, factory=DictObject, converter=DictObject)

    @property
    def all_distinct(self) -> bool:
        return all(
            self.matrix[i][j] == 'distinct'
            for i in range(len(self.labels)) for j in range(len(self.labels)) if i != j
        )


@attr.s
class StoredReport:
    id = attr.ib(type=int)
    kind = attr.ib(type=str)
    """``distinguish`` or ``invariant``"""
    family = attr.ib(type=Optional[str], default=None)
    invariant = attr.ib(type=Optional[str], default=None)
    digest = attr.ib(type=str, default=None)
    body = attr.ib(type=str, default=None)
    """Canonical JSON text of the report"""
    created_at = attr.ib(default=None)


@attr.s
class SelftestRun:
    id = attr.ib(type=int)
    digest = attr.ib(type=str)
    passed = attr.ib(type=bool, converter=bool, default=False)
    created_at = attr.ib(default=None)
