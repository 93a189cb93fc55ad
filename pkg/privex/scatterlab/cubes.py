"""
Exact geometry of finite unions of axis-aligned rational cubes: touch adjacency, components, chains of open
cubes, frames with square holes, and the component-family recovery of ``S`` for cube lifts of ``X_S``.

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
from typing import List, Tuple, FrozenSet, Optional

import attr
import networkx as nx

from privex.scatterlab import settings
from privex.scatterlab.derive import derive
from privex.scatterlab.exceptions import (
    DimensionMismatch, ChainIntractable, FrameValidationError, HorizonExceeded, TermValidationError
)
from privex.scatterlab.linear import boundary
from privex.scatterlab.objects import ChainComponent, ChainReport, FrameReport, Component
from privex.scatterlab.rational import rat
from privex.scatterlab.setcore import member, meets
from privex.scatterlab.terms import PtSetTerm, Interval

log = logging.getLogger(__name__)

__all__ = [
    'Box', 'BoxUnion', 'FrameRegion', 'LiftedFamily', 'touches', 'box_components', 'touch_graph', 'chain_sizes',
    'longest_path', 'grid_path', 'frame_holes', 'recover_S_cubes',
]


def _corner(values) -> Tuple[Fraction, ...]:
    return tuple(rat(v) for v in values)


@attr.s(frozen=True)
class Box:
    """The cube ``[c1, c1 + edge] x ... x [cn, cn + edge]``, or its interior when ``open`` is true"""
    corner = attr.ib(type=tuple, converter=_corner)
    edge = attr.ib(type=Fraction, converter=rat)
    open = attr.ib(type=bool, default=False, converter=bool)

    @edge.validator
    def _edge_check(self, attribute, value):
        if value <= 0:
            raise TermValidationError(f'Box edge must be positive, got {value}')

    @property
    def dimension(self) -> int:
        return len(self.corner)

    @property
    def upper(self) -> Tuple[Fraction, ...]:
        return tuple(c + self.edge for c in self.corner)

    def axis(self, i: int) -> Tuple[Fraction, Fraction]:
        return self.corner[i], self.corner[i] + self.edge

    @property
    def volume(self) -> Fraction:
        return self.edge ** self.dimension

    def scaled(self, factor) -> 'Box':
        factor = rat(factor)
        return Box(tuple(c * factor for c in self.corner), self.edge * factor, self.open)


def _check_dims(a: Box, b: Box):
    if a.dimension != b.dimension:
        raise DimensionMismatch(
            f'cannot compare a {a.dimension}-cube with a {b.dimension}-cube',
            details=dict(left=a.dimension, right=b.dimension)
        )


def touches(a: Box, b: Box) -> bool:
    """Closures intersect: on every axis the two intervals overlap or share an endpoint"""
    _check_dims(a, b)
    return all(max(a.corner[i], b.corner[i]) <= min(a.upper[i], b.upper[i]) for i in range(a.dimension))


def interiors_meet(a: Box, b: Box) -> bool:
    _check_dims(a, b)
    return all(max(a.corner[i], b.corner[i]) < min(a.upper[i], b.upper[i]) for i in range(a.dimension))


@attr.s
class BoxUnion:
    boxes = attr.ib(type=list, factory=list, converter=list)
    dimension = attr.ib(type=int, default=None)

    def __attrs_post_init__(self):
        if self.dimension is None:
            self.dimension = self.boxes[0].dimension if self.boxes else 1
        for b in self.boxes:
            if b.dimension != self.dimension:
                raise DimensionMismatch(
                    f'{b.dimension}-cube in a {self.dimension}-dimensional union',
                    details=dict(expected=self.dimension, found=b.dimension)
                )

    def __len__(self):
        return len(self.boxes)

    def __iter__(self):
        return iter(self.boxes)

    @property
    def volume(self) -> Fraction:
        return sum((b.volume for b in self.boxes), Fraction(0))


@attr.s
class FrameRegion:
    """A closed square (cube) with the open interiors of ``holes`` removed"""
    outer = attr.ib(type=Box)
    holes = attr.ib(type=list, factory=list, converter=list)
    m = attr.ib(type=Optional[int], default=None)

    def scaled(self, factor) -> 'FrameRegion':
        return FrameRegion(self.outer.scaled(factor), [h.scaled(factor) for h in self.holes], self.m)

    @property
    def corners(self) -> List[Fraction]:
        out = list(self.outer.corner) + list(self.outer.upper)
        for h in self.holes:
            out += list(h.corner) + list(h.upper)
        return out


#############
# Components
#############

def touch_graph(u: BoxUnion) -> nx.Graph:
    """Graph on box indices with an edge wherever two closures touch"""
    g = nx.Graph()
    g.add_nodes_from(range(len(u.boxes)))
    for i, j in itertools.combinations(range(len(u.boxes)), 2):
        if touches(u.boxes[i], u.boxes[j]):
            g.add_edge(i, j)
    return g


def box_components(u: BoxUnion) -> List[List[int]]:
    """
    Components of the union under "closures intersect", as sorted lists of box indices ordered by their least
    index.

        >>> box_components(BoxUnion([Box((0, 0), 1), Box((1, 1), 1), Box((5, 5), 1)]))
        [[0, 1], [2]]

    """
    comps = [sorted(c) for c in nx.connected_components(touch_graph(u))]
    return sorted(comps, key=lambda c: c[0])


#########
# Chains
#########

def longest_path(g: nx.Graph) -> List:
    """
    Longest simple path of a small connected graph, by depth first branch and bound. The search stops as soon
    as a Hamiltonian path is found.
    """
    nodes = sorted(g.nodes)
    total = len(nodes)
    best: List = nodes[:1]

    def dfs(path: list, seen: set):
        nonlocal best
        if len(path) > len(best):
            best = list(path)
        if len(best) == total:
            return True
        if len(path) + (total - len(seen)) <= len(best):
            return False
        for nxt in sorted(g.neighbors(path[-1])):
            if nxt in seen:
                continue
            seen.add(nxt)
            path.append(nxt)
            if dfs(path, seen):
                return True
            path.pop()
            seen.discard(nxt)
        return False

    for start in nodes:
        if dfs([start], {start}):
            break
    return best


def grid_path(boxes: List[Box], indices: List[int]) -> Optional[List[int]]:
    """
    If the boxes form a full lattice of equal cubes (``k1 x ... x kn`` cells, spacing = edge), return a
    boustrophedon path through all cells, otherwise ``None``.
    """
    sub = [boxes[i] for i in indices]
    edge = sub[0].edge
    if any(b.edge != edge for b in sub):
        return None
    dim = sub[0].dimension
    origin = tuple(min(b.corner[i] for b in sub) for i in range(dim))
    cells = {}
    for idx, b in zip(indices, sub):
        steps = tuple((b.corner[i] - origin[i]) / edge for i in range(dim))
        if any(s.denominator != 1 for s in steps):
            return None
        cells[tuple(int(s) for s in steps)] = idx
    shape = tuple(max(c[i] for c in cells) + 1 for i in range(dim))
    expected = 1
    for k in shape:
        expected *= k
    if len(cells) != expected or len(cells) != len(indices):
        return None
    return [cells[c] for c in _snake(shape)]


def _snake(shape: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Boustrophedon order of a lattice; consecutive cells differ by one step on one axis"""
    if len(shape) == 1:
        return [(i,) for i in range(shape[0])]
    inner = _snake(shape[1:])
    out = []
    for i in range(shape[0]):
        row = inner if i % 2 == 0 else list(reversed(inner))
        out += [(i,) + c for c in row]
    return out


def _valid_path(g: nx.Graph, path: List[int]) -> bool:
    return len(set(path)) == len(path) and all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def chain_sizes(u: BoxUnion) -> ChainReport:
    """
    Touch components of a union of pairwise disjoint open cubes, with the length of a longest chain (simple
    path in the touch graph) inside each.

    :raises ChainIntractable: for a large component which isn't a full grid
    """
    for a, b in itertools.combinations(u.boxes, 2):
        if interiors_meet(a, b):
            raise TermValidationError(f'open cubes {a} and {b} overlap')
    g = touch_graph(u)
    report = ChainReport()
    for comp in box_components(u):
        sub = g.subgraph(comp)
        if len(comp) <= settings.CHAIN_SEARCH_LIMIT:
            path, method = longest_path(sub), 'exact'
        else:
            path, method = grid_path(u.boxes, comp), 'grid'
            if path is None or not _valid_path(sub, path):
                raise ChainIntractable(
                    f'component of {len(comp)} cubes is neither small nor a full grid',
                    details=dict(size=len(comp), first=comp[0])
                )
        report.components.append(ChainComponent(indices=comp, max_chain=len(path), path=path, method=method))
    return report


#########
# Frames
#########

def _inside(inner: Box, outer: Box) -> bool:
    return all(
        outer.corner[i] < inner.corner[i] and inner.upper[i] < outer.upper[i] for i in range(outer.dimension)
    )


def frame_holes(f: FrameRegion) -> FrameReport:
    """
    Validate a frame and return its hole count, the rank standing in for its fundamental group.

    :raises FrameValidationError: naming the hole that leaves the interior, or the pair of touching holes
    """
    checks = []
    for i, h in enumerate(f.holes):
        _check_dims(h, f.outer)
        if not _inside(h, f.outer):
            raise FrameValidationError(
                f'hole {i} is not strictly inside the outer square', details=dict(hole=i)
            )
    checks.append('holes inside interior')
    for i, j in itertools.combinations(range(len(f.holes)), 2):
        if touches(f.holes[i], f.holes[j]):
            raise FrameValidationError(
                f'holes {i} and {j} have intersecting closures', details=dict(holes=[i, j])
            )
    checks.append('hole closures pairwise disjoint')
    return FrameReport(hole_count=len(f.holes), checks=checks, valid=True)


##################
# Cube recovery
##################

@attr.s
class LiftedFamily:
    """
    The cube lift of a linear interval union: each component ``[a, b]`` becomes ``[a, b]^n``, keeping its
    linear data alongside.
    """
    linear = attr.ib(type=PtSetTerm)
    dimension = attr.ib(type=int)
    components = attr.ib(type=List[Component], factory=list)

    @property
    def boxes(self) -> BoxUnion:
        return BoxUnion(
            [Box((c.lo,) * self.dimension, c.hi - c.lo) for c in self.components], dimension=self.dimension
        )

    def touching_set(self, index: int, acc: PtSetTerm) -> List[Tuple[Fraction, ...]]:
        """
        Points where the cube ``index`` meets the closure of the other cubes: the diagonal corners over those
        linear endpoints which are limits of the boundary.
        """
        c = self.components[index]
        return [(x,) * self.dimension for x in (c.lo, c.hi) if member(acc, x)]


def recover_S_cubes(family: LiftedFamily, k_max: int = settings.K_MAX_DEFAULT) -> FrozenSet[int]:
    """
    Recover ``S`` from the cube lift of ``X_S``: for every cube whose touching set has exactly two points, the
    least ``m >= 1`` for which it leaves the ``(m + 1)``-th family derivative. A cube lies in the ``k``-th family
    derivative iff its linear component meets the ``k``-th derivative of the linear boundary.

    :raises HorizonExceeded: if a two-sided cube survives ``k_max + 1`` family derivatives
    """
    b = boundary(family.linear)
    iterates = [b]
    for _ in range(k_max + 1):
        iterates.append(derive(iterates[-1]))
    acc = iterates[1]
    found = set()
    for i, c in enumerate(family.components):
        if len(set(family.touching_set(i, acc))) != 2:
            continue
        region = Interval(c.lo, c.hi)
        m = next((m for m in range(1, k_max + 1) if not meets(iterates[m + 1], region)), None)
        if m is None:
            raise HorizonExceeded('two-sided cube still in the family derivative at the horizon',
                                  details=dict(k_max=k_max, index=i))
        found.add(m)
    return frozenset(found)
