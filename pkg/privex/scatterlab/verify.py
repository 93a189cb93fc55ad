"""
Independent checks for the catalog: a numeric limit point oracle for :func:`.derive`, the finite forms of the
two lemmas the linear results rest on, the width incompatibility index, prime cluster profiles, and the
distinguishability matrix driver.

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
import asyncio
import json
import logging
from fractions import Fraction
from typing import List, Tuple, Sequence, Iterable, Union as TUnion

from privex.helpers import DictObject
from privex.helpers.asyncx import run_sync

from privex.scatterlab import settings
from privex.scatterlab.cubes import BoxUnion, LiftedFamily, chain_sizes, frame_holes, recover_S_cubes
from privex.scatterlab.derive import derive, signature, compactification_signature
from privex.scatterlab.exceptions import ScatterLabException, NonInjective, RangeError, VerificationFailure
from privex.scatterlab.families import build_family, parse_bits
from privex.scatterlab.linear import recover_S_linear, bits_profile
from privex.scatterlab.objects import LemmaVerdict, OracleReport, DistinguishReport, FamilySpec
from privex.scatterlab.ordertype import scattered_order_type, ug_order_type
from privex.scatterlab.rational import rat, rat_str
from privex.scatterlab.setcore import enumerate_term, member, probe_points
from privex.scatterlab.terms import PtSetTerm, validate

log = logging.getLogger(__name__)

__all__ = [
    'numeric_limit_points', 'oracle_agreement', 'discreteness_certificate', 'lemma_checks', 'prop1_index',
    'cluster_profile', 'compute_invariant', 'invariant_of', 'render_value', 'distinguish_matrix', 'INVARIANTS',
]


##########
# Oracle
##########

def numeric_limit_points(t: PtSetTerm, depth: int, probes: Iterable[Fraction] = None) -> List[Tuple[Fraction, bool]]:
    """
    Brute force limit point detection. A probe ``x`` is detected at ``depth`` when it lies in a listed interval of
    the depth ``depth`` enumeration, or when its nearest other listed point is strictly closer than at
    ``depth - 1``.

        >>> dict(numeric_limit_points(Ladder(1, 1, '1/2', True), 6))[Fraction(1)]
        True

    """
    depth = int(depth)
    if depth < 2:
        raise RangeError('numeric_limit_points needs depth >= 2')
    t = validate(t)
    probes = probe_points(t, settings.PROBE_DEPTH) if probes is None else [rat(x) for x in probes]
    cur, prev = enumerate_term(t, depth), enumerate_term(t, depth - 1)
    out = []
    for x in probes:
        if cur.covers(x):
            out.append((x, True))
            continue
        d, d_prev = cur.nearest_distance(x), prev.nearest_distance(x)
        out.append((x, d is not None and d_prev is not None and d < d_prev))
    return out


def oracle_agreement(t: PtSetTerm, label: str = None, depths: Sequence[int] = settings.ORACLE_DEPTHS) -> OracleReport:
    """
    Compare :func:`.numeric_limit_points` against ``member(derive(t), x)`` on every probe over ``depths``. The
    stabilization depth is the first depth from which every later depth agrees on every probe; disagreements
    after the first fully agreeing depth are recorded.
    """
    t = validate(t)
    probes = probe_points(t, settings.PROBE_DEPTH)
    limits = derive(t)
    expected = {x: member(limits, x) for x in probes}
    report = OracleReport(label=label or t.kind, probes=probes)
    rows = {d: dict(numeric_limit_points(t, d, probes)) for d in depths}
    agree = {d: all(rows[d][x] == expected[x] for x in probes) for d in depths}
    for d in depths:
        if all(agree[e] for e in depths if e >= d):
            report.stabilization_depth = d
            break
    first = next((d for d in depths if agree[d]), None)
    if first is not None:
        for d in depths:
            if d <= first:
                continue
            report.disagreements += [(d, x, rows[d][x], expected[x]) for x in probes if rows[d][x] != expected[x]]
    log.debug('oracle %s: stabilized at %s with %d disagreements', report.label, report.stabilization_depth,
              len(report.disagreements))
    return report


def discreteness_certificate(z: PtSetTerm, depth: int = settings.DEPTH_DEFAULT) -> List[Tuple[Fraction, Fraction]]:
    """
    Separation radii for the points of ``z`` listed at ``depth``: half the distance to the nearest other point
    listed one level deeper, which contains the true neighbours of every depth ``depth`` point.

    :raises VerificationFailure: if some listed point has no positive radius
    """
    listed = enumerate_term(z, depth)
    deeper = enumerate_term(z, depth + 1)
    if listed.intervals:
        raise VerificationFailure('a discrete set cannot contain intervals', details=dict(kind=z.kind))
    out = []
    for x in listed.points:
        d = deeper.nearest_distance(x)
        if d is None or d <= 0:
            raise VerificationFailure(f'point {rat_str(x)} is not isolated', details=dict(point=rat_str(x)))
        out.append((x, d / 2))
    return out


##########
# Lemmas
##########

def _lemma1(payload: Sequence[int]) -> LemmaVerdict:
    g = [int(v) for v in payload]
    if any(v < 1 for v in g):
        raise RangeError('injection values must be positive integers')
    if len(set(g)) != len(g):
        dupe = next(v for v in g if g.count(v) > 1)
        raise NonInjective(f'value {dupe} is hit twice', details=dict(value=dupe))
    result = [n for n, v in enumerate(g, start=1) if n <= v]
    # the position of the largest value always qualifies: g(n) >= M >= n
    top = max(range(len(g)), key=lambda i: g[i]) + 1 if g else None
    return LemmaVerdict(
        kind='lemma1', accepted=bool(result), result=result, witness=dict(n=top, g=g[top - 1] if top else None)
    )


def _lemma2(payload: dict) -> LemmaVerdict:
    payload = DictObject(payload)
    a, b = (rat(x) for x in payload.interval)
    family = sorted((rat(x), rat(y)) for x, y in payload.family)
    verdict = LemmaVerdict(kind='lemma2', accepted=False, result=[[rat_str(x), rat_str(y)] for x, y in family])
    if family == [(a, b)]:
        verdict.accepted = True
        return verdict
    verdict.witness = DictObject(_lemma2_witness(a, b, family))
    return verdict


def _lemma2_witness(a: Fraction, b: Fraction, family: List[Tuple[Fraction, Fraction]]) -> dict:
    for x, y in family:
        if x >= y:
            return dict(degenerate=[rat_str(x), rat_str(y)])
        if x < a or y > b:
            return dict(outside=[rat_str(x), rat_str(y)])
    if not family or family[0][0] > a:
        return dict(gap=[rat_str(a), rat_str(family[0][0] if family else b)])
    if len(family) == 1:
        return dict(gap=[rat_str(family[0][1]), rat_str(b)])
    # two disjoint closed pieces can't cover a connected interval
    (_, y1), (x2, y2) = family[0], family[1]
    if x2 == y1:
        return dict(shared=rat_str(x2))
    if x2 < y1:
        return dict(overlap=[rat_str(x2), rat_str(min(y1, y2))])
    return dict(gap=[rat_str(y1), rat_str(x2)])


def lemma_checks(kind: str, payload) -> LemmaVerdict:
    """
    ``lemma1``: for an injection ``g(1..M)`` given as a list, the set of ``n`` with ``n <= g(n)`` (never empty).

    ``lemma2``: ``payload = {'interval': [a, b], 'family': [[x, y], ...]}``. Only the trivial cover ``{[a, b]}`` is
    accepted; any other family is rejected with a degenerate / outside / shared / overlap / gap witness.

        >>> lemma_checks('lemma1', [5, 4, 3, 2, 1]).result
        [1, 2, 3]

    """
    if kind == 'lemma1':
        return _lemma1(payload)
    if kind == 'lemma2':
        return _lemma2(payload)
    raise RangeError(f'Unknown lemma: {kind!r}', details=dict(kind=kind))


def prop1_index(v, w, delta) -> int:
    """
    Least ``n >= 1`` with ``w^n - 1 > v^n / delta``.

        >>> prop1_index(2, 3, '1/10')
        6

    """
    v, w, delta = rat(v), rat(w), rat(delta)
    if v < 2 or w <= v:
        raise RangeError('prop1_index needs 2 <= v < w', details=dict(v=rat_str(v), w=rat_str(w)))
    if not 0 < delta <= 1:
        raise RangeError('delta must lie in (0, 1]', details=dict(delta=rat_str(delta)))
    n = 1
    while not w ** n - 1 > v ** n / delta:
        n += 1
    return n


###########
# Clusters
###########

def cluster_profile(t: PtSetTerm, delta) -> List[int]:
    """
    Group the points of a prime cluster term into runs whose consecutive gaps are below ``delta``, and return
    the sorted sizes of the runs lying in windows ``]m, m + 1[`` with ``1/m < delta``.

        >>> cluster_profile(build_AS({3}, 4), '1/10')
        [3, 3]

    """
    delta = rat(delta)
    if not 0 < delta < 1:
        raise RangeError('delta must lie in (0, 1)', details=dict(delta=rat_str(delta)))
    approx = enumerate_term(t, 1)
    if approx.intervals:
        raise RangeError('cluster_profile expects a finite point set')
    clusters: List[List[Fraction]] = []
    for x in approx.points:
        if clusters and x - clusters[-1][-1] < delta:
            clusters[-1].append(x)
        else:
            clusters.append([x])
    sizes = []
    for c in clusters:
        base = c[0].numerator // c[0].denominator
        if base > 0 and Fraction(1, base) < delta:
            sizes.append(len(c))
    return sorted(sizes)


#############
# Invariants
#############

INVARIANTS = (
    'signature', 'compactification_signature', 'recover_S_linear', 'recover_S_cubes', 'chain_sizes',
    'bits_profile', 'ug_order_type', 'cluster_profile', 'holes', 'order_type',
)


def compute_invariant(spec: TUnion[FamilySpec, dict], invariant: str, k_max: int = settings.K_MAX_DEFAULT,
                      delta=Fraction(1, 50), depth: int = settings.DEPTH_DEFAULT):
    """Build the member described by ``spec`` and evaluate ``invariant`` on it"""
    spec = FamilySpec.from_dict(spec)
    count = len(parse_bits(spec.params.bits)) if 'bits' in spec.params else None
    return invariant_of(build_family(spec), invariant, k_max=k_max, delta=delta, depth=depth, count=count)


def invariant_of(value, invariant: str, k_max: int = settings.K_MAX_DEFAULT, delta=Fraction(1, 50),
                 depth: int = settings.DEPTH_DEFAULT, count: int = None):
    """
    Evaluate ``invariant`` (one of :data:`.INVARIANTS`) on a built value. ``count`` is the number of windows
    read by ``bits_profile`` / ``ug_order_type``.
    """
    if invariant not in INVARIANTS:
        raise RangeError(f'Unknown invariant: {invariant!r}', details=dict(invariant=invariant))
    if invariant == 'signature':
        return signature(value, k_max)
    if invariant == 'compactification_signature':
        return compactification_signature(value, k_max)
    if invariant == 'recover_S_linear':
        return recover_S_linear(value, k_max)
    if invariant == 'recover_S_cubes':
        if not isinstance(value, LiftedFamily):
            raise RangeError('recover_S_cubes needs a cube lift (family xs_cubes)')
        return recover_S_cubes(value, k_max)
    if invariant == 'chain_sizes':
        if not isinstance(value, BoxUnion):
            raise RangeError('chain_sizes needs an open cube union (family ys_prop3)')
        return [(c.size, c.max_chain) for c in chain_sizes(value).components if c.size > 1]
    if invariant in ('bits_profile', 'ug_order_type'):
        if count is None:
            raise RangeError(f'{invariant} needs the number of windows to read')
        bits = bits_profile(value, count, depth)
        return bits if invariant == 'bits_profile' else str(ug_order_type(bits))
    if invariant == 'cluster_profile':
        return cluster_profile(value, delta)
    if invariant == 'holes':
        frames = value[0] if isinstance(value, tuple) else [value]
        return sorted(frame_holes(f).hole_count for f in frames)
    return str(scattered_order_type(value))


def render_value(value):
    """Canonical JSON-ready rendering: sets and multisets sorted, rationals as ``p/q`` strings"""
    if isinstance(value, (set, frozenset)):
        return sorted(render_value(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [render_value(v) for v in value]
    if isinstance(value, Fraction):
        return rat_str(value)
    return value


def _member_label(spec: FamilySpec) -> str:
    if spec.label:
        return spec.label
    return json.dumps({k: render_value(v) for k, v in spec.params.items()}, sort_keys=True, separators=(',', ':'))


async def _compute_async(spec: FamilySpec, invariant: str, **kwargs):
    loop = asyncio.get_event_loop()
    try:
        value = await loop.run_in_executor(None, lambda: compute_invariant(spec, invariant, **kwargs))
        return render_value(value)
    except ScatterLabException as e:
        log.warning('invariant %s failed for %s: %s', invariant, _member_label(spec), e)
        return None


async def _compute_all(specs: List[FamilySpec], invariant: str, **kwargs) -> list:
    return list(await asyncio.gather(*[_compute_async(s, invariant, **kwargs) for s in specs]))


def distinguish_matrix(family: str, members: Sequence[TUnion[FamilySpec, dict]], invariant: str,
                       **kwargs) -> DistinguishReport:
    """
    Evaluate ``invariant`` on every member (in parallel) and fill the pairwise verdict matrix. Members whose
    invariant raised get the value ``None`` and only ``unknown`` verdicts off the diagonal.

    ``members`` are :class:`.FamilySpec` instances, dicts, or plain parameter dicts for ``family``.

        >>> rep = distinguish_matrix('xs', [dict(S=[1]), dict(S=[2])], 'recover_S_linear')
        >>> rep.all_distinct
        True

    """
    specs = []
    for m in members:
        if isinstance(m, FamilySpec):
            specs.append(m)
        elif isinstance(m, dict) and 'family' in m:
            specs.append(FamilySpec.from_dict(m))
        else:
            specs.append(FamilySpec(family=family, params=m))
    values = run_sync(_compute_all, specs, invariant, **kwargs)
    report = DistinguishReport(family=family, labels=[_member_label(s) for s in specs], invariant=invariant,
                               values=values)
    keys = [None if v is None else json.dumps(v, sort_keys=True) for v in values]
    size = len(specs)
    report.matrix = [['equal' if i == j else 'unknown' for j in range(size)] for i in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            if keys[i] is None or keys[j] is None:
                continue
            verdict = 'equal' if keys[i] == keys[j] else 'distinct'
            report.matrix[i][j] = report.matrix[j][i] = verdict
            if verdict == 'distinct':
                report.witnesses[f'{i},{j}'] = dict(left=values[i], right=values[j])
    return report
