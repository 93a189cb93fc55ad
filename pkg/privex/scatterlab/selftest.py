"""
The acceptance suite as a callable: each criterion returns ``(passed, detail)`` and :func:`.run_selftest`
collects them into a report whose canonical JSON is byte stable between runs (no timings, fixed seeds).

``quick=True`` shrinks every parameter range so the suite runs in a few seconds.
"""
import itertools
import logging
import random
from fractions import Fraction
from typing import Callable, List, Tuple

from privex.helpers import DictObject

from privex.scatterlab import settings
from privex.scatterlab import codec
from privex.scatterlab.cubes import chain_sizes, frame_holes, recover_S_cubes
from privex.scatterlab.derive import cb_profile, derive, signature, compactification_signature
from privex.scatterlab.exceptions import ScatterLabException, RangeError
from privex.scatterlab.families import (
    build_Kn, build_XS, build_YS_td, build_YS_prop3, build_Ug, build_AS, build_frames, build_family, lift_cubes,
    frame_region, frame_subcubes, subcube_count, discrete_approximant
)
from privex.scatterlab.linear import recover_S_linear, bits_profile
from privex.scatterlab.ordertype import scattered_order_type, ug_order_type
from privex.scatterlab.setcore import enumerate_term, member, probe_points, probe_equal
from privex.scatterlab.terms import (
    Point, Interval, OpenInterval, Ladder, Cantor, FWrap, Affine, Union, Thicken, Mirror, GapLadders, affine
)
from privex.scatterlab.verify import (
    oracle_agreement, discreteness_certificate, prop1_index, cluster_profile, distinguish_matrix
)

log = logging.getLogger(__name__)

SEED = 1729


def subsets(values) -> List[List[int]]:
    """Every nonempty subset of ``values``, smallest first"""
    values = list(values)
    return [list(c) for r in range(1, len(values) + 1) for c in itertools.combinations(values, r)]


def oracle_corpus() -> List[Tuple[str, object]]:
    half = Fraction(1, 2)
    base = Ladder(1, 1, half, True)
    return [
        ('ladder', base),
        ('ladder-open', Ladder(1, 1, half, False)),
        ('ladder-thirds', Ladder(0, 1, Fraction(1, 3), True)),
        ('ladder-shifted', Ladder(3, 2, half, True)),
        ('k1', build_Kn(1)),
        ('k2', build_Kn(2)),
        ('fwrap', FWrap(base, True)),
        ('fwrap-open', FWrap(base, False)),
        ('fwrap-cantor', FWrap(Cantor(0, 1), True)),
        ('cantor', Cantor(0, 1)),
        ('cantor-affine', Affine(half, 1, Cantor(0, 1))),
        ('thicken-ladder', Thicken(base, Fraction(1, 4))),
        ('thicken-k1', Thicken(build_Kn(1), 1)),
        ('interval', Interval(0, 1)),
        ('open-interval', OpenInterval(0, 1)),
        ('two-points', Union((Point(0), Point(1)))),
        ('cantor-point', Union((Cantor(0, 1), Point(2)))),
        ('mirror-ladder', Mirror(1, base)),
        ('interval-ladder', Union((Interval(0, 1), Ladder(3, 1, half, True)))),
        ('gap-ladders', GapLadders(Union((Point(0), Point(1))))),
    ]


###############
# Criteria
###############

def check_signature(quick: bool):
    top = 3 if quick else max(settings.YS_TD_RANGE)
    bad = [S for S in subsets(range(1, top + 1)) if sorted(signature(build_YS_td(S))) != S]
    return not bad, dict(checked=len(subsets(range(1, top + 1))), failed=bad)


def check_linear(quick: bool):
    top = 3 if quick else max(settings.XS_RANGE)
    members = subsets(range(1, top + 1))
    bad = [S for S in members if sorted(recover_S_linear(build_XS(S))) != S]
    rep = distinguish_matrix('xs', [dict(S=S) for S in members], 'recover_S_linear')
    return not bad and rep.all_distinct, dict(checked=len(members), failed=bad, all_distinct=rep.all_distinct)


def check_cubes(quick: bool):
    bad = []
    for S in subsets([1, 2] if quick else [1, 2, 3]):
        linear = build_XS(S)
        for n in (2, 3):
            found = sorted(recover_S_cubes(lift_cubes(linear, n)))
            if found != S or found != sorted(recover_S_linear(linear)):
                bad.append(dict(S=S, n=n, found=found))
    return not bad, dict(failed=bad)


def check_kn(quick: bool):
    bad = []
    for n in range(1, (4 if quick else 7) + 1):
        t = build_Kn(n)
        prof = cb_profile(t, n + 2)
        otype = str(scattered_order_type(t))
        want = 'w+1' if n == 1 else f'w^{n}+1'
        if prof.vanishing_index != n + 1 or prof.iterates[n] != Point(5 * n + 1) or otype != want:
            bad.append(dict(n=n, vanishing=prof.vanishing_index, order_type=otype))
    return not bad, dict(failed=bad)


def check_chains(quick: bool):
    bad = []
    for S in [[]] + subsets([1, 2, 3]):
        for n in ((1, 2) if quick else (1, 2, 3)):
            comps = [c for c in chain_sizes(build_YS_prop3(S, n)).components if c.size > 1]
            want = sorted((s + 1) ** n for s in S)
            if sorted(c.size for c in comps) != want or sorted(c.max_chain for c in comps) != want:
                bad.append(dict(S=S, n=n))
    return not bad, dict(failed=bad)


def check_frames(quick: bool):
    bad = [m for m in range(1, 21) if frame_holes(frame_region(m)).hole_count != m]
    counts = [m for m in range(1, (3 if quick else 6) + 1) if len(frame_subcubes(m)) != subcube_count(m)]
    frames, base = build_frames(settings.FRAME_RANGE, integer_scaled=True)
    corners = [c for f in frames for c in f.corners] + list(base.corner) + list(base.upper)
    integral = all(c.denominator == 1 for c in corners)
    return not bad and not counts and integral, dict(holes=bad, counts=counts, integral=integral)


def check_oracle(quick: bool):
    corpus = oracle_corpus()[:8] if quick else oracle_corpus()
    bad = []
    for label, t in corpus:
        rep = oracle_agreement(t, label)
        if not rep.agrees:
            bad.append(dict(label=label, stabilization=rep.stabilization_depth, disagreements=len(rep.disagreements)))
    return not bad, dict(terms=len(corpus), failed=bad)


def _prop1_ok(v, w, delta, n) -> bool:
    return w ** n - 1 > v ** n / delta and (n == 1 or not w ** (n - 1) - 1 > v ** (n - 1) / delta)


def check_prop1(quick: bool):
    rnd = random.Random(SEED)
    ok = prop1_index(2, 3, Fraction(1, 10)) == 6 and _prop1_ok(2, 3, Fraction(1, 10), 6)
    bad = []
    for _ in range(10 if quick else 50):
        v = Fraction(rnd.randint(8, 19), 4)
        w = v + Fraction(rnd.randint(1, int((5 - v) * 4)), 4)
        delta = Fraction(1, rnd.randint(2, 20))
        n = prop1_index(v, w, delta)
        if not _prop1_ok(v, w, delta, n):
            bad.append(dict(v=str(v), w=str(w), delta=str(delta), n=n))
    return ok and not bad, dict(anchor=ok, failed=bad)


def check_bits(quick: bool):
    rnd = random.Random(SEED)
    samples = sorted({tuple(rnd.randint(0, 1) for _ in range(12)) for _ in range(20 if quick else 100)})
    bad = [list(g) for g in samples if bits_profile(build_Ug(list(g)), 12) != list(g)]
    types = {str(ug_order_type(list(g))) for g in samples}
    rep = distinguish_matrix('ug', [dict(bits=''.join(map(str, g))) for g in samples], 'bits_profile')
    passed = not bad and len(types) == len(samples) and rep.all_distinct
    return passed, dict(samples=len(samples), failed=bad, all_distinct=rep.all_distinct)


def _approximant_ok(a) -> bool:
    z = discrete_approximant(a)
    listed = enumerate_term(z, 4).points
    disjoint = not any(member(a, x) for x in listed) and not any(member(z, x) for x in probe_points(a, 4))
    discreteness_certificate(z, 4)
    return disjoint and probe_equal(derive(z), a)


def check_approximants(quick: bool):
    scaffolds = [Union((Point(0), Point(1))), affine(1, -10, build_Kn(2)), Cantor(0, 1)]
    bad = [i for i, a in enumerate(scaffolds) if not _approximant_ok(a)]
    sig_bad = []
    for S in subsets(range(1, (2 if quick else 4) + 1)):
        if sorted(compactification_signature(discrete_approximant(build_YS_td(S)))) != S:
            sig_bad.append(S)
    return not bad and not sig_bad, dict(failed_scaffolds=bad, failed_signatures=sig_bad)


def check_clusters(quick: bool):
    profiles, bad = {}, []
    for S in subsets([2, 3] if quick else [2, 3, 5, 7]):
        prof = cluster_profile(build_AS(S, 6), Fraction(1, 50))
        if sorted(set(prof)) != S:
            bad.append(S)
        profiles[tuple(S)] = tuple(prof)
    distinct = len(set(profiles.values())) == len(profiles)
    return not bad and distinct, dict(failed=bad, distinct=distinct)


def catalog_specs() -> List[dict]:
    return [
        dict(family='kn', params=dict(n=3)),
        dict(family='xs', params=dict(S=[1, 3])),
        dict(family='xs_tilde', params=dict(S=[2])),
        dict(family='xs_cubes', params=dict(S=[1, 2], dimension=2)),
        dict(family='frames_zs', params=dict(S=[2, 4])),
        dict(family='ys_prop3', params=dict(S=[1], dimension=2)),
        dict(family='ug', params=dict(bits='101')),
        dict(family='ug_closure', params=dict(bits='01')),
        dict(family='ys_td', params=dict(S=[1, 3])),
        dict(family='discrete', params=dict(S=[2])),
        dict(family='as_primes', params=dict(S=[2, 3], N=3)),
        dict(family='xu', params=dict(u=2, N=4)),
    ]


def check_roundtrip(quick: bool):
    bad = []
    for spec in catalog_specs():
        text = codec.dumps(build_family(spec))
        if codec.dumps(codec.loads(text)) != text:
            bad.append(spec['family'])
    return not bad, dict(failed=bad)


CRITERIA: List[Tuple[str, Callable]] = [
    ('signature_recovery', check_signature),
    ('linear_recovery', check_linear),
    ('cube_recovery', check_cubes),
    ('kn_profile', check_kn),
    ('prop3_chains', check_chains),
    ('frames', check_frames),
    ('oracle_agreement', check_oracle),
    ('prop1_index', check_prop1),
    ('ug_order_types', check_bits),
    ('discrete_approximants', check_approximants),
    ('prime_clusters', check_clusters),
    ('catalog_roundtrip', check_roundtrip),
]


def run_selftest(quick: bool = False, only: List[str] = None) -> DictObject:
    """
    Run every criterion (or those named in ``only``). A criterion raising a :class:`.ScatterLabException` fails
    with the exception's diagnostic as its detail.
    """
    unknown = sorted(set(only or []) - {name for name, _ in CRITERIA})
    if unknown:
        raise RangeError(f'unknown selftest criteria: {unknown}', details=dict(unknown=unknown))
    results = []
    for name, fn in CRITERIA:
        if only and name not in only:
            continue
        log.info('selftest: running %s', name)
        try:
            passed, detail = fn(quick)
        except ScatterLabException as e:
            passed, detail = False, e.to_dict()
        results.append(dict(name=name, passed=bool(passed), detail=detail))
    return DictObject(
        scale='quick' if quick else 'full', criteria=results, passed=all(r['passed'] for r in results)
    )
