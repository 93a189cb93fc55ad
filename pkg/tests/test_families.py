from fractions import Fraction

from privex.scatterlab.exceptions import RangeError, NotTotallyDisconnected
from privex.scatterlab.families import (
    build_family, build_Kn, build_XS, build_AS, build_Xu, build_frames, build_YS_prop3, build_Ug, build_Zn,
    frame_region, frame_scale, frame_subcubes, subcube_count, discrete_approximant, prime_group, parse_set,
    parse_bits, place
)
from privex.scatterlab.cubes import BoxUnion, LiftedFamily
from privex.scatterlab.derive import derive
from privex.scatterlab.objects import FamilySpec
from privex.scatterlab.setcore import member, enumerate_term, probe_equal
from privex.scatterlab.terms import Point, Interval, OpenInterval, Cantor, Union, GapLadders, bounds, validate
from privex.scatterlab.verify import discreteness_certificate
from tests.base import BaseScatterTest, HALF


class TestParsing(BaseScatterTest):
    def test_parse_set(self):
        self.assertEqual(parse_set('3,1'), [1, 3])
        self.assertEqual(parse_set('1..4'), [1, 2, 3, 4])
        self.assertEqual(parse_set([2, 2, 1]), [1, 2])
        self.assertEqual(parse_set(''), [])

    def test_parse_bits(self):
        self.assertEqual(parse_bits('101'), [1, 0, 1])
        with self.assertRaises(RangeError):
            parse_bits('102')


class TestLinearFamilies(BaseScatterTest):
    def test_kn_placement(self):
        self.assertEqual(bounds(build_Kn(3)), (Fraction(15), Fraction(16)))
        with self.assertRaises(RangeError):
            build_Kn(0)

    def test_place_maps_block_into_window(self):
        self.assertEqual(bounds(place(Interval(10, 15), 2)), (HALF, Fraction(3, 4)))

    def test_xs_top_interval(self):
        t = build_XS([2])
        self.assertTrue(member(t, Fraction(3, 2)))
        self.assertFalse(member(t, Fraction(7, 8)))
        self.assertEqual(bounds(t)[1], Fraction(2))
        validate(t)

    def test_xs_range(self):
        with self.assertRaises(RangeError):
            build_XS([6])
        with self.assertRaises(RangeError):
            build_XS([])

    def test_zn_accumulates_at_both_ends(self):
        acc = derive(build_Zn(1))
        self.assertTrue(member(acc, 7))
        self.assertTrue(member(acc, 8))

    def test_ug_windows(self):
        t = build_Ug('10')
        self.assertTrue(member(t, Fraction(21, 2)))
        self.assertFalse(member(t, Fraction(33, 2)))
        self.assertTrue(member(t, Fraction(25, 2)))

    def test_ug_length_limit(self):
        with self.assertRaises(RangeError):
            build_Ug('1' * 13)

    def test_xu(self):
        t = build_Xu(2, 3)
        self.assertEqual(t, Union((Interval(1, 3), Interval(4, 8), Interval(9, 17))))
        self.assertEqual(build_Xu('5/2', 1, open_variant=True), OpenInterval(1, Fraction(7, 2)))
        with self.assertRaises(RangeError):
            build_Xu(1, 2)


class TestPrimeClusters(BaseScatterTest):
    def test_prime_group(self):
        pts = enumerate_term(prime_group(3, 1), 1).points
        self.assertEqual(pts, [3 + Fraction(1, 9), 3 + Fraction(1, 6), 3 + Fraction(1, 3)])

    def test_rejects_composites(self):
        with self.assertRaises(RangeError):
            build_AS([4], 2)

    def test_as_point_count(self):
        self.assertEqual(len(enumerate_term(build_AS([2, 3], 2), 1).points), 10)


class TestFrameFamily(BaseScatterTest):
    def test_frame_region(self):
        f = frame_region(2)
        self.assertEqual(f.outer.corner, (Fraction(1, 4), Fraction(1, 4)))
        self.assertEqual(len(f.holes), 2)
        self.assertTrue(all(h.open for h in f.holes))

    def test_integer_scaled(self):
        frames, base = build_frames([2, 4], integer_scaled=True)
        self.assertEqual(frame_scale(2), 80)
        for f in frames:
            self.assertTrue(all(c.denominator == 1 for c in f.corners))
        self.assertEqual(base.corner, (-1, -1))

    def test_frame_range(self):
        with self.assertRaises(RangeError):
            build_frames([3])

    def test_subcube_count(self):
        self.assertEqual(subcube_count(1), 8)
        self.assertEqual(subcube_count(2, 3), 23 * 20)
        for m, n in ((1, 2), (2, 2), (1, 3)):
            self.assertEqual(len(frame_subcubes(m, n)), subcube_count(m, n))


class TestProp3Family(BaseScatterTest):
    def test_box_count(self):
        u = build_YS_prop3([2], 2)
        # base, window 1, (2 + 1)^2 cubes in window 2, window 3
        self.assertEqual(len(u), 1 + 1 + 9 + 1)
        self.assertTrue(all(b.open for b in u))

    def test_dimension_range(self):
        with self.assertRaises(RangeError):
            build_YS_prop3([1], 4)


class TestDiscreteApproximant(BaseScatterTest):
    def test_two_points(self):
        a = Union((Point(0), Point(1)))
        z = discrete_approximant(a)
        self.assertEqual(z, GapLadders(a))
        self.assertTrue(probe_equal(derive(z), a))
        radii = discreteness_certificate(z, 4)
        self.assertTrue(all(r > 0 for _, r in radii))

    def test_cantor_scaffold(self):
        z = discrete_approximant(Cantor(0, 1))
        self.assertFalse(any(member(Cantor(0, 1), x) for x in enumerate_term(z, 3).points))
        self.assertEqual(derive(z), Cantor(0, 1))

    def test_rejects_intervals(self):
        with self.assertRaises(NotTotallyDisconnected):
            discrete_approximant(Interval(0, 1))


class TestDispatch(BaseScatterTest):
    def test_build_family(self):
        self.assertEqual(build_family(dict(family='kn', params=dict(n=2))), build_Kn(2))
        self.assertEqual(build_family(FamilySpec('xs', dict(S='1,3'))), build_XS([1, 3]))
        self.assertIsInstance(build_family(dict(family='xs_cubes', params=dict(S=[1], dimension=3))), LiftedFamily)
        self.assertIsInstance(build_family(dict(family='ys_prop3', params=dict(S=[1]))), BoxUnion)

    def test_closure_alias(self):
        self.assertEqual(
            build_family(dict(family='ys_closure', params=dict(bits='01'))),
            build_family(dict(family='ug_closure', params=dict(bits='01'))),
        )

    def test_unknown_family(self):
        with self.assertRaises(RangeError):
            build_family(dict(family='nope'))
