from fractions import Fraction

from privex.scatterlab.exceptions import UndecidablePair
from privex.scatterlab.families import build_Kn
from privex.scatterlab.setcore import (
    member, enumerate_term, floor_point, ceil_point, succ_point, meets, touch_points, probe_equal, epsilon
)
from privex.scatterlab.terms import (
    Point, Interval, OpenInterval, Ladder, IntervalLadder, Cantor, FWrap, Affine, Union, Thicken, Mirror, GapLadders,
    EndpointSet
)
from tests.base import BaseScatterTest, HALF


class TestMember(BaseScatterTest):
    def test_cantor(self):
        c = Cantor(0, 1)
        self.assertTrue(member(c, '1/4'))
        self.assertTrue(member(c, '1/3'))
        self.assertTrue(member(c, '2/3'))
        self.assertFalse(member(c, '1/2'))
        self.assertFalse(member(c, '4/3'))

    def test_ladder(self):
        self.assertTrue(member(self.base_ladder, '3/4'))
        self.assertTrue(member(self.base_ladder, 1))
        self.assertFalse(member(self.base_ladder, '5/8'))
        self.assertFalse(member(Ladder(1, 1, HALF, False), 1))

    def test_open_interval(self):
        self.assertFalse(member(OpenInterval(0, 1), 0))
        self.assertTrue(member(OpenInterval(0, 1), HALF))
        self.assertTrue(member(Interval(0, 1), 1))

    def test_interval_ladder(self):
        t = IntervalLadder(1, 1, HALF, Fraction(1, 4))
        # I_0 = [0, 1/4], I_1 = [1/2, 5/8]
        self.assertTrue(member(t, Fraction(1, 8)))
        self.assertTrue(member(t, Fraction(5, 8)))
        self.assertFalse(member(t, Fraction(3, 8)))
        self.assertFalse(member(t, 1))

    def test_fwrap(self):
        t = FWrap(Point(0), True)
        for x in (0, HALF, Fraction(3, 4), 1):
            self.assertTrue(member(t, x), msg=f'{x} in FWrap(Point(0))')
        self.assertFalse(member(t, Fraction(1, 4)))

    def test_affine_and_mirror(self):
        self.assertTrue(member(Affine(2, 3, self.base_ladder), 4))
        self.assertTrue(member(Mirror(1, self.base_ladder), Fraction(3, 2)))
        self.assertFalse(member(Mirror(1, self.base_ladder), Fraction(11, 8)))

    def test_thicken(self):
        t = Thicken(self.base_ladder, 1)
        self.assertEqual(epsilon(t, Fraction(0)), Fraction(1, 4))
        self.assertEqual(epsilon(t, Fraction(1)), Fraction(1))
        self.assertTrue(member(t, Fraction(1, 8)))
        self.assertFalse(member(t, Fraction(3, 8)))
        self.assertTrue(member(t, Fraction(3, 2)))

    def test_endpoints(self):
        t = EndpointSet(Thicken(self.base_ladder, 1))
        self.assertTrue(member(t, 0))
        self.assertTrue(member(t, Fraction(1, 4)))
        self.assertTrue(member(t, 2))
        self.assertFalse(member(t, Fraction(1, 8)))

    def test_gap_ladders(self):
        z = GapLadders(Union((Point(0), Point(1))))
        self.assertTrue(member(z, HALF))
        self.assertTrue(member(z, Fraction(1, 4)))
        self.assertTrue(member(z, Fraction(7, 8)))
        self.assertFalse(member(z, 0))
        self.assertFalse(member(z, Fraction(1, 3)))


class TestOrderQueries(BaseScatterTest):
    def test_floor_ceil(self):
        self.assertEqual(floor_point(self.base_ladder, Fraction(5, 8)), HALF)
        self.assertEqual(ceil_point(self.base_ladder, Fraction(5, 8)), Fraction(3, 4))
        self.assertIsNone(floor_point(self.base_ladder, -1))

    def test_succ(self):
        self.assertEqual(succ_point(self.base_ladder, HALF), Fraction(3, 4))
        self.assertIsNone(succ_point(self.base_ladder, 1))


class TestEnumerate(BaseScatterTest):
    def test_ladder(self):
        self.assertFractions(enumerate_term(self.base_ladder, 3).points, [0, HALF, Fraction(3, 4), 1])

    def test_cantor_endpoints(self):
        a = enumerate_term(Cantor(0, 1), 1)
        self.assertFractions(a.points, [0, Fraction(1, 3), Fraction(2, 3), 1])

    def test_listed_points_are_members(self):
        for t in (FWrap(self.base_ladder, True), Mirror(1, self.base_ladder), Cantor(0, 1)):
            for x in enumerate_term(t, 4).points:
                self.assertTrue(member(t, x), msg=f'{x} listed for {t.kind}')

    def test_intervals(self):
        a = enumerate_term(Union((Interval(0, 1), Point(2))), 2)
        self.assertEqual(a.intervals, [(Fraction(0), Fraction(1))])
        self.assertFractions(a.points, [2])
        self.assertTrue(a.covers(HALF))

    def test_depth_must_be_positive(self):
        with self.assertRaises(ValueError):
            enumerate_term(self.base_ladder, 0)

    def test_ladder_tolerance(self):
        self.assertEqual(enumerate_term(self.base_ladder, 3).tolerance, Fraction(1, 8))

    def test_tolerance_shrinks_with_depth(self):
        terms = (
            self.base_ladder, Ladder(1, 1, HALF, False), Cantor(0, 1), FWrap(self.base_ladder, True), build_Kn(2),
            OpenInterval(0, 1), Mirror(1, self.base_ladder), Union((Interval(0, 1), Point(2))),
        )
        for t in terms:
            tols = [enumerate_term(t, d).tolerance for d in range(1, 9)]
            self.assertTrue(all(b <= a for a, b in zip(tols, tols[1:])), msg=f'{t.kind}: {tols}')
            self.assertLess(tols[-1], tols[0], msg=t.kind)
            self.assertTrue(all(x > 0 for x in tols), msg=t.kind)

    def test_nearest_distance_skips_self(self):
        a = enumerate_term(self.base_ladder, 3)
        self.assertEqual(a.nearest_distance(HALF), Fraction(1, 4))
        self.assertEqual(a.nearest_distance(Fraction(1)), Fraction(1, 4))


class TestMeets(BaseScatterTest):
    def test_touching_intervals(self):
        self.assertTrue(meets(Interval(0, 1), Interval(1, 2)))
        self.assertEqual(touch_points(Interval(0, 1), Interval(1, 2)), [Fraction(1)])

    def test_disjoint(self):
        self.assertFalse(meets(Interval(0, 1), Point(2)))
        self.assertFalse(meets(OpenInterval(0, 1), Point(1)))

    def test_block_touches_shifted_cantor(self):
        self.assertTrue(meets(build_Kn(2), Affine(1, 11, Cantor(0, 1))))

    def test_ladder_without_target(self):
        self.assertFalse(meets(Ladder(1, 1, HALF, False), Point(1)))
        self.assertTrue(meets(self.base_ladder, Point(1)))

    def test_overlapping_intervals_have_no_touch_points(self):
        self.assertTrue(meets(Interval(0, 2), Interval(1, 3)))
        with self.assertRaises(UndecidablePair):
            touch_points(Interval(0, 2), Interval(1, 3))

    def test_fwrap_top_against_interval(self):
        with self.assertRaises(UndecidablePair):
            meets(FWrap(self.base_ladder, True), Interval(HALF, 2))


class TestProbeEqual(BaseScatterTest):
    def test_structurally_equal(self):
        self.assertTrue(probe_equal(Union((Interval(0, 1), Interval(1, 2))), Interval(0, 2)))

    def test_different(self):
        self.assertFalse(probe_equal(self.base_ladder, Ladder(1, 1, HALF, False)))
