from fractions import Fraction

from privex.scatterlab.exceptions import NotIntervalUnion, ProfileMismatch
from privex.scatterlab.families import build_XS, build_Ug, closure_Ug, representative_points, block_XS
from privex.scatterlab.linear import (
    boundary, components_upto, two_sided_components, recover_S_linear, component_limits, bits_profile
)
from privex.scatterlab.setcore import member, enumerate_term
from privex.scatterlab.terms import Point, Interval, OpenInterval, Thicken, Union, EndpointSet
from tests.base import BaseScatterTest, HALF


class TestBoundary(BaseScatterTest):
    def test_interval(self):
        self.assertEqual(boundary(Interval(0, 1)), Union((Point(0), Point(1))))

    def test_thickening(self):
        t = Thicken(self.base_ladder, 1)
        self.assertEqual(boundary(t), EndpointSet(t))

    def test_thickened_ladder_endpoint_count(self):
        t = Thicken(self.base_ladder, Fraction(1, 4))
        pts = enumerate_term(boundary(t), 5).points
        # five ladder points plus the target, whose radius is the cap
        self.assertEqual(len(pts), 12)
        self.assertFractions(sorted(pts), [
            0, Fraction(1, 4), HALF, Fraction(5, 8), Fraction(3, 4), Fraction(13, 16), Fraction(7, 8),
            Fraction(29, 32), Fraction(15, 16), Fraction(61, 64), 1, Fraction(5, 4),
        ])

    def test_rejects_open(self):
        with self.assertRaises(NotIntervalUnion):
            boundary(OpenInterval(0, 1))
        with self.assertRaises(NotIntervalUnion):
            boundary(self.base_ladder)


class TestComponents(BaseScatterTest):
    def test_finite_union(self):
        comps = components_upto(Union((Interval(2, 3), Interval(0, 1), Point(5))), 3)
        self.assertEqual(comps.intervals(), [(0, 1), (2, 3), (5, 5)])
        self.assertEqual([c.kind for c in comps], ['interval', 'interval', 'point'])
        self.assertIsNone(comps.complete_below)

    def test_touching_pieces_merge(self):
        comps = components_upto(Union((Interval(0, 1), Interval(1, 2))), 2)
        self.assertEqual(len(comps), 1)

    def test_thickened_ladder(self):
        comps = components_upto(Thicken(self.base_ladder, 1), 2)
        self.assertEqual(comps.intervals(), [(0, Fraction(1, 4)), (HALF, Fraction(5, 8)), (1, 2)])
        self.assertEqual(comps.complete_below, Fraction(3, 4))

    def test_open_components(self):
        comps = components_upto(OpenInterval(0, 1), 1)
        self.assertTrue(comps[0].is_open)
        self.assertFalse(comps[0].contains(0))
        self.assertEqual(comps[0].midpoint, HALF)


class TestRecoverLinear(BaseScatterTest):
    def test_block_is_two_sided(self):
        two = two_sided_components(block_XS(2))
        self.assertEqual([(c.lo, c.hi) for c in two], [(Fraction(11), Fraction(13))])

    def test_recovers_index_sets(self):
        for S in ([1], [3], [1, 2], [2, 4], [1, 3, 5]):
            self.assertEqual(sorted(recover_S_linear(build_XS(S))), S, msg=f'S={S}')

    def test_plain_interval(self):
        self.assertEqual(recover_S_linear(Interval(0, 1)), frozenset())


class TestBitsProfile(BaseScatterTest):
    def test_component_limits(self):
        acc = component_limits(build_Ug([1]))
        for x in (7, 8, 13, 14):
            self.assertTrue(member(acc, x), msg=f'{x} is an accumulation point of U_g')
        self.assertFalse(member(acc, 9))

    def test_open_union(self):
        self.assertEqual(bits_profile(build_Ug([1, 1, 0]), 3), [1, 1, 0])
        self.assertEqual(bits_profile(build_Ug('0101'), 4), [0, 1, 0, 1])

    def test_closure(self):
        self.assertEqual(bits_profile(closure_Ug('101'), 3), [1, 0, 1])

    def test_representative_points(self):
        self.assertEqual(bits_profile(representative_points(build_Ug('01')), 2), [0, 1])
        finite = representative_points(build_Ug('10'), depth=2)
        self.assertTrue(member(finite, Fraction(13, 2)))
        self.assertTrue(member(finite, Fraction(21, 2)))
        self.assertFalse(member(finite, Fraction(19, 2)))

    def test_too_few_windows(self):
        with self.assertRaises(ProfileMismatch):
            bits_profile(build_Ug([1, 0]), 5)
