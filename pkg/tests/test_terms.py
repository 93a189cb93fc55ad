from fractions import Fraction

from privex.scatterlab.exceptions import TermValidationError
from privex.scatterlab.rational import rat, rat_str, window_start, window_end, window_index
from privex.scatterlab.terms import (
    Point, Interval, OpenInterval, Ladder, FWrap, Affine, Union, Thicken, Mirror, GapLadders, EndpointSet, EMPTY,
    bounds, canonical, validate, affine, union
)
from tests.base import BaseScatterTest, HALF


class TestRational(BaseScatterTest):
    def test_rat_parses_strings(self):
        self.assertEqual(rat('3/4'), Fraction(3, 4))
        self.assertEqual(rat(2), Fraction(2))

    def test_rat_str(self):
        self.assertEqual(rat_str(Fraction(3, 4)), '3/4')
        self.assertEqual(rat_str(2), '2/1')

    def test_windows(self):
        self.assertEqual((window_start(1), window_end(1)), (Fraction(0), HALF))
        self.assertEqual((window_start(2), window_end(2)), (HALF, Fraction(3, 4)))
        self.assertEqual(window_index(Fraction(5, 8)), 2)


class TestValidate(BaseScatterTest):
    def test_interval_needs_ordered_endpoints(self):
        with self.assertRaises(TermValidationError):
            validate(Interval(1, 0))

    def test_ladder_ratio_range(self):
        with self.assertRaises(TermValidationError):
            validate(Ladder(1, 1, 1, True))
        with self.assertRaises(TermValidationError):
            validate(Ladder(1, 0, HALF, True))

    def test_fwrap_inner_inside_unit_interval(self):
        with self.assertRaises(TermValidationError):
            validate(FWrap(Interval(0, 2), True))

    def test_thicken_needs_well_ordered_scaffold(self):
        with self.assertRaises(TermValidationError):
            validate(Thicken(Ladder(1, 1, HALF, False)))
        validate(Thicken(self.base_ladder))

    def test_mirror_inner_on_one_side(self):
        with self.assertRaises(TermValidationError):
            validate(Mirror(1, Interval(0, 2)))
        validate(Mirror(2, Interval(0, 2)))

    def test_endpoints_need_interval_union(self):
        with self.assertRaises(TermValidationError):
            validate(EndpointSet(self.base_ladder))

    def test_gap_ladders_need_totally_disconnected(self):
        with self.assertRaises(TermValidationError):
            validate(GapLadders(Interval(0, 1)))

    def test_error_dict(self):
        try:
            validate(Interval(1, 0))
        except TermValidationError as e:
            d = e.to_dict()
            self.assertEqual(d['error'], 'validation')
            self.assertEqual(d['details']['kind'], 'interval')


class TestCanonical(BaseScatterTest):
    def test_merges_touching_intervals(self):
        self.assertEqual(canonical(Union((Interval(1, 2), EMPTY, Interval(0, 1)))), Interval(0, 2))

    def test_flattens_and_deduplicates(self):
        t = Union((Point(2), Union((Point(1), Point(2)))))
        self.assertEqual(canonical(t), Union((Point(1), Point(2))))

    def test_idempotent(self):
        t = Union((Affine(2, 1, Affine(HALF, 0, self.base_ladder)), Point(5), Interval(7, 8), Interval(6, 7)))
        self.assertEqual(canonical(canonical(t)), canonical(t))

    def test_affine_folds_points_and_intervals(self):
        self.assertEqual(affine(2, 1, Point(1)), Point(3))
        self.assertEqual(affine(-1, 0, Interval(0, 1)), Interval(-1, 0))
        self.assertEqual(affine(1, 0, self.base_ladder), self.base_ladder)

    def test_affine_composes(self):
        t = affine(2, 1, Affine(3, 4, self.base_ladder))
        self.assertEqual(t, Affine(6, 9, self.base_ladder))

    def test_empty_wrappers(self):
        self.assertEqual(canonical(FWrap(EMPTY, True)), Point(1))
        self.assertEqual(canonical(FWrap(EMPTY, False)), EMPTY)
        self.assertEqual(canonical(Mirror(0, EMPTY)), EMPTY)
        self.assertEqual(union(), EMPTY)

    def test_union_operator(self):
        self.assertEqual(canonical(Point(1) | Point(0)), Union((Point(0), Point(1))))


class TestBounds(BaseScatterTest):
    def test_leaf_bounds(self):
        self.assertEqual(bounds(self.base_ladder), (Fraction(0), Fraction(1)))
        self.assertEqual(bounds(OpenInterval(2, 3)), (Fraction(2), Fraction(3)))
        self.assertIsNone(bounds(EMPTY))

    def test_thicken_and_mirror(self):
        self.assertEqual(bounds(Thicken(self.base_ladder, 1)), (Fraction(0), Fraction(2)))
        self.assertEqual(bounds(Mirror(3, Interval(0, 1))), (Fraction(0), Fraction(6)))
