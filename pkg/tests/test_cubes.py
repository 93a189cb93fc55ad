from fractions import Fraction

import networkx as nx

from privex.scatterlab.cubes import (
    Box, BoxUnion, FrameRegion, touches, interiors_meet, box_components, touch_graph, longest_path, grid_path,
    chain_sizes, frame_holes, recover_S_cubes
)
from privex.scatterlab.exceptions import DimensionMismatch, FrameValidationError
from privex.scatterlab.families import build_XS, build_YS_prop3, lift_cubes, frame_region
from tests.base import BaseScatterTest


class TestBoxes(BaseScatterTest):
    def test_touching_corners(self):
        a, b = Box((0, 0), 1), Box((1, 1), 1)
        self.assertTrue(touches(a, b))
        self.assertFalse(interiors_meet(a, b))
        self.assertFalse(touches(a, Box((2, 0), 1)))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            touches(Box((0,), 1), Box((0, 0), 1))
        with self.assertRaises(DimensionMismatch):
            BoxUnion([Box((0,), 1), Box((0, 0), 1)])

    def test_positive_edge(self):
        with self.assertRaises(ValueError):
            Box((0, 0), 0)

    def test_geometry(self):
        b = Box((1, 2), Fraction(1, 2))
        self.assertEqual(b.upper, (Fraction(3, 2), Fraction(5, 2)))
        self.assertEqual(b.volume, Fraction(1, 4))
        self.assertEqual(b.scaled(4), Box((4, 8), 2))

    def test_components(self):
        u = BoxUnion([Box((0, 0), 1), Box((1, 1), 1), Box((5, 5), 1)])
        self.assertEqual(box_components(u), [[0, 1], [2]])
        self.assertEqual(touch_graph(u).number_of_edges(), 1)


class TestChains(BaseScatterTest):
    def test_longest_path(self):
        self.assertEqual(len(longest_path(nx.path_graph(5))), 5)
        self.assertEqual(len(longest_path(nx.star_graph(3))), 3)
        self.assertEqual(len(longest_path(nx.complete_graph(4))), 4)

    def test_grid_path(self):
        boxes = [Box((i, j), 1) for i in range(2) for j in range(3)]
        path = grid_path(boxes, list(range(6)))
        self.assertEqual(sorted(path), list(range(6)))
        g = touch_graph(BoxUnion(boxes))
        self.assertTrue(all(g.has_edge(a, b) for a, b in zip(path, path[1:])))

    def test_grid_path_rejects_gaps(self):
        boxes = [Box((0, 0), 1), Box((1, 0), 1), Box((1, 1), 1)]
        self.assertIsNone(grid_path(boxes, [0, 1, 2]))

    def test_prop3_chain_sizes(self):
        for S, n in (([1], 2), ([2], 2), ([1, 3], 1), ([1, 2], 3)):
            comps = [c for c in chain_sizes(build_YS_prop3(S, n)).components if c.size > 1]
            want = sorted((s + 1) ** n for s in S)
            self.assertEqual(sorted(c.size for c in comps), want, msg=f'S={S} n={n}')
            self.assertEqual(sorted(c.max_chain for c in comps), want, msg=f'S={S} n={n}')

    def test_empty_index_set(self):
        report = chain_sizes(build_YS_prop3([], 2))
        self.assertEqual(report.max_chains, [1, 1])

    def test_overlapping_cubes(self):
        with self.assertRaises(ValueError):
            chain_sizes(BoxUnion([Box((0, 0), 2, open=True), Box((1, 1), 2, open=True)]))


class TestFrames(BaseScatterTest):
    def test_hole_counts(self):
        for m in (1, 2, 7, 20):
            report = frame_holes(frame_region(m))
            self.assertEqual(report.hole_count, m)
            self.assertTrue(report.valid)

    def test_touching_holes(self):
        f = FrameRegion(Box((0, 0), 10), [Box((1, 1), 2, open=True), Box((3, 3), 2, open=True)])
        with self.assertRaises(FrameValidationError) as ctx:
            frame_holes(f)
        self.assertEqual(ctx.exception.details['holes'], [0, 1])

    def test_hole_leaves_interior(self):
        f = FrameRegion(Box((0, 0), 4), [Box((0, 1), 1, open=True)])
        with self.assertRaises(FrameValidationError):
            frame_holes(f)


class TestCubeRecovery(BaseScatterTest):
    def test_lift_matches_linear(self):
        for S in ([1], [2, 3], [1, 3]):
            for n in (1, 2, 3):
                self.assertEqual(sorted(recover_S_cubes(lift_cubes(build_XS(S), n))), S, msg=f'S={S} n={n}')

    def test_lifted_boxes(self):
        lifted = lift_cubes(build_XS([1]), 2)
        self.assertEqual(lifted.boxes.dimension, 2)
        self.assertEqual(len(lifted.boxes), len(lifted.components))
