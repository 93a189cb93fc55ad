from fractions import Fraction

from privex.scatterlab.exceptions import NonInjective, RangeError, VerificationFailure
from privex.scatterlab.families import build_AS, build_Kn, build_XS
from privex.scatterlab.terms import Point, Interval, OpenInterval, Ladder, Cantor, FWrap, Union, Thicken, Mirror
from privex.scatterlab.verify import (
    numeric_limit_points, oracle_agreement, discreteness_certificate, lemma_checks, prop1_index, cluster_profile,
    compute_invariant, invariant_of, render_value, distinguish_matrix
)
from tests.base import BaseScatterTest, HALF


class TestOracle(BaseScatterTest):
    def test_ladder_target_detected(self):
        rows = dict(numeric_limit_points(self.base_ladder, 6))
        self.assertTrue(rows[Fraction(1)])
        self.assertFalse(rows[HALF])

    def test_depth_minimum(self):
        with self.assertRaises(ValueError):
            numeric_limit_points(self.base_ladder, 1)

    def test_agreement_corpus(self):
        corpus = [
            ('ladder', self.base_ladder),
            ('ladder-open', Ladder(1, 1, HALF, False)),
            ('k2', build_Kn(2)),
            ('fwrap', FWrap(self.base_ladder, True)),
            ('cantor', Cantor(0, 1)),
            ('interval', Interval(0, 1)),
            ('open-interval', OpenInterval(0, 1)),
            ('two-points', Union((Point(0), Point(1)))),
            ('mirror', Mirror(1, self.base_ladder)),
            ('thicken', Thicken(self.base_ladder, Fraction(1, 4))),
        ]
        for label, t in corpus:
            report = oracle_agreement(t, label)
            self.assertTrue(report.agrees, msg=f'{label}: {report.disagreements}')
            self.assertEqual(report.label, label)

    def test_discreteness_rejects_intervals(self):
        with self.assertRaises(VerificationFailure):
            discreteness_certificate(Interval(0, 1), 3)


class TestLemmas(BaseScatterTest):
    def test_lemma1(self):
        v = lemma_checks('lemma1', [5, 4, 3, 2, 1])
        self.assertTrue(v.accepted)
        self.assertEqual(v.result, [1, 2, 3])
        self.assertEqual(v.witness.n, 1)

    def test_lemma1_non_injective(self):
        with self.assertRaises(NonInjective):
            lemma_checks('lemma1', [2, 2, 3])

    def test_lemma2_trivial_cover(self):
        v = lemma_checks('lemma2', dict(interval=['0/1', '1/1'], family=[['0/1', '1/1']]))
        self.assertTrue(v.accepted)

    def test_lemma2_witnesses(self):
        interval = [0, 1]
        cases = [
            ([[0, HALF], [HALF, 1]], 'shared'),
            ([[0, Fraction(3, 4)], [HALF, 1]], 'overlap'),
            ([[0, Fraction(1, 4)], [HALF, 1]], 'gap'),
            ([[0, 2]], 'outside'),
            ([[HALF, HALF]], 'degenerate'),
        ]
        for family, witness in cases:
            v = lemma_checks('lemma2', dict(interval=interval, family=family))
            self.assertFalse(v.accepted)
            self.assertIn(witness, v.witness, msg=f'{family} -> {dict(v.witness)}')

    def test_unknown_lemma(self):
        with self.assertRaises(RangeError):
            lemma_checks('lemma9', [])


class TestProp1(BaseScatterTest):
    def test_anchor(self):
        self.assertEqual(prop1_index(2, 3, '1/10'), 6)
        self.assertEqual(prop1_index(2, 4, HALF), 2)
        self.assertLessEqual(prop1_index(2, 3, 1), prop1_index(2, 3, '1/10'))

    def test_least_index(self):
        for v, w, delta in ((2, 3, 1), (2, Fraction(5, 2), HALF), (3, 4, Fraction(1, 20))):
            n = prop1_index(v, w, delta)
            delta = Fraction(delta)
            self.assertTrue(Fraction(w) ** n - 1 > Fraction(v) ** n / delta)
            if n > 1:
                self.assertFalse(Fraction(w) ** (n - 1) - 1 > Fraction(v) ** (n - 1) / delta)

    def test_ranges(self):
        with self.assertRaises(RangeError):
            prop1_index(3, 2, '1/10')
        with self.assertRaises(RangeError):
            prop1_index(1, 3, '1/10')
        with self.assertRaises(RangeError):
            prop1_index(2, 3, 0)


class TestClusters(BaseScatterTest):
    def test_single_prime(self):
        self.assertEqual(cluster_profile(build_AS([3], 4), '1/10'), [3, 3])

    def test_profiles_recover_primes(self):
        for S in ([2], [3], [2, 3], [2, 5]):
            self.assertEqual(sorted(set(cluster_profile(build_AS(S, 6), '1/50'))), S, msg=f'S={S}')

    def test_delta_range(self):
        with self.assertRaises(RangeError):
            cluster_profile(build_AS([2], 2), 1)

    def test_rejects_intervals(self):
        with self.assertRaises(RangeError):
            cluster_profile(Interval(0, 1), '1/10')


class TestInvariants(BaseScatterTest):
    def test_compute_invariant(self):
        self.assertEqual(sorted(compute_invariant(dict(family='xs', params=dict(S=[1, 2])), 'recover_S_linear')),
                         [1, 2])
        self.assertEqual(compute_invariant(dict(family='ug', params=dict(bits='011')), 'bits_profile'), [0, 1, 1])
        self.assertEqual(compute_invariant(dict(family='kn', params=dict(n=2)), 'order_type'), 'w^2+1')

    def test_chain_sizes_invariant(self):
        value = compute_invariant(dict(family='ys_prop3', params=dict(S=[1], dimension=2)), 'chain_sizes')
        self.assertEqual(value, [(4, 4)])

    def test_holes_invariant(self):
        value = compute_invariant(dict(family='frames_zs', params=dict(S=[2, 6])), 'holes')
        self.assertEqual(value, [2, 6])

    def test_wrong_shape(self):
        with self.assertRaises(RangeError):
            invariant_of(build_XS([1]), 'chain_sizes')
        with self.assertRaises(RangeError):
            invariant_of(build_XS([1]), 'no_such_invariant')

    def test_render_value(self):
        self.assertEqual(render_value(frozenset({3, 1})), [1, 3])
        self.assertEqual(render_value([HALF, (1, Fraction(2))]), ['1/2', [1, '2/1']])


class TestDistinguish(BaseScatterTest):
    def test_xs_members_distinct(self):
        rep = distinguish_matrix('xs', [dict(S=[1]), dict(S=[2]), dict(S=[1, 2])], 'recover_S_linear')
        self.assertTrue(rep.all_distinct)
        self.assertEqual(rep.values, [[1], [2], [1, 2]])
        self.assertEqual(rep.matrix[0][0], 'equal')
        self.assertIn('0,1', rep.witnesses)

    def test_equal_values(self):
        rep = distinguish_matrix('kn', [dict(n=2), dict(n=2)], 'order_type')
        self.assertFalse(rep.all_distinct)
        self.assertEqual(rep.matrix[0][1], 'equal')

    def test_failed_member_is_unknown(self):
        rep = distinguish_matrix('xs', [dict(S=[1]), dict(S=[9])], 'recover_S_linear')
        self.assertIsNone(rep.values[1])
        self.assertEqual(rep.matrix[0][1], 'unknown')
        self.assertFalse(rep.all_distinct)

    def test_empty_bit_string_is_unknown(self):
        rep = distinguish_matrix('ug', [dict(bits=''), dict(bits='1')], 'ug_order_type')
        self.assertIsNone(rep.values[0])
        self.assertIsNotNone(rep.values[1])
        self.assertEqual(rep.matrix[0][1], 'unknown')
        self.assertEqual(rep.matrix[1][0], 'unknown')
        self.assertFalse(rep.all_distinct)
