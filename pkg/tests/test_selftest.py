from privex.scatterlab import codec
from privex.scatterlab.exceptions import RangeError
from privex.scatterlab.selftest import run_selftest, subsets
from tests.base import BaseScatterTest


class TestSelftest(BaseScatterTest):
    def test_subsets(self):
        self.assertEqual(subsets([1, 2]), [[1], [2], [1, 2]])

    def test_only_runs_named_criteria(self):
        report = run_selftest(quick=True, only=['catalog_roundtrip', 'prop1_index'])
        self.assertEqual([c['name'] for c in report.criteria], ['prop1_index', 'catalog_roundtrip'])
        self.assertTrue(report.passed)
        self.assertEqual(report.scale, 'quick')

    def test_report_is_byte_stable(self):
        a = codec.dumps(dict(run_selftest(quick=True, only=['frames', 'prime_clusters'])))
        b = codec.dumps(dict(run_selftest(quick=True, only=['frames', 'prime_clusters'])))
        self.assertEqual(a, b)

    def test_unknown_criterion(self):
        with self.assertRaises(RangeError):
            run_selftest(quick=True, only=['no_such_check'])
