import io
import json
import os
import tempfile
from unittest.mock import patch

from privex.scatterlab import codec
from privex.scatterlab.cli import main, EXIT_OK, EXIT_USAGE, EXIT_VERIFY
from privex.scatterlab.families import build_XS
from tests.base import BaseScatterTest


class CliTest(BaseScatterTest):
    def call(self, *argv):
        """Run the command line tool, returning ``(exit_code, stdout, stderr)``"""
        with patch('sys.stdout', new_callable=io.StringIO) as out, patch('sys.stderr', new_callable=io.StringIO) as err:
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    @staticmethod
    def diagnostic(err: str) -> dict:
        return json.loads(err.strip().splitlines()[-1])


class TestBuildAndInvariant(CliTest):
    def test_build(self):
        code, out, _ = self.call('build', '--family', 'xs', '--set', '1,3')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(codec.loads(out), build_XS([1, 3]))

    def test_build_out_of_range(self):
        code, out, err = self.call('build', '--family', 'xs', '--set', '9')
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, '')
        self.assertEqual(self.diagnostic(err)['error'], 'range')

    def test_invariant_default(self):
        code, out, _ = self.call('invariant', '--family', 'kn', '--n', '2')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out), dict(invariant='order_type', value='w^2+1'))

    def test_invariant_bits_count(self):
        code, out, _ = self.call('invariant', '--family', 'ug', '--bits', '011')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['value'], [0, 1, 1])

    def test_invariant_from_input(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'xs.json')
            with open(path, 'w') as fh:
                fh.write(codec.dumps(build_XS([2, 4])))
            code, out, _ = self.call('invariant', '--input', path, '--invariant', 'recover_S_linear')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['value'], [2, 4])

    def test_invariant_needs_name_for_json(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'xs.json')
            with open(path, 'w') as fh:
                fh.write(codec.dumps(build_XS([2])))
            code, _, err = self.call('invariant', '--input', path)
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(self.diagnostic(err)['error'], 'usage')

    def test_frame_holes(self):
        code, out, _ = self.call('invariant', '--frame', '7', '--invariant', 'holes')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['value'], [7])

    def test_missing_input_file(self):
        code, _, err = self.call('build', '--input', '/nonexistent/term.json')
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(self.diagnostic(err)['error'], 'usage')


class TestDistinguish(CliTest):
    def test_all_subsets(self):
        code, out, _ = self.call('distinguish', '--family', 'xs', '--all-subsets', '1..3')
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertTrue(report['all_distinct'])
        self.assertEqual(len(report['values']), 7)

    def test_needs_members(self):
        code, _, err = self.call('distinguish', '--family', 'kn')
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(self.diagnostic(err)['error'], 'usage')

    def test_collision_exits_one(self):
        code, out, _ = self.call('distinguish', '--family', 'xs', '--all-subsets', '1,9')
        self.assertEqual(code, EXIT_VERIFY)
        self.assertFalse(json.loads(out)['all_distinct'])

    def test_failed_members_reported_as_unknown(self):
        code, out, _ = self.call(
            'distinguish', '--family', 'ug', '--invariant', 'ug_order_type', '--random', '2', '--length', '0'
        )
        self.assertEqual(code, EXIT_VERIFY)
        report = json.loads(out)
        self.assertEqual(report['values'], [None, None])
        self.assertEqual(report['matrix'][0][1], 'unknown')

    def test_store(self):
        with tempfile.TemporaryDirectory() as d:
            db = os.path.join(d, 'reports.db')
            code, _, _ = self.call('distinguish', '--family', 'xs', '--all-subsets', '1,2', '--store', db)
            self.assertEqual(code, EXIT_OK)
            self.assertTrue(os.path.exists(db))


class TestOtherCommands(CliTest):
    def test_render_to_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'frames.svg')
            code, out, _ = self.call('render', '--family', 'frames_zs', '--set', '2,4', '--out', path)
            with open(path) as fh:
                svg = fh.read()
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, '')
        self.assertTrue(svg.startswith('<svg'))

    def test_selftest(self):
        code, out, _ = self.call('selftest', '--quick', '--only', 'catalog_roundtrip')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(out)['passed'])

    def test_selftest_store_digest(self):
        with tempfile.TemporaryDirectory() as d:
            db = os.path.join(d, 'runs.db')
            self.call('selftest', '--quick', '--only', 'prop1_index', '--store', db)
            code, _, err = self.call('selftest', '--quick', '--only', 'prop1_index', '--store', db)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(self.diagnostic(err)['same_as_previous'])

    def test_build_has_no_format(self):
        code, _, _ = self.call('build', '--family', 'xs', '--set', '1', '--format', 'svg')
        self.assertEqual(code, EXIT_USAGE)

    def test_render_json(self):
        code, out, _ = self.call('render', '--family', 'xs', '--set', '1', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(codec.loads(out), build_XS([1]))

    def test_no_command(self):
        code, _, _ = self.call()
        self.assertEqual(code, EXIT_USAGE)

    def test_bad_choice(self):
        code, _, _ = self.call('build', '--family', 'spiral')
        self.assertEqual(code, EXIT_USAGE)
