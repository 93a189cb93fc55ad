import logging
import sqlite3
from unittest.mock import MagicMock, PropertyMock, patch

from privex.scatterlab.store import ReportManager, digest_of
from tests.base import BaseStoreTest

log = logging.getLogger(__name__)


class TestReportManager(BaseStoreTest):
    def test_save_report(self):
        body = '{"all_distinct":true}'
        digest = self.rm.save_report('distinguish', body, family='xs', invariant='recover_S_linear')

        self.assertEqual(digest, digest_of(body))
        self.assertEqual(self.rm.report_count, 1)

    def test_reports_by_family(self):
        self.rm.save_report('distinguish', '{"a":1}', family='xs', invariant='recover_S_linear')
        self.rm.save_report('invariant', '{"b":2}', family='ug', invariant='bits_profile')
        self.rm.save_report('invariant', '{"c":3}', family='xs', invariant='recover_S_linear')

        reports = self.rm.reports_by_family('xs')
        self.assertEqual(len(reports), 2)
        self.assertEqual(sorted(r.body for r in reports), ['{"a":1}', '{"c":3}'])
        self.assertTrue(all(r.invariant == 'recover_S_linear' for r in reports))

    def test_selftest_runs(self):
        self.assertIsNone(self.rm.last_selftest())

        first = self.rm.save_selftest('{"passed":true}', True)
        second = self.rm.save_selftest('{"passed":false}', False)

        last = self.rm.last_selftest()
        self.assertEqual(last.digest, second)
        self.assertFalse(last.passed)
        self.assertNotEqual(first, second)

    def test_digest_is_stable(self):
        self.assertEqual(digest_of('{"x":1}'), digest_of('{"x":1}'))
        self.assertEqual(len(digest_of('')), 64)


class TestSelftestCursor(BaseStoreTest):
    def _fake_conn(self):
        cursor = MagicMock()
        conn = MagicMock()
        conn.cursor.return_value = cursor
        return conn, cursor

    def test_cursor_closed_after_commit(self):
        conn, cursor = self._fake_conn()
        with patch.object(ReportManager, 'conn', new_callable=PropertyMock, return_value=conn), \
                patch.object(self.rm.adapter, 'insert'):
            self.rm.save_selftest('{"passed":true}', True)
        cursor.execute.assert_any_call('COMMIT')
        cursor.close.assert_called_once_with()

    def test_cursor_closed_after_rollback(self):
        conn, cursor = self._fake_conn()
        with patch.object(ReportManager, 'conn', new_callable=PropertyMock, return_value=conn), \
                patch.object(self.rm.adapter, 'insert', side_effect=sqlite3.OperationalError('locked')):
            with self.assertRaises(sqlite3.OperationalError):
                self.rm.save_selftest('{"passed":true}', True)
        cursor.execute.assert_any_call('ROLLBACK')
        cursor.close.assert_called_once_with()
