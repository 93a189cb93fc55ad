import hashlib
import logging
import sqlite3
from typing import Optional, List, Union

from privex.helpers import empty

from privex.scatterlab.adapters import SqliteAdapter, BaseAdapter
from privex.scatterlab.objects import StoredReport, SelftestRun

log = logging.getLogger(__name__)

DEFAULT_ADAPTER = SqliteAdapter


def digest_of(body: str) -> str:
    """Hex SHA-256 of a canonical JSON body"""
    return hashlib.sha256(body.encode('utf-8')).hexdigest()


def _row_report(id, kind, family=None, invariant=None, digest=None, body=None, created_at=None, **kwargs):
    return StoredReport(
        id=id, kind=kind, family=family, invariant=invariant, digest=digest, body=body, created_at=created_at
    )


def _row_selftest(id, digest, passed=0, created_at=None, **kwargs):
    return SelftestRun(id=id, digest=digest, passed=passed, created_at=created_at)


class ReportManager:
    """
    Stores distinguish / invariant reports and selftest runs in a :class:`.SqliteAdapter`.

        >>> with ReportManager(adapter=SqliteAdapter(db=':memory:')) as rm:
        ...     rm.adapter.recreate_schemas()
        ...     _ = rm.save_report('distinguish', '{"all_distinct":true}', family='xs', invariant='recover_S_linear')
        ...     rm.report_count
        1

    """
    adapter: Union[BaseAdapter, SqliteAdapter]
    """The database adapter we're using to store and query reports"""

    def __init__(self, **kwargs):
        self.adapter = kwargs.pop('adapter', None)
        if self.adapter is None:
            db = kwargs.pop('db', None)
            self.adapter = DEFAULT_ADAPTER() if empty(db) else DEFAULT_ADAPTER(db=db)
        self.adapter.query_mode = kwargs.pop('query_mode', 'dict')

    def builder(self, table): return self.adapter.builder(table)

    @property
    def report_builder(self): return self.builder('reports')

    @property
    def selftest_builder(self): return self.builder('selftest_runs')

    @property
    def conn(self): return self.adapter.conn

    @property
    def report_count(self) -> int:
        return int(self.report_builder.select('COUNT(*) as report_count')[0]['report_count'])

    def save_report(self, kind: str, body: str, family: str = None, invariant: str = None) -> str:
        """
        Insert a report and return its digest.

        :param str kind: ``distinguish`` or ``invariant``
        :param str body: canonical JSON text of the report
        """
        digest = digest_of(body)
        self.adapter.insert('reports', kind=kind, family=family, invariant=invariant, digest=digest, body=body)
        log.debug('stored %s report %s', kind, digest)
        return digest

    def save_selftest(self, body: str, passed: bool) -> str:
        """Insert a selftest run inside a transaction and return the digest of ``body``"""
        digest = digest_of(body)
        c = self.conn.cursor()
        self.adapter.begin_transaction(c)
        try:
            self.adapter.insert('selftest_runs', _cursor=c, digest=digest, passed=1 if passed else 0)
            self.adapter.commit_transaction(c)
        except (sqlite3.Error, Exception) as e:
            log.exception('Exception while storing selftest run %s', digest)
            self.adapter.rollback_transaction(c)
            raise e
        finally:
            c.close()
        return digest

    def last_selftest(self) -> Optional[SelftestRun]:
        row = self.adapter.fetchone('SELECT * FROM selftest_runs ORDER BY id DESC LIMIT 1;')
        return None if row is None else _row_selftest(**row)

    def reports_by_family(self, family: str) -> List[StoredReport]:
        return [_row_report(**r) for r in self.report_builder.where('family', family)]

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.adapter.close_cursor()
