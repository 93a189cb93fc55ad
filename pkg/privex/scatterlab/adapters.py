from abc import abstractmethod
from os.path import expanduser, join
from typing import List, Tuple

from privex.db import SqliteWrapper, GenericDBWrapper

SQLITE_SCHEMA = [
    (
        'reports',

        "CREATE TABLE reports ("
        "   id INTEGER PRIMARY KEY AUTOINCREMENT, kind TEXT NOT NULL, family TEXT NULL, invariant TEXT NULL,"
        "   digest TEXT NOT NULL, body TEXT NOT NULL, created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP"
        ");",
    ),

    (
        'selftest_runs',

        "CREATE TABLE selftest_runs ("
        "   id INTEGER PRIMARY KEY AUTOINCREMENT, digest TEXT NOT NULL, passed INTEGER NOT NULL,"
        "   created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP"
        ");",
    ),
]


class BaseAdapter(GenericDBWrapper):
    @abstractmethod
    def begin_transaction(self, cursor):
        raise NotImplementedError

    @abstractmethod
    def commit_transaction(self, cursor):
        raise NotImplementedError

    @abstractmethod
    def rollback_transaction(self, cursor):
        raise NotImplementedError


class SqliteAdapter(SqliteWrapper, BaseAdapter):
    DEFAULT_DB_FOLDER = expanduser('~/.privex_scatterlab')
    """If an absolute path isn't given, store the sqlite3 database file in this folder"""

    DEFAULT_DB_NAME = 'privex_scatterlab.db'
    """If no database is specified to :meth:`.__init__`, then use this (appended to :py:attr:`.DEFAULT_DB_FOLDER`)"""

    DEFAULT_DB = join(DEFAULT_DB_FOLDER, DEFAULT_DB_NAME)
    """
    Combined :py:attr:`.DEFAULT_DB_FOLDER` and :py:attr:`.DEFAULT_DB_NAME` used as default absolute path for
    the sqlite3 database holding distinguish and selftest reports
    """

    def begin_transaction(self, cursor):
        cursor.execute('BEGIN')
        return cursor

    def commit_transaction(self, cursor):
        cursor.execute('COMMIT')
        return cursor

    def rollback_transaction(self, cursor):
        cursor.execute('ROLLBACK')
        return cursor

    SCHEMAS: List[Tuple[str, str]] = SQLITE_SCHEMA
