from fractions import Fraction
from unittest import TestCase

from privex.scatterlab.adapters import SqliteAdapter
from privex.scatterlab.store import ReportManager
from privex.scatterlab.terms import Ladder

HALF = Fraction(1, 2)


class BaseScatterTest(TestCase):
    base_ladder = Ladder(1, 1, HALF, True)

    def assertFractions(self, first, second, msg=None):
        """Compare two iterables of rationals (or anything :class:`.Fraction` accepts) element by element"""
        self.assertEqual([Fraction(x) for x in first], [Fraction(x) for x in second], msg=msg)


class BaseStoreTest(BaseScatterTest):
    @classmethod
    def setUpClass(cls) -> None:
        adapter = SqliteAdapter(db=':memory:')
        cls.rm = ReportManager(adapter=adapter)

    def setUp(self) -> None:
        self.rm.adapter.recreate_schemas()

    def tearDown(self) -> None:
        self.rm.adapter.drop_schemas()
