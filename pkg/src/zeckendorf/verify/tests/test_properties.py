from unittest import TestCase, main

from zeckendorf.core import decompose
from zeckendorf.exceptions import RangeError
from zeckendorf.verify import (check_roundtrip, check_uniqueness,
                               check_successor, check_lemmas, check_kernel)
from zeckendorf.verify.uniqueness import Uniqueness
from zeckendorf.verify.libs.oracle import enumerate_partitions


class TestRoundtrip(TestCase):

    def test_million(self):
        report = check_roundtrip(10 ** 6, workers=4)
        self.assertTrue(report.passed, report.mismatches)


class TestUniqueness(TestCase):

    def test_enumerate_partitions(self):
        found = enumerate_partitions(1, 20, 10)
        self.assertEqual(found[12], [(2, 4, 6)])
        self.assertEqual(found[13], [(7,)])
        self.assertEqual(sorted(found), list(range(1, 21)))
        for total, subsets in found.items():
            self.assertEqual(subsets, [decompose(total).indices])

    def test_hundred_thousand(self):
        report = check_uniqueness(10 ** 5, workers=2)
        self.assertTrue(report.passed, report.mismatches)

    def test_max_index_too_small(self):
        # F_11 = 89 cannot reach 100 with indices up to 10
        with self.assertRaises(RangeError):
            Uniqueness(n=100, max_index=10).run()
        self.assertTrue(Uniqueness(n=88, max_index=10).run().passed)
        self.assertIn('F_11 = 89', Uniqueness(n=100, max_index=10)
                      .skip_reason())
        self.assertIsNone(Uniqueness(n=88, max_index=10).skip_reason())

    def test_index_limit_follows_n(self):
        # F_11 = 89 <= 100 < F_12 = 144
        report = Uniqueness(n=100).run()
        self.assertTrue(report.passed, report.mismatches)
        self.assertEqual(report.details['max_index'], 11)
        # F_31 = 1346269, beyond the reach of indices up to 30
        self.assertEqual(Uniqueness(n=1346270).index_limit, 31)
        self.assertIsNone(Uniqueness(n=1346270).skip_reason())
        self.assertEqual(Uniqueness(n=1346268).index_limit, 30)
        self.assertEqual(Uniqueness(n=100, max_index=12).index_limit, 12)


class TestSuccessor(TestCase):

    def test_million(self):
        report = check_successor(10 ** 6, workers=4)
        self.assertTrue(report.passed, report.mismatches)


class TestLemmas(TestCase):

    def test_million(self):
        report = check_lemmas(10 ** 6, workers=4)
        self.assertTrue(report.passed, report.mismatches)


class TestKernel(TestCase):

    def test_small(self):
        report = check_kernel(10 ** 4, samples=1000, seed=7)
        self.assertTrue(report.passed, report.mismatches)
        self.assertEqual(report.details['samples'], 1000)
        self.assertEqual(report.details['dps'], 50)

    def test_million(self):
        report = check_kernel(10 ** 6, workers=4)
        self.assertTrue(report.passed, report.mismatches)


if __name__ == '__main__':
    main()
