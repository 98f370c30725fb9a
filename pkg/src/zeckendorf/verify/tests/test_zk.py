from unittest import TestCase, main

from zeckendorf.exceptions import RangeError
from zeckendorf.verify import check_zk, check_zpair
from zeckendorf.verify.zk import Zk
from zeckendorf.verify.zpair import Zpair


class Broken(Zk):
    # drops the last element of every closed-form list
    def _closed_form(self, k, high):
        return super()._closed_form(k, high)[:-1]


class TestZk(TestCase):

    def test_default_k_max(self):
        report = check_zk(10 ** 5)
        self.assertTrue(report.passed, report.mismatches)
        self.assertEqual(Zk(n=10)._k_max, 15)

    def test_split(self):
        report = check_zk(10 ** 5, k_max=15, workers=4)
        self.assertTrue(report.passed, report.mismatches)

    def test_k_max_range(self):
        with self.assertRaises(RangeError):
            Zk(n=10, k_max=1).run()

    def test_mismatch_reported(self):
        report = Broken(n=10, k_max=3).run()
        self.assertFalse(report.passed)
        labels = {m.reason for m in report.mismatches}
        self.assertEqual(labels, {'Z(2)', 'Z(3)'})
        # 10 holds F_3, the closed form no longer lists it
        self.assertIn((10, False, True), [(m.n, m.expected, m.actual)
                                          for m in report.mismatches])


class TestZpair(TestCase):

    def test_default_k_max(self):
        report = check_zpair(10 ** 5)
        self.assertTrue(report.passed, report.mismatches)
        self.assertEqual(Zpair(n=10)._k_max, 12)

    def test_split(self):
        report = check_zpair(10 ** 5, k_max=12, workers=3)
        self.assertTrue(report.passed, report.mismatches)


if __name__ == '__main__':
    main()
