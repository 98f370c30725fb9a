from unittest import TestCase, main

from zeckendorf.exceptions import ZeckendorfError, RangeError, UnknownCheck
from zeckendorf.verify import (Check, CHECKS, load_check, run_all,
                               sweep_counts)
from zeckendorf.verify.table1 import Table1
from zeckendorf.verify.zpair import Zpair


class TestCheck(TestCase):

    def test_arguments(self):
        class Test(Check):
            def _init_arguments(self):
                return {
                    "required": ["n", "a"],
                    "optional": {
                        "b": 12,
                        "c": [1, 2, 4]
                    }
                }
        with self.assertRaises(ZeckendorfError):
            Test(n=10)
        with self.assertRaises(ZeckendorfError):
            Test(a=5, b=2, c=4)
        test = Test(n=10, a=5)
        self.assertEqual(test._n, 10)
        self.assertEqual(test._a, 5)
        self.assertEqual(test._b, 12)
        self.assertEqual(test._c, [1, 2, 4])
        self.assertEqual(test._workers, 1)
        self.assertFalse(test._audit)
        test = Test(n=10, a=1, b=2, c=3, workers=3)
        self.assertEqual(test._b, 2)
        self.assertEqual(test._c, 3)
        self.assertEqual(test._workers, 3)

    def test_name(self):
        self.assertEqual(Table1(n=10).name, 'table1')
        self.assertEqual(Zpair(n=10).name, 'zpair')

    def test_base_counts(self):
        report = Check(n=10).run()
        self.assertEqual((report.count_up, report.count_down,
                          report.count_flat), (3, 2, 5))
        self.assertTrue(report.passed)

    def test_limit_range(self):
        with self.assertRaises(RangeError):
            Check(n=0).run()
        with self.assertRaises(TypeError):
            Check(n=10.0).run()
        with self.assertRaises(RangeError):
            Check(n=10, workers=0).run()

    def test_skip(self):
        class Wide(Check):
            window = 2
            min_limit = 3

        self.assertIsNone(Wide(n=3).skip_reason())
        self.assertIn('needs 3 <= N', Wide(n=2).skip_reason())
        with self.assertRaises(RangeError):
            Wide(n=2).run()
        report = Wide(n=2).run_or_skip()
        self.assertTrue(report.skipped.startswith('needs 3 <= N'))
        self.assertTrue(report.passed)
        self.assertEqual(report.counted, 0)
        self.assertEqual(report.as_dict()['skipped'], report.skipped)
        self.assertIsNone(Wide(n=10).run_or_skip().skipped)

    def test_mismatches(self):
        class Short(Check):
            def _visit(self, n, frames, context, report):
                if frames[0].length > 2:
                    report.record(n, '<= 2', frames[0].length)

        report = Short(n=100, mismatch_cap=5).run()
        self.assertFalse(report.passed)
        # 12 is the first integer with three summands
        self.assertEqual(report.mismatches[0].n, 12)
        self.assertEqual(len(report.mismatches), 5)
        self.assertGreater(report.mismatch_total, 5)
        ordered = [m.n for m in report.mismatches]
        self.assertEqual(ordered, sorted(ordered))

    def test_window(self):
        seen = []

        class Window(Check):
            window = 3

            def _visit(self, n, frames, context, report):
                seen.append([frame.value for frame in frames])

        Window(n=5).run()
        self.assertEqual(seen[0], [1, 2, 3, 4])
        self.assertEqual(seen[-1], [5, 6, 7, 8])
        self.assertEqual(len(seen), 5)

    def test_progress(self):
        calls = []

        class Slow(Check):
            progress_every = 10

        Slow(n=25, progress=lambda *args: calls.append(args)).run()
        self.assertEqual(calls, [('slow', 1, 25), ('slow', 11, 25),
                                 ('slow', 21, 25)])


class TestRegistry(TestCase):

    def test_load_check(self):
        for name in CHECKS:
            check = load_check(name)
            self.assertTrue(issubclass(check, Check))
            self.assertEqual(check(n=10).name, name)

    def test_unknown(self):
        with self.assertRaises(UnknownCheck):
            load_check('table2')

    def test_sweep_counts(self):
        report = sweep_counts(100)
        self.assertEqual((report.count_up, report.count_down,
                          report.count_flat), (38, 23, 39))

    def test_run_all(self):
        reports = run_all(1000, samples=100)
        self.assertEqual([report.check for report in reports], list(CHECKS))
        for report in reports:
            self.assertTrue(report.passed, report.as_dict())

    def test_run_all_skips_uncovered(self):
        reports = run_all(1, samples=10)
        self.assertEqual([report.check for report in reports], list(CHECKS))
        skipped = [report.check for report in reports if report.skipped]
        self.assertEqual(skipped, ['extrema'])
        for report in reports:
            self.assertTrue(report.passed, report.as_dict())
        table1 = reports[CHECKS.index('table1')]
        self.assertEqual(table1.count_flat, 1)


if __name__ == '__main__':
    main()
