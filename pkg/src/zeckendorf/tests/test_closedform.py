import math
import itertools
from fractions import Fraction
from unittest import TestCase, main

import mpmath
from hypothesis import given, settings, strategies as st

from zeckendorf.config import MAX_VALUE
from zeckendorf.core import decompose, step, DEFAULT_TABLE
from zeckendorf.closedform import (MAX_KERNEL_INPUT, floor_n_phi,
                                   floor_div_phi, floor_phi_shift,
                                   s1_element, s2_element, s3_element,
                                   up_element_alt, down_element_alt,
                                   zk_elements, zpair_elements, zk_block,
                                   zk_membership, zpair_membership,
                                   SetId, Family, S1, S2, S3, membership,
                                   iter_elements, elements, containing_sets,
                                   limit_densities)
from zeckendorf.exceptions import RangeError, UnknownSet


class TestKernel(TestCase):

    def setUp(self):
        mpmath.mp.dps = 60
        self.phi = (1 + mpmath.sqrt(5)) / 2

    def tearDown(self):
        mpmath.mp.dps = 15

    def test_examples(self):
        self.assertEqual(floor_n_phi(0), 0)
        self.assertEqual(floor_n_phi(1), 1)
        self.assertEqual(floor_n_phi(2), 3)
        self.assertEqual(floor_n_phi(10 ** 6), 1618033)
        self.assertEqual(floor_div_phi(0), 0)
        self.assertEqual(floor_div_phi(2), 1)
        self.assertEqual(floor_div_phi(4), 2)
        self.assertEqual(floor_phi_shift(0), 1)
        self.assertEqual(floor_phi_shift(1), 2)
        self.assertEqual(floor_phi_shift(3), 3)

    def test_range(self):
        with self.assertRaises(RangeError):
            floor_n_phi(-1)
        with self.assertRaises(RangeError):
            floor_n_phi(MAX_KERNEL_INPUT + 1)
        # the ceiling itself is still exact
        floor_n_phi(MAX_KERNEL_INPUT)

    def test_small_inputs(self):
        for m in range(5000):
            self.assertEqual(floor_n_phi(m), int(mpmath.floor(m * self.phi)))

    @given(st.integers(min_value=0, max_value=MAX_KERNEL_INPUT))
    @settings(max_examples=500)
    def test_against_mpmath(self, m):
        self.assertEqual(floor_n_phi(m), int(mpmath.floor(m * self.phi)))

    @given(st.integers(min_value=0, max_value=10 ** 30))
    def test_isqrt_brackets(self, m):
        root = math.isqrt(5 * m * m)
        self.assertLessEqual(root * root, 5 * m * m)
        self.assertGreater((root + 1) * (root + 1), 5 * m * m)


class TestGenerators(TestCase):

    def test_first_elements(self):
        self.assertEqual([s1_element(i) for i in range(1, 6)],
                         [3, 5, 8, 11, 13])
        self.assertEqual([s2_element(i) for i in range(1, 6)],
                         [4, 7, 12, 17, 20])
        self.assertEqual([s3_element(i) for i in range(3)], [3, 11, 16])

    def test_parameter_range(self):
        with self.assertRaises(RangeError):
            s1_element(0)
        with self.assertRaises(RangeError):
            s2_element(0)
        with self.assertRaises(RangeError):
            s3_element(-1)

    def test_alternative_forms(self):
        # every parameter whose element stays within [1, 10**6]
        for element, alt in ((s1_element, up_element_alt),
                             (s2_element, down_element_alt)):
            i = 1
            while element(i) <= 10 ** 6:
                self.assertEqual(alt(i), element(i), i)
                i += 1
            self.assertGreater(alt(i), 10 ** 6)

    @given(st.integers(min_value=1, max_value=10 ** 18))
    def test_alternative_forms_large(self, i):
        self.assertEqual(up_element_alt(i), s1_element(i))
        self.assertEqual(down_element_alt(i), s2_element(i))

    def test_sets_match_steps(self):
        up = set(elements(S1, limit=2000))
        down = set(elements(S2, limit=2000))
        for n in range(1, 2001):
            f = step(n)
            self.assertEqual(n in up, f > 0, n)
            self.assertEqual(n in down, f < 0, n)


class TestBlocks(TestCase):

    def test_zk_examples(self):
        self.assertEqual(zk_elements(2, 10), [1, 4, 6, 9])
        self.assertEqual(zk_elements(3, 10), [2, 7, 10])
        self.assertEqual(zk_elements(4, 12), [3, 4, 11, 12])
        self.assertEqual(zk_block(4, 1), (11, 2))

    def test_zpair_examples(self):
        self.assertEqual(zpair_elements(2, 20), [4, 12, 17])
        self.assertEqual(zpair_elements(3, 20), [7, 20])
        self.assertEqual(zpair_elements(2, 3), [])

    def test_k_range(self):
        with self.assertRaises(RangeError):
            zk_elements(1, 10)
        with self.assertRaises(RangeError):
            zpair_elements(DEFAULT_TABLE.max_index, 10)

    def test_against_partitions(self):
        limit = 10 ** 4
        partitions = [decompose(n).indices for n in range(limit + 1)]
        for k in range(2, 16):
            expected = [n for n in range(1, limit + 1) if k in partitions[n]]
            self.assertEqual(zk_elements(k, limit), expected, k)
        for k in range(2, 13):
            expected = [n for n in range(1, limit + 1)
                        if k in partitions[n] and k + 2 in partitions[n]]
            self.assertEqual(zpair_elements(k, limit), expected, k)


class TestSetId(TestCase):

    def test_parse(self):
        self.assertEqual(SetId.parse('s1'), S1)
        self.assertEqual(SetId.parse('S2'), S2)
        self.assertEqual(SetId.parse('zk', 3), SetId(Family.ZK, 3))
        self.assertEqual(str(SetId.parse('zk', 3)), 'Z(3)')
        self.assertEqual(str(SetId.parse('zpair', 2)), 'Z(2,4)')
        self.assertEqual(str(S3), 'S3')

    def test_invalid(self):
        with self.assertRaises(UnknownSet):
            SetId.parse('s4')
        with self.assertRaises(UnknownSet):
            SetId.parse('zk')
        with self.assertRaises(UnknownSet):
            SetId.parse('s1', 3)
        with self.assertRaises(RangeError):
            SetId.parse('zpair', 1)


class TestMembership(TestCase):

    def test_examples(self):
        self.assertTrue(membership(S1, 3))
        self.assertFalse(membership(S1, 4))
        self.assertTrue(membership(S2, 4))
        self.assertTrue(membership(S3, 11))
        self.assertFalse(membership(S3, 12))
        self.assertTrue(membership(SetId(Family.ZK, 3), 7))
        self.assertFalse(membership(SetId(Family.ZK, 3), 8))
        self.assertTrue(membership(SetId(Family.ZPAIR, 2), 17))

    def test_matches_elements(self):
        for set_id in (S1, S2, S3, SetId(Family.ZK, 5),
                       SetId(Family.ZPAIR, 4)):
            members = set(elements(set_id, limit=3000))
            for n in range(1, 3001):
                self.assertEqual(membership(set_id, n), n in members,
                                 (str(set_id), n))

    @given(st.integers(min_value=1, max_value=MAX_VALUE - 1))
    def test_s1_is_rising(self, n):
        self.assertEqual(membership(S1, n), step(n) > 0)

    @given(st.integers(min_value=1, max_value=MAX_VALUE - 1))
    def test_s2_is_falling(self, n):
        self.assertEqual(membership(S2, n), step(n) < 0)

    def test_ceiling(self):
        for set_id in (S1, S2, S3, SetId(Family.ZK, 40)):
            self.assertIsInstance(membership(set_id, MAX_VALUE), bool)
        with self.assertRaises(RangeError):
            membership(S1, 0)

    def test_block_membership(self):
        for n in range(1, 3000):
            indices = decompose(n).indices
            for k in (2, 3, 7):
                self.assertEqual(zk_membership(k, n), k in indices, (k, n))
                self.assertEqual(zpair_membership(k, n),
                                 k in indices and k + 2 in indices, (k, n))

    def test_containing_sets(self):
        self.assertEqual(containing_sets(3), [S1, S3])
        self.assertEqual(containing_sets(4), [S2])
        self.assertEqual(containing_sets(1), [])


class TestElements(TestCase):

    def test_limit_and_count(self):
        self.assertEqual(elements(S1, limit=10), [3, 5, 8])
        self.assertEqual(elements(S3, count=3), [3, 11, 16])
        self.assertEqual(elements(SetId(Family.ZK, 3), limit=10), [2, 7, 10])
        self.assertEqual(elements(SetId(Family.ZK, 3), count=4),
                         [2, 7, 10, 15])
        self.assertEqual(elements(S1, limit=0), [])
        self.assertEqual(elements(S1, count=0), [])

    def test_exactly_one_bound(self):
        with self.assertRaises(ValueError):
            elements(S1)
        with self.assertRaises(ValueError):
            elements(S1, limit=10, count=3)

    def test_iter_from(self):
        self.assertEqual(list(itertools.islice(iter_elements(S1, 6), 3)),
                         [8, 11, 13])
        self.assertEqual(list(itertools.islice(iter_elements(S2, 4), 2)),
                         [4, 7])
        zk = SetId(Family.ZK, 4)
        self.assertEqual(list(itertools.islice(iter_elements(zk, 4), 4)),
                         [4, 11, 12, 16])


class TestLimitDensities(TestCase):

    def test_values(self):
        limits = limit_densities()
        self.assertEqual(limits.up, limits.flat)
        self.assertLess(abs(limits.up
                            - Fraction('0.381966011250105151795413165634')),
                        Fraction(1, 10 ** 29))
        self.assertLess(abs(limits.down
                            - Fraction('0.236067977499789696409173668731')),
                        Fraction(1, 10 ** 29))
        self.assertEqual(limits.error, Fraction(1, 10 ** 30))

    def test_sum_to_one(self):
        limits = limit_densities(digits=50)
        total = limits.up + limits.down + limits.flat
        self.assertLess(abs(total - 1), 3 * limits.error)


if __name__ == '__main__':
    main()
