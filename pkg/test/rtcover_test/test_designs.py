# -*- coding: utf-8 -*-
from itertools import combinations
from unittest import TestCase
try:
    from unittest.mock import patch
except ImportError:
    from mock import patch

import numpy as np

from rtcover.designs import OrderedArray
from rtcover.designs import Violation
from rtcover.designs import check_oca_parameters
from rtcover.designs import is_ooa
from rtcover.designs import verified
from rtcover.designs import verify_oca
from rtcover.errors import ConstructionError
from rtcover.errors import InvalidArgumentError
from rtcover.metric import digits


EXAMPLE_ROWS = (
    (0, 1, 0, 1, 0, 1, 0, 1),
    (1, 1, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 1, 0, 1, 0),
    (1, 0, 0, 0, 1, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 1),
)


class OrderedArrayTest(TestCase):

    def setUp(self):
        self.array = OrderedArray(EXAMPLE_ROWS, t=2, m=4, s=2, v=2)

    def test_parameters(self):
        """ Parameters of the example array.
        """
        self.assertEqual(self.array.parameters, (5, 2, 4, 2, 2, 1))
        self.assertEqual(repr(self.array), "OCA_1(5;2,4,2,2)")
        self.assertEqual(self.array.column(3).tolist(), [0, 1, 1, 0, 0])
        self.assertEqual(self.array.rows()[1], (1, 1, 1, 0, 0, 0, 0, 0))

    def test_immutable(self):
        """ The entries can not be changed.
        """
        with self.assertRaises(ValueError):
            self.array.entries[0, 0] = 1

    def test_bad_parameters(self):
        """ Strength, depth and alphabet ranges are checked.
        """
        with self.assertRaises(InvalidArgumentError):
            check_oca_parameters(3, 2, 4, 2)  # s > t
        with self.assertRaises(InvalidArgumentError):
            check_oca_parameters(1, 2, 1, 2)
        with self.assertRaises(InvalidArgumentError):
            check_oca_parameters(5, 2, 2, 2)  # t > ms
        with self.assertRaises(InvalidArgumentError):
            check_oca_parameters(2, 2, 2, 1)
        with self.assertRaises(InvalidArgumentError):
            check_oca_parameters(2, 2, 2, 2, lam=0)

    def test_bad_entries(self):
        with self.assertRaises(InvalidArgumentError):
            OrderedArray([[0, 1, 2, 0]], t=2, m=2, s=2, v=2)
        with self.assertRaises(InvalidArgumentError):
            OrderedArray([[0, 1, 1]], t=2, m=2, s=2, v=2)

    def test_empty(self):
        array = OrderedArray([], t=2, m=2, s=1, v=2)
        self.assertEqual(array.N, 0)
        self.assertFalse(verify_oca(array).valid)

    def test_delete_columns(self):
        """ Deleting columns changes the parameters given.
        """
        smaller = self.array.delete_columns([2, 3], m=3)
        self.assertEqual(smaller.parameters, (5, 2, 3, 2, 2, 1))
        self.assertEqual(smaller.rows()[2], (0, 0, 1, 0, 1, 0))

    def test_equality(self):
        same = OrderedArray(np.array(EXAMPLE_ROWS), t=2, m=4, s=2, v=2)
        self.assertEqual(same, self.array)
        self.assertEqual(hash(same), hash(self.array))
        self.assertNotEqual(same.with_entries(same.entries, lam=2),
                            self.array)


class VerifyTest(TestCase):

    def test_example(self):
        """ The example array covers all its anti-ideals.
        """
        report = verify_oca(OrderedArray(EXAMPLE_ROWS, t=2, m=4, s=2, v=2))
        self.assertTrue(report.valid)
        self.assertTrue(report)
        self.assertEqual(report.checked, 10)
        self.assertEqual(report.min_multiplicity, 1)
        self.assertEqual(report.to_dict()["violations"], [])

    def test_mutation_is_found(self):
        """ Flipping the only 1 of the last row in column 8 loses the tuple
        (1, 1) on labels 7 and 8.
        """
        rows = [list(row) for row in EXAMPLE_ROWS]
        rows[4][7] = 0
        report = verify_oca(OrderedArray(rows, t=2, m=4, s=2, v=2))
        self.assertFalse(report.valid)
        self.assertIn("valid: no", report.to_text())

    def test_first_violation(self):
        """ An all zero array misses (0,1) on the first anti-ideal.
        """
        zeros = OrderedArray(np.zeros((5, 8)), t=2, m=4, s=2, v=2)
        report = verify_oca(zeros)
        self.assertEqual(len(report.violations), 30)
        self.assertEqual(report.violations[0],
                         Violation((0, 0, 0, 2), (0, 1), 0))
        self.assertEqual(report.max_multiplicity, 5)

    def test_truncated(self):
        """ Violations stop at max_violations.
        """
        zeros = OrderedArray(np.zeros((5, 8)), t=2, m=4, s=2, v=2)
        report = verify_oca(zeros, max_violations=5)
        self.assertEqual(len(report.violations), 5)
        self.assertTrue(report.truncated)
        self.assertIn("violations: 5+", report.to_text())

    def test_lambda(self):
        """ Every tuple twice is index 2.
        """
        rows = np.concatenate([digits(np.arange(4), 2, 2)] * 2)
        array = OrderedArray(rows, t=2, m=1, s=2, v=2, lam=2)
        self.assertTrue(verify_oca(array).valid)
        self.assertTrue(is_ooa(array))
        self.assertFalse(verify_oca(
            array.with_entries(rows[1:], lam=2)).valid)

    def test_is_ooa(self):
        full = OrderedArray(digits(np.arange(4), 2, 2), t=2, m=1, s=2, v=2)
        self.assertTrue(is_ooa(full))
        self.assertFalse(
            is_ooa(OrderedArray(EXAMPLE_ROWS, t=2, m=4, s=2, v=2)))

    def test_verified(self):
        """ verified raises on a rejected array.
        """
        array = OrderedArray(EXAMPLE_ROWS, t=2, m=4, s=2, v=2)
        self.assertIs(verified(array), array)
        with patch("rtcover.designs._LOG"):  # hide log
            with self.assertRaises(ConstructionError):
                verified(array.with_entries(np.zeros((5, 8))))


def _covers_all_subsets(entries, t, v):
    """ Plain covering array check: every t columns show all v^t tuples.
    """
    return all(
        len(set(map(tuple, entries[:, list(columns)]))) == v ** t
        for columns in combinations(range(entries.shape[1]), t))


def _shape(report):
    return sorted((v.depths, v.observed) for v in report.violations)


class VerifyInvarianceTest(TestCase):

    def setUp(self):
        self.patcher = patch("rtcover.designs._LOG")
        self.patcher.start()
        self.rng = np.random.default_rng(2024)

    def tearDown(self):
        self.patcher.stop()

    def _random_arrays(self, count, n, v=2):
        for _ in range(count):
            yield OrderedArray(self.rng.integers(0, v, size=(n, 8)),
                               t=2, m=4, s=2, v=v)

    def test_row_order(self):
        """ Reordering rows changes nothing in the report.
        """
        arrays = [OrderedArray(EXAMPLE_ROWS, t=2, m=4, s=2, v=2)]
        arrays.extend(self._random_arrays(20, 6))
        for array in arrays:
            shuffled = array.with_entries(
                array.entries[self.rng.permutation(array.N)])
            first = verify_oca(array, max_violations=10 ** 6)
            second = verify_oca(shuffled, max_violations=10 ** 6)
            self.assertEqual(first.violations, second.violations)
            self.assertEqual(first.min_multiplicity, second.min_multiplicity)
            self.assertEqual(first.max_multiplicity, second.max_multiplicity)

    def test_symbol_relabeling(self):
        """ Permuting the symbols of each column on its own keeps validity
        and the number of missing tuples per anti-ideal.
        """
        arrays = [OrderedArray(EXAMPLE_ROWS, t=2, m=4, s=2, v=2)]
        arrays.extend(self._random_arrays(10, 6))
        arrays.extend(self._random_arrays(10, 12, v=3))
        for array in arrays:
            entries = array.entries.copy()
            for column in range(entries.shape[1]):
                entries[:, column] = self.rng.permutation(
                    array.v)[entries[:, column]]
            relabeled = array.with_entries(entries)
            first = verify_oca(array, max_violations=10 ** 6)
            second = verify_oca(relabeled, max_violations=10 ** 6)
            self.assertEqual(first.valid, second.valid)
            self.assertEqual(_shape(first), _shape(second))
            self.assertEqual(first.min_multiplicity, second.min_multiplicity)

    def test_more_rows_keep_coverage(self):
        """ Appending rows to a valid array keeps it valid and never adds
        violations to an invalid one.
        """
        arrays = [OrderedArray(EXAMPLE_ROWS, t=2, m=4, s=2, v=2)]
        arrays.extend(self._random_arrays(20, 5))
        for array in arrays:
            before = verify_oca(array, max_violations=10 ** 6)
            extra = self.rng.integers(0, 2, size=(3, 8))
            after = verify_oca(
                array.with_entries(np.concatenate([array.entries, extra])),
                max_violations=10 ** 6)
            self.assertLessEqual(len(after.violations),
                                 len(before.violations))
            if before.valid:
                self.assertTrue(after.valid)

    def test_depth_one_is_a_covering_array(self):
        """ With s=1 the verifier agrees with a plain check over all
        t-subsets of columns.
        """
        for index in range(50):
            t = 2 if index % 2 else 3
            n = int(self.rng.integers(5, 13))
            entries = self.rng.integers(0, 2, size=(n, 5))
            expected = _covers_all_subsets(entries, t, 2)
            array = OrderedArray(entries, t=t, m=5, s=1, v=2)
            self.assertEqual(verify_oca(array).valid, expected)
