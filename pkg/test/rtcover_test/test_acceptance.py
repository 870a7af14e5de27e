# -*- coding: utf-8 -*-
from unittest import TestCase
try:
    from unittest.mock import patch
except ImportError:
    from mock import patch

from rtcover.acceptance import CHECKS
from rtcover.acceptance import _small_instances
from rtcover.acceptance import run_acceptance_suite
from rtcover.codes import Code
from rtcover.errors import DependencyError
from rtcover.poset import RTPoset
from rtcover.search import SearchResult


def _checks(*numbers):
    return [check for check in CHECKS if check[0] in numbers]


class AcceptanceTest(TestCase):

    def setUp(self):
        self.patchers = [patch("rtcover.{}._LOG".format(name)) for name in (
            "acceptance", "bounds", "codes", "constructions", "search")]
        for patcher in self.patchers:
            patcher.start()

    def tearDown(self):
        for patcher in self.patchers:
            patcher.stop()

    def test_constructive_items(self):
        """ The construction items pass.
        """
        report = run_acceptance_suite(checks=_checks(1, 4, 6, 7, 8))
        self.assertTrue(report.passed, report.to_text())
        self.assertEqual([item.number for item in report.items],
                         [1, 4, 6, 7, 8])

    def test_oracle_items(self):
        """ Items checked against brute force and search pass for another seed.
        """
        report = run_acceptance_suite(seed=3, checks=_checks(2, 3, 5))
        self.assertTrue(report.passed, report.to_text())
        self.assertIn("listed words uncovered", report.items[2].detail)

    def test_depth_extension_item(self):
        """ Both depths are searched exactly and agree, the extended array
        realises the value.
        """
        report = run_acceptance_suite(checks=_checks(9))
        self.assertTrue(report.passed, report.to_text())
        detail = report.items[0].detail
        for part in ("(2,2) N=4 deep=4", "(2,3) N=4 deep=4",
                     "(3,2) N=8 deep=8", "(3,3) N=8 deep=8"):
            self.assertIn(part, detail)

    def test_inexact_search_fails_the_item(self):
        """ A search that runs out of budget fails item 9.
        """
        with patch("rtcover.acceptance.exact_ocan",
                   return_value=SearchResult(3, 5, None, 1)):
            report = run_acceptance_suite(checks=_checks(9))
        self.assertFalse(report.passed)
        self.assertIn("inexact search FAILED", report.items[0].detail)

    def test_output_is_reproducible(self):
        """ Two runs render the same text.
        """
        first = run_acceptance_suite(checks=_checks(1, 6))
        second = run_acceptance_suite(checks=_checks(1, 6))
        self.assertEqual(first.to_text(), second.to_text())
        self.assertEqual(first.to_csv(), second.to_csv())

    def test_broken_construction_fails(self):
        """ A two chain code with a single word must fail its item.
        """
        def broken(v, s):
            return Code(v, RTPoset(2, s), [(0,) * (2 * s)], s)

        with patch("rtcover.acceptance.two_chain_code", broken):
            report = run_acceptance_suite(checks=_checks(6))
        self.assertFalse(report.passed)
        self.assertIn("FAILED", report.items[0].detail)

    def test_errors_fail_the_item(self):
        """ A check raising an rtcover error fails its item, the suite goes on.
        """
        def failing(seed):
            raise DependencyError("no array")

        report = run_acceptance_suite(checks=[(11, "failing", failing)])
        self.assertFalse(report.passed)
        self.assertEqual(report.items[0].detail, "error: no array")
        self.assertEqual(report.to_dict()["items"][0]["passed"], False)

    def test_report_formats(self):
        report = run_acceptance_suite(checks=_checks(1))
        self.assertTrue(report.to_text().startswith(
            "[PASS]  1 example OCA(5;2,4,2,2): "))
        self.assertTrue(report.to_text().endswith("1 of 1 passed"))
        self.assertTrue(report.to_csv().startswith(
            "number,title,passed,detail\n1,"))

    def test_small_instances(self):
        """ Every small instance fits the point limit and has 1 <= R < ms.
        """
        instances = list(_small_instances(64))
        self.assertIn((2, 2, 2, 2), instances)
        self.assertIn((8, 2, 1, 1), instances)
        self.assertNotIn((9, 2, 1, 1), instances)
        self.assertTrue(all(q ** (m * s) <= 64 and 0 < R < m * s
                            for q, m, s, R in instances))
