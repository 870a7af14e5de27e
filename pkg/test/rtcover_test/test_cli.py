# -*- coding: utf-8 -*-
import io
import json
import logging
import os
from tempfile import TemporaryDirectory
from unittest import TestCase
try:
    from unittest.mock import patch
except ImportError:
    from mock import patch

from rtcover.acceptance import AcceptanceItem
from rtcover.acceptance import AcceptanceReport
from rtcover.cli import EXIT_BUDGET
from rtcover.cli import EXIT_INVALID
from rtcover.cli import EXIT_OK
from rtcover.cli import EXIT_USAGE
from rtcover.cli import RunConfig
from rtcover.cli import dispatch
from rtcover.errors import InvalidArgumentError
from rtcover.files import read_array
from rtcover.files import read_code


EXAMPLE = """\
oca t=2 m=4 s=2 v=2 lambda=1 n=5
0 1 0 1 0 1 0 1
1 1 1 0 0 0 0 0
0 0 1 1 1 0 1 0
1 0 0 0 1 1 0 0
0 0 0 0 0 0 1 1
"""


class CLITest(TestCase):

    def setUp(self):
        self.directory = TemporaryDirectory()
        self.patchers = [patch("rtcover.{}._LOG".format(name)) for name in (
            "cli", "bounds", "codes", "constructions", "designs", "files",
            "search")]
        for patcher in self.patchers:
            patcher.start()

    def tearDown(self):
        for patcher in self.patchers:
            patcher.stop()
        self.directory.cleanup()

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        code = dispatch(list(argv), out, err)
        return code, out.getvalue(), err.getvalue()

    def write(self, name, text):
        with open(self.path(name), "w") as f:
            f.write(text)
        return self.path(name)

    def test_volume(self):
        """ Sphere volume as plain text.
        """
        code, out, _ = self.run_cli("volume", "--q", "2", "--m", "2", "--s",
                                    "3", "--R", "3")
        self.assertEqual((code, out), (EXIT_OK, "20\n"))

    def test_volume_json(self):
        code, out, _ = self.run_cli(
            "volume", "--q", "3", "--m", "2", "--s", "2", "--R", "2",
            "--brute-force", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["volume"], data["brute_force"])

    def test_volume_csv(self):
        _, out, _ = self.run_cli("volume", "--q", "2", "--m", "2", "--s", "2",
                                 "--R", "2", "--format", "csv")
        self.assertEqual(out, "R,m,q,s,volume\n2,2,2,2,8\n")

    def test_bad_radius(self):
        """ An invalid radius is a usage error.
        """
        code, out, err = self.run_cli("volume", "--q", "2", "--m", "2", "--s",
                                      "2", "--R", "5")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("rt-cover: "))

    def test_usage_error(self):
        """ argparse errors map to exit code 2.
        """
        with patch("sys.stderr", new_callable=io.StringIO):
            code, _, _ = self.run_cli("volume", "--q", "2")
        self.assertEqual(code, EXIT_USAGE)

    def test_version(self):
        with patch("sys.stdout", new_callable=io.StringIO) as stdout:
            code, _, _ = self.run_cli("--version")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(stdout.getvalue().startswith("rt-cover "))

    def test_verify_oca(self):
        """ The example array verifies with exit code 0.
        """
        path = self.write("example.oca", EXAMPLE)
        code, out, _ = self.run_cli("verify-oca", path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("anti-ideals checked: 10", out)
        broken = self.write("broken.oca", EXAMPLE.replace(
            "0 0 0 0 0 0 1 1", "0 0 0 0 0 0 1 0"))
        code, out, _ = self.run_cli("verify-oca", broken, "--format", "json")
        self.assertEqual(code, EXIT_INVALID)
        self.assertFalse(json.loads(out)["valid"])

    def test_verify_oca_bad_file(self):
        """ A malformed array file names its line.
        """
        path = self.write("bad.oca", EXAMPLE.replace("n=5", "n=4"))
        code, _, err = self.run_cli("verify-oca", path)
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("line 1", err)
        code, _, _ = self.run_cli("verify-oca", self.path("missing.oca"))
        self.assertEqual(code, EXIT_USAGE)

    def test_construct_and_verify_code(self):
        """ Construct writes a code that verify-code accepts.
        """
        output = self.path("two.code")
        code, out, _ = self.run_cli("construct", "two-chain", "--v", "2",
                                    "--s", "3", "-o", output)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("valid: yes", out)
        self.assertEqual(len(read_code(output)), 6)
        code, _, _ = self.run_cli("verify-code", output)
        self.assertEqual(code, EXIT_OK)
        code, out, _ = self.run_cli("verify-code", output, "--R", "1")
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn("first uncovered", out)

    def test_construct_array_pipeline(self):
        """ Construct arrays from the output of earlier constructions.
        """
        ks = self.path("ks.oca")
        deep = self.path("deep.oca")
        code, _, _ = self.run_cli("construct", "kleitman-spencer", "--m", "5",
                                  "-o", ks)
        self.assertEqual(code, EXIT_OK)
        code, _, _ = self.run_cli("construct", "extend-depth", "--array", ks,
                                  "-o", deep)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(read_array(deep).parameters, (6, 2, 5, 2, 2, 1))

    def test_construct_kind_names(self):
        """ ks-ca and oca-from-ca, with kleitman-spencer and depth2 kept as
        aliases.
        """
        ks = self.path("ks.oca")
        code, _, _ = self.run_cli("construct", "ks-ca", "--m", "3", "-o", ks)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(read_array(ks).parameters, (4, 2, 3, 1, 2, 1))
        for kind in ("oca-from-ca", "depth2"):
            deep = self.path("{}.oca".format(kind))
            code, _, _ = self.run_cli("construct", kind, "--array", ks,
                                      "-o", deep)
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(read_array(deep).parameters, (4, 2, 3, 2, 2, 1))

    def test_alphabet_option_next_to_verbose(self):
        """ --v reaches the subcommand even though the main parser knows
        --verbose and --version.
        """
        code, out, _ = self.run_cli(
            "-vv", "bounds", "--kind", "OCAN", "--t", "2", "--m", "3",
            "--s", "1", "--v", "2", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["params"]["v"], 2)
        code, _, _ = self.run_cli("construct", "fused-oca", "--t", "2",
                                  "--m", "4", "--s", "2", "--v", "2",
                                  "-o", self.path("fused.oca"))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(read_array(self.path("fused.oca")).N, 7)

    def test_construct_missing_input(self):
        """ Constructions reading an input file need it.
        """
        code, _, err = self.run_cli("construct", "rs-ooa", "--q", "3",
                                    "-o", self.path("x.oca"))
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("--t", err)
        code, _, _ = self.run_cli("construct", "surjective", "--q", "3",
                                  "--t", "3", "-o", self.path("x.code"))
        self.assertEqual(code, EXIT_USAGE)
        self.assertFalse(os.path.exists(self.path("x.code")))

    def test_bounds(self):
        """ Bounds with rules, exit code 0.
        """
        code, out, _ = self.run_cli("bounds", "--kind", "K", "--q", "2",
                                    "--m", "2", "--s", "2", "--R", "2",
                                    "--format", "json")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual((data["lower"], data["upper"]), (2, 3))
        self.assertEqual(data["upper_rules"], ["twochains-1"])

    def test_bounds_witness(self):
        """ The witness lands in the given directory.
        """
        code, out, _ = self.run_cli(
            "bounds", "--kind", "OCAN", "--t", "2", "--m", "4", "--s", "2",
            "--v", "2", "--witness-dir", self.directory.name)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("witness: ", out)
        array = read_array(self.path("OCAN_t2_m4_s2_v2.oca"))
        self.assertEqual(array.N, 5)

    def test_bounds_search(self):
        code, out, _ = self.run_cli(
            "bounds", "--kind", "K", "--q", "2", "--m", "2", "--s", "2",
            "--R", "2", "--search", "--max-nodes", "10000")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("K(2,2,2,2): 3 <= K(2,2,2,2) <= 3"))

    def test_table(self):
        """ One row per request line.
        """
        requests = self.write("requests.txt", "K 2 2 2 2\nOCAN 2 3 1 2\n")
        code, out, _ = self.run_cli("table", requests, "--format", "csv")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(out.splitlines()), 3)
        bad = self.write("bad.txt", "K 2 2 2 2\nK 2 2 2\n")
        code, _, _ = self.run_cli("table", bad)
        self.assertEqual(code, EXIT_USAGE)

    def test_search_exact_code(self):
        output = self.path("k.code")
        code, out, _ = self.run_cli("search-exact-code", "--q", "2", "--m",
                                    "2", "--s", "2", "--R", "2", "-o", output)
        self.assertEqual((code, out), (EXIT_OK, "3\n"))
        self.assertEqual(len(read_code(output)), 3)

    def test_search_budget(self):
        """ An inexact search exits with 3.
        """
        code, out, _ = self.run_cli("search-exact-code", "--q", "2", "--m",
                                    "2", "--s", "2", "--R", "2",
                                    "--max-nodes", "1")
        self.assertEqual(code, EXIT_BUDGET)
        self.assertIn("(inexact)", out)
        code, _, _ = self.run_cli("search-exact-code", "--q", "2", "--m",
                                  "3", "--s", "3", "--R", "4",
                                  "--max-points", "100")
        self.assertEqual(code, EXIT_BUDGET)

    def test_search_exact_oca(self):
        output = self.path("ca.oca")
        code, out, _ = self.run_cli("search-exact-oca", "--t", "2", "--m",
                                    "3", "--s", "1", "--v", "2", "-o", output)
        self.assertEqual((code, out), (EXIT_OK, "4\n"))
        self.assertEqual(read_array(output).N, 4)

    def test_accept(self):
        """ The report of the suite is written, a failed item exits with 1.
        """
        report = AcceptanceReport([
            AcceptanceItem(1, "first", True, "fine"),
            AcceptanceItem(2, "second", False, "broken")])
        with patch("rtcover.cli.run_acceptance_suite",
                   return_value=report) as suite:
            code, out, _ = self.run_cli("accept", "--seed", "7")
        suite.assert_called_once_with(seed=7)
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn("[FAIL]  2 second: broken", out)
        self.assertIn("1 of 2 passed", out)


class RunConfigTest(TestCase):

    def test_log_level(self):
        """ Verbosity maps to WARNING, INFO and DEBUG.
        """
        self.assertEqual(RunConfig("volume").log_level, logging.WARNING)
        self.assertEqual(RunConfig("volume", verbosity=1).log_level,
                         logging.INFO)
        self.assertEqual(RunConfig("volume", verbosity=3).log_level,
                         logging.DEBUG)

    def test_point_budget(self):
        with self.assertRaises(InvalidArgumentError):
            RunConfig("volume", point_budget=0)
