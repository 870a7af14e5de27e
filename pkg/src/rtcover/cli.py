# -*- coding: utf-8 -*-
""" The rt-cover command line.

Exit codes: 0 success or valid object, 1 verifier rejected the object, 2
usage or input error, 3 budget exhausted (including inexact searches).
"""
import argparse
import csv
import io
import json
import logging
import sys
from logging import getLogger

from . import __version__
from .acceptance import run_acceptance_suite
from .bounds import BoundsEngine
from .bounds import KIND_K
from .bounds import emit_table
from .bounds import evaluate
from .bounds import record_lines
from .bounds import write_witness
from .codes import constant_code
from .codes import lift_hamming_to_rt
from .codes import product_code
from .codes import surjective_hamming_code
from .codes import three_chain_code
from .codes import trivial_covering
from .codes import two_chain_code
from .codes import verify_covering
from .constructions import DROP_BLOCK
from .constructions import DROP_BOTTOM_LEVEL
from .constructions import extend_depth
from .constructions import fuse
from .constructions import fused_oca_for
from .constructions import kleitman_spencer_ca
from .constructions import oca_depth2_from_ca
from .constructions import ooa_for
from .constructions import restrict
from .constructions import rs_ooa
from .designs import OrderedArray
from .designs import verify_oca
from .errors import ConstructionError
from .errors import InvalidArgumentError
from .errors import RTCoverError
from .errors import ResourceLimitError
from .files import read_array
from .files import read_code
from .files import write_array
from .files import write_code
from .log_msg import LogMsg
from .metric import DEFAULT_POINT_BUDGET
from .metric import sphere_volume
from .metric import sphere_volume_bruteforce
from .search import MAX_COVERING_POINTS
from .search import SearchBudget
from .search import exact_covering_number
from .search import exact_ocan


_LOG = getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

FORMATS = ("text", "json", "csv")

CODE_KINDS = ("trivial", "constant", "surjective", "lift", "product",
              "two-chain", "three-chain")
ARRAY_KINDS = ("ks-ca", "rs-ooa", "ooa", "fused-oca", "fuse", "extend-depth",
               "restrict", "oca-from-ca")
KIND_ALIASES = {"kleitman-spencer": "ks-ca", "depth2": "oca-from-ca"}


class RunConfig(object):
    """ Everything one invocation needs besides the subcommand arguments.
    """

    def __init__(  # pylint: disable=too-many-arguments
            self, command, fmt="text", search=None,
            point_budget=DEFAULT_POINT_BUDGET, witness_dir=None, seed=0,
            verbosity=0):
        if point_budget <= 0:
            raise InvalidArgumentError("Point budget must be positive.")
        self.command = command
        self.fmt = fmt
        self.search = search or SearchBudget()
        self.point_budget = point_budget
        self.witness_dir = witness_dir
        self.seed = seed
        self.verbosity = verbosity

    @staticmethod
    def from_args(args):
        return RunConfig(
            args.command, fmt=args.format,
            search=SearchBudget(args.max_points, args.max_nodes,
                                args.time_limit),
            point_budget=args.point_budget,
            witness_dir=getattr(args, "witness_dir", None),
            seed=args.seed, verbosity=args.verbose)

    @property
    def log_level(self):
        return {0: logging.WARNING, 1: logging.INFO}.get(
            self.verbosity, logging.DEBUG)


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("{} is not positive".format(text))
    return value


def _positive_float(text):
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("{} is not positive".format(text))
    return value


def _common(parser):
    parser.add_argument(
        "--format", choices=FORMATS, default="text",
        help="Output format (default: text)")
    parser.add_argument(
        "--point-budget", type=_positive, default=DEFAULT_POINT_BUDGET,
        help="Largest space an exhaustive verifier may walk")
    parser.add_argument(
        "--max-points", type=_positive, default=10 ** 6,
        help="Largest space a search may enumerate; covering searches "
             "stop at {} points".format(MAX_COVERING_POINTS))
    parser.add_argument(
        "--max-nodes", type=_positive, default=10 ** 6,
        help="Search node limit")
    parser.add_argument(
        "--time-limit", type=_positive_float, default=60.0,
        help="Search time limit in seconds")
    parser.add_argument(
        "--seed", type=int, default=0,
        help="Seed of the randomised spot checks (default: 0)")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="rt-cover",
        allow_abbrev=False,
        description=(
            "Covering codes in RT spaces and ordered covering arrays: "
            "verifiers, constructions, searches and bounds"))
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="Log to stderr, INFO with -v, DEBUG with -vv")
    parser.add_argument(
        "--version", action="version",
        version="rt-cover {}".format(__version__))
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    volume = sub.add_parser("volume", help="RT sphere volume")
    for name in ("--q", "--m", "--s", "--R"):
        volume.add_argument(name, type=int, required=True)
    volume.add_argument(
        "--brute-force", action="store_true",
        help="Also count the ball by walking the space")
    _common(volume)

    verify_oca_cmd = sub.add_parser("verify-oca", help="Verify an array file")
    verify_oca_cmd.add_argument("file")
    verify_oca_cmd.add_argument("--max-violations", type=_positive,
                                default=100)
    _common(verify_oca_cmd)

    verify_code_cmd = sub.add_parser("verify-code", help="Verify a code file")
    verify_code_cmd.add_argument("file")
    verify_code_cmd.add_argument(
        "--R", type=int, default=None,
        help="Radius (default: the radius in the file)")
    _common(verify_code_cmd)

    construct = sub.add_parser(
        "construct", help="Build, verify and write a code or an array")
    construct.add_argument(
        "kind", choices=CODE_KINDS + ARRAY_KINDS + tuple(KIND_ALIASES))
    for name in ("--q", "--m", "--s", "--R", "--t", "--v", "--index"):
        construct.add_argument(name, type=int, default=None)
    construct.add_argument("--mode", choices=(DROP_BOTTOM_LEVEL, DROP_BLOCK),
                           default=DROP_BOTTOM_LEVEL)
    construct.add_argument("--array", help="Input array file")
    construct.add_argument("--code", help="Input code file")
    construct.add_argument("--ca-file", help="Binary CA for 'surjective'")
    construct.add_argument("-o", "--output", required=True,
                           help="Witness file to write")
    _common(construct)

    bounds = sub.add_parser("bounds", help="Bounds with provenance")
    bounds.add_argument("--kind", choices=("K", "OCAN"), required=True)
    for name in ("--q", "--m", "--s", "--R", "--t", "--v"):
        bounds.add_argument(name, type=int, default=None)
    bounds.add_argument("--witness-dir",
                        help="Write the upper bound witness here")
    bounds.add_argument("--search", action="store_true",
                        help="Run the exact searches within the budget")
    bounds.add_argument("--ca-file", action="append", default=[],
                        help="Verified CA file feeding the CA rules")
    _common(bounds)

    table = sub.add_parser("table", help="Bounds of a request file")
    table.add_argument("requests",
                       help="File with lines 'K q m s R' or 'OCAN t m s v'")
    table.add_argument("--search", action="store_true")
    table.add_argument("--ca-file", action="append", default=[])
    _common(table)

    code_search = sub.add_parser("search-exact-code",
                                 help="Exact covering number")
    for name in ("--q", "--m", "--s", "--R"):
        code_search.add_argument(name, type=int, required=True)
    code_search.add_argument("-o", "--output", help="Witness code file")
    _common(code_search)

    oca_search = sub.add_parser("search-exact-oca", help="Exact OCAN")
    for name in ("--t", "--m", "--s", "--v"):
        oca_search.add_argument(name, type=int, required=True)
    oca_search.add_argument("-o", "--output", help="Witness array file")
    _common(oca_search)

    accept = sub.add_parser("accept", help="Run the acceptance suite")
    _common(accept)
    return parser


def _render(data, text, fmt):
    """ data: flat dict for csv, any JSON value for json. """
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True)
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        keys = sorted(data)
        writer.writerow(keys)
        writer.writerow([
            json.dumps(data[k]) if isinstance(data[k], (list, dict))
            else data[k] for k in keys])
        return out.getvalue().rstrip("\n")
    return text


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise argparse.ArgumentTypeError("{} needs --{}".format(
            args.kind if hasattr(args, "kind") else args.command,
            " --".join(missing)))
    return [getattr(args, n) for n in names]


def _cmd_volume(args, config, out):
    volume = sphere_volume(args.q, args.m, args.s, args.R)
    data = {"q": args.q, "m": args.m, "s": args.s, "R": args.R,
            "volume": volume}
    text = str(volume)
    if args.brute_force:
        data["brute_force"] = sphere_volume_bruteforce(
            args.q, args.m, args.s, args.R, config.point_budget)
        text = "{} (brute force {})".format(volume, data["brute_force"])
    out.write(_render(data, text, config.fmt) + "\n")
    return EXIT_OK


def _cmd_verify_oca(args, config, out):
    array = read_array(args.file)
    report = verify_oca(array, args.max_violations)
    data = report.to_dict()
    if config.fmt == "csv":
        data = {k: v for k, v in data.items() if k != "violations"}
    out.write(_render(data, report.to_text(), config.fmt) + "\n")
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_verify_code(args, config, out):
    code = read_code(args.file)
    report = verify_covering(code, args.R, config.point_budget)
    out.write(_render(report.to_dict(), report.to_text(), config.fmt) + "\n")
    return EXIT_OK if report.valid else EXIT_INVALID


def _build_code(args, config):  # pylint: disable=too-many-return-statements
    kind = args.kind
    if kind == "trivial":
        return trivial_covering(*_require(args, "q", "m", "s", "R"))
    if kind == "constant":
        return constant_code(*_require(args, "q", "m", "s", "R"))
    if kind == "surjective":
        q, t = _require(args, "q", "t")
        ca = read_array(args.ca_file) if args.ca_file else None
        return surjective_hamming_code(q, t, ca)
    if kind == "lift":
        path, s = _require(args, "code", "s")
        return lift_hamming_to_rt(read_code(path), s, config.point_budget)
    if kind == "product":
        array, code = _require(args, "array", "code")
        return product_code(read_array(array), read_code(code))
    if kind == "two-chain":
        return two_chain_code(*_require(args, "v", "s"))
    return three_chain_code(*_require(args, "v", "s"))


def _build_array(args):  # pylint: disable=too-many-return-statements
    kind = args.kind
    if kind == "ks-ca":
        return kleitman_spencer_ca(*_require(args, "m"))
    if kind == "rs-ooa":
        return rs_ooa(*_require(args, "q", "t"))
    if kind == "ooa":
        return ooa_for(*_require(args, "t", "m", "s", "q"))
    if kind == "fused-oca":
        return fused_oca_for(*_require(args, "t", "m", "s", "v"))
    array = read_array(_require(args, "array")[0])
    if kind == "fuse":
        return fuse(array)
    if kind == "extend-depth":
        return extend_depth(array)
    if kind == "restrict":
        return restrict(array, args.mode, args.index)
    return oca_depth2_from_ca(array)


def _cmd_construct(args, config, out):
    args.kind = KIND_ALIASES.get(args.kind, args.kind)
    if args.kind in CODE_KINDS:
        built = _build_code(args, config)
        report = verify_covering(built, budget=config.point_budget)
    else:
        built = _build_array(args)
        report = verify_oca(built)
    size = built.N if isinstance(built, OrderedArray) else len(built)
    data = dict(report.to_dict(), object=repr(built), size=size)
    if config.fmt == "csv":
        data.pop("violations", None)
    text = "{}\n{}".format(built, report.to_text())
    if not report.valid:
        _LOG.warning(LogMsg("Not writing {}: verifier rejected it.", built))
        out.write(_render(data, text, config.fmt) + "\n")
        return EXIT_INVALID
    if isinstance(built, OrderedArray):
        write_array(built, args.output)
    else:
        write_code(built, args.output)
    out.write(_render(data, text, config.fmt) + "\n")
    return EXIT_OK


def _engine(args, config):
    cas = [read_array(path) for path in args.ca_file]
    return BoundsEngine(config.search if args.search else None, cas)


def _cmd_bounds(args, config, out):
    if args.kind == KIND_K:
        params = _require(args, "q", "m", "s", "R")
    else:
        params = _require(args, "t", "m", "s", "v")
    record = evaluate(_engine(args, config), args.kind, params)
    data = record.to_dict()
    if config.witness_dir:
        data["witness"] = write_witness(record, config.witness_dir)
    if config.fmt == "csv":
        data.pop("chain")
    text = "\n".join(record_lines(record))
    if data.get("witness"):
        text += "\nwitness: {}".format(data["witness"])
    out.write(_render(data, text, config.fmt) + "\n")
    return EXIT_OK


def _cmd_table(args, config, out):
    with open(args.requests, encoding="utf-8") as f:
        lines = f.read().splitlines()
    document, ok = emit_table(lines, config.fmt, _engine(args, config))
    out.write(document)
    return EXIT_OK if ok else EXIT_USAGE


def _search_output(result, path, writer, config, out):
    data = dict(result.to_dict(), witness=path if result.witness else None)
    if path and result.witness is not None:
        writer(result.witness, path)
    out.write(_render(data, result.to_text(), config.fmt) + "\n")
    return EXIT_OK if result.exact else EXIT_BUDGET


def _cmd_search_code(args, config, out):
    result = exact_covering_number(args.q, args.m, args.s, args.R,
                                   config.search)
    return _search_output(result, args.output, write_code, config, out)


def _cmd_search_oca(args, config, out):
    result = exact_ocan(args.t, args.m, args.s, args.v, config.search)
    return _search_output(result, args.output, write_array, config, out)


def _cmd_accept(args, config, out):  # pylint: disable=unused-argument
    report = run_acceptance_suite(seed=config.seed)
    out.write(_render(report.to_dict(), report.to_text(), config.fmt)
              if config.fmt != "csv" else report.to_csv())
    out.write("\n")
    return EXIT_OK if report.passed else EXIT_INVALID


_COMMANDS = {
    "volume": _cmd_volume,
    "verify-oca": _cmd_verify_oca,
    "verify-code": _cmd_verify_code,
    "construct": _cmd_construct,
    "bounds": _cmd_bounds,
    "table": _cmd_table,
    "search-exact-code": _cmd_search_code,
    "search-exact-oca": _cmd_search_oca,
    "accept": _cmd_accept,
}


def dispatch(argv, out=None, err=None):
    """ Parse argv, run the subcommand and map its outcome to an exit code.

    :param out: stream for results (default: sys.stdout)
    :param err: stream for error messages (default: sys.stderr)
    :rtype: int
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_USAGE
    config = RunConfig.from_args(args)
    logging.basicConfig(level=config.log_level, stream=err)
    try:
        return _COMMANDS[args.command](args, config, out)
    except ConstructionError as error:
        err.write("rt-cover: {}\n".format(error))
        return EXIT_INVALID
    except ResourceLimitError as error:
        err.write("rt-cover: {}\n".format(error))
        return EXIT_BUDGET
    except (RTCoverError, argparse.ArgumentTypeError, OSError) as error:
        err.write("rt-cover: {}\n".format(error))
        return EXIT_USAGE


def main(argv=None):
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
