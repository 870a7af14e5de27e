# -*- coding: utf-8 -*-
""" Text formats of arrays and codes.

Array file::

    oca t=2 m=4 s=2 v=2 lambda=1 n=5
    0 0 0 0 0 0 0 0
    ...

Code file::

    code q=2 m=2 s=3 r=3
    0 0 0 1 0 0
    ...

Lines starting with '#' and blank lines are ignored. Row and word symbols
are separated by white space.
"""
from codecs import open
from logging import getLogger

from .codes import Code
from .designs import OrderedArray
from .errors import FormatError
from .errors import InvalidArgumentError
from .log_msg import LogMsg
from .poset import RTPoset


_LOG = getLogger(__name__)

_ARRAY_KEYS = ("t", "m", "s", "v", "lambda", "n")
_CODE_KEYS = ("q", "m", "s", "r")


def _content_lines(text):
    for number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield number, line


def _parse_header(number, line, kind, keys):
    parts = line.split()
    if not parts or parts[0] != kind:
        raise FormatError(
            "Expected a '{}' header, got '{}'.".format(kind, line), number)
    values = {}
    for part in parts[1:]:
        key, sep, value = part.partition("=")
        if not sep or key not in keys or key in values:
            raise FormatError("Bad header field '{}'.".format(part), number)
        try:
            values[key] = int(value)
        except ValueError:
            raise FormatError(
                "Header field '{}' is not an integer.".format(part), number)
    missing = [k for k in keys if k not in values]
    if missing:
        raise FormatError(
            "Header misses {}.".format(", ".join(missing)), number)
    return values


def _parse_row(number, line, width):
    try:
        row = [int(x) for x in line.split()]
    except ValueError:
        raise FormatError("Row '{}' is not numeric.".format(line), number)
    if len(row) != width:
        raise FormatError(
            "Row has {} entries, expected {}.".format(len(row), width),
            number)
    return row


def _body(text, kind, keys, width_of):
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("Empty {} file.".format(kind))
    header = _parse_header(lines[0][0], lines[0][1], kind, keys)
    width = width_of(header)
    rows = [_parse_row(number, line, width) for number, line in lines[1:]]
    return header, rows, lines[0][0]


def parse_array(text):
    """
    :rtype: OrderedArray
    :raise FormatError: on a malformed header, row or parameter set
    """
    header, rows, number = _body(
        text, "oca", _ARRAY_KEYS, lambda h: h["m"] * h["s"])
    if len(rows) != header["n"]:
        raise FormatError(
            "Header announces {} rows, found {}.".format(
                header["n"], len(rows)), number)
    try:
        return OrderedArray(
            rows, header["t"], header["m"], header["s"], header["v"],
            header["lambda"])
    except InvalidArgumentError as error:
        raise FormatError(str(error), number)


def format_array(array):
    lines = ["oca t={} m={} s={} v={} lambda={} n={}".format(
        array.t, array.m, array.s, array.v, array.lam, array.N)]
    lines.extend(" ".join(str(x) for x in row) for row in array.rows())
    return "\n".join(lines) + "\n"


def parse_code(text):
    """
    :rtype: Code
    :raise FormatError: on a malformed header or word
    """
    header, rows, number = _body(
        text, "code", _CODE_KEYS, lambda h: h["m"] * h["s"])
    try:
        return Code(header["q"], RTPoset(header["m"], header["s"]), rows,
                    header["r"])
    except InvalidArgumentError as error:
        raise FormatError(str(error), number)


def format_code(code):
    lines = ["code q={} m={} s={} r={}".format(
        code.q, code.poset.m, code.poset.s, code.claimed_radius)]
    lines.extend(" ".join(str(x) for x in word) for word in code)
    return "\n".join(lines) + "\n"


def read_array(path):
    with open(path, encoding="utf-8") as f:
        array = parse_array(f.read())
    _LOG.debug(LogMsg("Read {} from {}.", array, path))
    return array


def write_array(array, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_array(array))
    _LOG.info(LogMsg("Wrote {} to {}.", array, path))


def read_code(path):
    with open(path, encoding="utf-8") as f:
        code = parse_code(f.read())
    _LOG.debug(LogMsg("Read {} from {}.", code, path))
    return code


def write_code(code, path):
    """ A code without claimed radius can not be written. """
    if code.claimed_radius is None:
        raise InvalidArgumentError(
            "{} has no radius to write.".format(code))
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_code(code))
    _LOG.info(LogMsg("Wrote {} to {}.", code, path))


def read_witness(path):
    """ Array or code, by the header keyword.

    :rtype: OrderedArray or Code
    """
    with open(path, encoding="utf-8") as f:
        text = f.read()
    for _, line in _content_lines(text):
        if line.split()[0] == "code":
            return parse_code(text)
        return parse_array(text)
    raise FormatError("Empty witness file {}.".format(path))
