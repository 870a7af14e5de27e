# -*- coding: utf-8 -*-
""" Exception classes shared by all rtcover modules.

Verifiers report invalid objects through their report classes, the
exceptions below are reserved for calls that can not produce an answer.
"""


class RTCoverError(Exception):
    """ Base class for every error raised by rtcover.
    """


class InvalidArgumentError(RTCoverError, ValueError):
    """ A parameter is out of range or shapes do not match.
    """


class FormatError(InvalidArgumentError):
    """ An array, code or request file could not be parsed.
    """

    def __init__(self, msg, line=None):
        """
        :param msg: what is wrong
        :type msg: str
        :param line: 1-based line number of the offending input line
        :type line: int or None
        """
        if line is not None:
            msg = "line {}: {}".format(line, msg)
        super(FormatError, self).__init__(msg)
        self.line = line


class ResourceLimitError(RTCoverError):
    """ An exhaustive enumeration would exceed its configured budget.
    """


class DependencyError(RTCoverError):
    """ A construction input is missing or did not pass its verifier.
    """


class ConstructionError(RTCoverError):
    """ A constructed object was rejected by its verifier.
    """
