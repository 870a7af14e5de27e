# -*- coding: utf-8 -*-
""" Ordered covering arrays and their coverage verifier.

An OrderedArray with s=1 is a covering array, with N = lambda v^t and every
tuple covered exactly lambda times it is an ordered orthogonal array.
"""
from collections import namedtuple
from logging import getLogger

import numpy as np

from .errors import ConstructionError
from .errors import InvalidArgumentError
from .log_msg import LogMsg
from .poset import RTPoset
from .poset import enumerate_anti_ideals


_LOG = getLogger(__name__)

MAX_VIOLATIONS = 100


def check_oca_parameters(t, m, s, v, lam=1):
    """ Validate the parameters of an OCA_lam(N;t,m,s,v).

    :return: the poset [m x s]
    :rtype: RTPoset
    """
    poset = RTPoset(m, s)
    if not 2 <= t <= poset.size:
        raise InvalidArgumentError(
            "Strength t={} outside of 2..{}.".format(t, poset.size))
    if s > t:
        raise InvalidArgumentError(
            "Block depth s={} exceeds strength t={}.".format(s, t))
    if v < 2 or lam < 1:
        raise InvalidArgumentError(
            "Need v >= 2 and lambda >= 1, got v={} lambda={}.".format(
                v, lam))
    return poset


class OrderedArray(object):
    """ N x ms symbol matrix whose columns are labeled by RTPoset(m, s).

    Column j (0-based) carries poset label j + 1. The array is immutable,
    transformations return new instances.
    """

    def __init__(  # pylint: disable=too-many-arguments
            self, entries, t, m, s, v, lam=1):
        """
        :param entries: N rows of ms symbols in 0..v-1
        :type entries: numpy.ndarray or nested sequences of int
        :param t: strength
        :param m: number of blocks
        :param s: block depth
        :param v: alphabet size
        :param lam: coverage multiplicity lambda
        """
        poset = check_oca_parameters(t, m, s, v, lam)
        entries = np.array(entries, dtype=np.int64)
        if entries.size == 0:
            entries = entries.reshape(0, poset.size)
        if entries.ndim != 2 or entries.shape[1] != poset.size:
            raise InvalidArgumentError(
                "Entries of shape {} do not fit {} columns.".format(
                    entries.shape, poset.size))
        if entries.size and (entries.min() < 0 or entries.max() >= v):
            raise InvalidArgumentError(
                "Entries outside of the alphabet 0..{}.".format(v - 1))
        entries.setflags(write=False)
        self._entries = entries
        self._poset = poset
        self._t = int(t)
        self._v = int(v)
        self._lam = int(lam)

    @property
    def entries(self):
        return self._entries

    @property
    def poset(self):
        return self._poset

    @property
    def N(self):  # pylint: disable=invalid-name
        return self._entries.shape[0]

    @property
    def t(self):
        return self._t

    @property
    def m(self):
        return self._poset.m

    @property
    def s(self):
        return self._poset.s

    @property
    def v(self):
        return self._v

    @property
    def lam(self):
        return self._lam

    @property
    def parameters(self):
        """ (N, t, m, s, v, lambda) """
        return self.N, self._t, self.m, self.s, self._v, self._lam

    def column(self, label):
        return self._entries[:, self._poset.column(label)]

    def rows(self):
        return [tuple(int(x) for x in row) for row in self._entries]

    def delete_columns(self, columns, **changes):
        """ New array without the given 0-based columns; changes give the
        parameters of the smaller array.
        """
        dropped = set(columns)
        keep = [c for c in range(self._poset.size) if c not in dropped]
        return self.with_entries(self._entries[:, keep], **changes)

    def with_entries(self, entries, **changes):
        """ New array with other entries and, optionally, other parameters
        (t, m, s, v, lam keywords).
        """
        params = dict(t=self._t, m=self.m, s=self.s, v=self._v,
                      lam=self._lam)
        params.update(changes)
        return OrderedArray(entries, **params)

    def __eq__(self, other):
        return (isinstance(other, OrderedArray) and
                self.parameters == other.parameters and
                np.array_equal(self._entries, other.entries))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.parameters, self._entries.tobytes()))

    def __repr__(self):
        return "OCA_{}({};{},{},{},{})".format(
            self._lam, self.N, self._t, self.m, self.s, self._v)


Violation = namedtuple("Violation", ["depths", "missing", "observed"])


class CoverageReport(object):
    """ Outcome of verify_oca.

    violations holds at most MAX_VIOLATIONS entries, sorted by depth vector
    then tuple value; truncated tells whether more were found.
    """

    def __init__(  # pylint: disable=too-many-arguments
            self, violations, checked, truncated, min_multiplicity,
            max_multiplicity):
        self.violations = violations
        self.checked = checked
        self.truncated = truncated
        self.min_multiplicity = min_multiplicity
        self.max_multiplicity = max_multiplicity

    @property
    def valid(self):
        return not self.violations

    def __bool__(self):
        return self.valid

    def to_dict(self):
        return {
            "valid": self.valid,
            "checked": self.checked,
            "truncated": self.truncated,
            "min_multiplicity": self.min_multiplicity,
            "max_multiplicity": self.max_multiplicity,
            "violations": [
                {"depths": list(v.depths), "missing": list(v.missing),
                 "observed": v.observed}
                for v in self.violations],
        }

    def to_text(self):
        lines = [
            "valid: {}".format("yes" if self.valid else "no"),
            "anti-ideals checked: {}".format(self.checked),
            "violations: {}{}".format(
                len(self.violations), "+" if self.truncated else ""),
        ]
        lines.extend(
            "  depths={} missing={} observed={}".format(
                v.depths, v.missing, v.observed)
            for v in self.violations)
        return "\n".join(lines)


def _tuple_digits(value, v, t):
    out = []
    for _ in range(t):
        value, x = divmod(value, v)
        out.append(x)
    return tuple(reversed(out))


def verify_oca(array, max_violations=MAX_VIOLATIONS):
    """ Check every anti-ideal of size t for lambda-coverage.

    Each projected row is radix encoded into an integer below v^t and
    counted, so every anti-ideal costs one pass over the rows.

    :type array: OrderedArray
    :rtype: CoverageReport
    """
    t, v, lam = array.t, array.v, array.lam
    radix = v ** np.arange(t - 1, -1, -1, dtype=np.int64)
    violations = []
    truncated = False
    low = None
    high = 0
    anti_ideals = enumerate_anti_ideals(array.poset, t)
    for anti_ideal in anti_ideals:
        codes = array.entries[:, list(anti_ideal.columns())] @ radix
        counts = np.bincount(codes, minlength=v ** t)
        floor = int(counts.min())
        low = floor if low is None else min(low, floor)
        high = max(high, int(counts.max()))
        for value in np.nonzero(counts < lam)[0]:
            if len(violations) >= max_violations:
                truncated = True
                break
            violations.append(Violation(
                anti_ideal.depths, _tuple_digits(int(value), v, t),
                int(counts[value])))
    report = CoverageReport(
        violations, len(anti_ideals), truncated, int(low or 0), high)
    _LOG.debug(LogMsg(
        "Verified {} over {} anti-ideals: {} violation(s).",
        array, report.checked, len(violations)))
    return report


def is_ooa(array):
    """ True iff the array is an ordered orthogonal array: N = lambda v^t
    and every tuple appears exactly lambda times in every anti-ideal.

    :rtype: bool
    """
    if array.N != array.lam * array.v ** array.t:
        return False
    report = verify_oca(array)
    return (report.valid and report.min_multiplicity == array.lam and
            report.max_multiplicity == array.lam)


def verified(array):
    """ Return the array if verify_oca accepts it.

    :raise ConstructionError: with the first violation otherwise
    """
    report = verify_oca(array, max_violations=1)
    if not report.valid:
        _LOG.warning(LogMsg("Verifier rejected {}.", array))
        raise ConstructionError(
            "{} is not valid: anti-ideal {} misses {} ({} < {}).".format(
                array, report.violations[0].depths,
                report.violations[0].missing,
                report.violations[0].observed, array.lam))
    return array
