# -*- coding: utf-8 -*-
""" Exact and greedy searches: independent oracles for covering numbers and
ordered covering array numbers of small instances.

Results that run out of budget are intervals, never silently truncated
values.
"""
import heapq
from logging import getLogger
from math import isqrt
from time import monotonic

import numpy as np

from .codes import Code
from .designs import OrderedArray
from .designs import check_oca_parameters
from .errors import InvalidArgumentError
from .log_msg import LogMsg
from .metric import RTSpace
from .metric import ball_offsets
from .metric import digits
from .poset import RTPoset
from .poset import enumerate_anti_ideals


_LOG = getLogger(__name__)

# Upper limit for the cells of one ball index block (centers x ball x ms).
_CELLS_PER_BLOCK = 1 << 22

# One bitmask of q^{ms} bits per center.
MAX_MASK_BITS = 1 << 31

# Largest space a covering search takes, whatever max_points allows.
MAX_COVERING_POINTS = isqrt(MAX_MASK_BITS)


class SearchBudget(object):
    """ Limits of one search.

    max_points bounds every enumeration; covering searches are further
    capped at MAX_COVERING_POINTS points by their bitmasks, see
    covering_points.
    """

    def __init__(self, max_points=10 ** 6, max_nodes=10 ** 6, time_limit=60.0):
        """
        :param max_points: largest space (or candidate row set) to enumerate
        :param max_nodes: branch-and-bound nodes before giving up
        :param time_limit: seconds before giving up
        """
        if max_points <= 0 or max_nodes <= 0 or time_limit <= 0:
            raise InvalidArgumentError(
                "Search budget values must be positive, got {} {} {}.".format(
                    max_points, max_nodes, time_limit))
        self.max_points = max_points
        self.max_nodes = max_nodes
        self.time_limit = time_limit

    @property
    def covering_points(self):
        """ Largest space a covering search may take under this budget. """
        return min(self.max_points, MAX_COVERING_POINTS)

    def __repr__(self):
        return "SearchBudget(max_points={}, max_nodes={}, time_limit={})" \
            .format(self.max_points, self.max_nodes, self.time_limit)


class SearchResult(object):
    """ Value of a search: exact when lower == upper, otherwise the
    interval known when the budget ran out. witness realises upper.
    """

    def __init__(self, lower, upper, witness, nodes):
        self.lower = lower
        self.upper = upper
        self.witness = witness
        self.nodes = nodes

    @property
    def exact(self):
        return self.lower == self.upper

    @property
    def value(self):
        """ The exact value, None for an interval. """
        return self.upper if self.exact else None

    def to_dict(self):
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "nodes": self.nodes,
        }

    def to_text(self):
        if self.exact:
            return str(self.upper)
        return "[{}, {}] (inexact)".format(self.lower, self.upper)

    def __repr__(self):
        return "SearchResult({})".format(self.to_text())


class _Exhausted(Exception):
    pass


class _Limits(object):

    def __init__(self, budget):
        self._budget = budget
        self._start = monotonic()
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self._budget.max_nodes:
            raise _Exhausted("node limit {}".format(self._budget.max_nodes))
        if monotonic() - self._start > self._budget.time_limit:
            raise _Exhausted("time limit {}s".format(self._budget.time_limit))


def _popcount(x):
    return bin(x).count("1")


def _bitmask(indices, size):
    bits = np.zeros(size, dtype=bool)
    bits[indices] = True
    return int.from_bytes(
        np.packbits(bits, bitorder="little").tobytes(), "little")


class _Balls(object):
    """ Radius R balls of Z_q^{ms} as bitmasks over the lexicographic point
    indices.
    """

    def __init__(self, q, m, s, R, budget):
        self.space = RTSpace(q, RTPoset(m, s))
        if not 0 <= R <= self.space.length:
            raise InvalidArgumentError(
                "Radius {} outside of 0..{}.".format(R, self.space.length))
        self.space.check_budget(budget.covering_points, "Covering search")
        self.size = self.space.size
        self.full = (1 << self.size) - 1
        self._offsets = ball_offsets(q, self.space.poset, R,
                                     budget=budget.max_points)
        self.volume = len(self._offsets)
        self._powers = q ** np.arange(
            self.space.length - 1, -1, -1, dtype=np.int64)
        self.masks = self._build_masks()

    def around(self, index):
        """ Point indices within distance R of point index. """
        word = self.space.points(index, index + 1)
        return np.sort((word + self._offsets) % self.space.q @ self._powers)

    def _build_masks(self):
        q, n = self.space.q, self.space.length
        step = max(1, _CELLS_PER_BLOCK // (self.volume * n))
        masks = []
        for start in range(0, self.size, step):
            centers = self.space.points(start, start + step)
            indices = (centers[:, None, :] + self._offsets[None, :, :]) % q
            for row in indices @ self._powers:
                masks.append(_bitmask(row, self.size))
        return masks


def _greedy(balls):
    """ Lazy greedy: gains only shrink, so a popped center whose stored
    gain is still current is the least center of maximal gain.
    """
    chosen = []
    covered = 0
    heap = [(-balls.volume, c) for c in range(balls.size)]
    while covered != balls.full:
        uncovered = balls.full ^ covered
        stored, center = heapq.heappop(heap)
        gain = _popcount(balls.masks[center] & uncovered)
        if gain == -stored:
            chosen.append(center)
            covered |= balls.masks[center]
        else:
            heapq.heappush(heap, (-gain, center))
    return chosen


def _to_code(balls, centers, R):
    space = balls.space
    return Code(space.q, space.poset,
                [space.word_at(c) for c in sorted(centers)], R)


def greedy_covering(q, m, s, R, budget=None):
    """ Add the center covering most uncovered points (ties: least center)
    until the space is covered.

    :type budget: SearchBudget or None
    :raise ResourceLimitError: if q^{ms} exceeds budget.covering_points
    :rtype: Code
    """
    balls = _Balls(q, m, s, R, budget or SearchBudget())
    code = _to_code(balls, _greedy(balls), R)
    _LOG.info(LogMsg("Greedy covering of {} at radius {}: {} words.",
                     balls.space, R, len(code)))
    return code


def _lower_bound(balls, R):
    """ max(ceil(q^{ms} / V), q) for R < ms, 1 otherwise. """
    if R >= balls.space.length:
        return 1
    return max(-(-balls.size // balls.volume), balls.space.q)


def exact_covering_number(q, m, s, R, budget=None):
    """ K_q^RT(m,s,R) by branch and bound over the radius R balls.

    The word 0 is always a center (translations preserve coverings); every
    node branches on the least uncovered point, trying the centers of the
    balls through it by decreasing number of newly covered points, ties
    by index, and prunes with ceil(uncovered / V). The greedy code is the
    first incumbent.

    :type budget: SearchBudget or None
    :rtype: SearchResult
    """
    budget = budget or SearchBudget()
    balls = _Balls(q, m, s, R, budget)
    lower = _lower_bound(balls, R)
    best = [_greedy(balls)]
    limits = _Limits(budget)

    def descend(covered, chosen):
        limits.tick()
        if covered == balls.full:
            if len(chosen) < len(best[0]):
                best[0] = list(chosen)
                _LOG.debug(LogMsg("New incumbent of size {}.", len(chosen)))
            return
        uncovered = balls.full ^ covered
        remaining = _popcount(uncovered)
        if len(chosen) + -(-remaining // balls.volume) >= len(best[0]):
            return
        point = (uncovered & -uncovered).bit_length() - 1
        candidates = balls.around(point)
        gains = [_popcount(balls.masks[c] & uncovered) for c in candidates]
        for i in np.lexsort((candidates, -np.array(gains))):
            center = int(candidates[i])
            chosen.append(center)
            descend(covered | balls.masks[center], chosen)
            chosen.pop()
            if len(best[0]) <= lower:
                return

    if len(best[0]) > lower:
        try:
            descend(balls.masks[0], [0])
        except _Exhausted as error:
            _LOG.warning(LogMsg(
                "Covering search for {} R={} stopped at the {}.",
                balls.space, R, error))
            return SearchResult(lower, len(best[0]),
                                _to_code(balls, best[0], R), limits.nodes)
    result = SearchResult(len(best[0]), len(best[0]),
                          _to_code(balls, best[0], R), limits.nodes)
    _LOG.info(LogMsg("K_{}^RT({},{},{}) = {} after {} nodes.",
                     q, m, s, R, result.upper, result.nodes))
    return result


class _ArraySearch(object):
    """ Row-set search for ordered covering arrays.

    Requirement (a, u) is tuple u on anti-ideal a; row r meets exactly one
    requirement per anti-ideal, codes[r, a].
    """

    def __init__(  # pylint: disable=too-many-arguments
            self, t, m, s, v, budget):
        self.poset = check_oca_parameters(t, m, s, v)
        self.t, self.v = t, v
        self.rows = v ** self.poset.size
        if self.rows > budget.max_points:
            raise _Exhausted("point limit")
        self.words = digits(np.arange(self.rows), v, self.poset.size)
        radix = v ** np.arange(t - 1, -1, -1, dtype=np.int64)
        anti_ideals = enumerate_anti_ideals(self.poset, t)
        self.codes = np.stack(
            [self.words[:, list(a.columns())] @ radix for a in anti_ideals],
            axis=1)
        self._spread = np.arange(len(anti_ideals))
        self.limits = _Limits(budget)

    def array(self, rows):
        return OrderedArray(self.words[sorted(rows)], self.t, self.poset.m,
                            self.poset.s, self.v)

    def greedy(self):
        counts = np.zeros((len(self._spread), self.v ** self.t), dtype=int)
        rows = [0]
        counts[self._spread, self.codes[0]] += 1
        while (counts == 0).any():
            gains = (counts[self._spread, self.codes] == 0).sum(axis=1)
            best = int(np.argmax(gains))
            rows.append(best)
            counts[self._spread, self.codes[best]] += 1
        return rows

    def find(self, n):
        """ Rows of an OCA with n rows whose first row is 0, or None. """
        counts = np.zeros((len(self._spread), self.v ** self.t), dtype=int)
        forbidden = np.zeros(self.rows, dtype=bool)
        rows = [0]
        counts[self._spread, self.codes[0]] += 1

        def descend(left):
            self.limits.tick()
            missing = (counts == 0).sum(axis=1)
            if not missing.any():
                return True
            if missing.max() > left:
                return False
            a = int(np.argmax(missing))
            u = int(np.nonzero(counts[a] == 0)[0][0])
            candidates = np.nonzero(
                (self.codes[:, a] == u) & ~forbidden)[0]
            gains = (counts[self._spread, self.codes[candidates]] == 0) \
                .sum(axis=1)
            banned = []
            for i in np.lexsort((candidates, -gains)):
                row = int(candidates[i])
                rows.append(row)
                counts[self._spread, self.codes[row]] += 1
                if descend(left - 1):
                    return True
                counts[self._spread, self.codes[row]] -= 1
                rows.pop()
                forbidden[row] = True
                banned.append(row)
            forbidden[banned] = False
            return False

        return list(rows) if descend(n - 1) else None


def exact_ocan(t, m, s, v, budget=None):
    """ OCAN(t,m,s,v) by deciding every N from v^t upward.

    Rows form a set and may be relabeled per column, so the search fixes
    the zero row and branches on the least uncovered tuple of the anti-ideal
    missing most tuples; a branch that failed with a row forbids that row in
    its siblings. A greedy array gives the first upper bound.

    :type budget: SearchBudget or None
    :rtype: SearchResult
    """
    budget = budget or SearchBudget()
    lower = v ** t
    try:
        search = _ArraySearch(t, m, s, v, budget)
    except _Exhausted:
        _LOG.warning(LogMsg(
            "OCAN({},{},{},{}): {} candidate rows exceed the budget.",
            t, m, s, v, v ** (m * s)))
        return SearchResult(lower, v ** (m * s), None, 0)
    best = search.greedy()
    n = lower
    try:
        while n < len(best):
            rows = search.find(n)
            if rows is not None:
                best = rows
                break
            _LOG.debug(LogMsg("No OCA({};{},{},{},{}).", n, t, m, s, v))
            n += 1
    except _Exhausted as error:
        _LOG.warning(LogMsg(
            "OCAN({},{},{},{}) search stopped at N={} by the {}.",
            t, m, s, v, n, error))
        return SearchResult(n, len(best), search.array(best),
                            search.limits.nodes)
    result = SearchResult(len(best), len(best), search.array(best),
                          search.limits.nodes)
    _LOG.info(LogMsg("OCAN({},{},{},{}) = {} after {} nodes.",
                     t, m, s, v, result.upper, result.nodes))
    return result
