# -*- coding: utf-8 -*-
""" Covering codes of RT spaces: the covering verifier and the code
constructions.

Constructions return Code objects carrying the radius they are built for;
like the array constructions they are never trusted, verify_covering is the
only judge.
"""
from itertools import product
from logging import getLogger

import numpy as np

from .constructions import kleitman_spencer_ca
from .errors import ConstructionError
from .errors import DependencyError
from .errors import InvalidArgumentError
from .errors import ResourceLimitError
from .log_msg import LogMsg
from .metric import DEFAULT_POINT_BUDGET
from .metric import RTSpace
from .metric import rt_distance_matrix
from .poset import RTPoset


_LOG = getLogger(__name__)

# Upper limit for the booleans of one distance chunk (points x words x ms).
_CELLS_PER_CHUNK = 1 << 22


class Code(object):
    """ A set of distinct words of Z_q^{ms}, optionally with the covering
    radius it claims.
    """

    def __init__(self, q, poset, words, claimed_radius=None):
        """
        :type q: int
        :type poset: RTPoset
        :param words: sequences of ms symbols in 0..q-1, kept in the given
            order
        :param claimed_radius: radius R the code is meant to cover with
        :type claimed_radius: int or None
        """
        space = RTSpace(q, poset)
        words = tuple(space.word(w) for w in words)
        if len(set(words)) != len(words):
            raise InvalidArgumentError("Code words must be distinct.")
        if claimed_radius is not None and \
                not 0 <= claimed_radius <= poset.size:
            raise InvalidArgumentError(
                "Radius {} outside of 0..{}.".format(
                    claimed_radius, poset.size))
        self._space = space
        self._words = words
        self._radius = claimed_radius

    @property
    def q(self):
        return self._space.q

    @property
    def poset(self):
        return self._space.poset

    @property
    def space(self):
        return self._space

    @property
    def words(self):
        return self._words

    @property
    def claimed_radius(self):
        return self._radius

    def as_array(self):
        """
        :rtype: numpy.ndarray of shape (len(code), ms)
        """
        return np.array(self._words, dtype=np.int64).reshape(
            len(self._words), self.poset.size)

    def with_radius(self, radius):
        return Code(self.q, self.poset, self._words, radius)

    def __len__(self):
        return len(self._words)

    def __iter__(self):
        return iter(self._words)

    def __contains__(self, word):
        return tuple(word) in set(self._words)

    def __eq__(self, other):
        return (isinstance(other, Code) and
                self._space == other.space and
                self._radius == other.claimed_radius and
                set(self._words) == set(other.words))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._space, self._radius, frozenset(self._words)))

    def __repr__(self):
        return "Code(q={}, m={}, s={}, size={}, R={})".format(
            self.q, self.poset.m, self.poset.s, len(self), self._radius)


class CoveringReport(object):
    """ Outcome of verify_covering. first_uncovered is the lexicographically
    least word outside of every ball, None for a valid code.
    """

    def __init__(self, valid, first_uncovered, points_checked, radius):
        self.valid = valid
        self.first_uncovered = first_uncovered
        self.points_checked = points_checked
        self.radius = radius

    def __bool__(self):
        return self.valid

    def to_dict(self):
        return {
            "valid": self.valid,
            "radius": self.radius,
            "points_checked": self.points_checked,
            "first_uncovered": (
                None if self.first_uncovered is None
                else list(self.first_uncovered)),
        }

    def to_text(self):
        lines = [
            "valid: {}".format("yes" if self.valid else "no"),
            "radius: {}".format(self.radius),
            "points checked: {}".format(self.points_checked),
        ]
        if self.first_uncovered is not None:
            lines.append("first uncovered: {}".format(
                "".join(str(x) for x in self.first_uncovered)))
        return "\n".join(lines)


def _radius_of(code, R):
    R = code.claimed_radius if R is None else R
    if R is None:
        raise InvalidArgumentError(
            "No radius given and {} claims none.".format(code))
    if not 0 <= R <= code.poset.size:
        raise InvalidArgumentError(
            "Radius {} outside of 0..{}.".format(R, code.poset.size))
    return R


def verify_covering(code, R=None, budget=DEFAULT_POINT_BUDGET):
    """ Check that every word of the space lies within RT distance R of
    some code word.

    :param R: radius, defaults to the claimed radius of the code
    :raise ResourceLimitError: if q^{ms} exceeds budget
    :rtype: CoveringReport
    """
    R = _radius_of(code, R)
    space = code.space
    space.check_budget(budget, "Covering verification")
    if not len(code):
        return CoveringReport(False, space.word_at(0), 1, R)
    centers = code.as_array()
    chunk = max(1, _CELLS_PER_CHUNK // (len(code) * space.length))
    for start, points in space.chunks(chunk):
        nearest = rt_distance_matrix(space.poset, points, centers).min(axis=1)
        far = np.nonzero(nearest > R)[0]
        if far.size:
            index = start + int(far[0])
            _LOG.debug(LogMsg(
                "{} does not cover {} at radius {}.", code,
                lambda: space.word_at(index), R))
            return CoveringReport(False, space.word_at(index), index + 1, R)
    _LOG.debug(LogMsg("{} covers {} at radius {}.", code, space, R))
    return CoveringReport(True, None, space.size, R)


def verified_code(code, R=None, budget=DEFAULT_POINT_BUDGET):
    """ Return the code if verify_covering accepts it.

    :raise ConstructionError: naming the first uncovered word otherwise
    """
    report = verify_covering(code, R, budget)
    if not report.valid:
        _LOG.warning(LogMsg("Verifier rejected {}.", code))
        raise ConstructionError(
            "{} leaves {} uncovered at radius {}.".format(
                code, report.first_uncovered, report.radius))
    return code


def trivial_covering(q, m, s, R):
    """ All words that vanish on the ideal of size R filled from block 0
    on; a code of size q^{ms-R}.

    :rtype: Code
    """
    poset = RTPoset(m, s)
    if not 0 < R < poset.size:
        raise InvalidArgumentError(
            "Trivial covering needs 0 < R < {}, got R={}.".format(
                poset.size, R))
    RTSpace(q, poset)
    if q ** (poset.size - R) > DEFAULT_POINT_BUDGET:
        raise ResourceLimitError(
            "Trivial covering has {} words, budget is {}.".format(
                q ** (poset.size - R), DEFAULT_POINT_BUDGET))
    free = list(range(R, poset.size))
    words = []
    for values in product(range(q), repeat=len(free)):
        word = [0] * poset.size
        for column, x in zip(free, values):
            word[column] = x
        words.append(word)
    return Code(q, poset, words, R)


def constant_code(q, m, s, R):
    """ The q constant words. Covers at radius ms - t whenever
    m >= (t - 1) q + 1.

    :rtype: Code
    """
    poset = RTPoset(m, s)
    return Code(q, poset, [[x] * poset.size for x in range(q)], R)


def surjective_hamming_code(q, t, ca=None):
    """ Hamming code of length m = (t-1)q and radius m - t: the constant
    words 0..q-3 plus the CA rows written over {q-2, q-1}.

    :param ca: binary covering array of strength >= t with at least m
        columns; a Kleitman-Spencer array is built when t = 2
    :type ca: OrderedArray or None
    :raise DependencyError: if no covering array is given for t > 2
    :rtype: Code
    """
    if t < 2 or q < 2:
        raise InvalidArgumentError(
            "Need t >= 2 and q >= 2, got t={} q={}.".format(t, q))
    m = (t - 1) * q
    if ca is None:
        if t != 2:
            raise DependencyError(
                "No CA(N;{},{},2) available, supply one.".format(t, m))
        ca = kleitman_spencer_ca(m)
    if ca.s != 1 or ca.v != 2 or ca.t < t or ca.m < m:
        raise DependencyError(
            "{} is not a binary CA of strength {} with {} columns.".format(
                ca, t, m))
    words = [(x,) * m for x in range(q - 2)]
    mapped = ca.entries[:, :m] + (q - 2)
    words.extend(tuple(int(x) for x in row) for row in mapped)
    words = list(dict.fromkeys(words))
    code = Code(q, RTPoset(m, 1), words, m - t)
    _LOG.info(LogMsg("Built surjective Hamming code {} from {}.", code, ca))
    return code


def lift_hamming_to_rt(h, s, budget=DEFAULT_POINT_BUDGET):
    """ Place the words of a Hamming (m-t)-covering on the maximal elements
    of [m x s]; the result is an (ms-t)-covering.

    :type h: Code
    :raise DependencyError: if h fails verify_covering at its radius
    :rtype: Code
    """
    if h.poset.s != 1:
        raise InvalidArgumentError(
            "Expected a Hamming space code, got {}.".format(h))
    if h.claimed_radius is None:
        raise DependencyError("{} claims no covering radius.".format(h))
    report = verify_covering(h, budget=budget)
    if not report.valid:
        raise DependencyError(
            "{} does not cover: {} is uncovered.".format(
                h, report.first_uncovered))
    m = h.poset.m
    poset = RTPoset(m, s)
    tops = [c - 1 for c in poset.maximal_labels()]
    words = np.zeros((len(h), poset.size), dtype=np.int64)
    words[:, tops] = h.as_array()
    return Code(h.q, poset, words.tolist(),
                poset.size - m + h.claimed_radius)


def product_code(a, h, R=None):
    """ Code over Z_{vq}: every pair of an OCA row x and a code word y gives
    the word x q + y.

    :type a: OrderedArray
    :param h: code over Z_q^{ms} of the same poset
    :param R: radius of h, defaults to its claimed radius; the array
        strength must be ms - R
    :rtype: Code
    """
    R = _radius_of(h, R)
    if a.poset != h.poset:
        raise InvalidArgumentError(
            "Array poset {} differs from code poset {}.".format(
                a.poset, h.poset))
    if a.t != a.poset.size - R:
        raise InvalidArgumentError(
            "Array strength {} does not match ms - R = {}.".format(
                a.t, a.poset.size - R))
    rows = a.entries[:, None, :] * h.q + h.as_array()[None, :, :]
    rows = rows.reshape(-1, a.poset.size)
    words = list(dict.fromkeys(tuple(int(x) for x in r) for r in rows))
    code = Code(a.v * h.q, a.poset, words, R)
    _LOG.info(LogMsg("Built product code {} from {} and {}.", code, a, h))
    return code


def _check_chain_args(v, s):
    if v < 2 or s < 2:
        raise InvalidArgumentError(
            "Need v >= 2 and s >= 2, got v={} s={}.".format(v, s))


def two_chain_code(v, s):
    """ s-covering of Z_v^{2s} over [2 x s] with v^{s-2}(v^2 - 1) words.

    For every tail z on the top s-2 elements of block 1 and every nonzero
    pair (a, b) on its two bottom elements: b = 0 keeps the word
    (0; a, 0; z), b != 0 also writes a, b on the two top elements of
    block 0.

    :rtype: Code
    """
    _check_chain_args(v, s)
    words = []
    for z in product(range(v), repeat=s - 2):
        for a, b in product(range(v), repeat=2):
            if (a, b) == (0, 0):
                continue
            low = [0] * s
            if b:
                low[s - 2:] = [a, b]
            words.append(tuple(low) + (a, b) + z)
    return Code(v, RTPoset(2, s), words, s)


def three_chain_code(v, s):
    """ (2s-1)-covering of Z_v^{3s} over [3 x s] with v(v^s - 1) words.

    For every z on the top of block 1 and every nonzero y on block 2 the
    word is (0; 0..0 z; y), with y copied into block 0 when its top symbol
    is nonzero.

    :rtype: Code
    """
    _check_chain_args(v, s)
    words = []
    middle_zeros = (0,) * (s - 1)
    for z in range(v):
        for y in product(range(v), repeat=s):
            if not any(y):
                continue
            low = y if y[-1] else (0,) * s
            words.append(low + middle_zeros + (z,) + y)
    return Code(v, RTPoset(3, s), words, 2 * s - 1)
