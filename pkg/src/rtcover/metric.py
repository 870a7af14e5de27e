# -*- coding: utf-8 -*-
""" RT distance, RT spheres and the space Z_q^{ms}.

Words are sequences of ms symbols in 0..q-1; position j (0-based) belongs to
poset label j + 1. Vectorised kernels work on numpy arrays with one word per
row.
"""
from logging import getLogger
from math import comb

import numpy as np

from .errors import InvalidArgumentError
from .errors import ResourceLimitError
from .log_msg import LogMsg
from .poset import RTPoset
from .poset import omega_count


_LOG = getLogger(__name__)

DEFAULT_POINT_BUDGET = 10 ** 7

# Rows per chunk when walking a whole space.
_CHUNK = 1 << 15


def _check_alphabet(q):
    if q < 2:
        raise InvalidArgumentError(
            "Alphabet size must be at least 2, got {}.".format(q))


def _check_radius(R, n):
    if not 0 <= R <= n:
        raise InvalidArgumentError(
            "Radius {} outside of 0..{}.".format(R, n))


def digits(indices, q, n):
    """ Words of length n for the given lexicographic indices, most
    significant symbol first.

    :rtype: numpy.ndarray of shape (len(indices), n)
    """
    indices = np.asarray(indices, dtype=np.int64)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] // powers) % q


class RTSpace(object):
    """ The RT space Z_q^{ms} over an RT poset.

    Holds the context a word needs: alphabet size and poset shape.
    """

    def __init__(self, q, poset):
        """
        :type q: int
        :type poset: RTPoset
        """
        _check_alphabet(q)
        self._q = int(q)
        self._poset = poset

    @property
    def q(self):
        return self._q

    @property
    def poset(self):
        return self._poset

    @property
    def length(self):
        return self._poset.size

    @property
    def size(self):
        """ Number of words, q^{ms} (exact). """
        return self._q ** self.length

    def word(self, symbols):
        """ Validate symbols as a word of this space.

        :rtype: (int, ...)
        """
        word = tuple(int(x) for x in symbols)
        if len(word) != self.length:
            raise InvalidArgumentError(
                "Word {} has length {}, expected {}.".format(
                    word, len(word), self.length))
        if any(x < 0 or x >= self._q for x in word):
            raise InvalidArgumentError(
                "Word {} has symbols outside of 0..{}.".format(
                    word, self._q - 1))
        return word

    def index(self, word):
        """ Lexicographic index of a word. """
        value = 0
        for x in self.word(word):
            value = value * self._q + x
        return value

    def word_at(self, index):
        word = []
        for _ in range(self.length):
            index, x = divmod(index, self._q)
            word.append(x)
        return tuple(reversed(word))

    def check_budget(self, budget, what):
        if self.size > budget:
            raise ResourceLimitError(
                "{} needs {} points of Z_{}^{}, budget is {}.".format(
                    what, self.size, self._q, self.length, budget))

    def points(self, start=0, stop=None):
        """ Words with lexicographic index in start..stop-1 as numpy rows.
        """
        stop = self.size if stop is None else min(stop, self.size)
        return digits(np.arange(start, stop), self._q, self.length)

    def chunks(self, chunk=_CHUNK):
        """ Yield (first index, words) blocks covering the whole space in
        lexicographic order.
        """
        total = self.size
        for start in range(0, total, chunk):
            stop = min(total, start + chunk)
            yield start, self.points(start, stop)

    def __eq__(self, other):
        return (isinstance(other, RTSpace) and
                self._q == other.q and self._poset == other.poset)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((RTSpace, self._q, self._poset))

    def __repr__(self):
        return "RTSpace(q={}, m={}, s={})".format(
            self._q, self._poset.m, self._poset.s)


def _heights(poset):
    return np.arange(1, poset.s + 1, dtype=np.int64)


def rt_weight(poset, words):
    """ RT weight of every row: the size of the ideal generated by its
    support.

    :type words: numpy.ndarray of shape (P, ms)
    :rtype: numpy.ndarray of shape (P,)
    """
    words = np.asarray(words)
    support = (words != 0).reshape(len(words), poset.m, poset.s)
    return (support * _heights(poset)).max(axis=2).sum(axis=1)


def rt_distance_matrix(poset, xs, ys):
    """ RT distance between every row of xs and every row of ys.

    :rtype: numpy.ndarray of shape (len(xs), len(ys))
    """
    xs = np.asarray(xs)
    ys = np.asarray(ys)
    differ = xs[:, None, :] != ys[None, :, :]
    differ = differ.reshape(len(xs), len(ys), poset.m, poset.s)
    return (differ * _heights(poset)).max(axis=3).sum(axis=2)


def rt_distance(poset, x, y, q=None):
    """ |<supp(x - y)>|: per block, the highest height where x and y
    differ, summed over blocks.

    :param q: alphabet size; if given both words are checked against it
    :rtype: int
    """
    if q is not None:
        space = RTSpace(q, poset)
        x, y = space.word(x), space.word(y)
    elif len(x) != poset.size or len(y) != poset.size:
        raise InvalidArgumentError(
            "Words of length {} and {} in a space of length {}.".format(
                len(x), len(y), poset.size))
    s = poset.s
    distance = 0
    for b in range(poset.m):
        for h in range(s, 0, -1):
            if x[b * s + h - 1] != y[b * s + h - 1]:
                distance += h
                break
    return distance


def sphere_volume(q, m, s, R):
    """ Size of an RT ball of radius R in Z_q^{ms}, from the ideal counts.

    :rtype: int
    """
    _check_alphabet(q)
    RTPoset(m, s)
    _check_radius(R, m * s)
    volume = 1
    for i in range(1, R + 1):
        for j in range(1, min(m, i) + 1):
            volume += q ** (i - j) * (q - 1) ** j * omega_count(m, s, i, j)
    return volume


def hamming_volume(q, m, R):
    """ Size of a Hamming ball of radius R in Z_q^m.

    :rtype: int
    """
    _check_alphabet(q)
    RTPoset(m, 1)
    _check_radius(R, m)
    return 1 + sum(
        (q - 1) ** i * comb(m, i) for i in range(1, R + 1))


def sphere_volume_bruteforce(q, m, s, R, budget=DEFAULT_POINT_BUDGET,
                             center=None):
    """ Count the words within RT distance R of center (default: the zero
    word) by walking the whole space.

    :raise ResourceLimitError: if q^{ms} exceeds budget
    :rtype: int
    """
    space = RTSpace(q, RTPoset(m, s))
    _check_radius(R, m * s)
    space.check_budget(budget, "Brute-force sphere volume")
    if center is not None:
        center = np.asarray(space.word(center), dtype=np.int64)
    count = 0
    for _, words in space.chunks():
        if center is not None:
            words = (words - center) % q
        count += int((rt_weight(space.poset, words) <= R).sum())
    _LOG.debug(LogMsg(
        "Brute-force volume of {} radius {}: {}.", space, R, count))
    return count


def ball_offsets(q, poset, R, budget=DEFAULT_POINT_BUDGET):
    """ All words of RT weight at most R, as rows in lexicographic order.

    :rtype: numpy.ndarray of shape (sphere_volume, ms)
    """
    space = RTSpace(q, poset)
    _check_radius(R, poset.size)
    space.check_budget(budget, "Ball enumeration")
    parts = [words[rt_weight(poset, words) <= R]
             for _, words in space.chunks()]
    return np.concatenate(parts)
