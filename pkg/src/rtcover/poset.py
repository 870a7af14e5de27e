# -*- coding: utf-8 -*-
""" The Rosenbloom-Tsfasman poset [m x s] and its ideals.

Labels run from 1 to ms. Block i (0-based) holds the labels is+1 ... (i+1)s,
ordered from the bottom (height 1) to the top (height s). Column indices of
arrays and word positions are 0-based: column = label - 1.
"""
from math import comb

from .errors import InvalidArgumentError


def _binomial(n, k):
    """ Binomial coefficient that is 0 outside of 0 <= k <= n.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def count_compositions(total, parts, cap):
    """ Number of ways to write total as an ordered sum of parts integers,
    each one in 1..cap (inclusion-exclusion over the parts above cap).

    :rtype: int
    """
    if parts == 0:
        return 1 if total == 0 else 0
    return sum(
        (-1) ** k * _binomial(parts, k) *
        _binomial(total - k * cap - 1, parts - 1)
        for k in range(parts + 1))


def _bounded_vectors(m, s, total):
    """ Yield all vectors of m integers in 0..s summing to total, in
    lexicographic order.
    """
    if m == 0:
        if total == 0:
            yield ()
        return
    rest = (m - 1) * s
    for first in range(max(0, total - rest), min(s, total) + 1):
        for tail in _bounded_vectors(m - 1, s, total - first):
            yield (first,) + tail


class RTPoset(object):
    """ m disjoint chains of length s.
    """

    def __init__(self, m, s):
        if m < 1 or s < 1:
            raise InvalidArgumentError(
                "RT poset needs m >= 1 and s >= 1, got m={} s={}.".format(
                    m, s))
        self._m = int(m)
        self._s = int(s)

    @property
    def m(self):
        return self._m

    @property
    def s(self):
        return self._s

    @property
    def size(self):
        """ Number of elements, ms. """
        return self._m * self._s

    def check_label(self, label):
        if not 1 <= label <= self.size:
            raise InvalidArgumentError(
                "Label {} outside of 1..{}.".format(label, self.size))

    def label(self, block, height):
        """
        :param block: 0-based block index
        :param height: 1-based height inside the block
        :rtype: int
        """
        if not (0 <= block < self._m and 1 <= height <= self._s):
            raise InvalidArgumentError(
                "No element at block {} height {} in [{}x{}].".format(
                    block, height, self._m, self._s))
        return block * self._s + height

    def position(self, label):
        """ Inverse of label().

        :rtype: (int, int)
        """
        self.check_label(label)
        block, offset = divmod(label - 1, self._s)
        return block, offset + 1

    def column(self, label):
        self.check_label(label)
        return label - 1

    def block_labels(self, block):
        return tuple(range(block * self._s + 1, (block + 1) * self._s + 1))

    def maximal_labels(self):
        """ The top element of every block, in block order. """
        return tuple((b + 1) * self._s for b in range(self._m))

    def __eq__(self, other):
        return (isinstance(other, RTPoset) and
                (self._m, self._s) == (other.m, other.s))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((RTPoset, self._m, self._s))

    def __repr__(self):
        return "RTPoset(m={}, s={})".format(self._m, self._s)


class _Segments(object):
    """ Shared code of Ideal and AntiIdeal: one segment length per block.
    """

    def __init__(self, poset, lengths):
        lengths = tuple(int(x) for x in lengths)
        if len(lengths) != poset.m:
            raise InvalidArgumentError(
                "Expected {} segment lengths, got {}.".format(
                    poset.m, len(lengths)))
        if any(x < 0 or x > poset.s for x in lengths):
            raise InvalidArgumentError(
                "Segment lengths {} outside of 0..{}.".format(
                    lengths, poset.s))
        self._poset = poset
        self._lengths = lengths

    @property
    def poset(self):
        return self._poset

    @property
    def size(self):
        return sum(self._lengths)

    def columns(self):
        return tuple(label - 1 for label in self.labels())

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.labels())

    def __eq__(self, other):
        return (type(self) is type(other) and
                self._poset == other.poset and
                self._lengths == other._lengths)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self), self._poset, self._lengths))


class Ideal(_Segments):
    """ Down-set given by the number of bottom elements taken per block.
    """

    @property
    def heights(self):
        return self._lengths

    @property
    def maximal_count(self):
        """ Number of maximal elements: one per non-empty block. """
        return sum(1 for h in self._lengths if h >= 1)

    def labels(self):
        s = self._poset.s
        return tuple(
            b * s + h
            for b, top in enumerate(self._lengths)
            for h in range(1, top + 1))

    def __contains__(self, label):
        block, height = self._poset.position(label)
        return height <= self._lengths[block]

    def complement(self):
        s = self._poset.s
        return AntiIdeal(self._poset, [s - h for h in self._lengths])

    def __repr__(self):
        return "Ideal(heights={})".format(self._lengths)


class AntiIdeal(_Segments):
    """ Up-set given by the number of top elements taken per block.
    """

    @property
    def depths(self):
        return self._lengths

    def labels(self):
        s = self._poset.s
        return tuple(
            (b + 1) * s - d + 1 + k
            for b, d in enumerate(self._lengths)
            for k in range(d))

    def __contains__(self, label):
        block, height = self._poset.position(label)
        return height > self._poset.s - self._lengths[block]

    def complement(self):
        s = self._poset.s
        return Ideal(self._poset, [s - d for d in self._lengths])

    def __repr__(self):
        return "AntiIdeal(depths={})".format(self._lengths)


def generated_ideal(poset, labels):
    """ Smallest ideal containing all given labels.

    :type poset: RTPoset
    :type labels: iterable of int
    :rtype: Ideal
    """
    heights = [0] * poset.m
    for label in labels:
        block, height = poset.position(label)
        heights[block] = max(heights[block], height)
    return Ideal(poset, heights)


def enumerate_anti_ideals(poset, t):
    """ All anti-ideals of size t, lexicographic in their depth vectors.

    :rtype: [AntiIdeal]
    """
    if not 0 <= t <= poset.size:
        raise InvalidArgumentError(
            "Anti-ideal size {} outside of 0..{}.".format(t, poset.size))
    return [AntiIdeal(poset, d) for d in _bounded_vectors(poset.m, poset.s, t)]


def enumerate_ideals(poset, size):
    """ All ideals of the given size, lexicographic in their heights.

    :rtype: [Ideal]
    """
    if not 0 <= size <= poset.size:
        raise InvalidArgumentError(
            "Ideal size {} outside of 0..{}.".format(size, poset.size))
    return [Ideal(poset, h) for h in _bounded_vectors(poset.m, poset.s, size)]


def omega_count(m, s, i, j):
    """ Number of ideals of [m x s] with i elements and exactly j maximal
    elements: choose the j non-empty blocks, then split i over them.

    :rtype: int
    """
    if m < 1 or s < 1:
        raise InvalidArgumentError(
            "omega_count needs m, s >= 1, got m={} s={}.".format(m, s))
    if not 1 <= i <= m * s:
        raise InvalidArgumentError(
            "Ideal size i={} outside of 1..{}.".format(i, m * s))
    if not 1 <= j <= min(m, i):
        raise InvalidArgumentError(
            "Maximal count j={} outside of 1..{}.".format(j, min(m, i)))
    return comb(m, j) * count_compositions(i, j, s)
