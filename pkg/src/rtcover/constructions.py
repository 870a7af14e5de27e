# -*- coding: utf-8 -*-
""" Constructions and transformations of ordered covering arrays.

None of the functions below verifies its output; callers that need a
guarantee pass the result through designs.verify_oca or designs.verified.
"""
from itertools import combinations
from itertools import product
from logging import getLogger
from math import comb

import numpy as np

from .designs import OrderedArray
from .errors import InvalidArgumentError
from .fields import field_table
from .fields import hasse_derivative
from .log_msg import LogMsg


_LOG = getLogger(__name__)

DROP_BOTTOM_LEVEL = "drop-bottom-level"
DROP_BLOCK = "drop-block"


def depth_extension_map(m, t):
    """ Column map f of the depth extension from [m x (t-1)] to [m x t].

    Entry j is the source column copied into target column j. The new
    bottom element of block i repeats the top of block (i + 1) mod m, every
    other element keeps its place in its block.

    :rtype: [int]
    """
    if m < 2:
        raise InvalidArgumentError(
            "Depth extension needs m >= 2 for a derangement, got m=1.")
    if t < 2:
        raise InvalidArgumentError(
            "Depth extension needs t >= 2, got t={}.".format(t))
    src_depth = t - 1
    mapping = []
    for block in range(m):
        mapping.append(((block + 1) % m + 1) * src_depth - 1)
        mapping.extend(block * src_depth + h for h in range(src_depth))
    return mapping


def extend_depth(array):
    """ OCA(N;t,m,t-1,v) -> OCA(N;t,m,t,v) under the cyclic derangement.

    :type array: OrderedArray
    :rtype: OrderedArray
    """
    if array.s != array.t - 1:
        raise InvalidArgumentError(
            "Depth extension needs s = t - 1, got s={} t={}.".format(
                array.s, array.t))
    mapping = depth_extension_map(array.m, array.t)
    result = array.with_entries(array.entries[:, mapping], s=array.t)
    _LOG.info(LogMsg("Extended {} to {}.", array, result))
    return result


def restrict(array, mode, index=None):
    """ Delete columns so that the array keeps being an OCA of smaller
    shape.

    :param mode: DROP_BOTTOM_LEVEL removes the minimal element of every
        block (s -> s - 1), DROP_BLOCK removes the block `index` (default:
        the last one, m -> m - 1)
    :rtype: OrderedArray
    """
    m, s = array.m, array.s
    if mode == DROP_BOTTOM_LEVEL:
        if s < 2:
            raise InvalidArgumentError("Can not drop a level when s=1.")
        dropped = [b * s for b in range(m)]
        changes = dict(s=s - 1)
    elif mode == DROP_BLOCK:
        if m < 2:
            raise InvalidArgumentError("Can not drop the only block.")
        index = m - 1 if index is None else index
        if not 0 <= index < m:
            raise InvalidArgumentError(
                "Block index {} outside of 0..{}.".format(index, m - 1))
        dropped = range(index * s, (index + 1) * s)
        changes = dict(m=m - 1)
    else:
        raise InvalidArgumentError("Unknown restriction '{}'.".format(mode))
    return array.delete_columns(dropped, **changes)


def restrict_to(array, m, s):
    """ Drop trailing blocks, then bottom levels, down to shape [m x s].
    """
    if m > array.m or s > array.s:
        raise InvalidArgumentError(
            "Can not restrict {} to m={} s={}.".format(array, m, s))
    while array.m > m:
        array = restrict(array, DROP_BLOCK)
    while array.s > s:
        array = restrict(array, DROP_BOTTOM_LEVEL)
    return array


def oca_depth2_from_ca(ca):
    """ CA_lambda(N;2,m,v) -> OCA_lambda(N;2,m,2,v).

    Block i gets CA column i on top and CA column (i + 1) mod m below it.

    :rtype: OrderedArray
    """
    if ca.s != 1 or ca.t != 2:
        raise InvalidArgumentError(
            "Expected a strength 2 covering array, got {}.".format(ca))
    if ca.m < 2:
        raise InvalidArgumentError("Need at least two CA columns.")
    order = []
    for i in range(ca.m):
        order.extend(((i + 1) % ca.m, i))
    return ca.with_entries(ca.entries[:, order], s=2)


def fuse(array):
    """ OCA_lambda(N;t,m,s,v) -> OCA_lambda(N-2;t,m,s,v-1).

    Every column is relabeled so that row 0 is constant v-1, row 0 is
    removed, then every v-1 left in the array is replaced by the symbol of
    the (new) first row in that column, or 0 where that symbol is v-1 as
    well, and the first row is removed.

    :rtype: OrderedArray
    """
    v = array.v
    if v <= 2:
        raise InvalidArgumentError(
            "Fusion needs v >= 3, got v={}.".format(v))
    if array.N < 2:
        raise InvalidArgumentError("Fusion needs at least two rows.")
    top = v - 1
    entries = array.entries
    first = entries[0][None, :]
    entries = np.where(entries == first, top,
                       np.where(entries == top, first, entries))[1:]
    row = entries[0]
    replacement = np.where(row != top, row, 0)[None, :]
    entries = np.where(entries == top, replacement, entries)[1:]
    result = array.with_entries(entries, v=v - 1)
    _LOG.info(LogMsg("Fused {} into {}.", array, result))
    return result


def kleitman_spencer_number(m):
    """ Least N >= 4 with m <= C(N - 1, floor(N/2) - 1), i.e. CAN(2,m,2).

    :rtype: int
    """
    if m < 2:
        raise InvalidArgumentError(
            "Kleitman-Spencer number needs m >= 2, got {}.".format(m))
    n = 4
    while comb(n - 1, n // 2 - 1) < m:
        n += 1
    return n


def kleitman_spencer_ca(m):
    """ Binary CA(N;2,m,2) with N = kleitman_spencer_number(m).

    Columns are weight floor(N/2) vectors starting with a 1, taken in
    lexicographic order of their supports.

    :rtype: OrderedArray
    """
    n = kleitman_spencer_number(m)
    entries = np.zeros((n, m), dtype=np.int64)
    supports = combinations(range(1, n), n // 2 - 1)
    for column, support in zip(range(m), supports):
        entries[0, column] = 1
        entries[list(support), column] = 1
    return OrderedArray(entries, t=2, m=m, s=1, v=2)


def rs_ooa(q, t):
    """ OOA(q^t;t,q+1,t,q) from the polynomials of degree < t over GF(q).

    Block a (one per field element, in element order) lists the Hasse
    derivatives of f at a, derivative k sitting at height t - k. The last
    block holds the coefficients, f_{t-1} on top and f_0 at the bottom.

    :rtype: OrderedArray
    """
    if t < 2:
        raise InvalidArgumentError(
            "Strength must be at least 2, got {}.".format(t))
    field = field_table(q)
    rows = []
    for coefficients in product(field.elements, repeat=t):
        row = []
        for a in field.elements:
            row.extend(hasse_derivative(field, coefficients, t - h, a)
                       for h in range(1, t + 1))
        row.extend(coefficients)
        rows.append(row)
    result = OrderedArray(rows, t=t, m=q + 1, s=t, v=q)
    _LOG.info(LogMsg("Built {} over {}.", result, field))
    return result


def ooa_for(t, m, s, q):
    """ rs_ooa(q, t) restricted to shape [m x s]. """
    return restrict_to(rs_ooa(q, t), m, s)


def fused_oca_for(t, m, s, v):
    """ fuse(rs_ooa(v + 1, t)) restricted to shape [m x s]. """
    return restrict_to(fuse(rs_ooa(v + 1, t)), m, s)
