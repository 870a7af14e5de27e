# -*- coding: utf-8 -*-
""" Addition and multiplication tables of the finite fields of order <= 16.

Element e of GF(p^k) stands for the polynomial sum(c_i x^i) whose
coefficients are the base-p digits of e (c_0 least significant), the integer
representation of galois. The integers 0..p-1 are therefore the prime
subfield.
"""
from functools import lru_cache
from logging import getLogger
from math import comb

import galois
import numpy as np
from sympy import factorint

from .errors import InvalidArgumentError
from .log_msg import LogMsg


_LOG = getLogger(__name__)

MAX_ORDER = 16


def prime_power(n):
    """ (p, k) with n = p^k, or None if n is not a prime power.
    """
    if n < 2:
        return None
    factors = factorint(n)
    if len(factors) != 1:
        return None
    (p, k), = factors.items()
    return int(p), int(k)


def is_supported_order(n):
    return n <= MAX_ORDER and prime_power(n) is not None


def _table(field_array):
    return field_array.view(np.ndarray).astype(np.int64)


class FieldTable(object):
    """ GF(order) given by full operation tables.

    The tables, the modulus and the primitive element come from
    galois.GF(order): the modulus is its default irreducible (Conway)
    polynomial and the primitive element the least one.
    """

    def __init__(self, order):
        if not is_supported_order(order):
            raise InvalidArgumentError(
                "Field order {} is not a prime power <= {}.".format(
                    order, MAX_ORDER))
        self._p, self._k = prime_power(order)
        self._order = order
        self._gf = galois.GF(order)
        x = self._gf.elements
        self._add = _table(x[:, None] + x[None, :])
        self._mul = _table(x[:, None] * x[None, :])
        # Low coefficients of the monic modulus, constant term first.
        coeffs = self._gf.irreducible_poly.coeffs.view(np.ndarray)
        self._modulus = tuple(int(c) for c in coeffs[::-1][:-1])
        self._check_axioms()
        self._primitive = int(self._gf.primitive_element)
        _LOG.debug(LogMsg(
            "Built GF({}) with modulus {} and primitive element {}.",
            order, self._gf.irreducible_poly, self._primitive))

    def _check_axioms(self):
        add, mul, n = self._add, self._mul, self._order
        idx = np.arange(n)
        assoc = mul[mul[:, :, None], idx[None, None, :]] == \
            mul[idx[:, None, None], mul[None, :, :]]
        dist = mul[idx[:, None, None], add[None, :, :]] == \
            add[mul[:, :, None], mul[:, None, :]]
        inverses = all((mul[a] == 1).any() for a in range(1, n))
        if not (assoc.all() and dist.all() and inverses):
            raise RuntimeError("Tables of GF({}) are not a field.".format(n))

    @property
    def order(self):
        return self._order

    @property
    def characteristic(self):
        return self._p

    @property
    def primitive(self):
        return self._primitive

    @property
    def modulus(self):
        """ Low coefficients of the monic modulus polynomial. """
        return self._modulus

    @property
    def elements(self):
        return range(self._order)

    def add(self, a, b):
        return int(self._add[a, b])

    def mul(self, a, b):
        return int(self._mul[a, b])

    def scalar(self, c):
        """ The prime subfield element c * 1. """
        return c % self._p

    def power(self, a, e):
        return int(self._gf(a) ** e)

    def evaluate(self, coefficients, a):
        """ f(a), coefficients f_0, f_1, ... """
        poly = galois.Poly(list(coefficients), field=self._gf, order="asc")
        return int(poly(self._gf(a)))

    def __repr__(self):
        return "FieldTable({})".format(self._order)


@lru_cache(maxsize=None)
def field_table(order):
    """ Shared FieldTable instance per order. """
    return FieldTable(order)


def hasse_derivative(field, coefficients, k, a):
    """ k-th Hasse derivative of f at a: sum over j >= k of
    C(j, k) f_j a^(j-k), with C(j, k) reduced into the prime subfield.
    """
    if k >= len(coefficients):
        return 0
    shifted = [field.mul(field.scalar(comb(j, k)), coefficients[j])
               for j in range(k, len(coefficients))]
    return field.evaluate(shifted, a)
