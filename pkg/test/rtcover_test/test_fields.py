# -*- coding: utf-8 -*-
from unittest import TestCase

import galois

from rtcover.errors import InvalidArgumentError
from rtcover.fields import FieldTable
from rtcover.fields import field_table
from rtcover.fields import hasse_derivative
from rtcover.fields import is_supported_order
from rtcover.fields import prime_power


class PrimePowerTest(TestCase):

    def test_prime_power(self):
        """ Prime power factorisation.
        """
        self.assertEqual(prime_power(16), (2, 4))
        self.assertEqual(prime_power(7), (7, 1))
        self.assertEqual(prime_power(9), (3, 2))
        self.assertIsNone(prime_power(12))
        self.assertIsNone(prime_power(1))

    def test_supported(self):
        self.assertTrue(is_supported_order(9))
        self.assertFalse(is_supported_order(6))
        self.assertFalse(is_supported_order(17))


class FieldTableTest(TestCase):

    def test_gf4(self):
        """ x^2 = x + 1 in GF(4), x being element 2.
        """
        field = field_table(4)
        self.assertEqual(field.modulus, (1, 1))
        self.assertEqual(field.mul(2, 2), 3)
        self.assertEqual(field.mul(2, 3), 1)
        self.assertEqual(field.add(2, 3), 1)
        self.assertEqual(field.characteristic, 2)

    def test_conway_moduli(self):
        """ Extension fields use the Conway polynomial as modulus.
        """
        self.assertEqual(field_table(8).modulus, (1, 1, 0))
        self.assertEqual(field_table(9).modulus, (2, 2))
        self.assertEqual(field_table(16).modulus, (1, 1, 0, 0))

    def test_tables_match_galois(self):
        """ Every table entry is the galois result on the same integers.
        """
        for order in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
            field = field_table(order)
            gf = galois.GF(order)
            for a in field.elements:
                for b in field.elements:
                    self.assertEqual(field.add(a, b), int(gf(a) + gf(b)))
                    self.assertEqual(field.mul(a, b), int(gf(a) * gf(b)))

    def test_groups(self):
        """ Every nonzero element permutes the field by multiplication and
        every element by addition.
        """
        for order in (5, 8, 9, 16):
            field = field_table(order)
            for a in field.elements:
                self.assertEqual(
                    sorted(field.add(a, b) for b in field.elements),
                    list(field.elements))
                if a:
                    self.assertEqual(
                        sorted(field.mul(a, b) for b in field.elements),
                        list(field.elements))

    def test_primitive(self):
        self.assertEqual(field_table(7).primitive, 3)
        field = field_table(9)
        powers = {field.power(field.primitive, e) for e in range(8)}
        self.assertEqual(len(powers), 8)

    def test_unsupported(self):
        """ Orders without a field table raise.
        """
        for order in (6, 32, 1):
            with self.assertRaises(InvalidArgumentError):
                FieldTable(order)

    def test_cached(self):
        self.assertIs(field_table(8), field_table(8))


class PolynomialTest(TestCase):

    def test_evaluate(self):
        """ Polynomial evaluation over GF(5).
        """
        field = field_table(5)
        self.assertEqual(field.evaluate((1, 2, 1), 3), 1)
        self.assertEqual(field.evaluate((4,), 2), 4)

    def test_hasse_derivative(self):
        field = field_table(5)
        f = (1, 2, 1)
        self.assertEqual(hasse_derivative(field, f, 0, 3),
                         field.evaluate(f, 3))
        self.assertEqual(hasse_derivative(field, f, 1, 3), 3)
        self.assertEqual(hasse_derivative(field, f, 2, 3), 1)
        self.assertEqual(hasse_derivative(field, f, 3, 3), 0)

    def test_binomials_reduce(self):
        """ C(2, 1) vanishes in characteristic 2, C(2, 2) does not.
        """
        field = field_table(2)
        self.assertEqual(hasse_derivative(field, (0, 0, 1), 1, 1), 0)
        self.assertEqual(hasse_derivative(field, (0, 0, 1), 2, 1), 1)
