from __future__ import print_function
from builtins import str
import os
import unittest
import numpy as np
from qmcode.utKit import utKit
from fundamentals import tools
from os.path import expanduser
home = expanduser("~")

packageDirectory = utKit("").get_project_root()
settingsFile = packageDirectory + "/test_settings.yaml"
su = tools(
    arguments={"settingsFile": settingsFile},
    docString=__doc__,
    logLevel="DEBUG",
    options_first=False,
    projectName=None,
    defaultSettingsFile=False
)
arguments, settings, log, dbConn = su.setup()

S3 = {
    "elements": ["e", "r", "rr", "s", "sr", "srr"],
    "identity": "e",
    "table": [
        ["e", "r", "rr", "s", "sr", "srr"],
        ["r", "rr", "e", "srr", "s", "sr"],
        ["rr", "e", "r", "sr", "srr", "s"],
        ["s", "sr", "srr", "e", "r", "rr"],
        ["sr", "srr", "s", "rr", "e", "r"],
        ["srr", "s", "sr", "r", "rr", "e"]
    ]
}


class test_factors(unittest.TestCase):

    def test_cyclic_factor_function(self):

        from qmcode.commonutils.factors import cyclic_factor
        Z5 = cyclic_factor(order=5)
        self.assertEqual(Z5.multiply(3, 4), 2)
        self.assertEqual(Z5.inverse(2), 3)
        self.assertEqual(Z5.power(2, 3), 1)
        self.assertEqual(Z5.power(2, -1), 3)
        self.assertEqual(list(Z5.units()), [1, 2, 3, 4])
        self.assertEqual(list(cyclic_factor(6).units()), [1, 5])
        self.assertEqual(Z5.nontrivial_elements(), [1, 2, 3, 4])
        self.assertEqual(Z5.element("7"), 2)

    def test_cyclic_factor_function_exception(self):

        from qmcode.commonutils.factors import cyclic_factor
        from qmcode.commonutils.errors import ConfigError, ElementError
        with self.assertRaises(ConfigError):
            cyclic_factor(order=1)
        with self.assertRaises(ElementError):
            cyclic_factor(order=5).multiply(5, 1)

    def test_integer_factor_function(self):

        from qmcode.commonutils.factors import integer_factor
        Z = integer_factor()
        self.assertEqual(Z.multiply(7, -2), 5)
        self.assertEqual(Z.inverse(4), -4)
        self.assertEqual(Z.power(3, -4), -12)
        self.assertFalse(Z.is_finite())
        self.assertEqual(Z.multiply(10**30, 1), 10**30 + 1)

    def test_power_matches_repeated_product_function(self):

        from qmcode.commonutils.factors import validate_table
        S, errors = validate_table(log=log, raw=S3)
        self.assertEqual(errors, [])
        for x in S.elements():
            product = S.identity
            for k in range(1, 8):
                product = S.multiply(product, x)
                self.assertEqual(S.power(x, k), product)
                self.assertEqual(S.power(x, -k), S.inverse(product))

    def test_validate_table_function(self):

        from qmcode.commonutils.factors import validate_table
        S, errors = validate_table(log=log, raw=S3)
        self.assertEqual(errors, [])
        self.assertEqual(S.order, 6)
        r, s = S.element("r"), S.element("s")
        self.assertNotEqual(S.multiply(r, s), S.multiply(s, r))
        self.assertEqual(S.name(S.inverse(r)), "rr")

    def test_validate_table_function_exception(self):

        from qmcode.commonutils.factors import validate_table, load_factor
        from qmcode.commonutils.errors import TableError

        # NOT CLOSED
        factor, errors = validate_table(log=log, raw={
            "elements": ["e", "x"], "identity": "e", "table": [["e", "x"], ["x", "y"]]})
        self.assertIsNone(factor)
        self.assertTrue(errors[0].startswith("non-closure"))

        # WRONG IDENTITY
        factor, errors = validate_table(log=log, raw={
            "elements": ["e", "x"], "identity": "x", "table": [["e", "x"], ["x", "e"]]})
        self.assertTrue(any(e.startswith("no identity") for e in errors))

        # NO INVERSE FOR x
        factor, errors = validate_table(log=log, raw={
            "elements": ["e", "x"], "identity": "e", "table": [["e", "x"], ["x", "x"]]})
        self.assertTrue(any(e.startswith("missing inverse") for e in errors))

        # A LATIN SQUARE WITH IDENTITY THAT IS NOT ASSOCIATIVE
        names = ["e", "a", "b", "c", "d"]
        table = [
            ["e", "a", "b", "c", "d"],
            ["a", "e", "c", "d", "b"],
            ["b", "d", "e", "a", "c"],
            ["c", "b", "d", "e", "a"],
            ["d", "c", "a", "b", "e"]
        ]
        factor, errors = validate_table(log=log, raw={
            "elements": names, "identity": "e", "table": table})
        self.assertIsNone(factor)
        self.assertTrue(any(e.startswith("non-associative") and "witness" in e for e in errors))

        with self.assertRaises(TableError):
            load_factor(log=log, raw={"kind": "table", "elements": names, "identity": "e", "table": table})

        factor, errors = validate_table(log=log, raw=S3, maxOrder=4)
        self.assertIn("exceeds", errors[0])

        factor, errors = validate_table(log=log, raw={
            "elements": ["e", "a b"], "identity": "e", "table": [["e", "a b"], ["a b", "e"]]})
        self.assertIsNone(factor)

    def test_factor_automorphism_function(self):

        from qmcode.commonutils.factors import cyclic_factor, integer_factor, factor_automorphism, validate_table
        Z5 = cyclic_factor(5)
        double = factor_automorphism.multiplication(Z5, 2)
        self.assertEqual(double(3), 1)
        self.assertEqual(double.inverse()(1), 3)
        self.assertEqual(double.spec(), "mul:2")
        self.assertFalse(double.is_identity())

        neg = factor_automorphism.multiplication(integer_factor(), -1)
        self.assertEqual(neg(7), -7)
        self.assertEqual(neg.inverse(), neg)

        S, _ = validate_table(log=log, raw=S3)
        inner = factor_automorphism.conjugation(S, S.element("r"))
        self.assertEqual(S.name(inner(S.element("s"))), "sr")
        self.assertEqual(inner.spec(), "conj:r")
        for x in S.elements():
            self.assertEqual(inner.inverse()(inner(x)), x)

        explicit = factor_automorphism.from_images(Z5, {0: 0, 1: 2, 2: 4, 3: 1, 4: 3})
        self.assertEqual(explicit, double)
        self.assertEqual(explicit.spec(), "map:0>0,1>2,2>4,3>1,4>3")

    def test_factor_automorphism_function_exception(self):

        from qmcode.commonutils.factors import cyclic_factor, integer_factor, factor_automorphism
        from qmcode.commonutils.errors import AutomorphismError
        with self.assertRaises(AutomorphismError):
            factor_automorphism.multiplication(cyclic_factor(6), 2)
        with self.assertRaises(AutomorphismError):
            factor_automorphism.multiplication(integer_factor(), 2)
        with self.assertRaises(AutomorphismError):
            factor_automorphism.from_images(cyclic_factor(3), {0: 0, 1: 1, 2: 1})
        with self.assertRaises(AutomorphismError):
            # A BIJECTION THAT IS NOT A HOMOMORPHISM
            factor_automorphism.from_images(cyclic_factor(3), {0: 1, 1: 0, 2: 2})

    def test_check_isomorphism_function(self):

        from qmcode.commonutils.factors import cyclic_factor, integer_factor, check_isomorphism
        from qmcode.commonutils.errors import ConfigError
        Z3 = cyclic_factor(3)
        self.assertEqual(check_isomorphism(Z3, Z3, {0: 0, 1: 2, 2: 1}), (0, 2, 1))
        self.assertEqual(check_isomorphism(integer_factor(), integer_factor(), {1: -1}), -1)
        with self.assertRaises(ConfigError):
            check_isomorphism(Z3, cyclic_factor(4), {0: 0})
        with self.assertRaises(ConfigError):
            check_isomorphism(Z3, Z3, {0: 1, 1: 0, 2: 2})

    def test_random_nontrivial_element_function(self):

        from qmcode.commonutils.factors import cyclic_factor, integer_factor, random_nontrivial_element
        rng = np.random.default_rng(3)
        Z5 = cyclic_factor(5)
        seen = {random_nontrivial_element(Z5, rng) for _ in range(400)}
        self.assertEqual(seen, {1, 2, 3, 4})
        values = [random_nontrivial_element(integer_factor(), rng, 9) for _ in range(400)]
        self.assertNotIn(0, values)
        self.assertTrue(all(-9 <= v <= 9 for v in values))
        self.assertTrue(min(values) < 0 < max(values))

    def test_cyclic_factor_group_axioms_function(self):

        from qmcode.commonutils.factors import cyclic_factor
        for n in range(2, 9):
            Z = cyclic_factor(n)
            elements = list(Z.elements())
            self.assertEqual(elements, list(range(n)))
            for x in elements:
                self.assertEqual(Z.multiply(Z.identity, x), x)
                self.assertEqual(Z.multiply(x, Z.identity), x)
                self.assertTrue(Z.is_identity(Z.multiply(x, Z.inverse(x))))
                for y in elements:
                    self.assertIn(Z.multiply(x, y), elements)
                    for z in elements:
                        self.assertEqual(
                            Z.multiply(Z.multiply(x, y), z),
                            Z.multiply(x, Z.multiply(y, z)))

    def test_cyclic_factor_matches_validated_table_function(self):

        from qmcode.commonutils.factors import cyclic_factor, validate_table
        for n in range(2, 9):
            Z = cyclic_factor(n)
            raw = {
                "elements": [str(i) for i in range(n)],
                "identity": "0",
                "table": [[str((i + j) % n) for j in range(n)] for i in range(n)]
            }
            T, errors = validate_table(log=log, raw=raw)
            self.assertEqual(errors, [])
            for x in range(n):
                self.assertEqual(T.name(T.inverse(T.element(str(x)))), str(Z.inverse(x)))
                for y in range(n):
                    self.assertEqual(
                        T.name(T.multiply(T.element(str(x)), T.element(str(y)))),
                        str(Z.multiply(x, y)))
