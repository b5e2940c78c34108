from __future__ import print_function
from builtins import str
import os
import unittest
from itertools import product
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

from qmcode.commonutils.parser import load_config, parse_word
from qmcode.commonutils.words import reduce
z5z2 = load_config(log=log, pathOrName="z5_z2")
zz2 = load_config(log=log, pathOrName="z_z2")


def tuples(maxLength, maxEntry):
    for k in range(1, maxLength + 1):
        for t in product(range(1, maxEntry + 1), repeat=k):
            yield t


class test_codes(unittest.TestCase):

    def test_code_function(self):

        from qmcode.commonutils.codes import code
        w = reduce(parse_word("a^2 b a b a b a^4 b a b a", z5z2))
        self.assertEqual(code(w, "A"), (1, 2, 1, 2))
        self.assertEqual(code(w, "B"), (5,))
        w = reduce(parse_word("a^4 b a b a b a^3 b a b a b a^3", z5z2))
        self.assertEqual(code(w, "A"), (1, 2, 1, 2, 1))
        self.assertEqual(code(reduce(parse_word("b", z5z2)), "A"), ())

    def test_weighted_z_code_function(self):

        from qmcode.commonutils.codes import weighted_z_code
        w = reduce(parse_word(
            "a^7 b a^-2 b a^-4 b a^-1 b a^9 b a^2 b a^-3", zz2))
        self.assertEqual(weighted_z_code(w, "A"), (7, 7, 11, 3))

    def test_weighted_z_code_function_exception(self):

        from qmcode.commonutils.codes import weighted_z_code
        from qmcode.commonutils.errors import DomainError
        with self.assertRaises(DomainError):
            weighted_z_code(reduce(parse_word("a b", z5z2)), "A")

    def test_count_disjoint_function(self):

        from qmcode.commonutils.codes import count_disjoint
        self.assertEqual(count_disjoint((1, 2, 1, 2), (1, 2)), 2)
        self.assertEqual(count_disjoint((1, 2, 1, 2), (2, 1)), 1)
        self.assertEqual(count_disjoint((1, 2, 1, 2, 1), (1, 2, 1)), 1)
        self.assertEqual(count_disjoint((1, 1, 1, 1, 1), (1, 1)), 2)
        self.assertEqual(count_disjoint((1,), (1, 2)), 0)

    def test_count_disjoint_matches_exhaustive_search_function(self):

        from qmcode.commonutils.codes import count_disjoint, max_disjoint_occurrences
        # EVERY CODE OF LENGTH ≤ 10 WITH ENTRIES ≤ 3 AGAINST EVERY PATTERN OF LENGTH ≤ 4
        patterns = list(tuples(4, 3))
        for c in tuples(10, 3):
            for z in patterns:
                found, expected = count_disjoint(c, z), max_disjoint_occurrences(c, z)
                if found != expected:
                    self.fail(f"count_disjoint{(c, z)} = {found}, exhaustive search gives {expected}")

    # LONG-RUNNING; DESELECT WITH `nose2 -A "!slow"`
    test_count_disjoint_matches_exhaustive_search_function.slow = True

    def test_is_generic_function(self):

        from qmcode.commonutils.codes import is_generic
        self.assertTrue(is_generic((1, 2, 3)))
        self.assertFalse(is_generic((1, 2)))
        self.assertFalse(is_generic((1,)))
        self.assertFalse(is_generic((1, 2, 1)))
        self.assertTrue(is_generic((1, 1, 10, 1, 1, 12, 1, 1, 14)))

    def test_is_generic_matches_direct_scan_function(self):

        from qmcode.commonutils.codes import is_generic
        for z in tuples(6, 4):
            zz = z + z
            k = len(z)
            reverse = z[::-1]
            found = any(zz[i:i + k] == reverse for i in range(len(zz) - k + 1))
            self.assertEqual(is_generic(z), not found, z)

    def test_code_reversal_law_function(self):

        from qmcode.commonutils.codes import code, weighted_z_code
        from qmcode.commonutils.words import invert
        from qmcode.verify.sampling import sample_word
        rng = np.random.default_rng(4)
        for _ in range(10000):
            w = sample_word(z5z2, 16, rng)
            for side in ("A", "B"):
                self.assertEqual(code(invert(w), side), code(w, side)[::-1])
            v = sample_word(zz2, 16, rng)
            self.assertEqual(weighted_z_code(invert(v), "A"), weighted_z_code(v, "A")[::-1])

    def test_check_pattern_function_exception(self):

        from qmcode.commonutils.codes import check_pattern
        from qmcode.commonutils.errors import DomainError
        for bad in [(), (0, 1), (1, -2), (1.5,)]:
            with self.assertRaises(DomainError):
                check_pattern(bad)
