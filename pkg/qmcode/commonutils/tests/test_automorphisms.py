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

from qmcode.commonutils.parser import load_config, parse_word, parse_automorphism, format_word
from qmcode.commonutils.words import reduce
z5z2 = load_config(log=log, pathOrName="z5_z2")
zz3 = load_config(log=log, pathOrName="z_z3")
z3z3 = load_config(log=log, pathOrName="z3_z3")
dinf = load_config(log=log, pathOrName="z2_z2")
s3z2 = load_config(log=log, pathOrName="s3_z2")


def w(text, config):
    return reduce(parse_word(text, config))


class test_automorphisms(unittest.TestCase):

    def test_factor_auto_function(self):

        phi = parse_automorphism("fauto:A:mul:2", z5z2)
        self.assertEqual(format_word(phi.apply(w("a b a^3 b", z5z2))), "a^2 b a b")

    def test_partial_conjugation_function(self):

        phi = parse_automorphism("pconj:A:2", z5z2)
        # b ↦ a² b a³; THE NEIGHBOURING A-LETTERS MERGE
        self.assertEqual(format_word(phi.apply(w("a b a", z5z2))), "a^3 b a^4")

    def test_swap_function(self):

        phi = parse_automorphism("swap", z3z3)
        self.assertEqual(format_word(phi.apply(w("a b^2 a^2", z3z3))), "b a^2 b^2")
        self.assertEqual(phi.apply(phi.apply(w("a b^2 a^2", z3z3))), w("a b^2 a^2", z3z3))

    def test_swap_function_exception(self):

        from qmcode.commonutils.errors import AutomorphismError
        with self.assertRaises(AutomorphismError):
            parse_automorphism("swap", z5z2)

    def test_transvection_function(self):

        from qmcode.commonutils.words import factor_projection
        right = parse_automorphism("transv:A:right:1", zz3)
        left = parse_automorphism("transv:A:left:2", zz3)
        self.assertEqual(format_word(right.apply(w("a^2", zz3))), "a b a b")
        self.assertEqual(format_word(right.apply(w("a^-1", zz3))), "b^2 a^-1")
        self.assertEqual(format_word(left.apply(w("a^-2", zz3))), "a^-1 b a^-1 b")

        from qmcode.verify.sampling import sample_word
        rng = np.random.default_rng(5)
        for _ in range(500):
            v = sample_word(zz3, 12, rng)
            for phi in (right, left):
                self.assertEqual(factor_projection(phi.apply(v), "A"), factor_projection(v, "A"))

    def test_transvection_function_exception(self):

        from qmcode.commonutils.errors import AutomorphismError
        with self.assertRaises(AutomorphismError):
            parse_automorphism("transv:A:right:1", z5z2)
        with self.assertRaises(AutomorphismError):
            parse_automorphism("transv:A:up:1", zz3)
        with self.assertRaises(AutomorphismError):
            parse_automorphism("transv:A:right:0", zz3)

    def test_inverse_function(self):

        from qmcode.commonutils.automorphisms import random_automorphism
        from qmcode.verify.sampling import sample_word
        rng = np.random.default_rng(9)
        for config in (z5z2, zz3, z3z3, s3z2):
            for _ in range(100):
                phi = random_automorphism(log, config, 6, rng)
                v = sample_word(config, 10, rng)
                self.assertEqual(phi.inverse().apply(phi.apply(v)), v)
                self.assertEqual(phi.apply(phi.inverse().apply(v)), v)

    def test_aut_commutator_function(self):

        from qmcode.commonutils.automorphisms import aut_commutator
        swap = parse_automorphism("swap", dinf)
        self.assertEqual(format_word(aut_commutator(swap, w("a", dinf))), "b a")

    def test_inner_automorphism_function(self):

        from qmcode.commonutils.automorphisms import inner_automorphism
        from qmcode.commonutils.words import multiply, invert
        from qmcode.verify.sampling import sample_word
        rng = np.random.default_rng(13)
        for config in (z5z2, zz3, s3z2):
            for _ in range(100):
                g = sample_word(config, 5, rng)
                x = sample_word(config, 8, rng)
                inner = inner_automorphism(config, g)
                self.assertEqual(inner.apply(x), multiply(multiply(g, x), invert(g)))

    def test_conjugate_function(self):

        from qmcode.commonutils.automorphisms import conjugate
        f = parse_automorphism("fauto:A:mul:2", z5z2)
        psi = parse_automorphism("pconj:B:1", z5z2)
        v = w("a b a^3", z5z2)
        self.assertEqual(conjugate(f, psi).apply(v), psi.apply(f.apply(psi.inverse().apply(v))))

    def test_random_automorphism_function(self):

        from qmcode.commonutils.automorphisms import random_automorphism, available_kinds
        self.assertEqual(available_kinds(z5z2), ["fauto", "pconj"])
        self.assertEqual(available_kinds(z3z3), ["fauto", "pconj", "swap"])
        self.assertEqual(available_kinds(zz3), ["fauto", "pconj", "transv"])
        one = random_automorphism(log, zz3, 8, 42)
        two = random_automorphism(log, zz3, 8, 42)
        self.assertEqual(one.spec(), two.spec())
        self.assertEqual(len(one), 8)
        only = random_automorphism(log, zz3, 20, 1, kinds=["transv"])
        self.assertEqual(set(only.kinds()), {"transv"})

    def test_random_automorphism_function_exception(self):

        from qmcode.commonutils.automorphisms import random_automorphism
        from qmcode.commonutils.errors import AutomorphismError
        with self.assertRaises(AutomorphismError):
            random_automorphism(log, z5z2, 4, 1, kinds=["swap"])
        with self.assertRaises(AutomorphismError):
            random_automorphism(log, z5z2, 4, 1, kinds=["transv"])

    def test_homomorphism_law_function(self):

        from qmcode.commonutils.automorphisms import available_kinds, random_automorphism
        from qmcode.commonutils.words import multiply
        from qmcode.verify.sampling import sample_word
        rng = np.random.default_rng(21)
        for config in (z5z2, zz3, z3z3, s3z2):
            for kind in available_kinds(config):
                for _ in range(200):
                    phi = random_automorphism(log, config, 3, rng, kinds=[kind])
                    u = sample_word(config, 10, rng)
                    v = sample_word(config, 10, rng)
                    self.assertEqual(phi.apply(multiply(u, v)), multiply(phi.apply(u), phi.apply(v)),
                                     (phi.spec(), format_word(u), format_word(v)))

    def test_factor_automorphisms_fix_codes_function(self):

        from qmcode.commonutils.automorphisms import random_automorphism
        from qmcode.commonutils.codes import code
        from qmcode.verify.sampling import sample_word
        rng = np.random.default_rng(22)
        for config in (z5z2, z3z3, s3z2):
            for _ in range(500):
                phi = random_automorphism(log, config, 4, rng, kinds=["fauto"])
                v = sample_word(config, 14, rng)
                for side in ("A", "B"):
                    self.assertEqual(code(phi.apply(v), side), code(v, side))

    def test_swap_exchanges_codes_function(self):

        from qmcode.commonutils.codes import code
        from qmcode.verify.sampling import sample_word
        phi = parse_automorphism("swap", z3z3)
        rng = np.random.default_rng(23)
        for _ in range(1000):
            v = sample_word(z3z3, 14, rng)
            self.assertEqual(code(phi.apply(v), "A"), code(v, "B"))
            self.assertEqual(code(phi.apply(v), "B"), code(v, "A"))

    def test_transvections_fix_weighted_codes_function(self):

        from qmcode.commonutils.automorphisms import random_generator
        from qmcode.commonutils.codes import weighted_z_code
        from qmcode.verify.sampling import sample_word
        rng = np.random.default_rng(24)
        for _ in range(1000):
            t = random_generator(zz3, "transv", rng)
            v = sample_word(zz3, 14, rng)
            self.assertEqual(weighted_z_code(t.apply(v), "A"), weighted_z_code(v, "A"), (t.spec(), format_word(v)))

    def test_then_composes_transvections_function(self):

        from qmcode.commonutils.automorphisms import automorphism
        from qmcode.verify.sampling import sample_word
        first = parse_automorphism("transv:A:right:1", zz3)
        second = parse_automorphism("transv:A:left:2", zz3)
        both = first.then(second)
        self.assertEqual(both.spec(), "transv:A:right:1 transv:A:left:2")
        # s ↦ s b ↦ (b² s) b
        self.assertEqual(format_word(both.apply(w("a", zz3))), "b^2 a b")
        rng = np.random.default_rng(25)
        for _ in range(500):
            v = sample_word(zz3, 12, rng)
            self.assertEqual(both.apply(v), second.apply(first.apply(v)))
            self.assertEqual(both.inverse().apply(both.apply(v)), v)

    def test_random_automorphism_mixes_kinds_function(self):

        from collections import Counter
        from qmcode.commonutils.automorphisms import random_automorphism
        phi = random_automorphism(log, zz3, 1000, 26)
        counts = Counter(phi.kinds())
        self.assertEqual(set(counts), {"fauto", "pconj", "transv"})
        # EACH OF THE THREE KINDS IS DRAWN WITH PROBABILITY 1/3
        for kind in ("fauto", "pconj", "transv"):
            self.assertTrue(250 < counts[kind] < 420, counts)
        self.assertEqual(sum(counts.values()), 1000)
