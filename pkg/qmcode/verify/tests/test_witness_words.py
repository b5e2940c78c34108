from __future__ import print_function
from builtins import str
import os
import unittest
from fractions import Fraction
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


from qmcode.commonutils.parser import load_config
z5z2 = load_config(log=log, pathOrName="z5_z2")
zz3 = load_config(log=log, pathOrName="z_z3")
z3z3 = load_config(log=log, pathOrName="z3_z3")
dinf = load_config(log=log, pathOrName="z2_z2")

MODES = [("code-distinct", z5z2), ("code-isomorphic", z3z3), ("weighted", zz3)]


class test_witness_words(unittest.TestCase):

    def test_witness_word_function(self):

        from qmcode.verify import default_witness_spec, witness_word
        from qmcode.commonutils.parser import format_word
        spec = default_witness_spec(config=z5z2, z=(1, 2, 3), mode="code-distinct")
        self.assertEqual(spec.m, 4)
        self.assertEqual(spec.expected_code(), (1, 2, 3, 4))
        w = witness_word(spec, z5z2)
        self.assertEqual(format_word(w), "a b a^2 b a^2 b a b a b a b a^2 b a^2 b a^2 b a^2 b")

        spec = default_witness_spec(config=zz3, z=(1, 2, 3), mode="weighted")
        self.assertEqual(format_word(witness_word(spec, zz3)), "a b a^-2 b a^3 b a^-4 b")

        spec = default_witness_spec(config=z3z3, z=(1, 2, 3, 4), mode="code-isomorphic")
        self.assertEqual(spec.expected_code(), (1, 2, 3, 4))
        self.assertEqual((spec.b1, spec.b2), (1, 2))

    def test_check_witness_growth_function(self):

        from qmcode.verify import default_witness_spec, check_witness_growth
        for mode, config in MODES:
            spec = default_witness_spec(config=config, z=(1, 2, 3), mode=mode, m=4)
            rows = check_witness_growth(log=log, spec=spec, config=config, powers=50)
            self.assertEqual(len(rows), 50)
            for l, value in rows:
                self.assertEqual(value, spec.growth() * l, (mode, l))

    def test_witness_spec_function_exception(self):

        from qmcode.verify import default_witness_spec, witness_spec
        from qmcode.commonutils.errors import WitnessError, DomainError
        with self.assertRaises(WitnessError):
            # NOT GENERIC
            default_witness_spec(config=z5z2, z=(1, 2, 1), mode="code-distinct")
        with self.assertRaises(WitnessError):
            default_witness_spec(config=z5z2, z=(1, 2, 3), mode="code-distinct", m=2)
        with self.assertRaises(WitnessError):
            default_witness_spec(config=z5z2, z=(1, 2, 3), mode="weighted")
        with self.assertRaises(WitnessError):
            default_witness_spec(config=z5z2, z=(1, 2, 3), mode="code-isomorphic")
        with self.assertRaises(WitnessError):
            default_witness_spec(config=dinf, z=(1, 2, 3), mode="code-distinct")
        with self.assertRaises(DomainError):
            default_witness_spec(config=z5z2, z=(1, 2, 3), mode="scl")
        with self.assertRaises(WitnessError):
            witness_spec(z=(1, 2, 3), m=4, mode="code-distinct", a1=1, a2=1, b1=1).validate(z5z2)

    def test_linear_independence_probe_function(self):

        from qmcode.verify import linear_independence_probe
        probe = linear_independence_probe(log=log, config=z5z2, patterns=[(1, 2, 3)], fresh=(5, 6, 7))
        self.assertEqual(probe["m"], 4)
        self.assertEqual(probe["rows"][9], {"power": 10, "earlier": [0], "fresh": 10})

        probe = linear_independence_probe(log=log, config=z5z2, patterns=[(1, 2, 3)])
        self.assertEqual(probe["fresh"], (4, 5, 6))
        self.assertEqual(probe["m"], 7)

        for mode, config in MODES:
            probe = linear_independence_probe(
                log=log, config=config, patterns=[(1, 2, 3), (2, 1, 4)], mode=mode, powers=10)
            self.assertTrue(all(not any(row["earlier"]) for row in probe["rows"]))

    def test_linear_independence_probe_function_exception(self):

        from qmcode.verify import linear_independence_probe
        from qmcode.commonutils.errors import WitnessError
        with self.assertRaises(WitnessError):
            linear_independence_probe(log=log, config=z5z2, patterns=[(1, 2, 3)], fresh=(3, 5, 6))
        with self.assertRaises(WitnessError):
            linear_independence_probe(log=log, config=z5z2, patterns=[(1, 2, 3)], fresh=(5, 6, 5))
