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


class test_sampling(unittest.TestCase):

    def test_sample_word_function(self):

        from qmcode.verify.sampling import sample_word
        from qmcode.commonutils.words import reduce
        for config in (z5z2, zz3):
            for seed in range(300):
                w = sample_word(config, 10, seed)
                self.assertTrue(1 <= len(w) <= 10)
                self.assertEqual(reduce(w), w)
                for l in w:
                    self.assertFalse(config.factor(l.side).is_identity(l.elem))
                    if config.factor(l.side).kind == "integer":
                        self.assertTrue(abs(l.elem) <= 9)

    def test_sample_word_is_reproducible_function(self):

        from qmcode.verify.sampling import sample_word
        self.assertEqual(sample_word(zz3, 12, [7, 3]), sample_word(zz3, 12, [7, 3]))
        self.assertEqual(sample_word(zz3, 12, 11, startSide="B").letters[0].side, "B")

    def test_sample_word_function_exception(self):

        from qmcode.verify.sampling import sample_word
        from qmcode.commonutils.errors import DomainError
        with self.assertRaises(DomainError):
            sample_word(z5z2, 0, 1)

    def test_sample_concatenable_pair_function(self):

        import numpy as np
        from qmcode.verify.sampling import sample_concatenable_pair
        from qmcode.commonutils.words import multiply
        rng = np.random.default_rng(2)
        for _ in range(300):
            w1, w2 = sample_concatenable_pair(z5z2, 8, rng)
            self.assertEqual(len(multiply(w1, w2)), len(w1) + len(w2))
