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


from qmcode.commonutils.parser import load_config, parse_qm_spec
z5z2 = load_config(log=log, pathOrName="z5_z2")
zz3 = load_config(log=log, pathOrName="z_z3")
z3z3 = load_config(log=log, pathOrName="z3_z3")

# FIVE PATTERNS PER CONFIG, EACH CAMPAIGN AT 10⁴ SAMPLED PAIRS
CASES = [
    ("code:A:(1)", z5z2, 10000),
    ("code:A:(1,1)", z5z2, 10000),
    ("code:A:(1,2)", z5z2, 10000),
    ("code:A:(1,2,3)", z5z2, 10000),
    ("code:B:(1,1,2)", z5z2, 10000),
    ("weighted:A:(1)", zz3, 10000),
    ("weighted:A:(1,1)", zz3, 10000),
    ("weighted:A:(2,5)", zz3, 10000),
    ("weighted:A:(1,2,3)", zz3, 10000),
    ("code:B:(1,2)", zz3, 10000),
    ("code:A:(1)", z3z3, 10000),
    ("code:B:(1,1)", z3z3, 10000),
    ("code:A:(2,1)", z3z3, 10000),
    ("code:A:(1,2,3)+code:B:(1,2,3)", z3z3, 10000),
    ("code:B:(1,3,1,2)", z3z3, 10000),
    ("1/2*code:A:(2,1,4)-code:B:(1,3,2)", zz3, 2000)
]


class test_estimate_defect(unittest.TestCase):

    def test_estimate_defect_function(self):

        from qmcode.verify import estimate_defect
        for spec, config, trials in CASES:
            report = estimate_defect(
                log=log,
                q=parse_qm_spec(spec),
                config=config,
                settings=settings,
                trials=trials,
                seed=20261018
            ).get()
            self.assertEqual(report.violations, [], spec)
            self.assertTrue(report.certified())
            self.assertTrue(report.max_observed <= report.bound)
            self.assertEqual(report.trials, trials)

    test_estimate_defect_function.slow = True

    def test_estimate_defect_zero_combination_function(self):

        from qmcode.verify import estimate_defect
        report = estimate_defect(log=log, q=parse_qm_spec("0*code:A:(1,2)"), config=z5z2,
                                 settings=settings, trials=200, seed=1).get()
        self.assertEqual(report.max_observed, 0)
        self.assertEqual(report.bound, 0)
        self.assertTrue(report.certified())

    def test_estimate_defect_is_reproducible_function(self):

        from qmcode.verify import estimate_defect
        q = parse_qm_spec("code:A:(1,2,3)")
        one = estimate_defect(log=log, q=q, config=z5z2, settings=settings, seed=4).get()
        two = estimate_defect(log=log, q=q, config=z5z2, settings=settings, seed=4).get()
        self.assertEqual(one, two)
        self.assertEqual(one.trials, 500)

    def test_estimate_defect_function_exception(self):

        from qmcode.verify import estimate_defect
        from qmcode.commonutils.errors import DomainError
        with self.assertRaises(DomainError):
            estimate_defect(log=log, q=parse_qm_spec("code:A:(1,2)"), config=z5z2,
                            settings=settings, trials=0)
        with self.assertRaises(DomainError):
            # WEIGHTED CODES NEED ℤ ON THEIR SIDE
            estimate_defect(log=log, q=parse_qm_spec("weighted:B:(1,2)"), config=zz3,
                            settings=settings, trials=10)

    def test_estimate_theta_subadditivity_function(self):

        from qmcode.verify import estimate_theta_subadditivity
        for spec, config, trials in CASES:
            report = estimate_theta_subadditivity(
                log=log,
                q=parse_qm_spec(spec),
                config=config,
                settings=settings,
                trials=trials,
                seed=77
            ).get()
            self.assertEqual(report.violations, [], spec)
            self.assertTrue(report.max_observed <= 2)
            self.assertEqual(report.trials, trials)

    test_estimate_theta_subadditivity_function.slow = True
