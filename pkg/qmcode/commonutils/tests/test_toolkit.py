from __future__ import print_function
from builtins import str
import os
import unittest
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


class test_toolkit(unittest.TestCase):

    def test_get_setting_function(self):

        import yaml
        from qmcode.commonutils.toolkit import get_setting
        from qmcode.commonutils.getpackagepath import getpackagepath
        with open(os.path.join(getpackagepath(), "default_settings.yaml"), encoding="utf-8") as stream:
            packaged = yaml.safe_load(stream)
        self.assertEqual(get_setting(False, "verify-defect.trials"), 10000)
        self.assertEqual(get_setting(False, "verify-defect.trials"),
                         packaged["verify-defect"]["trials"])
        self.assertEqual(get_setting(False, "max-word-letters"), 1000000)
        # USER SETTINGS WIN, MISSING KEYS FALL BACK TO THE PACKAGED DEFAULTS
        user = {"verify-defect": {"trials": 12}}
        self.assertEqual(get_setting(user, "verify-defect.trials"), 12)
        self.assertEqual(get_setting(user, "samplers.max-word-length"), 12)

    def test_get_setting_function_exception(self):

        from qmcode.commonutils.toolkit import get_setting
        with self.assertRaises(KeyError):
            get_setting(settings, "no-such.setting")
