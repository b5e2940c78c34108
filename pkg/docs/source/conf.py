#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# qmcode documentation build configuration file
#
import sys
import os
from datetime import datetime

moduleDirectory = os.path.dirname(os.path.realpath(__file__))
sys.path.insert(0, os.path.abspath('../..'))
exec(open(moduleDirectory + "/../../qmcode/__version__.py").read())

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.autosummary',
              'sphinx.ext.mathjax', 'myst_parser']

# NUMPY IS ONLY NEEDED AT RUN TIME
autodoc_mock_imports = ['numpy']

autosummary_generate = True
autosummary_imported_members = True
autodoc_member_order = 'bysource'
add_module_names = False

myst_enable_extensions = ['dollarmath', 'colon_fence']

source_suffix = {'.rst': 'restructuredtext', '.md': 'markdown'}
master_doc = 'index'
exclude_patterns = ['_build', '**__version__.py', '**setup.py']
modindex_common_prefix = ["qmcode."]

# -- Project information --------------------------------------------------

project = u'qmcode'
copyright = u'%s, Dave Young' % (datetime.now().strftime("%Y"),)
version = "v" + str(__version__)
release = version

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'display_version': True,
    'prev_next_buttons_location': 'bottom',
    'collapse_navigation': True,
    'navigation_depth': 3
}
html_show_sourcelink = True


def updateUsageMd():
    """
    *Grab the usage from cl_utils.py and write it to usage.md*
    """
    from qmcode import cl_utils
    usage = cl_utils.__doc__
    if not "Usage:" in usage:
        return None
    usageString = ""
    for l in usage.split("\n"):
        usageString += "    " + l + "\n"
    usage = "# Command-Line Usage\n\n```bash\n%s```\n" % (usageString,)
    with open(moduleDirectory + "/usage.md", encoding='utf-8', mode='w') as writeFile:
        writeFile.write(usage)
    return None


updateUsageMd()
