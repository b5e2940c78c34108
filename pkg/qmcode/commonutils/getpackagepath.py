#!/usr/bin/env python
# encoding: utf-8
"""
*Get common file and folder paths for the host package*
"""
import os


def getpackagepath():
    """
    *Get the root path for this python package*

    Used to locate the bundled group configs in `resources/`
    """
    packagePath = os.path.dirname(os.path.dirname(__file__))

    return packagePath


def bundled_config_path(name):
    """*the path of a group config shipped in the package's `resources/` folder*"""
    return os.path.join(getpackagepath(), "resources", f"{name}.yaml")
