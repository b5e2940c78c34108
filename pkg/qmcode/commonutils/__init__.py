"""
*common tools used throughout package*
"""
from . import errors
from . import factors
from . import group_config
from . import words
from . import codes
from . import quasimorphisms
from . import automorphisms
from . import parser
from . import toolkit
from .getpackagepath import getpackagepath
