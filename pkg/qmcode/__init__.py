from __future__ import absolute_import
from .__version__ import __version__
from . import utKit
from . import commonutils
from . import verify
from . import cl_utils
