"""RSS-based localization of a stationary transmitter with a single mobile
receiver when the path-loss exponent is unknown.

Everything is implemented in the C++ core; this package re-exports it.
"""

from rsslocate._core import *  # noqa: F401,F403
from rsslocate._core import __doc__  # noqa: F401

__version__ = "0.1.0"
