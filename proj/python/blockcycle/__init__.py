"""Block cycle rotation with exact move accounting, and its cost analysis."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
