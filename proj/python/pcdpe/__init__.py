"""Proportional-edge proximity catch digraphs: relative edge density tests
for spatial segregation and association."""

from pcdpe._core import *  # noqa: F401,F403
from pcdpe._core import __version__  # noqa: F401
