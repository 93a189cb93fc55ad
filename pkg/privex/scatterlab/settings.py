"""
Configuration for :mod:`privex.scatterlab`.

``SCATTERLAB_DEPTH_DEFAULT`` is the only environment input; everything else is a module constant.
"""
from privex.helpers import env_int

DEPTH_DEFAULT = env_int('SCATTERLAB_DEPTH_DEFAULT', 6)
"""Working depth used by enumeration, component listing and rendering when ``--depth`` isn't given"""

K_MAX_DEFAULT = 16
"""Generic derivative horizon. Catalog families use ``max(S) + 2``."""

DEFAULT_CAP = 1
"""Thickening cap used for the linear blocks"""

PROBE_DEPTH = 3
"""Enumeration depth which probe points for the numeric limit oracle are drawn from"""

ORACLE_DEPTHS = range(6, 11)

CHAIN_SEARCH_LIMIT = 20
"""Largest touch component (vertex count) searched exactly for a longest simple path"""

KN_RANGE = range(1, 9)
XS_RANGE = range(1, 6)
YS_TD_RANGE = range(1, 7)
PROP3_RANGE = range(1, 4)
FRAME_RANGE = range(2, 21, 2)
DIMENSIONS = (1, 2, 3)
MAX_BITS = 12
MAX_PROP3_DEPTH = 6
MAX_AS_WINDOWS = 8
MAX_XU_PREFIX = 12
PRIMES = (2, 3, 5, 7, 11, 13)

RECOVERY_DEPTH = 3
"""Component listing depth used when searching for two-sided components (they are never deep)"""
