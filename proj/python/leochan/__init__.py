# SPDX-License-Identifier: Apache-2.0
"""Stochastic channel model for a LEO satellite mega-constellation shell."""

from ._core import *  # noqa: F401,F403
from ._core import __version__

import math as _math


def user_at_latitude(shell, latitude_deg, min_elevation_deg):
    """Convenience wrapper taking degrees."""
    return UserGeometry.from_latitude(shell, _math.radians(latitude_deg), _math.radians(min_elevation_deg))  # noqa: F405
