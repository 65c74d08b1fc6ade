# SPDX-License-Identifier: Apache-2.0
"""Secure UAV directional-modulation link simulation.

Thin re-export of the compiled ``_uavdm`` extension.
"""

from ._uavdm import *  # noqa: F401,F403
from ._uavdm import __doc__  # noqa: F401

__version__ = "0.1.0"
