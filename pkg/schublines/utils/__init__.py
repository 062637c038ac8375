"""
This module provides utilities for the schublines package.
"""

from schublines.utils.constants import *
from schublines.utils.errors import *
from schublines.utils.utils import *
from schublines.utils.messages import *
from schublines.utils.requests import *
from schublines.utils.workers import *
from schublines.utils.cache import KostkaCache
from schublines.utils.log import configure_logging
