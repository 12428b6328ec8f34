"""
Makes the prokit sources importable when the tests run from a source checkout.
"""

import os
import sys

_SRC_PATH = os.path.abspath(
    os.path.join(os.path.dirname(__file__), os.pardir, "src"))

if _SRC_PATH not in sys.path:
    sys.path.insert(0, _SRC_PATH)
