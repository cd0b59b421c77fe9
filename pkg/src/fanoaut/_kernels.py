"""Pick the row-reduction backend at import time.

The compiled module is used when it was built; setting
``FANOAUT_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _rref_py

BACKEND = "python"
rref_rows = _rref_py.rref_rows

if os.environ.get("FANOAUT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _rref_cy
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        rref_rows = _rref_cy.rref_rows
