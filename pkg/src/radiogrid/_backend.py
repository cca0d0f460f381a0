"""Select the compiled kernels when built, else the pure-Python fallback."""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
kernels = _pykernels

if os.environ.get("RADIOGRID_PURE_PYTHON", "") != "1":
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        kernels = _compiled
        BACKEND = "cython"

tplus_witness = _pykernels.tplus_witness
