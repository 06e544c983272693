"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is imported.  Setting ``NEWTON_STRATA_PURE_PYTHON=1`` forces the
fallback.  ``BACKEND`` names the module actually in use.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("NEWTON_STRATA_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

symplectic_paths = _impl.symplectic_paths
ordinary_conditions = _impl.ordinary_conditions

OK = _pykernels.OK
FAIL_BRUHAT = _pykernels.FAIL_BRUHAT
FAIL_SLOPEWISE_LOWER = _pykernels.FAIL_SLOPEWISE_LOWER
FAIL_SLOPEWISE_UPPER = _pykernels.FAIL_SLOPEWISE_UPPER
FAIL_BREAKPOINT = _pykernels.FAIL_BREAKPOINT


def available_backends() -> dict:
    """Map backend name to its module, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
