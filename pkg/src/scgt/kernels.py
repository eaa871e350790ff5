"""Backend selection for the bitmask kernels.

The compiled extension is preferred; set ``SCGT_PURE_PYTHON=1`` to force the
pure-Python fallback.
"""

import os

from scgt import _pykernels

if os.environ.get("SCGT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from scgt import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

enumerate_submasks = _impl.enumerate_submasks
subset_sums = _impl.subset_sums
superset_sums = _impl.superset_sums
shapley_table = _impl.shapley_table
marginal_table = _impl.marginal_table


def backends():
    """Return ``{name: module}`` for every importable backend."""
    out = {"python": _pykernels}
    try:
        from scgt import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
