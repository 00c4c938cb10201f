"""Backend selection for the hot kernels.

The compiled extension ``vtorb._kernel`` is used when it imports; otherwise the
pure-Python twin ``vtorb._purekernel`` is used. Setting ``VTORB_PURE=1`` in the
environment forces the pure-Python backend.
"""

from __future__ import annotations

import os

from . import _purekernel

_backend = None
if os.environ.get("VTORB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernel as _backend
    except ImportError:
        _backend = None
if _backend is None:
    _backend = _purekernel

BACKEND = _backend.BACKEND
compose = _backend.compose
invert = _backend.invert
cycle_summary = _backend.cycle_summary
orbit_labels = _backend.orbit_labels
scan = _backend.scan
scan_indices = _backend.scan_indices
graph_scan = _backend.graph_scan
Refiner = _backend.Refiner


def backends():
    """Return the available kernel modules keyed by name."""
    out = {"python": _purekernel}
    try:
        from . import _kernel
    except ImportError:
        pass
    else:
        out["cython"] = _kernel
    return out
