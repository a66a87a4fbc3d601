"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``PARTDIM_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("PARTDIM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
find_partitions = _impl.find_partitions
count_partitions = _impl.count_partitions
