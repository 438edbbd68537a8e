"""Kernel backend selection: compiled core when available, pure Python otherwise.

Set ``ROOTDOM_FORCE_PYTHON=1`` before import to skip the compiled extension.
"""

from __future__ import annotations

import os

if os.environ.get("ROOTDOM_FORCE_PYTHON") == "1":
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND: str = _impl.BACKEND

KIND_DOMINATING = _impl.KIND_DOMINATING
KIND_INDEPENDENT_DOMINATING = _impl.KIND_INDEPENDENT_DOMINATING
KIND_CONNECTED_DOMINATING = _impl.KIND_CONNECTED_DOMINATING
KIND_CONVEX_DOMINATING = _impl.KIND_CONVEX_DOMINATING
KIND_WEAKLY_CONNECTED_DOMINATING = _impl.KIND_WEAKLY_CONNECTED_DOMINATING
KIND_SUPER_DOMINATING = _impl.KIND_SUPER_DOMINATING
KIND_INDEPENDENT = _impl.KIND_INDEPENDENT

scan_min = _impl.scan_min
scan_max_independent = _impl.scan_max_independent
enumerate_size = _impl.enumerate_size
roman_min = _impl.roman_min
roman_enumerate = _impl.roman_enumerate
