"""Search-kernel backend selection.

The compiled extension `irregwalk._walksearch` (Cython) and the pure-Python
module `irregwalk._walksearch_py` implement the same kernel contract with
identical candidate ordering.  The compiled one is preferred when importable;
set IRREGWALK_BACKEND=python or IRREGWALK_BACKEND=compiled to force a choice.
"""

from __future__ import annotations

import os

from . import _walksearch_py

_FORCED = os.environ.get("IRREGWALK_BACKEND", "").strip().lower()

if _FORCED == "python":
    kernel = _walksearch_py
elif _FORCED in ("compiled", "cython", "c"):
    from . import _walksearch as kernel  # type: ignore[no-redef]
else:
    try:
        from . import _walksearch as kernel  # type: ignore[no-redef]
    except ImportError:
        kernel = _walksearch_py


def backend_name() -> str:
    return kernel.BACKEND_NAME


def get_kernel(name: str = ""):
    """The active kernel, or a specific one by name ('python'/'compiled')."""
    if not name:
        return kernel
    if name == "python":
        return _walksearch_py
    if name in ("compiled", "cython", "c"):
        from . import _walksearch

        return _walksearch
    raise ValueError(f"unknown backend {name!r}")
