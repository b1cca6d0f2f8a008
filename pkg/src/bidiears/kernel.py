"""Backend selection for the search kernels.

The compiled extension is used when it was built and ``EARS_PURE_PYTHON`` is
not set; otherwise the pure-Python twin is used.  Both expose
``regular_path`` and ``regular_reach`` with identical behavior.
"""
from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _kernel as _kernel_c  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _kernel_c = None

BACKENDS = {"python": _kernel_py}
if _kernel_c is not None:
    BACKENDS["compiled"] = _kernel_c

if _kernel_c is not None and not os.environ.get("EARS_PURE_PYTHON"):
    BACKEND = "compiled"
else:
    BACKEND = "python"

_impl = BACKENDS[BACKEND]


def use_backend(name: str) -> None:
    """Switch the process-wide backend (``"python"`` or ``"compiled"``)."""
    global BACKEND, _impl
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    BACKEND = name
    _impl = BACKENDS[name]


def regular_path(*args):
    return _impl.regular_path(*args)


def regular_reach(*args):
    return _impl.regular_reach(*args)
