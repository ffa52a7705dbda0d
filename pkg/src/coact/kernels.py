"""Kernel selection: the compiled extension if importable, else pure Python.

Set ``COACT_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _closure_py

BACKENDS = {"python": _closure_py.closure}

try:
    from . import _closure as _compiled
except ImportError:  # extension not built
    _compiled = None
else:
    BACKENDS["cython"] = _compiled.closure

if _compiled is not None and not os.environ.get("COACT_PURE_PYTHON"):
    BACKEND = "cython"
else:
    BACKEND = "python"

closure = BACKENDS[BACKEND]


def use_backend(name: str) -> None:
    """Switch the active closure kernel (used by tests and benchmarks)."""
    global BACKEND, closure
    closure = BACKENDS[name]
    BACKEND = name
