"""Hot kernels with a compiled backend and a pure numpy fallback.

The compiled module is used when it imports; set ``SUPERASM_PURE_PYTHON=1`` to force
the fallback. Both expose ``singleton_layer``, ``corollary_layer``, ``split_layer``
and ``suffix_array`` with identical results.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

NEG = _pykernels.NEG


def _load_compiled() -> ModuleType | None:
    try:
        from . import _ckernels  # type: ignore[attr-defined]
    except ImportError:
        return None
    return _ckernels


_compiled = _load_compiled()


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])


def get_backend(name: str | None = None) -> ModuleType:
    """Kernel module by name; ``None`` means the import-time default."""
    if name is None:
        return _default
    if name == "python":
        return _pykernels
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown kernel backend {name!r}")


if os.environ.get("SUPERASM_PURE_PYTHON") == "1" or _compiled is None:
    _default = _pykernels
else:
    _default = _compiled

BACKEND: str = _default.BACKEND
singleton_layer = _default.singleton_layer
corollary_layer = _default.corollary_layer
split_layer = _default.split_layer
suffix_array = _default.suffix_array
