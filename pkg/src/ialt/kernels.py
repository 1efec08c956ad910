"""Kernel backend selection.

The compiled Cython module is used when it imports; otherwise the
pure-Python reference kernels are used. Set ``IALT_BACKEND=python`` to force
the fallback (the benchmark and the cross-backend tests do this).
"""

import importlib
import os

_REQUESTED = os.environ.get("IALT_BACKEND", "auto").lower()


def load(name: str = "auto"):
    if name == "python":
        return importlib.import_module("ialt._kernels_py")
    if name == "cython":
        return importlib.import_module("ialt._ckernels")
    try:
        return importlib.import_module("ialt._ckernels")
    except ImportError:
        return importlib.import_module("ialt._kernels_py")


_backend = load(_REQUESTED)

BACKEND = _backend.BACKEND
rref = _backend.rref
encode_batch = _backend.encode_batch
decode_batch = _backend.decode_batch
