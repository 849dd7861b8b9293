"""Backend selection for the normal-form kernel.

The compiled extension is used when it imports; ``TWISTLAB_KERNEL=python``
forces the pure-Python path.  Words the compiled kernel cannot handle exactly
(int64 overflow, inconclusive float sign) are recomputed in Python.
"""

import os

from . import _rep

try:
    if os.environ.get("TWISTLAB_KERNEL", "").lower() == "python":
        raise ImportError("pure Python kernel requested")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"


def normal_form(word: bytes, ctx) -> bytes:
    if _ckernel is not None:
        try:
            return _ckernel.normal_form(word, *ctx.c_args())
        except OverflowError:
            pass
    return _rep.normal_form(word, ctx)


def normal_form_python(word: bytes, ctx) -> bytes:
    return _rep.normal_form(word, ctx)


def normal_form_compiled(word: bytes, ctx) -> bytes:
    if _ckernel is None:
        raise RuntimeError("compiled kernel is not built")
    return _ckernel.normal_form(word, *ctx.c_args())
