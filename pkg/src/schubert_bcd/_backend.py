"""Pick the compiled kernels when they are built, else the pure ones.

Set ``SCHUBERT_BCD_PURE=1`` to force the pure-Python path.
"""
import os

from . import _pure

BACKEND = "python"
kernels = _pure

if not os.environ.get("SCHUBERT_BCD_PURE"):
    try:
        from . import _ckernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        kernels = _pure

mul = kernels.mul
lincomb = kernels.lincomb
divdiff = kernels.divdiff
substitute = kernels.substitute

TRANSPOSITION = _pure.TRANSPOSITION
ZERO_C = _pure.ZERO_C
ZERO_B = _pure.ZERO_B
BOX = _pure.BOX
