"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``GAMEARG_PURE=1`` to force the fallback.
"""

import os

from . import _pure

if os.environ.get("GAMEARG_PURE") == "1":
    impl = _pure
else:
    try:
        from . import _core as impl
    except ImportError:
        impl = _pure

NAME = "compiled" if impl is not _pure else "pure"

solve_csr = impl.solve_csr
kernel_masks = impl.kernel_masks
