"""Backend selection for the grid kernel.

The compiled extension is used when it was built.  Set
``LEGENDRE_CF_PURE=1`` to force the pure-Python kernel.  Inputs too large
for 64-bit intermediate products always go to the pure-Python kernel.
"""

import logging
import os

from . import _pykernels

log = logging.getLogger(__name__)

# keeps every intermediate product of the compiled kernel below 2**63
MAX_INPUT = 1 << 12
MAX_C_PART = 1 << 8

_compiled = None
if os.environ.get("LEGENDRE_CF_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        log.debug("compiled kernel unavailable, using pure Python")

BACKEND = _compiled.BACKEND if _compiled is not None else _pykernels.BACKEND


def compiled_available() -> bool:
    return _compiled is not None


def _fits(alphas, rows, cvals) -> bool:
    big = max((max(abs(int(a)), int(d)) for a, d in alphas), default=0)
    big = max(big, max((max(abs(int(v)) for v in r) for r in rows), default=0))
    small_c = all(0 < int(cn) <= MAX_C_PART and 0 < int(cd) <= MAX_C_PART for cn, cd in cvals)
    return big <= MAX_INPUT and small_c


def scan_block(alphas, rows, cvals, backend=None):
    """Predicate masks for every (alpha, row) pair.

    ``backend`` is ``"cython"``, ``"python"`` or None for automatic choice.
    """
    if backend == "python":
        return _pykernels.scan_block(alphas, rows, cvals)
    if backend == "cython" and _compiled is None:
        raise RuntimeError("compiled kernel was not built")
    if _compiled is not None and _fits(alphas, rows, cvals):
        return _compiled.scan_block(alphas, rows, cvals)
    if backend == "cython":
        raise ValueError("inputs exceed the compiled kernel's integer range")
    return _pykernels.scan_block(alphas, rows, cvals)
