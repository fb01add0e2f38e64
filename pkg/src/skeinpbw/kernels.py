"""Select the compiled kernels when available, else the Python fallback.

Set ``SKEINPBW_PURE=1`` in the environment to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("SKEINPBW_PURE", "") not in ("1", "true", "yes"):
    try:
        from ._ckernels import accumulate, add_terms, mul_terms, reduce_word
        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        pass

if BACKEND == "python":
    from ._pykernels import accumulate, add_terms, mul_terms, reduce_word

__all__ = ["BACKEND", "accumulate", "add_terms", "mul_terms", "reduce_word"]
