"""Select the compiled kernels when available, else the pure-Python ones.

Set ``AFFSCHUR_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"
if not os.environ.get("AFFSCHUR_PURE_PYTHON"):
    try:
        from ._kernels import *  # noqa: F401,F403
        from ._kernels import demazure_monomial, swap_exp  # noqa: F401
        BACKEND = "cython"
    except ImportError:
        pass
if BACKEND == "python":
    from ._kernels_py import *  # noqa: F401,F403
    from ._kernels_py import demazure_monomial, swap_exp  # noqa: F401
