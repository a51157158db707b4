"""Kernel backend selection.

The JIT backend is the default.  Setting the environment variable
``UNITGROUPS_PURE_NUMPY`` to ``1``/``true``/``yes`` (checked at import
time) selects the pure-numpy fallback instead, as does an unimportable
numba.  ``BACKEND`` names the active implementation;
``benchmarks/bench_kernels.py`` compares the two.
"""

import os

from . import _kern_numpy

_FLAG = os.environ.get("UNITGROUPS_PURE_NUMPY", "").strip().lower()
_FORCE_NUMPY = _FLAG in ("1", "true", "yes", "on")

if not _FORCE_NUMPY:
    try:
        from . import _kern_numba as _impl
        BACKEND = "numba"
    except ImportError:
        _impl = _kern_numpy
        BACKEND = "numpy"
else:
    _impl = _kern_numpy
    BACKEND = "numpy"

g2_mul = _impl.g2_mul
g2_sqr = _impl.g2_sqr
g2_sqrt = _impl.g2_sqrt
g2_rem = _impl.g2_rem
g2_divmod = _impl.g2_divmod
g2_gcd = _impl.g2_gcd
fq_mul = _impl.fq_mul
fq_divmod = _impl.fq_divmod
fq_gcd = _impl.fq_gcd
