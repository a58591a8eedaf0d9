"""Hot loops, compiled with numba when available.

Set ``TOURNAMENTS_DISABLE_JIT=1`` to force the pure numpy / Python path.
Both paths return identical results; ``benchmarks/bench_kernels.py`` times them
against each other.
"""

import os

from . import ref

_disabled = os.environ.get("TOURNAMENTS_DISABLE_JIT", "").lower() in ("1", "true", "yes")

if _disabled:
    impl = ref
    JIT_ENABLED = False
else:
    try:
        from . import jit as impl
        JIT_ENABLED = True
    except ImportError:  # numba missing
        impl = ref
        JIT_ENABLED = False

# kernels take int64 bitmasks
MAX_KERNEL_N = 62

best_cell_labeling = impl.best_cell_labeling
max_transitive = impl.max_transitive
count_transitive = impl.count_transitive
homogeneous_masks = impl.homogeneous_masks
galaxy_search = impl.galaxy_search
find_subset = impl.find_subset

__all__ = [
    "JIT_ENABLED",
    "MAX_KERNEL_N",
    "best_cell_labeling",
    "count_transitive",
    "find_subset",
    "galaxy_search",
    "homogeneous_masks",
    "max_transitive",
]
