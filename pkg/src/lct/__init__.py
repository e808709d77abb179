"""Linear canonical transforms for the unitary irreducible representations of SL(2,R).

Set ``LCT_THREADS`` before import to cap the BLAS thread pool.
"""

import os

_threads = os.environ.get("LCT_THREADS")
if _threads:
    for _var in ("OPENBLAS_NUM_THREADS", "OMP_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)

from .bases import ContinuousLabel, DiscreteLabel, Sign  # noqa: E402
from .symplectic import GroupElement  # noqa: E402

__all__ = ["ContinuousLabel", "DiscreteLabel", "GroupElement", "Sign"]
__version__ = "0.1.0"
