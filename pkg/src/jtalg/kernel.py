"""Backend selection for the hot kernels: the pairing arithmetic with its
bulk scans, and the equational-closure oracle.

The compiled extension is used when it was built; setting JTALG_PURE_PYTHON
to a nonempty value (or a failed build) selects the pure-Python modules.
All backends export the same functions with identical results; the
benchmark in benchmarks/bench_kernels.py compares their speed.
"""

from __future__ import annotations

import os

if os.environ.get("JTALG_PURE_PYTHON"):
    from . import _kernels_py as _impl
    from . import _oracle_py as _oracle
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        _oracle = _impl
        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]
        from . import _oracle_py as _oracle  # type: ignore[no-redef]
        BACKEND = "python"

from ._oracle_py import term_to_tuple

jw_mul = _impl.jw_mul
jw_unpair = _impl.jw_unpair
jw_descent = _impl.jw_descent
value_scan = _impl.value_scan
pair_scan = _impl.pair_scan
closure_min_mults = _oracle.closure_min_mults
closure_size = _oracle.closure_size

__all__ = [
    "BACKEND", "jw_mul", "jw_unpair", "jw_descent", "value_scan", "pair_scan",
    "closure_min_mults", "closure_size", "term_to_tuple",
]
