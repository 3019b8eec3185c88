"""Kernel backend selection.

The compiled Cython kernels are preferred; the pure-Python twins are used
when the extension is unavailable or ``ASSOCNET_PURE=1`` is set. Both
backends are bit-identical in output, so selection never changes results,
only speed.
"""

import os

if os.environ.get("ASSOCNET_PURE", "") == "1":
    from . import _pykernels as _impl

    BACKEND = "pure"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "pure"

bfs_distances = _impl.bfs_distances
apsp_aggregate = _impl.apsp_aggregate
brandes_accumulate = _impl.brandes_accumulate
local_clustering = _impl.local_clustering
frontier_degree_sum = _impl.frontier_degree_sum


def backend_name() -> str:
    """Active kernel backend: ``compiled`` or ``pure``."""
    return BACKEND
