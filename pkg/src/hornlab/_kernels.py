"""Kernel backend selection.

The compiled extension is preferred when importable; set HORNLAB_PURE=1 to
force the pure Python / numpy fallback (useful for benchmarking and for
debugging suspected extension issues).  Both backends are kept
arithmetically identical, and the test suite asserts bit-equal counts.
"""

import os

if os.environ.get("HORNLAB_PURE", "") not in ("", "0"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

modes_1d = _impl.modes_1d
row_count = _impl.row_count
count_dirichlet = _impl.count_dirichlet
count_mixed = _impl.count_mixed
count_cuboid = _impl.count_cuboid
band_inertia = _impl.band_inertia
