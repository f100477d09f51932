"""Hot-kernel backend selection.

The compiled Cython extension (_speedups) is preferred; the numpy
fallback has identical semantics.  TORSORKIT_KERNELS=numpy forces the
fallback, TORSORKIT_KERNELS=cython fails loudly if the extension is
missing (useful in benchmarks and CI).
"""

import os

from . import fallback as _numpy_impl

_forced = os.environ.get("TORSORKIT_KERNELS", "").strip().lower()

_compiled = None
if _forced != "numpy":
    try:
        from . import _speedups as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

if _forced == "cython" and _compiled is None:
    raise ImportError(
        "TORSORKIT_KERNELS=cython requested but torsorkit._kernels._speedups "
        "is not built; run `pip install -e . --no-build-isolation`"
    )

_impl = _compiled if _compiled is not None else _numpy_impl
BACKEND = "cython" if _compiled is not None else "numpy"

cyclic_origin_sweep = _impl.cyclic_origin_sweep
torus_average_reps = _impl.torus_average_reps


def available_backends() -> dict:
    """Name -> module for every importable backend (benchmarks, tests)."""
    out = {"numpy": _numpy_impl}
    if _compiled is not None:
        out["cython"] = _compiled
    else:
        try:
            from . import _speedups  # type: ignore[attr-defined]

            out["cython"] = _speedups
        except ImportError:
            pass
    return out
