"""Kernel selection: compiled Cython core when available, pure-Python
fallback otherwise.

Set NILORB_PURE=1 to force the fallback.  Both implementations expose the
same functions with identical semantics; see benchmarks/bench_kernels.py for
the speed comparison.
"""

import os
import warnings

from . import pure

if os.environ.get("NILORB_PURE"):
    impl = pure
    COMPILED = False
else:
    try:
        from . import _core as impl  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:  # pragma: no cover - depends on the build
        warnings.warn(
            "nilorb compiled kernel unavailable; using the pure-Python "
            "fallback (large sweeps and censuses will be slow)",
            stacklevel=2,
        )
        impl = pure
        COMPILED = False

sweep_forms = impl.sweep_forms
bfs_gf2 = impl.bfs_gf2
bfs_gf3 = impl.bfs_gf3
census_gf3 = impl.census_gf3
shared_visited = impl.shared_visited


def implementations():
    """Both kernel implementations, for agreement tests and benchmarks."""
    out = {"pure": pure}
    if COMPILED:
        out["compiled"] = impl
    return out
