"""Backend selection: compiled kernels when available, pure Python otherwise.

Set PMSPACE_BACKEND=python to force the fallback or PMSPACE_BACKEND=c to
require the compiled extension (import then fails loudly if it is missing).
Both backends return bit-identical results; the choice only affects speed.
"""

from __future__ import annotations

import os

_forced = os.environ.get("PMSPACE_BACKEND", "").strip().lower()

if _forced in ("python", "py"):
    from . import _kernels_py as kernels
elif _forced in ("c", "cy", "cython"):
    from . import _kernels_cy as kernels  # type: ignore[no-redef]
elif _forced == "":
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels
else:
    raise RuntimeError(
        f"PMSPACE_BACKEND={_forced!r} not recognized (use 'c' or 'python')"
    )


def backend_name() -> str:
    """Return 'c' for the compiled kernels, 'python' for the fallback."""
    return "c" if kernels.__name__.endswith("_kernels_cy") else "python"
