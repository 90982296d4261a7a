"""Backend selection for the finite-field polynomial kernels.

The numba-compiled loops are used when numba imports and the environment
variable ``LEMN_NUMBA`` is not set to ``0``/``false``/``no``; otherwise the
vectorized numpy implementations are used.  Both backends are importable
side by side for testing and benchmarking via :func:`backend`.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

from . import _kernels_np

_NAMES = (
    "fp_trim", "fp_mul", "fp_divmod", "fp_monic", "fp_gcd", "fp_mulmod", "fp_powmod",
    "fp2_trim", "fp2_mul", "fp2_divmod", "fp2_monic", "fp2_gcd", "fp2_mulmod", "fp2_powmod",
)

try:
    from . import _kernels_nb
except ImportError:  # pragma: no cover - numba missing
    _kernels_nb = None

HAVE_NUMBA = _kernels_nb is not None


def _flag_enabled() -> bool:
    return os.environ.get("LEMN_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


def backend(name: str) -> SimpleNamespace:
    """Kernel namespace for ``"numba"`` or ``"numpy"``."""
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not installed")
        mod = _kernels_nb
    elif name == "numpy":
        mod = _kernels_np
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    return SimpleNamespace(name=name, **{n: getattr(mod, n) for n in _NAMES})


ACTIVE = backend("numba" if HAVE_NUMBA and _flag_enabled() else "numpy")
BACKEND = ACTIVE.name


def warm_up() -> None:
    """Load the active kernels once on tiny inputs.

    The first numba call in a process pays a one-off runtime and cache load
    of roughly half a second; timing-sensitive callers can pay it up front.
    """
    import numpy as np

    k = ACTIVE
    a = np.array([1, 2, 1], dtype=np.int64)
    b = np.array([1, 1], dtype=np.int64)
    k.fp_gcd(a, b, 7)
    k.fp_powmod(b, 7, a, 7)
    a2 = np.array([[1, 0], [2, 1], [1, 0]], dtype=np.int64)
    b2 = np.array([[1, 0], [1, 0]], dtype=np.int64)
    k.fp2_gcd(a2, b2, 7)
    k.fp2_powmod(b2, 7, a2, 7)
