"""Backend selection for the sieve kernels.

The native (Cython) extension is preferred when importable; the numpy twin
is the fallback.  ``AMIBOUNDS_PURE_PYTHON=1`` in the environment forces the
fallback, which is how the benchmark and the equivalence tests pin each side.
Both backends produce bit-identical integer arrays, so selection never
changes results, only speed.
"""

from __future__ import annotations

import os

from . import _kernels_py
from .errors import ConfigError

if os.environ.get("AMIBOUNDS_PURE_PYTHON") == "1":
    _native = None
else:
    try:
        from . import _native
    except ImportError:  # extension not built; fallback carries on
        _native = None

active = _native if _native is not None else _kernels_py
BACKEND = active.BACKEND_NAME


def available_backends() -> tuple[str, ...]:
    return ("python",) if _native is None else ("native", "python")


def get_backend(name: str | None = None):
    """Resolve a backend module by name ("native", "python", None=auto)."""
    if name in (None, "auto"):
        return active
    if name == "python":
        return _kernels_py
    if name == "native":
        if _native is None:
            raise ConfigError(
                "native backend requested but the extension is not available"
            )
        return _native
    raise ConfigError("unknown backend %r (expected 'native', 'python' or 'auto')" % (name,))
