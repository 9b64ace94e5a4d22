"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python module
is the fallback. Set LATTICE_GAP_BACKEND=python or =compiled to force a
choice (auto, the default, falls back silently).
"""

import os

from . import _pure


def load_backend(name: str):
    """Return the kernel module for an explicit backend name."""
    if name == "python":
        return _pure
    if name == "compiled":
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown backend {name!r}")


_choice = os.environ.get("LATTICE_GAP_BACKEND", "auto")
if _choice == "auto":
    try:
        from . import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "python"
elif _choice in ("python", "compiled"):
    _impl = load_backend(_choice)
    BACKEND = _choice
else:
    raise ImportError(
        f"LATTICE_GAP_BACKEND must be auto, compiled or python, got {_choice!r}"
    )

coprime_flags = _impl.coprime_flags
scan_min_witness = _impl.scan_min_witness
survivor_ts = _impl.survivor_ts
max_coprime_gap = _impl.max_coprime_gap
