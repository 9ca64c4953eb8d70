"""Kernel selection: compiled extension when available, pure Python otherwise.

Set DSCODING_BACKEND=c or DSCODING_BACKEND=python to force one; forcing the
compiled kernel when it cannot be imported is an error rather than a silent
fallback.
"""

import os

_forced = os.environ.get("DSCODING_BACKEND")

if _forced not in (None, "", "c", "python"):
    raise ImportError(
        f"DSCODING_BACKEND must be 'c' or 'python', not {_forced!r}")

if _forced == "python":
    from . import _pykernel as kernel
elif _forced == "c":
    from . import _kernel as kernel  # type: ignore[no-redef]
else:
    try:
        from . import _kernel as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _pykernel as kernel

scan_codes = kernel.scan_codes
scan_prefix = kernel.scan_prefix
decode_codes = kernel.decode_codes
backend_name: str = kernel.name
