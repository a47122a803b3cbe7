"""Kernel selection: the compiled extension when importable, pure Python
otherwise.  Set KKTOOLS_PURE=1 to force the pure backend."""

from __future__ import annotations

import os

if os.environ.get("KKTOOLS_PURE"):
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as _impl

shadow_masks = _impl.shadow_masks
shade_masks = _impl.shade_masks
new_shadow_masks = _impl.new_shadow_masks
new_shade_masks = _impl.new_shade_masks
prefix_shadow_sizes = _impl.prefix_shadow_sizes
suffix_shade_sizes = _impl.suffix_shade_sizes
scan_pairs = _impl.scan_pairs


def backend_name() -> str:
    return "compiled" if _impl.__name__.endswith("_speedups") else "pure"
