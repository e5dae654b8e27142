"""Kernel backend chosen at import time.

The compiled extension is used when it was built; otherwise the pure-Python
kernels take over.  ``CHAINDECOMP_BACKEND=python`` forces the fallback.
"""

import os

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"python": _pykernels}
if _compiled is not None:
    _BACKENDS["compiled"] = _compiled

_forced = os.environ.get("CHAINDECOMP_BACKEND", "").strip().lower()
if _forced and _forced not in ("python", "compiled"):
    raise ImportError(f"CHAINDECOMP_BACKEND must be 'python' or 'compiled', not {_forced!r}")
if _forced == "compiled" and _compiled is None:
    raise ImportError("CHAINDECOMP_BACKEND=compiled but the extension is not built")

DEFAULT = _forced or ("compiled" if _compiled is not None else "python")


def available() -> list[str]:
    return sorted(_BACKENDS)


def kernels(name: str | None = None):
    name = name or DEFAULT
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available; have {available()}") from None
