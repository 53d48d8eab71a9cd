"""Selection of the integer scan backend.

The compiled extension and the numpy module implement the same four
kernels (pair_scan, jacobi_scan, form_scan, trace_scan) with identical
semantics; the compiled one is picked automatically when its build
succeeded.  ``set_backend`` exists so tests and benchmarks can pin one
explicitly.
"""

from __future__ import annotations

from . import _scan_py

_BACKENDS: dict[str, object] = {"python": _scan_py}

try:  # pragma: no cover - depends on whether the extension was built
    from . import _scan as _compiled

    _BACKENDS["compiled"] = _compiled
except ImportError:  # pragma: no cover
    _compiled = None

_active = "compiled" if "compiled" in _BACKENDS else "python"


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def active_backend() -> str:
    return _active


def set_backend(name: str):
    global _active
    if name not in _BACKENDS:
        raise KeyError(f"unknown backend {name!r}; have {available_backends()}")
    _active = name


def get(name: str | None = None):
    return _BACKENDS[name or _active]
