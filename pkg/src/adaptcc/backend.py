"""Kernel backend selection.

The compiled OpenMP extension is preferred; the pure-Python module is the
fallback when it is missing. ``ADAPTCC_BACKEND=python`` (or ``cython``) forces
a choice.
"""
import os

from adaptcc import _pykernels

try:
    from adaptcc import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"python": _pykernels}
if _compiled is not None:
    _BACKENDS["cython"] = _compiled


def available():
    return sorted(_BACKENDS)


def get(name=None):
    """Return the kernel module called ``name``, or the default one."""
    if name is None:
        return kernels
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available (have {available()})") from None


def _default():
    forced = os.environ.get("ADAPTCC_BACKEND")
    if forced:
        if forced not in _BACKENDS:
            raise ImportError(f"ADAPTCC_BACKEND={forced!r} is not available (have {available()})")
        return forced, _BACKENDS[forced]
    if _compiled is not None:
        return "cython", _compiled
    return "python", _pykernels


NAME, kernels = _default()


def max_workers():
    return max(1, kernels.max_workers())


def resolve_workers(workers):
    """``None`` or ``"max"`` mean hardware concurrency."""
    if workers is None or workers == "max":
        return max_workers()
    workers = int(workers)
    if workers < 1:
        raise ValueError("worker count must be positive")
    return workers
