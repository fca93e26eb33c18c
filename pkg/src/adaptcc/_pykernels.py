"""Pure-Python kernels, API-compatible with the compiled ``_kernels`` module.

Used when the extension is not built, or when ``ADAPTCC_BACKEND=python``.
Parallel phases run on a thread pool that pulls chunks from an ascending
queue. Single slot loads and stores go through a ``memoryview`` and are atomic
under the GIL; compare-and-swap is emulated with striped locks.
"""
from __future__ import annotations

import os
import threading
from concurrent.futures import ThreadPoolExecutor

BACKEND = "python"
OPENMP = False

_STRIPES = 64
_locks = [threading.Lock() for _ in range(_STRIPES)]

EDGE_CHUNK = 1024
VERTEX_CHUNK = 2048


def max_workers():
    return os.cpu_count() or 1


def _cas(pi, slot, expected, desired):
    """Return ``(success, observed)``."""
    with _locks[slot % _STRIPES]:
        seen = pi[slot]
        if seen == expected:
            pi[slot] = desired
            return True, seen
        return False, seen


def _hook(pi, u, v):
    pu = pi[u]
    pv = pi[v]
    if pu == pv:
        return False
    if pu > pv:
        pi[pu] = pv
    else:
        pi[pv] = pu
    return True


def _jump(pi, v):
    p = pi[v]
    gp = pi[p]
    if gp == p:
        return False
    pi[v] = gp
    return True


def _atomic_hook(pi, u, v):
    steps = fails = 0
    while True:
        pu = pi[u]
        pv = pi[v]
        if pu == pv:
            break
        high, low = (pu, pv) if pu > pv else (pv, pu)
        steps += 1
        ok, seen = _cas(pi, high, high, low)
        if ok:
            break
        fails += 1
        u, v = seen, low
    return steps, fails


def _multi_jump(pi, v):
    p = pi[v]
    gp = pi[p]
    writes = 0
    while gp != p:
        pi[v] = gp
        writes += 1
        p = gp
        gp = pi[p]
    return writes


def _view(parent):
    return memoryview(parent).cast("B").cast("q")


def _parallel_for(lo, hi, workers, chunk, body):
    """Run ``body(a, b)`` over ``[lo, hi)`` in chunks claimed in ascending order.

    Returns the list of per-chunk results. Joins every worker before returning.
    """
    if hi <= lo:
        return []
    if workers <= 1 or hi - lo <= chunk:
        return [body(lo, hi)]
    starts = iter(range(lo, hi, chunk))
    claim = threading.Lock()
    results = []

    def worker():
        local = []
        while True:
            with claim:
                a = next(starts, None)
            if a is None:
                return local
            local.append(body(a, min(a + chunk, hi)))

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(worker) for _ in range(workers)]
        for fut in futures:
            results.extend(fut.result())
    return results


# -- single-element entry points ---------------------------------------------

def hook(parent, u, v):
    return _hook(_view(parent), u, v)


def jump(parent, v):
    return _jump(_view(parent), v)


def atomic_hook(parent, u, v):
    return _atomic_hook(_view(parent), u, v)


def multi_jump(parent, v):
    return _multi_jump(_view(parent), v)


# -- phases -------------------------------------------------------------------

def hook_pass(parent, edges, lo, hi, workers):
    pi = _view(parent)
    flat = edges[lo:hi].ravel().tolist()

    def body(a, b):
        changed = False
        for i in range(a - lo, b - lo):
            if _hook(pi, flat[2 * i], flat[2 * i + 1]):
                changed = True
        return changed

    return any(_parallel_for(lo, hi, workers, EDGE_CHUNK, body))


def jump_pass(parent, workers):
    pi = _view(parent)

    def body(a, b):
        return sum(_jump(pi, v) for v in range(a, b))

    writes = sum(_parallel_for(0, len(parent), workers, VERTEX_CHUNK, body))
    return writes > 0, writes


def atomic_hook_pass(parent, edges, lo, hi, workers):
    pi = _view(parent)
    flat = edges[lo:hi].ravel().tolist()

    def body(a, b):
        steps = fails = 0
        for i in range(a - lo, b - lo):
            st, f = _atomic_hook(pi, flat[2 * i], flat[2 * i + 1])
            steps += st
            fails += f
        return steps, fails

    parts = _parallel_for(lo, hi, workers, EDGE_CHUNK, body)
    return sum(p[0] for p in parts), sum(p[1] for p in parts)


def multi_jump_pass(parent, workers, descending=False):
    pi = _view(parent)
    n = len(parent)

    if descending:
        def body(a, b):
            return sum(_multi_jump(pi, n - 1 - i) for i in range(a, b))
    else:
        def body(a, b):
            return sum(_multi_jump(pi, v) for v in range(a, b))

    return sum(_parallel_for(0, n, workers, VERTEX_CHUNK, body))
