# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Hook-Compress kernels (OpenMP).

Every parent slot is touched through the relaxed atomics in ``atomics.h``.
Each ``*_pass`` function is one fork-join phase: it releases the GIL, runs a
parallel loop over its index range and returns once every worker has joined.
Work counters are reduced per thread and merged at the join.
"""
from cython.parallel cimport prange
from libc.stdint cimport int64_t

cdef extern from "atomics.h" nogil:
    int64_t slot_load(const int64_t *p)
    void slot_store(int64_t *p, int64_t value)
    bint slot_cas(int64_t *p, int64_t *expected, int64_t desired)
    void flag_raise(int *flag)

BACKEND = "cython"

try:
    from openmp cimport omp_get_max_threads as _omp_max
    OPENMP = True
except ImportError:  # pragma: no cover
    OPENMP = False


cdef inline bint _hook(int64_t *pi, int64_t u, int64_t v) noexcept nogil:
    cdef int64_t pu = slot_load(&pi[u])
    cdef int64_t pv = slot_load(&pi[v])
    if pu == pv:
        return False
    if pu > pv:
        slot_store(&pi[pu], pv)
    else:
        slot_store(&pi[pv], pu)
    return True


cdef inline bint _jump(int64_t *pi, int64_t v) noexcept nogil:
    cdef int64_t p = slot_load(&pi[v])
    cdef int64_t gp = slot_load(&pi[p])
    if gp == p:
        return False
    slot_store(&pi[v], gp)
    return True


cdef inline int64_t _atomic_hook(int64_t *pi, int64_t u, int64_t v,
                                 int64_t *cas_failures) noexcept nogil:
    cdef int64_t pu, pv, high, low, seen
    cdef int64_t steps = 0
    while True:
        pu = slot_load(&pi[u])
        pv = slot_load(&pi[v])
        if pu == pv:
            break
        if pu > pv:
            high = pu
            low = pv
        else:
            high = pv
            low = pu
        steps += 1
        seen = high
        if slot_cas(&pi[high], &seen, low):
            break
        # high was not a root (or lost a race): climb from what the CAS saw
        cas_failures[0] += 1
        u = seen
        v = low
    return steps


cdef inline int64_t _multi_jump(int64_t *pi, int64_t v) noexcept nogil:
    cdef int64_t p = slot_load(&pi[v])
    cdef int64_t gp = slot_load(&pi[p])
    cdef int64_t writes = 0
    while gp != p:
        slot_store(&pi[v], gp)  # eager write on every hop
        writes += 1
        p = gp
        gp = slot_load(&pi[p])
    return writes


def max_workers():
    if OPENMP:
        return _omp_max()
    return 1


# -- single-element entry points (quiescent use, tests and debugging) --------

def hook(int64_t[::1] parent, int64_t u, int64_t v):
    return _hook(&parent[0], u, v)


def jump(int64_t[::1] parent, int64_t v):
    return _jump(&parent[0], v)


def atomic_hook(int64_t[::1] parent, int64_t u, int64_t v):
    """Return ``(traversal_steps, cas_failures)``."""
    cdef int64_t fails = 0
    cdef int64_t steps = _atomic_hook(&parent[0], u, v, &fails)
    return steps, fails


def multi_jump(int64_t[::1] parent, int64_t v):
    return _multi_jump(&parent[0], v)


# -- phases -------------------------------------------------------------------

def hook_pass(int64_t[::1] parent, const int64_t[:, ::1] edges,
              Py_ssize_t lo, Py_ssize_t hi, int workers):
    """Non-atomic hook over ``edges[lo:hi]``; True if any hook wrote."""
    cdef int changed = 0
    cdef int *flag = &changed
    cdef int64_t *pi
    cdef const int64_t *ed
    cdef Py_ssize_t i
    if hi <= lo:
        return False
    pi = &parent[0]
    ed = &edges[0, 0]
    with nogil:
        for i in prange(lo, hi, schedule="static", num_threads=workers):
            if _hook(pi, ed[2 * i], ed[2 * i + 1]):
                flag_raise(flag)
    return changed != 0


def jump_pass(int64_t[::1] parent, int workers):
    """One single-level jump per vertex; returns ``(changed, writes)``."""
    cdef int64_t writes = 0
    cdef Py_ssize_t v, n = parent.shape[0]
    cdef int64_t *pi
    if n == 0:
        return False, 0
    pi = &parent[0]
    with nogil:
        for v in prange(n, schedule="static", num_threads=workers):
            if _jump(pi, v):
                writes += 1
    return writes > 0, writes


def atomic_hook_pass(int64_t[::1] parent, const int64_t[:, ::1] edges,
                     Py_ssize_t lo, Py_ssize_t hi, int workers):
    """Atomic-Hook over ``edges[lo:hi]``; returns ``(traversal_steps, cas_failures)``."""
    cdef int64_t steps = 0
    cdef int64_t fails = 0
    cdef int64_t f, st
    cdef int64_t *pi
    cdef const int64_t *ed
    cdef Py_ssize_t i
    if hi <= lo:
        return 0, 0
    pi = &parent[0]
    ed = &edges[0, 0]
    with nogil:
        for i in prange(lo, hi, schedule="dynamic", chunksize=1024, num_threads=workers):
            f = 0
            st = _atomic_hook(pi, ed[2 * i], ed[2 * i + 1], &f)
            steps += st
            fails += f
    return steps, fails


def multi_jump_pass(int64_t[::1] parent, int workers, bint descending=False):
    """Multi-Jump over every vertex.

    Chunks are handed out in ascending vertex order (roots sit at low ids), so
    by the time a vertex runs most of its ancestors are already flattened.
    ``descending`` reverses the order; it exists for measurement only.
    """
    cdef int64_t writes = 0
    cdef Py_ssize_t i, n = parent.shape[0]
    cdef int64_t *pi
    if n == 0:
        return 0
    pi = &parent[0]
    with nogil:
        if descending:
            for i in prange(n, schedule="dynamic", chunksize=2048, num_threads=workers):
                writes += _multi_jump(pi, n - 1 - i)
        else:
            for i in prange(n, schedule="dynamic", chunksize=2048, num_threads=workers):
                writes += _multi_jump(pi, i)
    return writes
