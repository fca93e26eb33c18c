/* Per-slot atomic access to the parent forest. Loads and stores are relaxed;
 * the root-acquiring CAS is acq_rel. Phase barriers supply the rest. */
#ifndef ADAPTCC_ATOMICS_H
#define ADAPTCC_ATOMICS_H

#include <stdint.h>

static inline int64_t slot_load(const int64_t *p)
{
    return __atomic_load_n(p, __ATOMIC_RELAXED);
}

static inline void slot_store(int64_t *p, int64_t value)
{
    __atomic_store_n(p, value, __ATOMIC_RELAXED);
}

/* On failure *expected receives the observed value. */
static inline int slot_cas(int64_t *p, int64_t *expected, int64_t desired)
{
    return __atomic_compare_exchange_n(p, expected, desired, 0,
                                       __ATOMIC_ACQ_REL, __ATOMIC_ACQUIRE);
}

static inline void flag_raise(int *flag)
{
    __atomic_store_n(flag, 1, __ATOMIC_RELAXED);
}

#endif
