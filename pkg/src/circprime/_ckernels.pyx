# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.

Mirrors :mod:`circprime._pykernels` function for function. Inputs are
range-checked by :mod:`circprime.kernels` before they get here.
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64


cdef void _unit_flags(u64 n, char *unit) nogil:
    # unit[a] = (gcd(a, n) == 1), by striking multiples of each prime factor
    cdef u64 m = n, q = 2, a
    for a in range(n):
        unit[a] = 1
    unit[0] = n == 1
    while q <= m // q:
        if m % q == 0:
            while m % q == 0:
                m //= q
            a = q
            while a < n:
                unit[a] = 0
                a += q
        q += 1
    if m > 1:
        a = m
        while a < n:
            unit[a] = 0
            a += m


cdef Py_ssize_t _label(u64 n, int *labels) except -1:
    cdef char *unit = <char *> malloc(n)
    cdef u64 a, j, x
    cdef int k = 1
    if unit == NULL:
        raise MemoryError()
    try:
        with nogil:
            _unit_flags(n, unit)
            for j in range(n):
                labels[j] = -1
            labels[0] = 0
            for j in range(1, n):
                if labels[j] < 0:
                    # x runs through j * a mod n for a = 1 .. n - 1
                    x = 0
                    for a in range(1, n):
                        x += j
                        if x >= n:
                            x -= n
                        if unit[a]:
                            labels[x] = k
                    k += 1
    finally:
        free(unit)
    return k


def orbit_labels(u64 n):
    """Orbit id of every index 0..n-1, ids numbered by first appearance."""
    cdef int *labels = <int *> malloc(n * sizeof(int))
    cdef Py_ssize_t j
    if labels == NULL:
        raise MemoryError()
    try:
        _label(n, labels)
        return [labels[j] for j in range(n)]
    finally:
        free(labels)


def count_orbits(u64 n):
    cdef int *labels = <int *> malloc(n * sizeof(int))
    if labels == NULL:
        raise MemoryError()
    try:
        return _label(n, labels)
    finally:
        free(labels)


cdef bint _trial(u64 n) nogil:
    cdef u64 d = 2
    while d <= n // d:
        if n % d == 0:
            return False
        d += 1
    return True


cdef bint _trial_6k(u64 n) nogil:
    cdef u64 k = 5
    if n < 4:
        return n >= 2
    if n % 2 == 0 or n % 3 == 0:
        return False
    while k <= n // k:
        if n % k == 0 or n % (k + 2) == 0:
            return False
        k += 6
    return True


def trial_division(u64 n):
    cdef bint r
    with nogil:
        r = _trial(n)
    return r


def optimized_trial_division(u64 n):
    cdef bint r
    with nogil:
        r = _trial_6k(n)
    return r
