# cython: language_level=3
"""Compiled twins of the pure-Python kernels in _pure.py.

Semantics must match _pure exactly; the backend equivalence tests compare
the two on shared inputs.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset


cdef unsigned char* _flags_buf(long long n) except NULL:
    # flags[x] = 1 iff gcd(x, n) == 1, for x in [0, n)
    cdef unsigned char* flags = <unsigned char*> malloc(n)
    if flags == NULL:
        raise MemoryError()
    memset(flags, 1, n)
    cdef long long m = n, p = 2, i
    while p * p <= m:
        if m % p == 0:
            i = 0
            while i < n:
                flags[i] = 0
                i += p
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        i = 0
        while i < n:
            flags[i] = 0
            i += m
    return flags


def coprime_flags(long long n):
    """Byte flags over [0, n): flags[x] is 1 exactly when gcd(x, n) == 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    cdef unsigned char* flags = _flags_buf(n)
    try:
        return bytearray(flags[:n])
    finally:
        free(flags)


def scan_min_witness(long long n, long long s, long long t, long long limit):
    """Least unit p <= limit whose residue sum leaves (n/2, 3n/2), else 0."""
    if limit > n - 1:
        limit = n - 1
    cdef unsigned char* flags = _flags_buf(n)
    cdef long long p, rs = 0, rt = 0, sm2
    cdef long long hi = 3 * n
    cdef long long found = 0
    for p in range(1, limit + 1):
        rs += s
        if rs >= n:
            rs -= n
        rt += t
        if rt >= n:
            rt -= n
        if flags[p]:
            sm2 = 2 * (rs + rt)
            if sm2 <= n or sm2 >= hi:
                found = p
                break
    free(flags)
    return found


def survivor_ts(long long n, long long cap):
    """Ascending t >= n//2 with no violating unit p <= cap, for s = 1."""
    if cap > n // 2:
        cap = n // 2
    cdef unsigned char* flags = _flags_buf(n)
    cdef long long* ps = <long long*> malloc((cap + 1) * sizeof(long long))
    if ps == NULL:
        free(flags)
        raise MemoryError()
    cdef long long m = 0, p, t, j, sm2
    cdef long long hi = 3 * n
    for p in range(1, cap + 1):
        if flags[p]:
            ps[m] = p
            m += 1
    out = []
    cdef bint violated
    for t in range(n // 2, n):
        violated = False
        for j in range(m):
            p = ps[j]
            sm2 = 2 * (p + (p * t) % n)
            if sm2 <= n or sm2 >= hi:
                violated = True
                break
        if not violated:
            out.append(t)
    free(ps)
    free(flags)
    return out


def max_coprime_gap(long long rad):
    """(g, gap_start) for the widest spacing of consecutive coprimes to rad."""
    if rad < 1:
        raise ValueError(f"rad must be positive, got {rad}")
    if rad == 1:
        return (1, 1)
    cdef long long size = rad + 2
    cdef unsigned char* marked = <unsigned char*> malloc(size)
    if marked == NULL:
        raise MemoryError()
    memset(marked, 0, size)
    cdef long long m = rad, p = 2, i
    while p * p <= m:
        if m % p == 0:
            i = p
            while i < size:
                marked[i] = 1
                i += p
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        i = m
        while i < size:
            marked[i] = 1
            i += m
    cdef long long best = 1, best_start = 1, prev = 1, x
    for x in range(2, size):
        if not marked[x]:
            if x - prev > best:
                best = x - prev
                best_start = prev
            prev = x
    free(marked)
    return (best, best_start)
