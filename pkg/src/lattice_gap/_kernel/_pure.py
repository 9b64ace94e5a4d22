"""Pure-Python kernels for the hot scans.

The compiled extension mirrors these functions exactly; backend selection
happens in the package __init__.
"""

from __future__ import annotations


def coprime_flags(n: int) -> bytearray:
    """Byte flags over [0, n): flags[x] is 1 exactly when gcd(x, n) == 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    flags = bytearray(b"\x01") * n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            flags[::p] = b"\x00" * ((n + p - 1) // p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        flags[::m] = b"\x00" * ((n + m - 1) // m)
    return flags


def scan_min_witness(n: int, s: int, t: int, limit: int) -> int:
    """Least unit p <= limit whose residue sum leaves (n/2, 3n/2), else 0.

    The window test is done in integers as 2*sum <= n or 2*sum >= 3n.
    """
    limit = min(limit, n - 1)
    flags = coprime_flags(n)
    rs = rt = 0
    hi = 3 * n
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
                return p
    return 0


def survivor_ts(n: int, cap: int) -> list[int]:
    """Ascending t >= n//2 with no violating unit p <= cap, for s = 1.

    Every t below n//2 is violated by p = 1, so the scan starts at n//2.
    The cap is clamped to n//2 because p and n-p violate together.
    """
    cap = min(cap, n // 2)
    flags = coprime_flags(n)
    small_units = [p for p in range(1, cap + 1) if flags[p]]
    hi = 3 * n
    out = []
    for t in range(n // 2, n):
        for p in small_units:
            sm2 = 2 * (p + (p * t) % n)
            if sm2 <= n or sm2 >= hi:
                break
        else:
            out.append(t)
    return out


def max_coprime_gap(rad: int) -> tuple[int, int]:
    """(g, gap_start) for the widest spacing of consecutive coprimes to rad.

    One full period [1, rad+1] is scanned; gap_start is the first integer
    coprime to rad whose successor among coprimes is gap_start + g.
    Runs of non-coprimes are located with bytes.find, which stays at
    memchr speed even for the eight-prime primorial.
    """
    if rad < 1:
        raise ValueError(f"rad must be positive, got {rad}")
    if rad == 1:
        return (1, 1)
    size = rad + 2
    marked = bytearray(size)
    m = rad
    p = 2
    while p * p <= m:
        if m % p == 0:
            marked[p::p] = b"\x01" * ((size - 1 - p) // p + 1)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        marked[m::m] = b"\x01" * ((size - 1 - m) // m + 1)
    buf = bytes(marked)
    if buf.find(b"\x01") < 0:
        return (1, 1)
    lo, hi = 1, 2
    while buf.find(b"\x01" * hi) >= 0:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if buf.find(b"\x01" * mid) >= 0:
            lo = mid
        else:
            hi = mid
    start = buf.find(b"\x01" * lo)
    return (lo + 1, start - 1)
