"""Exact integer and modular arithmetic shared by every other module."""

from __future__ import annotations

import math
import threading
from bisect import bisect_right
from dataclasses import dataclass

from .errors import NotInvertible, RangeError, ResourceLimit

# All moduli handled here stay below ten million, so one shared sieve
# of that size covers every caller.
PRIME_TABLE_CAP = 10_000_000

gcd = math.gcd


def mod_inv(a: int, n: int) -> int:
    """Inverse of a modulo n, as a residue in [1, n-1]."""
    if n < 2:
        raise RangeError(f"modulus must be at least 2, got {n}")
    try:
        return pow(a, -1, n)
    except ValueError:
        raise NotInvertible(f"{a} has no inverse modulo {n}") from None


@dataclass(frozen=True)
class Factorization:
    """n as an ordered product of prime powers."""

    n: int
    primes: tuple[tuple[int, int], ...]

    @property
    def omega(self) -> int:
        return len(self.primes)

    @property
    def radical(self) -> int:
        out = 1
        for p, _ in self.primes:
            out *= p
        return out


def factorize(n: int) -> Factorization:
    """Trial-division factorization, adequate for every modulus used here."""
    if n < 1:
        raise RangeError(f"factorize needs n >= 1, got {n}")
    pairs = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        pairs.append((m, 1))
    return Factorization(n, tuple(pairs))


class PrimeTable:
    """Immutable view of the primes in [2, limit]."""

    __slots__ = ("limit", "primes", "_flags")

    def __init__(self, limit: int, flags, primes):
        self.limit = limit
        self._flags = flags
        self.primes = primes

    def is_prime(self, x: int) -> bool:
        if x < 2 or x > self.limit:
            return False
        return self._flags[x] != 0

    def __len__(self) -> int:
        return len(self.primes)


def _sieve(limit: int) -> bytearray:
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return flags

# One sieve per process, grown on demand and shared read-only.
_sieve_lock = threading.Lock()
_shared_flags = bytearray(b"\x00\x00")
_shared_primes: list[int] = []
_shared_limit = 1


def primes_up_to(x: int) -> PrimeTable:
    """Prime table over [2, x], backed by the shared process-wide sieve."""
    global _shared_flags, _shared_primes, _shared_limit
    if x < 1:
        raise RangeError(f"primes_up_to needs x >= 1, got {x}")
    if x > PRIME_TABLE_CAP:
        raise ResourceLimit(f"prime table capped at {PRIME_TABLE_CAP}, got {x}")
    with _sieve_lock:
        if x > _shared_limit:
            limit = min(max(x, 2 * _shared_limit), PRIME_TABLE_CAP)
            flags = _sieve(limit)
            _shared_flags = flags
            _shared_primes = [i for i in range(2, limit + 1) if flags[i]]
            _shared_limit = limit
        k = bisect_right(_shared_primes, x)
        return PrimeTable(x, _shared_flags, tuple(_shared_primes[:k]))


def units(n: int) -> list[int]:
    """Ascending residues in [1, n-1] coprime to n."""
    if n < 2:
        raise RangeError(f"units needs n >= 2, got {n}")
    return [p for p in range(1, n) if gcd(p, n) == 1]


def chebyshev_theta(x: int) -> float:
    """Sum of log p over primes p <= x."""
    if x < 1:
        raise RangeError(f"chebyshev_theta needs x >= 1, got {x}")
    if x < 2:
        return 0.0
    return math.fsum(math.log(p) for p in primes_up_to(x).primes)
