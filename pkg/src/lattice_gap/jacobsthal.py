"""The Jacobsthal gap function g(n) and the bounds built on top of it.

g(n) is the largest difference between consecutive integers coprime to n.
It depends only on the radical of n, and coprimality is periodic with
period rad(n), so one scan of [1, rad(n)+1] sees every gap.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernel
from .arith import factorize, gcd
from .errors import NoWitness, PreconditionViolated, RangeError, ResourceLimit

SCAN_CAP = 10_000_000
PRIMORIAL_CAP = 12

_FIRST_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_gap_cache: dict[int, tuple[int, int]] = {}


@dataclass(frozen=True)
class JacobsthalResult:
    """g(n) together with a gap that attains it.

    gap_start is coprime to n, gap_start + g is the next coprime integer,
    and nothing strictly between them is coprime to n.
    """

    n: int
    radical_primes: frozenset[int]
    g: int
    gap_start: int


def jacobsthal_g(n: int) -> JacobsthalResult:
    """Exact g(n) by scanning one radical period; cached per radical."""
    if n < 1:
        raise RangeError(f"jacobsthal_g needs n >= 1, got {n}")
    fact = factorize(n)
    rad = fact.radical
    if rad > SCAN_CAP:
        raise ResourceLimit(f"radical {rad} exceeds the scan cap {SCAN_CAP}")
    if rad not in _gap_cache:
        _gap_cache[rad] = _kernel.max_coprime_gap(rad)
    g, gap_start = _gap_cache[rad]
    return JacobsthalResult(n, frozenset(p for p, _ in fact.primes), g, gap_start)


def primorial(k: int) -> int:
    """Product of the first k primes; primorial(0) = 1."""
    if k < 0 or k > PRIMORIAL_CAP:
        raise RangeError(f"primorial supported for 0 <= k <= {PRIMORIAL_CAP}, got {k}")
    out = 1
    for p in _FIRST_PRIMES[:k]:
        out *= p
    return out


def g_upper_bound(omega: int, mode: str) -> int:
    """Upper bound for g(n) in terms of omega, the count of prime factors.

    kanold: 2**omega for any omega. quadratic: omega**2, trusted for
    omega <= 12. primorial: the exact g of the omega-th primorial, the
    largest g among n with that many prime factors, for omega <= 8.
    """
    if omega < 0:
        raise RangeError(f"omega must be nonnegative, got {omega}")
    if mode == "kanold":
        return 2**omega
    if mode == "quadratic":
        if omega > 12:
            raise RangeError(f"quadratic bound only holds for omega <= 12, got {omega}")
        return omega * omega
    if mode == "primorial":
        if omega > 8:
            raise RangeError(f"primorial table computed for omega <= 8, got {omega}")
        return jacobsthal_g(primorial(omega)).g
    raise ValueError(f"unknown mode {mode!r}")


def find_coprime_in_progression(x: int, n: int, d: int, a: int) -> int:
    """Least nu >= x with gcd(n, d*nu + a) = 1.

    Guaranteed to exist with nu <= x + g(n) whenever gcd(a, d, n) = 1.
    """
    if n < 2 or d < 1:
        raise RangeError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    if gcd(gcd(a, d), n) != 1:
        raise PreconditionViolated(f"gcd({a}, {d}, {n}) > 1")
    nu = x
    stop = x + n + 1  # far beyond the guaranteed g(n) window
    while nu <= stop:
        if gcd(n, d * nu + a) == 1:
            return nu
        nu += 1
    raise NoWitness(f"no coprime value in progression {d}*nu + {a} from {x}")


def lemma3_witness(d: int) -> int:
    """Least a coprime to d with d/12 <= a <= 5d/12, endpoints included.

    The closed interval is compared exactly as d <= 12a <= 5d. At d = 12
    only the endpoints contain units, so the closed reading is required.
    """
    if d < 3:
        raise RangeError(f"lemma3_witness needs d >= 3, got {d}")
    a = -(-d // 12)
    while 12 * a <= 5 * d:
        if gcd(a, d) == 1:
            return a
        a += 1
    raise NoWitness(f"no unit of {d} in [d/12, 5d/12]")
