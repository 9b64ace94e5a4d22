"""Fast finders for units that break the residue window.

Each heuristic targets one shape of t and returns a violating unit p or
None. Every return path re-checks the defining inequality in exact
integers, so a heuristic can be wrong only by returning None; absence
never implies the window holds. All heuristics assume the normalized
form s = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import gcd, mod_inv, primes_up_to
from .errors import NotInvertible, PreconditionViolated, RangeError
from .jacobsthal import find_coprime_in_progression, jacobsthal_g, lemma3_witness


def _violates(n: int, t: int, p: int) -> bool:
    # window test for (n, 1, t) at unit p, strict at both ends
    sm2 = 2 * (p % n + (p * t) % n)
    return sm2 <= n or sm2 >= 3 * n


@dataclass(frozen=True)
class RationalApprox:
    """d/n-scale approximation e/d of t/n with |d*t - e*n| < sqrt(n)."""

    t: int
    n: int
    d: int
    e: int


def dirichlet_approx(t: int, n: int) -> RationalApprox:
    """First continued-fraction convergent e/d of t/n with (d*t - e*n)^2 < n.

    The convergent denominators increase, so the first hit has minimal d;
    it always satisfies d <= sqrt(n).
    """
    if not 1 <= t < n:
        raise RangeError(f"need 1 <= t < n, got t={t}, n={n}")
    ep, dp = 1, 0
    e, d = 0, 1
    x, y = n, t
    while (d * t - e * n) ** 2 >= n:
        a = x // y
        x, y = y, x - a * y
        ep, e = e, a * e + ep
        dp, d = d, a * d + dp
    return RationalApprox(t, n, d, e)


def witness_near_top(n: int, b: int) -> int | None:
    """Violating unit for t = n - b, b >= 3: scan p in [n/(2(b-1)), n/b].

    In that range p*t mod n collapses to n - p*b, so the sum n - p*(b-1)
    drops below n/2. Returns None when b < 3 or no unit in the interval
    verifies.
    """
    if b < 3 or b >= n:
        return None
    t = n - b
    lo = -(-n // (2 * (b - 1)))
    hi = n // b
    for p in range(max(lo, 1), hi + 1):
        if gcd(p, n) == 1 and _violates(n, t, p):
            return p
    return None


def witness_near_half(n: int, b: int) -> int | None:
    """Violating unit for t = n/2 + b on even n, 2 <= b < n/2.

    Odd p keeps p*(n/2) at n/2, so for p in [n/(2b), n/b] the sum falls
    to p + p*b - n/2, which is small when p sits near the bottom of the
    interval.
    """
    if n % 2:
        raise PreconditionViolated(f"witness_near_half needs even n, got {n}")
    if b < 2 or 2 * b >= n:
        return None
    t = n // 2 + b
    lo = -(-n // (2 * b))
    hi = n // b
    for p in range(max(lo, 1), hi + 1):
        if p % 2 and gcd(p, n) == 1 and _violates(n, t, p):
            return p
    return None


def witness_pow2(n: int, t: int) -> int | None:
    """Violating unit for odd n from powers of two.

    Brackets t/n by 1 - 2^-k < t/n < 1 - 2^-(k+1) using exact shifts,
    then tries p = 2^k mod n and p = q * 2^(k-l) mod n for odd primes
    q < 2^(k+1) with 2^l < q < 2^(l+1). Returns None at the bracket
    boundary or when no candidate verifies.
    """
    if n % 2 == 0:
        raise PreconditionViolated(f"witness_pow2 needs odd n, got {n}")
    if not 1 <= t < n:
        raise PreconditionViolated(f"need 1 <= t < n, got t={t}, n={n}")
    m = n - t
    k = 0
    while (m << (k + 1)) < n:
        k += 1
    if (m << k) >= n:
        return None
    p = pow(2, k, n)
    if p and gcd(p, n) == 1 and _violates(n, t, p):
        return p
    top = 1 << (k + 1)
    for q in primes_up_to(top - 1).primes:
        if q == 2 or n % q == 0:
            continue
        l = q.bit_length() - 1
        if l > k:
            break
        p = (q * pow(2, k - l, n)) % n
        if p and gcd(p, n) == 1 and _violates(n, t, p):
            return p
    return None


def witness_gcd(n: int, t: int) -> int | None:
    """Violating unit from w = gcd(t, n) when 2 < w < n/2.

    Solving p*(t/w) = 1 mod n/w pins p*t mod n to w, so the sum is about
    w + p with p near n/w. The solution is lifted along p0 + nu*(n/w)
    to the first residue coprime to n and then verified.
    """
    w = gcd(t, n)
    if w <= 2 or 2 * w >= n:
        return None
    d = n // w
    p0 = mod_inv(t // w, d)
    nu = find_coprime_in_progression(0, n, d, p0)
    p = (p0 + nu * d) % n
    if p and _violates(n, t, p):
        return p
    return None


def witness_dirichlet(n: int, t: int) -> int | None:
    """Violating unit from the rational approximation e/d of t/n.

    Requires gcd(t, n) <= 2. With a the closed-interval witness for d,
    units p = a*e^-1 (mod d) land p*t mod n near a*n/d, inside the low
    part of the window; candidates up to d*(g(n)+1) are tried and
    verified.
    """
    if gcd(t, n) > 2:
        raise PreconditionViolated(f"witness_dirichlet needs gcd(t, n) <= 2, got {gcd(t, n)}")
    approx = dirichlet_approx(t, n)
    d, e = approx.d, approx.e
    if d <= 2:
        return None
    if gcd(e, d) != 1:
        raise NotInvertible(f"approximation {e}/{d} is not reduced")
    a = lemma3_witness(d)
    r = (a * mod_inv(e, d)) % d
    cap = d * (jacobsthal_g(n).g + 1)
    p = r
    while p <= cap:
        q = p % n
        if q and gcd(q, n) == 1 and _violates(n, t, q):
            return q
        p += d
    return None


def heuristic_witness(n: int, t: int) -> int | None:
    """Chain the heuristics in fixed order; first verified hit wins.

    Order: gcd, near-top, near-half (even n), powers of two (odd n),
    Dirichlet approximation. Returns None when none of them applies or
    verifies; callers must then fall back to scanning.
    """
    p = witness_gcd(n, t)
    if p is not None:
        return p
    p = witness_near_top(n, n - t)
    if p is not None:
        return p
    if n % 2 == 0:
        b = t - n // 2
        if b >= 2:
            p = witness_near_half(n, b)
            if p is not None:
                return p
    elif 2 * t > n:
        p = witness_pow2(n, t)
        if p is not None:
            return p
    if gcd(t, n) <= 2:
        p = witness_dirichlet(n, t)
        if p is not None:
            return p
    return None
