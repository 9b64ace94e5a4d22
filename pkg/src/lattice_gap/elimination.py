"""The closing computations: bound chain, odd-n cutoff, denominator sweep.

The chain alternates two facts: any n whose window survives unexplained
forces g(n) > sqrt(n)/24 - 1, and g(n) is bounded in terms of omega(n),
the number of distinct primes of n. Feeding each n_max back into the
omega bound shrinks the pair until it stabilizes at omega <= 6 and
n < 304704. The sweep then shows every denominator d <= 552 would force
at least 7 distinct primes, closing the range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .arith import gcd, primes_up_to
from .errors import NoWitness, RangeError
from .jacobsthal import PRIMORIAL_CAP, g_upper_bound, primorial


@dataclass(frozen=True)
class BoundStep:
    omega_max: int
    g_bound: int
    source: str
    n_max: int


@dataclass(frozen=True)
class BoundChain:
    steps: tuple[BoundStep, ...]

    @property
    def final(self) -> BoundStep:
        return self.steps[-1]


def _n_max_for(g_bound: int) -> int:
    # inverts g(n) > sqrt(n)/24 - 1
    return (24 * (g_bound + 1)) ** 2


def _largest_omega_below(n_max: int) -> int:
    # primorial(k) is the least n with omega(n) = k
    k = 0
    while k < PRIMORIAL_CAP and primorial(k + 1) <= n_max:
        k += 1
    return k


def _best_g_bound(omega: int) -> tuple[int, str]:
    if omega <= 8:
        return g_upper_bound(omega, "primorial"), "primorial"
    if omega <= 12:
        return g_upper_bound(omega, "quadratic"), "quadratic"
    return g_upper_bound(omega, "kanold"), "kanold"


def bound_chain() -> BoundChain:
    """Iterate the g/omega bounds to their fixed point.

    The opening step needs no prior n_max: omega is the largest k whose
    primorial is consistent with the gap the window forces, g <= 2^k,
    checked as primorial(k) <= (24*(2^k + 1))^2. Later steps reuse each
    n_max and switch to the sharper per-omega bounds.
    """
    k = 0
    while k < PRIMORIAL_CAP and primorial(k + 1) <= _n_max_for(2 ** (k + 1)):
        k += 1
    g = 2**k
    steps = [BoundStep(k, g, "kanold", _n_max_for(g))]
    while True:
        omega = _largest_omega_below(steps[-1].n_max)
        g, source = _best_g_bound(omega)
        n_max = _n_max_for(g)
        if omega == steps[-1].omega_max and n_max == steps[-1].n_max:
            break
        steps.append(BoundStep(omega, g, source, n_max))
    return BoundChain(tuple(steps))


def d_max_from(n_max: int) -> int:
    """Largest possible approximation denominator: floor(sqrt(n_max))."""
    if n_max < 1:
        raise RangeError(f"n_max must be positive, got {n_max}")
    return math.isqrt(n_max)


@dataclass(frozen=True)
class EliminationReport:
    """Outcome for one denominator d.

    class_counts maps every reduced residue class mod d to the number of
    primes up to p_max in it; forced_lower_bound adds up the N smallest,
    where N is the number of admissible classes. A survivor n would need
    all primes of the N quietest classes as factors, so the denominator
    is eliminated once that forces more primes than omega allows.
    """

    d: int
    p_max: int
    admissible_a: tuple[int, ...]
    N: int
    class_counts: dict[int, int]
    forced_lower_bound: int
    eliminated: bool


@dataclass(frozen=True)
class EliminationSweep:
    reports: tuple[EliminationReport, ...]
    all_eliminated: bool


def eliminate_d(d: int, omega_allow: int = 6, formula: str = "paper") -> EliminationReport:
    """Count primes per residue class mod d and total the quietest ones.

    p_max comes from p*(sqrt(n)/d + 1) reaching the window scale at the
    top of the range: floor(10000*d/(100+d)) for the as-published
    reading, or the twelve-fold smaller floor(10000*d/(12*(100+d)))
    under the conservative one. Exact integer division both ways.
    """
    if d < 3:
        raise RangeError(f"eliminate_d needs d >= 3, got {d}")
    if formula == "paper":
        p_max = (10000 * d) // (100 + d)
    elif formula == "strict":
        p_max = (10000 * d) // (12 * (100 + d))
    else:
        raise ValueError(f"unknown formula {formula!r}")
    admissible = tuple(
        a for a in range(1, 5 * d // 12 + 1) if 12 * a >= d and gcd(a, d) == 1
    )
    if not admissible:
        raise NoWitness(f"no admissible residue for d = {d}")
    counts = {r: 0 for r in range(1, d) if gcd(r, d) == 1}
    for p in primes_up_to(p_max).primes:
        r = p % d
        if r in counts:
            counts[r] += 1
    forced = sum(sorted(counts.values())[: len(admissible)])
    return EliminationReport(
        d=d,
        p_max=p_max,
        admissible_a=admissible,
        N=len(admissible),
        class_counts=counts,
        forced_lower_bound=forced,
        eliminated=forced >= omega_allow + 1,
    )


def eliminate_all(
    d_hi: int = 552, omega_allow: int = 6, formula: str = "paper"
) -> EliminationSweep:
    """Reports for every 3 <= d <= d_hi, ascending."""
    if d_hi < 3:
        raise RangeError(f"eliminate_all needs d_hi >= 3, got {d_hi}")
    if formula == "paper":
        primes_up_to((10000 * d_hi) // (100 + d_hi))  # grow the shared sieve once
    reports = tuple(eliminate_d(d, omega_allow, formula) for d in range(3, d_hi + 1))
    return EliminationSweep(reports, all(r.eliminated for r in reports))

# Above this size the float comparison of 4n^2 and e^sqrt(n) is already
# decided by a margin far wider than double rounding error.
_ODD_SCAN_HI = 2000


def _doubling_exceeds_exp(n: int) -> bool:
    # 2n > e^{sqrt(n)/2}, squared to 4n^2 > e^{sqrt(n)}; mpmath settles ties
    lhs = 4.0 * n * n
    rhs = math.exp(math.sqrt(n))
    if abs(lhs - rhs) > 1e-9 * rhs:
        return lhs > rhs
    with mpmath.workdps(50):
        return 4 * mpmath.mpf(n) ** 2 > mpmath.exp(mpmath.sqrt(n))


def odd_case_bound() -> int:
    """One more than the largest n with 2n > e^(sqrt(n)/2).

    The theta lower bound makes every odd survivor satisfy that
    inequality, so this is an upper bound for the odd case.
    """
    largest = 1
    for n in range(1, _ODD_SCAN_HI + 1):
        if _doubling_exceeds_exp(n):
            largest = n
    return largest + 1
