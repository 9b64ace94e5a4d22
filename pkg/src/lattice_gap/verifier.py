"""Residue-window verdicts, normalization, family classification, search.

The condition under test: for a triple (n, s, t) with gcd(n, s) = 1 and
1 <= s, t < n, every unit p mod n must satisfy

    n/2 < (p*s mod n) + (p*t mod n) < 3n/2

with strict inequalities. In integers that is n < 2*sum < 3n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _kernel
from .arith import gcd, mod_inv
from .errors import InvalidTriple, RangeError
from .witness import heuristic_witness

SPORADIC_N_MAX = 78

# Units up to this bound are scanned before the heuristics get a turn;
# nearly every violated t falls to a witness this small.
SMALL_SCAN_CAP = 64


@dataclass(frozen=True)
class Triple:
    """A candidate (n, s, t) with gcd(n, s) = 1 and 1 <= s, t < n."""

    n: int
    s: int
    t: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidTriple(f"modulus must be at least 3, got {self.n}")
        if not 1 <= self.s < self.n:
            raise InvalidTriple(f"s must lie in [1, {self.n - 1}], got {self.s}")
        if not 1 <= self.t < self.n:
            raise InvalidTriple(f"t must lie in [1, {self.n - 1}], got {self.t}")
        if gcd(self.n, self.s) != 1:
            raise InvalidTriple(f"gcd({self.n}, {self.s}) > 1")


@dataclass(frozen=True)
class Verdict:
    """Outcome of the window check.

    When violated, witness_p is the smallest violating unit and
    witness_sum its residue sum.
    """

    holds: bool
    witness_p: int | None = None
    witness_sum: int | None = None


class FamilyTag(enum.Enum):
    S_PLUS_T = "s+t"
    S_PLUS_2T = "s+2t"
    TWO_S_PLUS_T = "2s+t"
    HALF_DIFFERENCE = "half_difference"
    HALF_T = "half_t"
    SPORADIC = "sporadic"
    UNEXPLAINED = "unexplained"


# The four congruence families plus the excluded t = n/2 row.
PAPER_FAMILIES = frozenset(
    {
        FamilyTag.S_PLUS_T,
        FamilyTag.S_PLUS_2T,
        FamilyTag.TWO_S_PLUS_T,
        FamilyTag.HALF_DIFFERENCE,
    }
)


@dataclass(frozen=True)
class ExceptionalRecord:
    """One surviving triple: the window holds for every unit.

    literal_tags lists the families that also match as exact equations
    (s + t = n and so on) rather than congruences mod n; for normalized
    triples the two readings agree, for scaled ones they can differ.
    """

    triple: Triple
    normalized_t: int
    tags: frozenset[FamilyTag]
    literal_tags: frozenset[FamilyTag]


def residue_sum(n: int, s: int, t: int, p: int) -> int:
    """(p*s mod n) + (p*t mod n)."""
    return (p * s) % n + (p * t) % n


def holds(tr: Triple) -> Verdict:
    """Decide the window condition, reporting the minimal violating unit.

    A heuristic witness (found on the normalized form and mapped back)
    caps the confirming ascending scan. Only units up to n//2 ever need
    scanning: the residues are never 0 for a valid triple, so the sums
    for p and n-p add to 2n and the two violate together.
    """
    n, s, t = tr.n, tr.s, tr.t
    if s == 1:
        q = heuristic_witness(n, t)
    else:
        s_inv = mod_inv(s, n)
        q = heuristic_witness(n, (t * s_inv) % n)
        if q is not None:
            q = (q * s_inv) % n
    if q is not None:
        q = min(q, n - q)
        p = _kernel.scan_min_witness(n, s, t, q - 1)
        if p == 0:
            p = q
        return Verdict(False, p, residue_sum(n, s, t, p))
    p = _kernel.scan_min_witness(n, s, t, n // 2)
    if p:
        return Verdict(False, p, residue_sum(n, s, t, p))
    return Verdict(True)


def normalize(tr: Triple) -> Triple:
    """Scale (n, s, t) by s^-1 to the representative (n, 1, t*s^-1 mod n).

    Scaling both residues by a unit permutes the sums over p, so the
    verdict status is unchanged (the minimal witness may move).
    """
    if tr.s == 1:
        return tr
    return Triple(tr.n, 1, (tr.t * mod_inv(tr.s, tr.n)) % tr.n)


def _congruence_tags(n: int, s: int, t: int) -> set[FamilyTag]:
    tags = set()
    if (s + t) % n == 0:
        tags.add(FamilyTag.S_PLUS_T)
    if (s + 2 * t) % n == 0:
        tags.add(FamilyTag.S_PLUS_2T)
    if (2 * s + t) % n == 0:
        tags.add(FamilyTag.TWO_S_PLUS_T)
    if n % 2 == 0:
        if abs(t - s) == n // 2:
            tags.add(FamilyTag.HALF_DIFFERENCE)
        if t == n // 2:
            tags.add(FamilyTag.HALF_T)
    return tags


def literal_families(tr: Triple) -> frozenset[FamilyTag]:
    """Families matching as exact equations: s+t = n, s+2t = n, 2s+t = n,
    or (even n) |t-s| = n/2. Not invariant under scaling, unlike the
    congruence reading."""
    n, s, t = tr.n, tr.s, tr.t
    tags = set()
    if s + t == n:
        tags.add(FamilyTag.S_PLUS_T)
    if s + 2 * t == n:
        tags.add(FamilyTag.S_PLUS_2T)
    if 2 * s + t == n:
        tags.add(FamilyTag.TWO_S_PLUS_T)
    if n % 2 == 0 and abs(t - s) == n // 2:
        tags.add(FamilyTag.HALF_DIFFERENCE)
    return frozenset(tags)


def classify(tr: Triple) -> frozenset[FamilyTag]:
    """Family tags by congruence mod n; scale-invariant.

    A triple in no family gets Sporadic (n <= 78) or Unexplained (n > 78)
    only once the window condition is confirmed to hold; a violated
    family-less triple gets the empty set.
    """
    tags = _congruence_tags(tr.n, tr.s, tr.t)
    if not tags and holds(tr).holds:
        tags = {FamilyTag.SPORADIC if tr.n <= SPORADIC_N_MAX else FamilyTag.UNEXPLAINED}
    return frozenset(tags)


def scan_modulus(n: int, include_half_t: bool = False) -> list[ExceptionalRecord]:
    """All surviving normalized triples (n, 1, t), ascending in t.

    Stages: drop everything a unit <= SMALL_SCAN_CAP violates, then try
    the witness heuristics, then settle the rest by a full half-range
    scan. Rows whose only tag is half_t are suppressed unless requested;
    t = n/2 always survives but is excluded by the geometric context the
    families come from.
    """
    if n < 3:
        raise RangeError(f"modulus must be at least 3, got {n}")
    out = []
    for t in _kernel.survivor_ts(n, min(SMALL_SCAN_CAP, n // 2)):
        if heuristic_witness(n, t) is not None:
            continue
        if _kernel.scan_min_witness(n, 1, t, n // 2):
            continue
        tags = _congruence_tags(n, 1, t)
        if not tags:
            tags = {FamilyTag.SPORADIC if n <= SPORADIC_N_MAX else FamilyTag.UNEXPLAINED}
        if FamilyTag.HALF_T in tags and not include_half_t and not (tags & PAPER_FAMILIES):
            continue
        tr = Triple(n, 1, t)
        out.append(ExceptionalRecord(tr, t, frozenset(tags), literal_families(tr)))
    return out


def search_range(
    n_lo: int, n_hi: int, include_half_t: bool = False
) -> list[ExceptionalRecord]:
    """Surviving records for every modulus in [n_lo, n_hi], in (n, t) order.

    Each orbit is reported once through its normalized representative;
    coverage of all (s, t) pairs rests on the scaling invariance that
    normalize() documents and the property suite checks.
    """
    if n_lo < 3 or n_hi < n_lo:
        raise RangeError(f"need 3 <= lo <= hi, got {n_lo}..{n_hi}")
    out = []
    for n in range(n_lo, n_hi + 1):
        out.extend(scan_modulus(n, include_half_t))
    return out
