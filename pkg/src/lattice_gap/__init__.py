"""Tools for the residue window condition n/2 < ps mod n + pt mod n < 3n/2.

The package decides the condition for triples (n, s, t), tags the
surviving triples by congruence family, finds violation witnesses
without full scans, and carries the counting argument that caps n for
any triple outside the known families.
"""

from ._kernel import BACKEND
from .arith import Factorization, PrimeTable, chebyshev_theta, factorize, mod_inv, primes_up_to, units
from .elimination import (
    BoundChain,
    BoundStep,
    EliminationReport,
    EliminationSweep,
    bound_chain,
    d_max_from,
    eliminate_all,
    eliminate_d,
    odd_case_bound,
)
from .errors import (
    CheckpointMismatch,
    InvalidTriple,
    LatticeGapError,
    NoWitness,
    NotInvertible,
    PreconditionViolated,
    RangeError,
    ResourceLimit,
)
from .jacobsthal import (
    JacobsthalResult,
    find_coprime_in_progression,
    g_upper_bound,
    jacobsthal_g,
    lemma3_witness,
    primorial,
)
from .runner import RunConfig, RunSummary, run_search
from .verifier import (
    ExceptionalRecord,
    FamilyTag,
    Triple,
    Verdict,
    classify,
    holds,
    literal_families,
    normalize,
    residue_sum,
    scan_modulus,
    search_range,
)
from .witness import (
    RationalApprox,
    dirichlet_approx,
    heuristic_witness,
    witness_dirichlet,
    witness_gcd,
    witness_near_half,
    witness_near_top,
    witness_pow2,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundChain",
    "BoundStep",
    "CheckpointMismatch",
    "EliminationReport",
    "EliminationSweep",
    "ExceptionalRecord",
    "Factorization",
    "FamilyTag",
    "InvalidTriple",
    "JacobsthalResult",
    "LatticeGapError",
    "NoWitness",
    "NotInvertible",
    "PreconditionViolated",
    "PrimeTable",
    "RangeError",
    "RationalApprox",
    "ResourceLimit",
    "RunConfig",
    "RunSummary",
    "Triple",
    "Verdict",
    "bound_chain",
    "chebyshev_theta",
    "classify",
    "d_max_from",
    "dirichlet_approx",
    "eliminate_all",
    "eliminate_d",
    "factorize",
    "find_coprime_in_progression",
    "g_upper_bound",
    "heuristic_witness",
    "holds",
    "jacobsthal_g",
    "lemma3_witness",
    "literal_families",
    "mod_inv",
    "normalize",
    "odd_case_bound",
    "primes_up_to",
    "primorial",
    "residue_sum",
    "run_search",
    "scan_modulus",
    "search_range",
    "units",
    "witness_dirichlet",
    "witness_gcd",
    "witness_near_half",
    "witness_near_top",
    "witness_pow2",
]
