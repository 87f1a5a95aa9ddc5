"""pscert: exact positivity certificates on compact semi-algebraic sets.

The toolkit builds finite, degree-truncated families of explicitly
nonnegative polynomials (semiring products, quadratic-module terms,
cross products, weighted module layers), searches for representations
p = epsilon + sum lambda_j t_j by exact-rational linear programming, and
verifies every certificate by exact polynomial expansion.  No floating
point is used anywhere on the algebraic path.
"""

from .poly import Monomial, ParseError, Polynomial, parse_polynomial, variables
from .families import (
    FAMILY_CATALOG,
    GeneratorSet,
    SemiAlgebraicSet,
    TermFamily,
    archimedean_atoms,
    expand_qmodule,
    expand_semiring,
    module_family,
    named_family,
    product_family,
    square_atoms,
)
from .simplex import (
    DEFAULT_MAX_COLUMNS,
    Feasible,
    Infeasible,
    LinearProgram,
    TooLarge,
    Unbounded,
    solve,
)
from .certify import (
    BoundWitness,
    CertEntry,
    Certificate,
    EpsilonUnbounded,
    Exhausted,
    FamilyCapError,
    LPProblem,
    SearchInfeasible,
    SearchTooLarge,
    archimedean_bound,
    bound_product,
    build_lp,
    certificate_from_json,
    check_farkas_dual,
    dagger_probe,
    product_certificate,
    search_certificate,
    search_with_schedule,
    solve_lp,
)
from .check import (
    SamplingReport,
    VerificationReport,
    counterexample,
    member,
    sample_min,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "Monomial",
    "ParseError",
    "Polynomial",
    "parse_polynomial",
    "variables",
    "FAMILY_CATALOG",
    "GeneratorSet",
    "SemiAlgebraicSet",
    "TermFamily",
    "archimedean_atoms",
    "expand_qmodule",
    "expand_semiring",
    "module_family",
    "named_family",
    "product_family",
    "square_atoms",
    "DEFAULT_MAX_COLUMNS",
    "Feasible",
    "Infeasible",
    "LinearProgram",
    "TooLarge",
    "Unbounded",
    "solve",
    "BoundWitness",
    "CertEntry",
    "Certificate",
    "EpsilonUnbounded",
    "Exhausted",
    "FamilyCapError",
    "LPProblem",
    "SearchInfeasible",
    "SearchTooLarge",
    "archimedean_bound",
    "bound_product",
    "build_lp",
    "certificate_from_json",
    "check_farkas_dual",
    "dagger_probe",
    "product_certificate",
    "search_certificate",
    "search_with_schedule",
    "solve_lp",
    "SamplingReport",
    "VerificationReport",
    "counterexample",
    "member",
    "sample_min",
    "verify_certificate",
]
