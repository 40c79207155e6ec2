"""Exact solvers for the polynomial Pell equation f^2 - d g^2 = 1.

The layers, bottom to top: exact rationals and rational functions
(fields, ratfun), polynomials and Laurent series in 1/x (poly,
laurent), continued fractions of square roots (contfrac), Pell
solutions and integrality (pell), Jacobians of quartics with their
torsion parametrizations (curves), and the finite classification
searches (classify).  The cli module ties them into one command.
"""

from .classify import (CanonicalQuartic, Candidate, ConstraintSet,
                       SearchResult, canonicalize, classify_nonsquarefree,
                       search_torsion)
from .contfrac import CFExpansion, SideCondition, Surd, cf_expand
from .curves import (ShortWeierstrass, TateCurve, adams_razar_curve,
                     check_period_torsion, depressed_form, family_quartic,
                     family_row, kubert_params, tate_to_short, torsion_order)
from .errors import (DegenerateParameterError, DomainError, InvariantError,
                     ParseError, PellError, PrecisionError, TruncationError)
from .pell import (PellSolution, is_pellian_over_Z, minimal_solution,
                   period_solution, power_solution)
from .poly import Poly, parse_poly, poly_text

__version__ = "0.1.0"

__all__ = [
    "CFExpansion", "CanonicalQuartic", "Candidate", "ConstraintSet",
    "DegenerateParameterError", "DomainError", "InvariantError",
    "ParseError", "PellError", "PellSolution", "Poly", "PrecisionError",
    "SearchResult", "ShortWeierstrass", "SideCondition", "Surd",
    "TateCurve", "TruncationError", "adams_razar_curve", "canonicalize",
    "cf_expand", "check_period_torsion", "classify_nonsquarefree",
    "depressed_form", "family_quartic", "family_row", "is_pellian_over_Z",
    "kubert_params", "minimal_solution", "parse_poly", "period_solution",
    "poly_text", "power_solution", "search_torsion", "tate_to_short",
    "torsion_order",
]
