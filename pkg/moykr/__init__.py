"""
moykr - exact MOY calculus and Khovanov-Rozansky homology for 2-strand braid links

An exact symbolic engine for link invariants of closures of braids on at most two strands.

Features:
- Laurent polynomial arithmetic with exact rational coefficients and exact division
- Level-n Jones polynomials through the MOY ladder calculus, with closed forms for torus links
- HOMFLY-PT values in the parameters alpha, zeta and their Jones specializations
- A bracket-ring comparison of closures with the Khovanov-Rozansky Poincaré polynomial
- Formal complexes of width-2 MOY atoms: composition, splitting and Gaussian elimination
- Closure to graded vector spaces and exact bigraded homology
- A verification service and command-line interface
"""

from .config import Command, Config, OutputFormat, PivotOrder, RunConfig
from .core.closure_homology import (
    close_complex,
    homology,
    kr_poincare_from_complex,
    kr_poincare_torus2,
    poincare,
)
from .core.diagram import BraidWord, DiagramWord, parse_braid, render_braid
from .core.homfly import homfly, homfly_to_jones, homfly_torus2
from .core.kr import KRComplex, compose, gaussian_eliminate, torus2_complex, zigzag_complex
from .core.moy_eval import evaluate_closed, jones, jones_torus2
from .core.ring import LaurentPoly, LocalizedScalar, q_integer
from .core.verify import Verifier
from .exceptions import (
    ComplexInvariantError, ConfigurationError, MoyKrError, NotDivisibleError, ParseError,
    StuckEvaluationError, UndefinedCompositeError, UnsplittableEntryError,
    UnsupportedMorphismError, UnsupportedWidthError, UsageError, ValidationError,
    VerificationError
)
from .models.results import (
    CommandOutput, HomologyEntry, KRResult, TableRow, VerificationGroup, VerificationReport
)

# Package metadata
__version__ = "0.1.0"
__license__ = "MIT"

__all__ = [
    "BraidWord",
    "Command",
    "CommandOutput",
    "ComplexInvariantError",
    "Config",
    "ConfigurationError",
    "DiagramWord",
    "HomologyEntry",
    "KRComplex",
    "KRResult",
    "LaurentPoly",
    "LocalizedScalar",
    "MoyKrError",
    "NotDivisibleError",
    "OutputFormat",
    "ParseError",
    "PivotOrder",
    "RunConfig",
    "StuckEvaluationError",
    "TableRow",
    "UndefinedCompositeError",
    "UnsplittableEntryError",
    "UnsupportedMorphismError",
    "UnsupportedWidthError",
    "UsageError",
    "ValidationError",
    "VerificationError",
    "VerificationGroup",
    "VerificationReport",
    "Verifier",
    "close_complex",
    "compose",
    "evaluate_closed",
    "gaussian_eliminate",
    "homfly",
    "homfly_to_jones",
    "homfly_torus2",
    "homology",
    "jones",
    "jones_torus2",
    "kr_poincare_from_complex",
    "kr_poincare_torus2",
    "parse_braid",
    "poincare",
    "q_integer",
    "render_braid",
    "torus2_complex",
    "zigzag_complex",
]
