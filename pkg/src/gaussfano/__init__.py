"""Lines on projective varieties: Fano-scheme charts, Gauss maps and normal bundles.

Exact arithmetic over the rationals throughout.
"""

from .errors import GaussFanoError
from .fano import (
    FanoChartIdeal,
    NonReducednessCertificate,
    candidate_witnesses,
    fano_chart_ideal,
    line_on_variety,
    nonreduced_certificate,
    verify_certificate,
)
from .gauss import gauss_constant_on_line, singular_scheme_ideal, tangent_space
from .grassmann import Chart, LineParam, LineRep, chart_param, charts, line_through, localize
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    eliminate,
    ideal_dimension,
    ideal_equal,
    ideal_quotient,
    normal_form,
    radical_member,
)
from .nbundle import conormal_presentation, normal_bundle_splitting, theorem_check
from .p1mod import GradedMatrix, SplittingType, dual_splitting, hilbert_function, kernel_free_basis
from .ring import PolyRing, Polynomial, parse_poly, partial, st_coefficients, substitute_line
from .variety import VarietyFile

__version__ = "0.1.0"
