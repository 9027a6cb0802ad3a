"""Fox calculus, Alexander polynomials and the Euler characteristics of
sutured instanton homology that they determine."""

__version__ = "0.1.0"

from .alexander import (
    AlexanderMatrix,
    alexander_matrix,
    alexander_polynomial,
    delta_from_ideal,
    diagram_delta,
    symmetrize_knot_delta,
)
from .eulerchi import (
    GradedChi,
    Mode,
    SharpDecomposition,
    chi_khi_minus,
    chi_knot,
    chi_link,
    chi_sharp_decompose,
    chi_slope,
    chi_toroidal,
    stabilization_shift,
    support_bound_check,
)
from .fpgroup import Presentation, Word, abelianize, fox_derivative, parse_presentation, parse_word
from .laurent import LaurentPoly, canonical_form, exact_divide, gcd, parse_poly
from .linkdiag import LinkDiagram, parse_braid, parse_pd, wirtinger
from .triangle import (
    CobordismInvariants,
    Slope,
    TriangleChi,
    bypass_decompose,
    cobordism_degree,
    ncf,
    ncf_eval,
    surgery_parity,
    triangle_solve,
    unknot_chi,
)
