"""Exact CR geometry of real-form orbits in complex flag manifolds.

The package decides, from purely combinatorial input (a simple type, a
parabolic subalgebra given by simple roots, and a root-lattice
involution), whether the corresponding orbit is open, totally real, or
genuinely CR; its order of finite nondegeneracy or a holomorphic
degeneracy witness; and its minimality.  A Chevalley-basis realization
with exact integer structure constants re-derives the same answers by
rational linear algebra and is used as a cross-check.
"""

from .cralgebra import (
    DEGENERATE,
    ORBIT_CR,
    ORBIT_OPEN,
    ORBIT_TOTALLY_REAL,
    CRAlgebraData,
    FiltrationResult,
    GeometryReport,
    analyze,
    check_bracket_closed,
    filtration,
    geometry,
    holomorphic_degeneracy_witness,
    is_minimal,
    nondegeneracy_order,
)
from .chevalley import (
    ChevalleyAlgebra,
    Subspace,
    build_chevalley,
    jacobi_check,
    levi_tensor_kernel,
    oracle_filtration,
    oracle_minimality,
    subspace_from_rootset,
)
from .involution import (
    InvolutionData,
    InvolutionError,
    cayley_update,
    enumerate_cayley_involutions,
    identity_involution,
    involution_from_matrix,
    strongly_orthogonal,
)
from .parabolic import (
    NotMaximal,
    ParabolicData,
    c_of_q,
    gradation,
    has_nonresonant_field,
    parabolic_from_subset,
)
from .roots import (
    Root,
    RootSystem,
    UnknownRootSystem,
    add_roots,
    build_root_system,
    format_root,
    highest_root,
    kappa,
    pairing,
    parse_root,
)
from .survey import SurveyRow, TheoremViolation, highest_coefficient_table, run_survey

__all__ = [name for name in dir() if not name.startswith("_")]
