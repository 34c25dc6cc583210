"""Exact deformation quantization of regular coadjoint orbits.

The enveloping algebra over C[h] is rewritten to its PBW basis, quotiented by
the ideal generated by quantum Casimirs minus h-dependent constants, and the
resulting star product on polynomial functions of the orbit is computed and
verified with exact Gaussian-rational arithmetic.
"""

from .scalar import GaussRat, HPoly, NotDivisibleError
from .commpoly import (
    CommPoly,
    IdealBasis,
    MonomialOrder,
    groebner,
    is_invariant,
    jacobian_rank,
    normal_form,
    poisson_bracket,
    standard_monomials,
)
from .liealg import (
    BasisChange,
    InconsistentRegularityError,
    LieAlgebra,
    SingularFormError,
    adjoint_matrix,
    change_basis,
    is_regular,
    jacobi_check,
    killing_form,
    load_algebra,
    quadratic_casimir,
    sheet_swap,
    sl2,
    sl2_to_su2,
    so21,
    su2,
    su2_to_so21,
)
from .uea import (
    NotAutomorphismError,
    UElement,
    apply_automorphism,
    commutator,
    evaluate_h,
    is_central,
    multiply,
    multiply_at,
    normal_form_word,
    ordered_lift,
    project_classical,
    symmetrize,
)
from .orbit import (
    CasimirNotFixedError,
    InconsistentConstantsError,
    NonTerminationError,
    NotCentralError,
    NotInvariantError,
    NotInvolutionError,
    OrbitAlgebra,
    OrbitElement,
    OrbitSpec,
    build_orbit_algebra,
    invariant_subalgebra_demo,
    quantize,
    reduce_mod_ideal,
    relations_table,
    star,
    verify_deformation,
    verify_so21_table,
)
from . import tdo

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
