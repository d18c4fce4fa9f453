from .matrix import Matrix2, matrix_from_modulus, companion_matrix
from .polynomial import DECOMPOSITION_VARIABLES, Monomial, MultivarPoly
from .groebner import (
    poly_reduce,
    s_polynomial,
    buchberger,
    reduce_basis,
    is_groebner,
    is_interreduced,
    decomposition_generators,
    closed_form_basis,
)
from .decomposition import DecompositionSolution, solve_decomposition, enumerate_specializations, groebner_identity_check
from .diagonalization import diagonalization_factor, trace_sweep
from .service import MdpvService
