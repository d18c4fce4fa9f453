from .forms import FormSpec, FORMS, candidate_forms, roots_to_factors
from .small_roots import SmallRootProblem, BoundCheck, integer_bound_check, brute_force_roots
from .coppersmith import coppersmith_bivariate, shift_lattice, target_polynomial, default_modulus, smallest_valid_modulus
from .service import MafpvBruteService, MafpvLatticeService, root_box
