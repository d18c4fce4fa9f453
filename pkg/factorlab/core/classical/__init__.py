from .trial_division import trial_division, TrialDivisionService
from .fermat import fermat_factor, FermatService
from .pollard_rho import pollard_rho, PollardRhoService
from .pollard_p_minus_1 import pollard_p_minus_1, PollardPMinus1Service
from .curve import AffineCurve
from .ecm import ecm_factor, ecm_on_curve, EcmService
