import os
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional

from .log import LOGGER


DEFAULT_TIMEOUT_MS = 10000
DEFAULT_SEED = 0
DEFAULT_WORKERS = 1

DEFAULT_TRIAL_BOUND = 10**4
DEFAULT_FERMAT_MAX_STEPS = 10**6
DEFAULT_RHO_MAX_ITERS = 2 * 10**6
DEFAULT_RHO_POLYNOMIAL = 'x^2+1'
DEFAULT_RHO_RETRIES = 5
DEFAULT_P_MINUS_1_BOUND = 10**5
DEFAULT_ECM_CURVES = 200
DEFAULT_ECM_STAGE1_BOUND = 2000

DEFAULT_SPEC_BOX = 3
DEFAULT_TRACE_WINDOW = 10**4
DEFAULT_BUCHBERGER_PAIR_LIMIT = 20000

DEFAULT_LATTICE_PARAM = 2
DEFAULT_BRUTE_FORCE_GUARD = 2**32
DEFAULT_LLL_DELTA = Fraction(3, 4)

RHO_POLYNOMIALS = ('x^2+1', 'x^2-1')

TIMEOUT_ENV_VAR = 'FACTORLAB_TIMEOUT_MS'


def ensure_dict(value):
    return value if isinstance(value, dict) else {}


def _positive_int(value, default):
    try:
        number = int(value)
    except (TypeError, ValueError):
        LOGGER.warning(f"Ignoring non-integer setting value: {value!r}")
        return default
    if number <= 0:
        LOGGER.warning(f"Ignoring non-positive setting value: {value!r}")
        return default
    return number


class FactorlabSettings:
    def __init__(self, project_settings: Optional[Dict[str, Any]] = None):
        if not project_settings:
            project_settings = {}

        self.general = self.GeneralSettings(ensure_dict(project_settings.get('general')))
        self.classical = self.ClassicalSettings(ensure_dict(project_settings.get('classical')))
        self.mdpv = self.MdpvSettings(ensure_dict(project_settings.get('mdpv')))
        self.mafpv = self.MafpvSettings(ensure_dict(project_settings.get('mafpv')))
        self.lattice = self.LatticeSettings(ensure_dict(project_settings.get('lattice')))

    def convert_to_dict(self) -> Dict[str, Any]:
        return {
            'general': {
                'timeoutMs': self.general.timeout_ms,
                'seed': self.general.seed,
                'workers': self.general.workers,
            },
            'classical': {
                'trialBound': self.classical.trial_bound,
                'fermatMaxSteps': self.classical.fermat_max_steps,
                'rhoMaxIters': self.classical.rho_max_iters,
                'rhoPolynomial': self.classical.rho_polynomial,
                'rhoRetries': self.classical.rho_retries,
                'pMinus1Bound': self.classical.p_minus_1_bound,
                'ecmCurves': self.classical.ecm_curves,
                'ecmStage1Bound': self.classical.ecm_stage1_bound,
            },
            'mdpv': {
                'specBox': self.mdpv.spec_box,
                'matrixA': self.mdpv.matrix_a,
                'matrixB': self.mdpv.matrix_b,
                'traceWindow': self.mdpv.trace_window,
                'pairLimit': self.mdpv.pair_limit,
            },
            'mafpv': {
                'latticeParam': self.mafpv.lattice_param,
                'modulus': self.mafpv.modulus,
                'bruteForceGuard': self.mafpv.brute_force_guard,
            },
            'lattice': {
                'delta': str(self.lattice.delta),
            },
        }

    class GeneralSettings:
        def __init__(self, project_settings: Dict[str, Any]):
            self.timeout_ms = _positive_int(project_settings.get('timeoutMs', DEFAULT_TIMEOUT_MS), DEFAULT_TIMEOUT_MS)
            self.seed = int(project_settings.get('seed', DEFAULT_SEED))
            self.workers = _positive_int(project_settings.get('workers', DEFAULT_WORKERS), DEFAULT_WORKERS)

    class ClassicalSettings:
        def __init__(self, project_settings: Dict[str, Any]):
            self.trial_bound = _positive_int(project_settings.get('trialBound', DEFAULT_TRIAL_BOUND), DEFAULT_TRIAL_BOUND)
            self.fermat_max_steps = _positive_int(project_settings.get('fermatMaxSteps', DEFAULT_FERMAT_MAX_STEPS), DEFAULT_FERMAT_MAX_STEPS)
            self.rho_max_iters = _positive_int(project_settings.get('rhoMaxIters', DEFAULT_RHO_MAX_ITERS), DEFAULT_RHO_MAX_ITERS)
            self.rho_retries = _positive_int(project_settings.get('rhoRetries', DEFAULT_RHO_RETRIES), DEFAULT_RHO_RETRIES)
            self.p_minus_1_bound = _positive_int(project_settings.get('pMinus1Bound', DEFAULT_P_MINUS_1_BOUND), DEFAULT_P_MINUS_1_BOUND)
            self.ecm_curves = _positive_int(project_settings.get('ecmCurves', DEFAULT_ECM_CURVES), DEFAULT_ECM_CURVES)
            self.ecm_stage1_bound = _positive_int(project_settings.get('ecmStage1Bound', DEFAULT_ECM_STAGE1_BOUND), DEFAULT_ECM_STAGE1_BOUND)

            rho_polynomial = str(project_settings.get('rhoPolynomial', DEFAULT_RHO_POLYNOMIAL)).replace(' ', '')
            if rho_polynomial not in RHO_POLYNOMIALS:
                LOGGER.warning(f"Unknown rho polynomial {rho_polynomial!r}, using {DEFAULT_RHO_POLYNOMIAL}")
                rho_polynomial = DEFAULT_RHO_POLYNOMIAL
            self.rho_polynomial = rho_polynomial

    class MdpvSettings:
        def __init__(self, project_settings: Dict[str, Any]):
            self.spec_box = _positive_int(project_settings.get('specBox', DEFAULT_SPEC_BOX), DEFAULT_SPEC_BOX)
            self.matrix_a = project_settings.get('matrixA')
            self.matrix_b = project_settings.get('matrixB')
            self.trace_window = _positive_int(project_settings.get('traceWindow', DEFAULT_TRACE_WINDOW), DEFAULT_TRACE_WINDOW)
            self.pair_limit = _positive_int(project_settings.get('pairLimit', DEFAULT_BUCHBERGER_PAIR_LIMIT), DEFAULT_BUCHBERGER_PAIR_LIMIT)

    class MafpvSettings:
        def __init__(self, project_settings: Dict[str, Any]):
            self.lattice_param = _positive_int(project_settings.get('latticeParam', DEFAULT_LATTICE_PARAM), DEFAULT_LATTICE_PARAM)
            self.modulus = project_settings.get('modulus')
            self.brute_force_guard = _positive_int(project_settings.get('bruteForceGuard', DEFAULT_BRUTE_FORCE_GUARD), DEFAULT_BRUTE_FORCE_GUARD)

    class LatticeSettings:
        def __init__(self, project_settings: Dict[str, Any]):
            delta = Fraction(project_settings.get('delta', DEFAULT_LLL_DELTA))
            if not Fraction(1, 4) < delta < 1:
                LOGGER.warning(f"LLL delta {delta} outside (1/4, 1), using {DEFAULT_LLL_DELTA}")
                delta = DEFAULT_LLL_DELTA
            self.delta = delta


class SettingsLoader:
    @staticmethod
    def load_from_dict(settings_payload: Dict[str, Any]) -> FactorlabSettings:
        return FactorlabSettings(settings_payload)

    @staticmethod
    def load_from_env(environ: Optional[Mapping[str, str]] = None, base: Optional[Dict[str, Any]] = None) -> FactorlabSettings:
        """
        Defaults, overlaid with FACTORLAB_TIMEOUT_MS when it is a positive integer.
        """
        environ = os.environ if environ is None else environ
        payload = ensure_dict(base).copy()
        raw_timeout = environ.get(TIMEOUT_ENV_VAR)
        if raw_timeout is not None:
            try:
                timeout_ms = int(raw_timeout)
                if timeout_ms <= 0:
                    raise ValueError(raw_timeout)
                general = ensure_dict(payload.get('general')).copy()
                general['timeoutMs'] = timeout_ms
                payload['general'] = general
            except ValueError:
                LOGGER.warning(f"Ignoring malformed {TIMEOUT_ENV_VAR}={raw_timeout!r}")
        return FactorlabSettings(payload)

    @staticmethod
    def load_from_args(args, environ: Optional[Mapping[str, str]] = None) -> FactorlabSettings:
        """
        Environment first, then any CLI flag the user actually passed.
        """
        payload = SettingsLoader.load_from_env(environ).convert_to_dict()
        overrides = {
            ('general', 'timeoutMs'): getattr(args, 'timeout_ms', None),
            ('general', 'seed'): getattr(args, 'seed', None),
            ('general', 'workers'): getattr(args, 'workers', None),
            ('mdpv', 'specBox'): getattr(args, 'spec_box', None),
            ('mdpv', 'matrixA'): getattr(args, 'matrix_a', None),
            ('mdpv', 'matrixB'): getattr(args, 'matrix_b', None),
            ('mafpv', 'latticeParam'): getattr(args, 'lattice_param', None),
            ('mafpv', 'modulus'): getattr(args, 'modulus', None),
            ('classical', 'rhoPolynomial'): getattr(args, 'rho_polynomial', None),
            ('classical', 'ecmCurves'): getattr(args, 'ecm_curves', None),
            ('classical', 'ecmStage1Bound'): getattr(args, 'ecm_bound', None),
        }
        for (section, key), value in overrides.items():
            if value is not None:
                payload[section][key] = value
        return FactorlabSettings(payload)
