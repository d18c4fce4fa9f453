import logging
from argparse import Namespace
from fractions import Fraction

import pytest

from factorlab.core.lib.settings import (
    DEFAULT_LLL_DELTA,
    DEFAULT_RHO_POLYNOMIAL,
    DEFAULT_SPEC_BOX,
    DEFAULT_TIMEOUT_MS,
    FactorlabSettings,
    SettingsLoader,
)


def test_defaults_given_empty_payload():
    settings = FactorlabSettings()
    assert settings.general.timeout_ms == DEFAULT_TIMEOUT_MS
    assert settings.general.workers == 1
    assert settings.mdpv.spec_box == DEFAULT_SPEC_BOX
    assert settings.mafpv.modulus is None
    assert settings.lattice.delta == DEFAULT_LLL_DELTA


def test_sections_read_given_camel_case_payload():
    settings = SettingsLoader.load_from_dict({
        'general': {'timeoutMs': 500, 'seed': 7},
        'classical': {'rhoPolynomial': 'x^2 - 1', 'ecmCurves': 12},
        'mdpv': {'specBox': 1, 'matrixA': 6, 'matrixB': 1},
        'mafpv': {'latticeParam': 3, 'modulus': 1009},
        'lattice': {'delta': '99/100'},
    })
    assert (settings.general.timeout_ms, settings.general.seed) == (500, 7)
    assert settings.classical.rho_polynomial == 'x^2-1'
    assert settings.classical.ecm_curves == 12
    assert (settings.mdpv.spec_box, settings.mdpv.matrix_a, settings.mdpv.matrix_b) == (1, 6, 1)
    assert (settings.mafpv.lattice_param, settings.mafpv.modulus) == (3, 1009)
    assert settings.lattice.delta == Fraction(99, 100)


@pytest.mark.parametrize('payload', [
    {'general': {'timeoutMs': -5}},
    {'general': {'workers': 'many'}},
    {'mdpv': {'specBox': 0}},
])
def test_default_kept_and_warning_logged_given_invalid_value(payload, caplog):
    with caplog.at_level(logging.WARNING, logger='factorlab'):
        settings = FactorlabSettings(payload)
    assert settings.general.timeout_ms == DEFAULT_TIMEOUT_MS
    assert settings.general.workers == 1
    assert settings.mdpv.spec_box == DEFAULT_SPEC_BOX
    assert 'Ignoring' in caplog.text


def test_default_polynomial_used_given_unknown_rho_polynomial(caplog):
    settings = FactorlabSettings({'classical': {'rhoPolynomial': 'x^3+1'}})
    assert settings.classical.rho_polynomial == DEFAULT_RHO_POLYNOMIAL
    assert 'Unknown rho polynomial' in caplog.text


@pytest.mark.parametrize('delta', ['1/4', '1', '2'])
def test_default_delta_used_given_delta_outside_interval(delta):
    assert FactorlabSettings({'lattice': {'delta': delta}}).lattice.delta == DEFAULT_LLL_DELTA


def test_timeout_read_from_environment():
    settings = SettingsLoader.load_from_env({'FACTORLAB_TIMEOUT_MS': '1234'})
    assert settings.general.timeout_ms == 1234


@pytest.mark.parametrize('raw', ['soon', '0', '-10'])
def test_default_timeout_kept_given_malformed_environment(raw, caplog):
    settings = SettingsLoader.load_from_env({'FACTORLAB_TIMEOUT_MS': raw})
    assert settings.general.timeout_ms == DEFAULT_TIMEOUT_MS
    assert 'FACTORLAB_TIMEOUT_MS' in caplog.text


def test_flags_override_environment_given_cli_args():
    args = Namespace(timeout_ms=50, seed=None, workers=2, spec_box=None, modulus=1009, ecm_bound=300)
    settings = SettingsLoader.load_from_args(args, {'FACTORLAB_TIMEOUT_MS': '9000'})
    assert settings.general.timeout_ms == 50
    assert settings.general.workers == 2
    assert settings.mdpv.spec_box == DEFAULT_SPEC_BOX
    assert settings.mafpv.modulus == 1009
    assert settings.classical.ecm_stage1_bound == 300


def test_environment_used_when_flag_absent():
    settings = SettingsLoader.load_from_args(Namespace(), {'FACTORLAB_TIMEOUT_MS': '9000'})
    assert settings.general.timeout_ms == 9000


def test_dict_form_reloads_to_same_values():
    settings = FactorlabSettings({'mafpv': {'modulus': 149}, 'lattice': {'delta': '2/3'}})
    reloaded = FactorlabSettings(settings.convert_to_dict())
    assert reloaded.convert_to_dict() == settings.convert_to_dict()
