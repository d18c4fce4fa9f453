import pytest

from factorlab.core.lib.methods import MethodCode
from factorlab.core.lib.result import FactorResult, FactorStatus, FailureReason


def test_factors_ordered_given_larger_factor_first():
    result = FactorResult.found(35, 7, MethodCode.TRIAL)
    assert (result.p, result.q) == (5, 7)
    assert result.is_ok
    assert repr(result) == 'FactorResult(trial: 35 = 5 * 7)'


@pytest.mark.parametrize('p, q', [(1, 35), (35, 1), (5, 6), (None, 7)])
def test_value_error_raised_given_unverified_split(p, q):
    with pytest.raises(ValueError):
        FactorResult(35, MethodCode.TRIAL, FactorStatus.OK, p=p, q=q)


def test_no_factors_given_failure():
    result = FactorResult.failed(17, MethodCode.FERMAT, FailureReason.PRIME_INPUT)
    assert result.factors == ()
    assert result.to_dict() == {
        'n': 17,
        'method': 'fermat',
        'status': 'failed',
        'p': None,
        'q': None,
        'elapsed': 0.0,
        'reason': 'prime input',
    }


def test_timeout_reason_given_timed_out_result():
    result = FactorResult.timed_out(35, MethodCode.ECM).with_elapsed(12.5)
    assert result.status == FactorStatus.TIMEOUT
    assert result.elapsed == 12.5
    assert result.reason == 'time budget exhausted'
