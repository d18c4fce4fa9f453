import random

import pytest
from sympy import nextprime

from factorlab.core.arith import SixKForm, sixk_form
from factorlab.core.lib.exceptions import DomainError, SmallPrimeError, UnsupportedInputError
from tests.reference_values import SIXK_EXAMPLES


@pytest.mark.parametrize('prime, x, sign', SIXK_EXAMPLES)
def test_printed_form_recovered_given_large_primes(prime, x, sign):
    form = sixk_form(prime)
    assert (form.x, form.sign) == (x, sign)
    assert form.reconstruct() == prime


def test_small_forms_given_5_and_7():
    assert sixk_form(5) == SixKForm(1, -1)
    assert sixk_form(7) == SixKForm(1, 1)


def test_round_trip_given_random_primes():
    rng = random.Random(11)
    for _ in range(300):
        p = int(nextprime(rng.randrange(5, 1 << 64)))
        assert sixk_form(p).reconstruct() == p


def test_composite_coprime_to_6_decomposed_given_25():
    assert sixk_form(25) == SixKForm(4, 1)


@pytest.mark.parametrize('prime', [2, 3])
def test_small_prime_error_raised_given_2_or_3(prime):
    with pytest.raises(SmallPrimeError) as error:
        sixk_form(prime)
    assert error.value.reason == 'small prime'


@pytest.mark.parametrize('value', [4, 9, 10**20])
def test_unsupported_input_raised_when_divisible_by_2_or_3(value):
    with pytest.raises(UnsupportedInputError) as error:
        sixk_form(value)
    assert not isinstance(error.value, SmallPrimeError)


def test_domain_error_raised_given_bad_sign():
    with pytest.raises(DomainError):
        SixKForm(1, 0)
