from bisect import bisect_right

import pytest
from sympy import primerange

from factorlab.core.lib.exceptions import DeadlineExceeded, DomainError, ResourceBudgetError
from factorlab.core.mafpv import (
    FormSpec,
    SmallRootProblem,
    brute_force_roots,
    candidate_forms,
    integer_bound_check,
    root_box,
    roots_to_factors,
)
from tests.corpus import semiprime_corpus


def sign(prime: int) -> int:
    return 1 if prime % 6 == 1 else -1


@pytest.mark.parametrize('form, n, bound, roots', [
    (FormSpec(1, -1), 35, 10, [(1, 1)]),
    (FormSpec(-1, 1), 35, 10, [(1, 1)]),
    (FormSpec(1, -1), 899, 8, [(5, 5)]),
    (FormSpec(1, 1), 899, 8, []),
])
def test_roots_listed_given_small_box(form, n, bound, roots):
    assert brute_force_roots(SmallRootProblem(form, n, bound, bound)) == roots


def test_both_orderings_found_given_square_box():
    problem = SmallRootProblem(FormSpec(-1, -1), 25651, 64, 64)
    roots = brute_force_roots(problem)
    assert roots == [(19, 38), (38, 19)]
    assert all(problem.is_root(x, y) for x, y in roots)
    assert {p for root in roots for p in roots_to_factors(problem.form, *root)} == {113, 227}


def test_resource_budget_error_raised_when_box_exceeds_guard():
    problem = SmallRootProblem(FormSpec(1, 1), 10**12 + 1, 1000, 1000)
    with pytest.raises(ResourceBudgetError) as error:
        brute_force_roots(problem, guard=1000)
    assert error.value.progress['guard'] == 1000


def test_timeout_raised_given_expired_deadline(expired_deadline):
    problem = SmallRootProblem(FormSpec(1, 1), 10**12 + 1, 1 << 15, 1)
    with pytest.raises(DeadlineExceeded):
        brute_force_roots(problem, deadline=expired_deadline)


@pytest.mark.parametrize('X, Y, M', [(0, 5, None), (5, -1, None), (5, 5, 35), (5, 5, 10)])
def test_domain_error_raised_given_invalid_problem(X, Y, M):
    with pytest.raises(DomainError):
        SmallRootProblem(FormSpec(1, -1), 35, X, Y, M)


@pytest.mark.parametrize('bound, W, holds', [(1, 36, True), (3, 324, False), (10, 3600, False)])
def test_integer_bound_given_square_box(bound, W, holds):
    check = integer_bound_check(SmallRootProblem(FormSpec(1, 1), 35, bound, bound))
    assert check.W == W
    assert bool(check) is holds
    assert (check.gap > 0) is holds
    assert check.xy_cubed == bound ** 6


@pytest.mark.parametrize('y, x', [(1, 1), (2, None), (0, None)])
def test_x_solved_given_fixed_y(y, x):
    assert SmallRootProblem(FormSpec(1, -1), 35, 10, 10).solve_for_x(y) == x


@pytest.mark.slow
def test_planted_root_found_given_20_bit_semiprimes():
    for n, p, q in semiprime_corpus(seed=6, count=20, bits=20):
        form = FormSpec(sign(p), sign(q))
        root = ((p - form.s1) // 6, (q - form.s2) // 6)
        problem = SmallRootProblem(form, n, (p + 1) // 6 + 1, (q + 1) // 6 + 1)
        assert root in brute_force_roots(problem, guard=problem.X * problem.Y)


def semiprimes_up_to(limit: int):
    primes = list(primerange(5, limit // 5 + 1))
    for index, p in enumerate(primes):
        if p * p > limit:
            break
        for q in primes[index:bisect_right(primes, limit // p)]:
            yield p * q, p, q


@pytest.mark.slow
def test_every_semiprime_recovered_given_n_up_to_10_6():
    checked = 0
    for n, p, q in semiprimes_up_to(10**6):
        X, Y = root_box(n)
        recovered = set()
        for form in candidate_forms(n):
            for root in brute_force_roots(SmallRootProblem(form, n, X, Y)):
                recovered.add(tuple(sorted(roots_to_factors(form, *root))))
        assert (p, q) in recovered, n
        checked += 1
    assert checked > 100000
