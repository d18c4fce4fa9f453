from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..base import ensure_deadline
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError, ResourceBudgetError
from ..lib.log import LOGGER
from ..lib.settings import DEFAULT_BUCHBERGER_PAIR_LIMIT
from .matrix import Matrix2
from .polynomial import (
    DECOMPOSITION_VARIABLES,
    Monomial,
    MultivarPoly,
    monomial_degree,
    monomial_divides,
    monomial_lcm,
    monomial_product,
    monomial_quotient,
    monomials_coprime,
)

Pair = Tuple[int, int]


def poly_reduce(f: MultivarPoly, basis: Sequence[MultivarPoly]) -> MultivarPoly:
    """
    Full multivariate division of f by basis. The remainder has no term
    divisible by a leading monomial of the basis.
    """
    divisors = [(g.leading_monomial(), g.leading_coefficient(), g) for g in basis if not g.is_zero()]
    working = dict(f.terms)
    remainder = {}
    while working:
        monomial = max(working)
        coefficient = working[monomial]
        for leading, leading_coefficient, divisor in divisors:
            if monomial_divides(leading, monomial):
                factor = coefficient / leading_coefficient
                shift = monomial_quotient(monomial, leading)
                for key, value in divisor.terms.items():
                    target = monomial_product(key, shift)
                    total = working.get(target, 0) - factor * value
                    if total:
                        working[target] = total
                    else:
                        working.pop(target, None)
                break
        else:
            remainder[monomial] = coefficient
            del working[monomial]
    return MultivarPoly(remainder, f.gens)


def s_polynomial(f: MultivarPoly, g: MultivarPoly) -> MultivarPoly:
    if f.is_zero() or g.is_zero():
        raise DomainError("S-polynomial of a zero polynomial is undefined")
    f_monomial, f_coefficient = f.leading_term()
    g_monomial, g_coefficient = g.leading_term()
    lcm = monomial_lcm(f_monomial, g_monomial)
    return (
        f.mul_term(monomial_quotient(lcm, f_monomial), 1 / f_coefficient)
        - g.mul_term(monomial_quotient(lcm, g_monomial), 1 / g_coefficient)
    )


def _pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


def _chain_criterion(i: int, j: int, pending: Set[Pair], leading: List[Monomial]) -> bool:
    lcm = monomial_lcm(leading[i], leading[j])
    for k, monomial in enumerate(leading):
        if k in (i, j) or _pair(i, k) in pending or _pair(j, k) in pending:
            continue
        if monomial_divides(monomial, lcm):
            return True
    return False


def reduce_basis(basis: Sequence[MultivarPoly]) -> List[MultivarPoly]:
    """
    Turns a Groebner basis into the reduced one: minimal, monic and
    inter-reduced, sorted by decreasing leading monomial.
    """
    polys = [g for g in basis if not g.is_zero()]
    minimal = []
    for index, g in enumerate(polys):
        monomial = g.leading_monomial()
        redundant = False
        for other_index, h in enumerate(polys):
            if other_index == index:
                continue
            other = h.leading_monomial()
            if monomial_divides(other, monomial) and (other != monomial or other_index < index):
                redundant = True
                break
        if not redundant:
            minimal.append(g)

    reduced = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        reduced.append(poly_reduce(g, others).monic())
    return sorted(reduced, key=lambda poly: poly.leading_monomial(), reverse=True)


def buchberger(
    generators: Sequence[MultivarPoly],
    pair_limit: int = DEFAULT_BUCHBERGER_PAIR_LIMIT,
    deadline: Optional[Deadline] = None,
) -> List[MultivarPoly]:
    """
    Reduced Groebner basis of the ideal spanned by generators under lex order.

    Pairs are picked by the normal strategy (smallest lcm degree first) and
    pruned with the coprime-leading-monomial and chain criteria. More than
    pair_limit S-polynomial reductions raises ResourceBudgetError.
    """
    if not generators:
        raise DomainError("buchberger needs at least one generator")
    if any(g.is_zero() for g in generators):
        raise DomainError("generators must be nonzero")
    deadline = ensure_deadline(deadline)
    gens = generators[0].gens

    basis = [g.monic() for g in generators]
    if any(g.is_constant() for g in basis):
        return [MultivarPoly.constant(1, gens)]
    leading = [g.leading_monomial() for g in basis]
    pending: Set[Pair] = {(i, j) for j in range(len(basis)) for i in range(j)}
    reductions = 0
    skipped = 0

    while pending:
        deadline.check()
        i, j = min(pending, key=lambda pair: (monomial_degree(monomial_lcm(leading[pair[0]], leading[pair[1]])), pair))
        pending.discard((i, j))
        if monomials_coprime(leading[i], leading[j]) or _chain_criterion(i, j, pending, leading):
            skipped += 1
            continue
        if reductions >= pair_limit:
            raise ResourceBudgetError(
                f"Buchberger stopped after {reductions} S-polynomial reductions",
                progress={'basis_size': len(basis), 'reductions': reductions, 'pending_pairs': len(pending) + 1, 'skipped_pairs': skipped},
            )
        reductions += 1
        remainder = poly_reduce(s_polynomial(basis[i], basis[j]), basis)
        if remainder.is_zero():
            continue
        remainder = remainder.monic()
        if remainder.is_constant():
            LOGGER.debug("Groebner basis collapsed to the unit ideal")
            return [MultivarPoly.constant(1, gens)]
        new_index = len(basis)
        basis.append(remainder)
        leading.append(remainder.leading_monomial())
        pending.update((k, new_index) for k in range(new_index))

    LOGGER.debug(f"Buchberger finished: {len(basis)} polynomials, {reductions} reductions, {skipped} pairs skipped")
    return reduce_basis(basis)


def is_groebner(basis: Sequence[MultivarPoly]) -> bool:
    polys = [g for g in basis if not g.is_zero()]
    return all(
        poly_reduce(s_polynomial(polys[i], polys[j]), polys).is_zero()
        for j in range(len(polys))
        for i in range(j)
    )


def is_interreduced(basis: Sequence[MultivarPoly]) -> bool:
    leading = [g.leading_monomial() for g in basis]
    return not any(
        monomial_divides(leading[i], leading[j])
        for i in range(len(leading))
        for j in range(len(leading))
        if i != j
    )


def decomposition_generators(matrix: Matrix2, n: Optional[int] = None) -> List[MultivarPoly]:
    """
    The five generators of the decomposition ideal: the entries of P*Q - N
    and det(P)*det(Q) - n.
    """
    n = matrix.det() if n is None else n
    x1, x2, x3, x4, y1, y2, y3, y4 = MultivarPoly.variables(DECOMPOSITION_VARIABLES)
    return [
        x1 * y1 + x2 * y3 - matrix.a,
        x1 * y2 + x2 * y4 - matrix.b,
        x3 * y1 + x4 * y3 - matrix.c,
        x3 * y2 + x4 * y4 - matrix.d,
        (x1 * x4 - x2 * x3) * (y1 * y4 - y2 * y3) - n,
    ]


def closed_form_basis(a: int, b: int, c: int, d: int, n: int) -> Dict[str, MultivarPoly]:
    """
    Closed-form elements of the decomposition ideal with a, b, c, d, n
    instantiated, keyed by equation number. A number that names two
    equations gets the suffixes 'a' and 'b'.
    """
    x1, x2, x3, x4, y1, y2, y3, y4 = MultivarPoly.variables(DECOMPOSITION_VARIABLES)
    return {
        '1': a * x3 - c * x1 + x1 * x4 * y3 - x2 * x3 * y3,
        '2': b * x3 - d * x1 + x1 * x4 * y4 - x2 * x3 * y4,
        '3a': x1 * y1 + x2 * y3 - a,
        '3b': x1 * y2 + x2 * y4 - b,
        '4': a * a * x3 * y4 - a * b * x3 * y3 - a * c * x1 * y4 + b * c * x1 * y3 + n * x1 * y3,
        '5': a * x3 * y4 - b * x3 * y3 - c * x1 * y4 + d * x1 * y3,
        '6': a * y2 - b * y1 + x2 * y1 * y4 - x2 * y2 * y3,
        '7': a * a * x4 * y2 - a * b * x4 * y1 - a * c * x2 * y2 + b * c * x2 * y1 + n * x2 * y1,
        '8': a * x4 * y2 - b * x4 * y1 - c * x2 * y2 + d * x2 * y1,
        '9': a * a * x4 * y4 - a * b * x4 * y3 - a * c * x2 * y4 - a * n + b * c * x2 * y3 + n * x2 * y3,
        '10': a * x4 * y4 - b * x4 * y3 - c * x2 * y4 + d * x2 * y3 - n,
        '11a': x3 * y1 + x4 * y3 - c,
        '11b': x3 * y2 + x4 * y4 - d,
        '12': c * y2 - d * y1 + x4 * y1 * y4 - x4 * y2 * y3,
        '13': MultivarPoly.constant(a * d - b * c - n, DECOMPOSITION_VARIABLES),
    }
