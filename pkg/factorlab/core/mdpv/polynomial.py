import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from ..lib.exceptions import DomainError

DECOMPOSITION_VARIABLES = ('x1', 'x2', 'x3', 'x4', 'y1', 'y2', 'y3', 'y4')

# Exponent vector over the ring's variables. Python tuple comparison is
# exactly lex order with the first variable largest.
Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]

_TERM_PATTERN = re.compile(r'([+-]?)([^+-]+)')
_POWER_PATTERN = re.compile(r'^([A-Za-z_]\w*)(?:\^(\d+))?$')


def monomial_degree(monomial: Monomial) -> int:
    return sum(monomial)


def monomial_divides(divisor: Monomial, monomial: Monomial) -> bool:
    return all(d <= m for d, m in zip(divisor, monomial))


def monomial_lcm(first: Monomial, second: Monomial) -> Monomial:
    return tuple(max(f, s) for f, s in zip(first, second))


def monomial_quotient(monomial: Monomial, divisor: Monomial) -> Monomial:
    return tuple(m - d for m, d in zip(monomial, divisor))


def monomial_product(first: Monomial, second: Monomial) -> Monomial:
    return tuple(f + s for f, s in zip(first, second))


def monomials_coprime(first: Monomial, second: Monomial) -> bool:
    return all(f == 0 or s == 0 for f, s in zip(first, second))


def _format_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


class MultivarPoly:
    """
    Sparse polynomial with exact rational coefficients over a fixed list of
    variables, ordered lexicographically (earlier variables are larger).

    Instances are treated as immutable; every operation returns a new
    polynomial and zero coefficients are never stored.
    """

    __slots__ = ('gens', 'terms')

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None, gens: Sequence[str] = DECOMPOSITION_VARIABLES):
        self.gens = tuple(gens)
        self.terms: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            if len(monomial) != len(self.gens):
                raise DomainError(f"monomial {monomial} does not match variables {self.gens}")
            coefficient = Fraction(coefficient)
            if coefficient:
                self.terms[tuple(monomial)] = coefficient

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], gens: Tuple[str, ...]) -> 'MultivarPoly':
        poly = cls.__new__(cls)
        poly.gens = gens
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, gens: Sequence[str] = DECOMPOSITION_VARIABLES) -> 'MultivarPoly':
        return cls({}, gens)

    @classmethod
    def constant(cls, value: Scalar, gens: Sequence[str] = DECOMPOSITION_VARIABLES) -> 'MultivarPoly':
        return cls({(0,) * len(gens): value}, gens)

    @classmethod
    def variable(cls, name: str, gens: Sequence[str] = DECOMPOSITION_VARIABLES) -> 'MultivarPoly':
        gens = tuple(gens)
        if name not in gens:
            raise DomainError(f"unknown variable {name!r}, expected one of {gens}")
        exponents = [0] * len(gens)
        exponents[gens.index(name)] = 1
        return cls({tuple(exponents): 1}, gens)

    @classmethod
    def variables(cls, gens: Sequence[str] = DECOMPOSITION_VARIABLES) -> Tuple['MultivarPoly', ...]:
        return tuple(cls.variable(name, gens) for name in gens)

    @classmethod
    def from_text(cls, text: str, gens: Sequence[str] = DECOMPOSITION_VARIABLES) -> 'MultivarPoly':
        """
        Parses the canonical text form, e.g. '3/2*x1^2*y1 - x2 + 5'.
        """
        gens = tuple(gens)
        compact = text.replace(' ', '')
        if compact in ('', '0'):
            return cls.zero(gens)
        terms: Dict[Monomial, Fraction] = {}
        position = 0
        for match in _TERM_PATTERN.finditer(compact):
            if match.start() != position:
                raise DomainError(f"cannot parse polynomial {text!r}")
            position = match.end()
            coefficient = Fraction(-1 if match.group(1) == '-' else 1)
            exponents = [0] * len(gens)
            for factor in match.group(2).split('*'):
                if factor and (factor[0].isdigit()):
                    coefficient *= Fraction(factor)
                    continue
                power = _POWER_PATTERN.match(factor)
                if power is None or power.group(1) not in gens:
                    raise DomainError(f"cannot parse factor {factor!r} of {text!r}")
                exponents[gens.index(power.group(1))] += int(power.group(2) or 1)
            key = tuple(exponents)
            terms[key] = terms.get(key, Fraction(0)) + coefficient
        if position != len(compact):
            raise DomainError(f"cannot parse polynomial {text!r}")
        return cls(terms, gens)

    def _coerce(self, other) -> 'MultivarPoly':
        if isinstance(other, MultivarPoly):
            if other.gens != self.gens:
                raise DomainError(f"polynomials over {self.gens} and {other.gens} cannot be combined")
            return other
        if isinstance(other, (int, Fraction)):
            return MultivarPoly.constant(other, self.gens)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(monomial) for monomial in self.terms)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise DomainError("the zero polynomial has no leading monomial")
        return max(self.terms)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        monomial = self.leading_monomial()
        return monomial, self.terms[monomial]

    def total_degree(self) -> int:
        return max((monomial_degree(monomial) for monomial in self.terms), default=0)

    def mul_term(self, monomial: Monomial, coefficient: Scalar) -> 'MultivarPoly':
        coefficient = Fraction(coefficient)
        if not coefficient:
            return MultivarPoly.zero(self.gens)
        return MultivarPoly._raw(
            {monomial_product(key, monomial): value * coefficient for key, value in self.terms.items()},
            self.gens,
        )

    def monic(self) -> 'MultivarPoly':
        if not self.terms:
            return self
        inverse = 1 / self.leading_coefficient()
        return MultivarPoly._raw({key: value * inverse for key, value in self.terms.items()}, self.gens)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for key, value in other.terms.items():
            total = terms.get(key, 0) + value
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return MultivarPoly._raw(terms, self.gens)

    __radd__ = __add__

    def __neg__(self):
        return MultivarPoly._raw({key: -value for key, value in self.terms.items()}, self.gens)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product = MultivarPoly.zero(self.gens)
        for monomial, coefficient in other.terms.items():
            product = product + self.mul_term(monomial, coefficient)
        return product

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError("negative powers are not polynomials")
        result = MultivarPoly.constant(1, self.gens)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultivarPoly.constant(other, self.gens)
        if not isinstance(other, MultivarPoly):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def substitute(self, assignment: Mapping[str, Scalar]) -> 'MultivarPoly':
        """
        Replaces the named variables by constants; the variable list is kept.
        """
        indices = {self.gens.index(name): Fraction(value) for name, value in assignment.items() if name in self.gens}
        terms: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in self.terms.items():
            exponents = list(monomial)
            for index, value in indices.items():
                if exponents[index]:
                    coefficient *= value ** exponents[index]
                    exponents[index] = 0
            key = tuple(exponents)
            terms[key] = terms.get(key, Fraction(0)) + coefficient
        return MultivarPoly(terms, self.gens)

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        missing = [name for name in self.gens if name not in assignment]
        if missing:
            raise DomainError(f"no value given for {', '.join(missing)}")
        reduced = self.substitute(assignment)
        return reduced.terms.get((0,) * len(self.gens), Fraction(0))

    def _monomial_text(self, monomial: Monomial) -> str:
        factors = []
        for name, exponent in zip(self.gens, monomial):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f'{name}^{exponent}')
        return '*'.join(factors)

    def to_text(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for monomial in sorted(self.terms, reverse=True):
            coefficient = self.terms[monomial]
            sign = '-' if coefficient < 0 else '+'
            magnitude = abs(coefficient)
            body = self._monomial_text(monomial)
            if not body:
                body = _format_coefficient(magnitude)
            elif magnitude != 1:
                body = f'{_format_coefficient(magnitude)}*{body}'
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = f'-{first_body}' if first_sign == '-' else first_body
        for sign, body in parts[1:]:
            text += f' {sign} {body}'
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f'MultivarPoly({self.to_text()!r})'


def polys_from_text(texts: Iterable[str], gens: Sequence[str] = DECOMPOSITION_VARIABLES):
    return [MultivarPoly.from_text(text, gens) for text in texts]
