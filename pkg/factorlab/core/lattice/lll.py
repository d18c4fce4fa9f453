from fractions import Fraction
from math import floor
from typing import Optional, Sequence, Union

from ..base import ensure_deadline
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError
from ..lib.settings import DEFAULT_LLL_DELTA
from .basis import LatticeBasis, dot

HALF = Fraction(1, 2)


def _as_basis(basis: Union[LatticeBasis, Sequence[Sequence[int]]]) -> LatticeBasis:
    return basis.copy() if isinstance(basis, LatticeBasis) else LatticeBasis(basis)


def _check_delta(delta: Fraction):
    if not Fraction(1, 4) < delta < 1:
        raise DomainError(f"LLL delta must lie in (1/4, 1), got {delta}")


def lll_reduce(
    basis: Union[LatticeBasis, Sequence[Sequence[int]]],
    delta: Fraction = DEFAULT_LLL_DELTA,
    deadline: Optional[Deadline] = None,
) -> LatticeBasis:
    """
    Textbook LLL with exact rational Gram-Schmidt data, updated in place on
    size reduction and swaps instead of being recomputed.
    """
    delta = Fraction(delta)
    _check_delta(delta)
    deadline = ensure_deadline(deadline)
    lattice = _as_basis(basis)
    b = lattice.rows
    m = len(b)

    mu = [[Fraction(0)] * m for _ in range(m)]
    norms = [Fraction(0)] * m
    norms[0] = Fraction(dot(b[0], b[0]))
    if norms[0] == 0:
        raise DomainError("lattice rows are linearly dependent (row 0)")

    def size_reduce(k: int, l: int):
        if abs(mu[k][l]) > HALF:
            q = floor(mu[k][l] + HALF)
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            mu[k][l] -= q
            for i in range(l):
                mu[k][i] -= q * mu[l][i]

    def swap(k: int, k_max: int):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m_k = mu[k][k - 1]
        new_norm = norms[k] + m_k * m_k * norms[k - 1]
        mu[k][k - 1] = m_k * norms[k - 1] / new_norm
        norms[k] = norms[k - 1] * norms[k] / new_norm
        norms[k - 1] = new_norm
        for i in range(k + 1, k_max + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m_k * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    k, k_max = 1, 0
    while k < m:
        deadline.check()
        if k > k_max:
            k_max = k
            for j in range(k):
                projection = Fraction(dot(b[k], b[j]))
                for i in range(j):
                    projection -= mu[j][i] * mu[k][i] * norms[i]
                mu[k][j] = projection / norms[j]
            norm = Fraction(dot(b[k], b[k]))
            for j in range(k):
                norm -= mu[k][j] * mu[k][j] * norms[j]
            if norm == 0:
                raise DomainError(f"lattice rows are linearly dependent (row {k})")
            norms[k] = norm

        size_reduce(k, k - 1)
        if norms[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]:
            swap(k, k_max)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1

    return LatticeBasis(b)


def is_reduced(basis: Union[LatticeBasis, Sequence[Sequence[int]]], delta: Fraction = DEFAULT_LLL_DELTA) -> bool:
    """
    Size reduction (|mu_ij| <= 1/2) and the Lovasz condition, checked exactly.
    """
    delta = Fraction(delta)
    _check_delta(delta)
    mu, norms = _as_basis(basis).gram_schmidt()
    for i in range(len(norms)):
        if any(abs(mu[i][j]) > HALF for j in range(i)):
            return False
        if i > 0 and norms[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1]:
            return False
    return True
