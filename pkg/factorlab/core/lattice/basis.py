from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from ..lib.exceptions import DomainError


def dot(first: Sequence[int], second: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(first, second))


class LatticeBasis:
    """
    Ordered integer row vectors spanning a lattice (m rows of dimension d, m <= d).
    """

    def __init__(self, rows: Iterable[Sequence[int]]):
        self.rows: List[List[int]] = [[int(value) for value in row] for row in rows]
        if not self.rows:
            raise DomainError("a lattice basis needs at least one row")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise DomainError("lattice rows must all have the same dimension")
        if len(self.rows) > width:
            raise DomainError(f"{len(self.rows)} rows of dimension {width} cannot be independent")

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def dimension(self) -> int:
        return len(self.rows[0])

    def copy(self) -> 'LatticeBasis':
        return LatticeBasis(self.rows)

    def gram_schmidt(self) -> Tuple[List[List[Fraction]], List[Fraction]]:
        """
        Exact Gram-Schmidt data: mu[i][j] for j < i and the squared norms
        B[i] of the orthogonalized rows. Raises DomainError on dependent rows.
        """
        m = self.rank
        mu = [[Fraction(0)] * m for _ in range(m)]
        norms: List[Fraction] = []
        for i, row in enumerate(self.rows):
            for j in range(i):
                projection = Fraction(dot(row, self.rows[j]))
                for k in range(j):
                    projection -= mu[j][k] * mu[i][k] * norms[k]
                mu[i][j] = projection / norms[j]
            norm = Fraction(dot(row, row))
            for j in range(i):
                norm -= mu[i][j] * mu[i][j] * norms[j]
            if norm == 0:
                raise DomainError(f"lattice rows are linearly dependent (row {i})")
            norms.append(norm)
        return mu, norms

    def gram_determinant(self) -> int:
        _, norms = self.gram_schmidt()
        determinant = Fraction(1)
        for norm in norms:
            determinant *= norm
        assert determinant.denominator == 1
        return determinant.numerator

    def squared_norms(self) -> List[int]:
        return [dot(row, row) for row in self.rows]

    def to_text(self) -> str:
        return '\n'.join(' '.join(str(value) for value in row) for row in self.rows)

    @classmethod
    def from_text(cls, text: str) -> 'LatticeBasis':
        rows = [[int(token) for token in line.split()] for line in text.splitlines() if line.strip()]
        return cls(rows)

    def __eq__(self, other):
        return isinstance(other, LatticeBasis) and self.rows == other.rows

    def __repr__(self):
        return f'LatticeBasis({self.rank}x{self.dimension})'
