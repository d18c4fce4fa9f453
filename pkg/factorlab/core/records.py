import json
from typing import Any, Dict, List

from .lib.methods import MethodCode
from .lib.result import FactorResult, FactorStatus


class BenchRecord:
    """
    One (modulus, method) outcome as written by the CLI. Integers travel as
    decimal strings.
    """

    def __init__(self, n: str, method: str, status: str, factors: List[str], elapsed_ms: int):
        if status == FactorStatus.OK:
            product = 1
            for factor in factors:
                product *= int(factor)
            if not factors or product != int(n):
                raise ValueError(f"factors {factors} do not multiply to {n}")
        if elapsed_ms < 0:
            raise ValueError(f"elapsed time must be nonnegative, got {elapsed_ms}")
        self.n = n
        self.method = method
        self.status = status
        self.factors = factors
        self.elapsed_ms = elapsed_ms

    @classmethod
    def from_result(cls, result: FactorResult, method: MethodCode) -> 'BenchRecord':
        return cls(
            n=str(result.n),
            method=method.value,
            status=result.status,
            factors=[str(factor) for factor in result.factors],
            elapsed_ms=max(0, round(result.elapsed)),
        )

    @property
    def is_ok(self) -> bool:
        return self.status == FactorStatus.OK

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'method': self.method,
            'status': self.status,
            'factors': self.factors,
            'elapsed_ms': self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> 'BenchRecord':
        return cls(
            n=payload['n'],
            method=payload['method'],
            status=payload['status'],
            factors=list(payload['factors']),
            elapsed_ms=int(payload['elapsed_ms']),
        )

    @classmethod
    def from_json(cls, line: str) -> 'BenchRecord':
        return cls.from_dict(json.loads(line))

    def to_text(self) -> str:
        if self.is_ok:
            return f"{self.n} = {' * '.join(self.factors)}  [{self.method}, {self.elapsed_ms} ms]"
        return f"{self.n}: {self.status}  [{self.method}, {self.elapsed_ms} ms]"

    def __eq__(self, other):
        return isinstance(other, BenchRecord) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return f'BenchRecord({self.to_dict()})'
