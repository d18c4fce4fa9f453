from typing import Dict
from enum import Enum


class MethodCode(Enum):
    # Special purpose methods
    RHO = "rho"
    FERMAT = "fermat"
    P_MINUS_1 = "p-1"
    ECM = "ecm"

    # General purpose methods
    TRIAL = "trial"

    # New perspectives
    TRIANGULAR = "triangular"
    MDPV = "mdpv"
    MAFPV_BRUTE = "mafpv-brute"
    MAFPV_LATTICE = "mafpv-lattice"

    # Strategy
    AUTO = "auto"


class MethodCategory:
    SPECIAL = 'special'
    GENERAL = 'general'
    PERSPECTIVE = 'perspective'
    STRATEGY = 'strategy'


class Method:
    def __init__(self, code: MethodCode, name: str, category: str, description: str, complexity: str = None):
        self.code = code
        self.name = name
        self.category = category
        self.description = description
        self.complexity = complexity


METHODS: Dict[MethodCode, Method] = {
    # Special purpose methods
    MethodCode.RHO: Method(
        code=MethodCode.RHO,
        name="POLLARD_RHO",
        category=MethodCategory.SPECIAL,
        description="Floyd cycle detection on x -> x^2 + 1 mod n with a gcd at every step.",
        complexity="O(sqrt(p))"
    ),
    MethodCode.FERMAT: Method(
        code=MethodCode.FERMAT,
        name="FERMAT",
        category=MethodCategory.SPECIAL,
        description="Writes an odd n as a difference of two squares a^2 - b^2.",
        complexity="O(n^(1/4))"
    ),
    MethodCode.P_MINUS_1: Method(
        code=MethodCode.P_MINUS_1,
        name="POLLARD_P_MINUS_1",
        category=MethodCategory.SPECIAL,
        description="Finds p when p - 1 is smooth over the bound, with a gcd after every prime."
    ),
    MethodCode.ECM: Method(
        code=MethodCode.ECM,
        name="LENSTRA_ECM",
        category=MethodCategory.SPECIAL,
        description="Affine short Weierstrass curves mod n; a slope denominator that cannot be inverted reveals a factor.",
        complexity="exp((sqrt(2) + o(1)) sqrt(log p log log p))"
    ),

    # General purpose methods
    MethodCode.TRIAL: Method(
        code=MethodCode.TRIAL,
        name="TRIAL_DIVISION",
        category=MethodCategory.GENERAL,
        description="Divides n by 2 and the odd integers up to the bound.",
        complexity="O(sqrt(n))"
    ),

    # New perspectives
    MethodCode.TRIANGULAR: Method(
        code=MethodCode.TRIANGULAR,
        name="TRIANGULAR_TEST",
        category=MethodCategory.PERSPECTIVE,
        description="Factors n at once when n is a triangular number, i.e. when 8n + 1 is a square.",
        complexity="one integer square root"
    ),
    MethodCode.MDPV: Method(
        code=MethodCode.MDPV,
        name="MATRIX_DECOMPOSITION",
        category=MethodCategory.PERSPECTIVE,
        description="Splits a determinant-n matrix N = PQ by specializing four entries, then sweeps diagonalizable companion matrices."
    ),
    MethodCode.MAFPV_BRUTE: Method(
        code=MethodCode.MAFPV_BRUTE,
        name="ALGEBRAIC_FORM_SEARCH",
        category=MethodCategory.PERSPECTIVE,
        description="Exhaustive root search of the 36xy +/- 6(x +/- y) +/- 1 forms matching n mod 6."
    ),
    MethodCode.MAFPV_LATTICE: Method(
        code=MethodCode.MAFPV_LATTICE,
        name="ALGEBRAIC_FORM_LATTICE",
        category=MethodCategory.PERSPECTIVE,
        description="Small-root lattice (LLL plus resultant) on the algebraic forms modulo an auxiliary modulus M > n."
    ),

    # Strategy
    MethodCode.AUTO: Method(
        code=MethodCode.AUTO,
        name="AUTO",
        category=MethodCategory.STRATEGY,
        description="Triangular test, trial division to 10^4, rho, then ECM, each under a slice of the time budget."
    ),
}


def parse_method(value: str) -> MethodCode:
    try:
        return MethodCode(value.strip().lower())
    except ValueError:
        valid = ', '.join(code.value for code in MethodCode)
        raise ValueError(f"Unknown method '{value}'. Expected one of: {valid}")
