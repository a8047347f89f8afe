from dataclasses import dataclass
from typing import Optional

from sympy import isprime

from exceptions import ArgumentError, RingValidationError


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p. Elements are plain ints kept in [0, p)."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
            raise RingValidationError(f"p not prime: {self.p}")

    def inverse(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ArgumentError("zero has no inverse")
        return pow(value, -1, self.p)

    def frobenius_exponent(self, q: int) -> Optional[int]:
        """Return e with q = p^e, or None when q is not a power of p."""
        if not isinstance(q, int) or q < 1:
            return None
        e = 0
        while q % self.p == 0:
            q //= self.p
            e += 1
        return e if q == 1 else None

    def require_power(self, q: int) -> int:
        e = self.frobenius_exponent(q)
        if e is None:
            raise ArgumentError(f"q={q} is not a power of p={self.p}")
        return e
