"""Sparse multivariate polynomials over F_p with weighted monomial orders.

A polynomial keeps its terms in a dict keyed by exponent tuples; the sorted
term list required by callers is produced on demand and cached.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence, Union

from algebra.field import FieldSpec
from constants import OrderKinds
from exceptions import ArgumentError, StructuralError

Exponents = tuple[int, ...]


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(b: Exponents, a: Exponents) -> Exponents:
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_coprime(a: Exponents, b: Exponents) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted graded reverse lex (default), lex, or a block elimination order.

    The elimination order compares the first `block` exponents by total degree,
    then lexicographically, and breaks ties with weighted grevlex on the rest.
    """

    kind: str = OrderKinds.WGREVLEX
    weights: tuple[int, ...] = ()
    block: int = 0

    def __post_init__(self):
        if self.kind not in (OrderKinds.WGREVLEX, OrderKinds.LEX, OrderKinds.ELIMINATION):
            raise ArgumentError(f"unknown monomial order: {self.kind}")
        if self.kind == OrderKinds.ELIMINATION and not 0 < self.block < len(self.weights):
            raise ArgumentError("elimination order needs a proper nonempty block")

    def key(self, exps: Exponents) -> tuple:
        if self.kind == OrderKinds.LEX:
            return exps
        if self.kind == OrderKinds.WGREVLEX:
            return (_dot(self.weights, exps), tuple(-a for a in reversed(exps)))
        head, tail = exps[: self.block], exps[self.block:]
        return (
            sum(head),
            head,
            _dot(self.weights[self.block:], tail),
            tuple(-a for a in reversed(tail)),
        )


def _dot(weights: Sequence[int], exps: Sequence[int]) -> int:
    return sum(w * a for w, a in zip(weights, exps))


class PolynomialRing:
    """The ambient ring S = F_p[x_1..x_m] with weights and a monomial order."""

    def __init__(
        self,
        field_spec: FieldSpec,
        variables: Sequence[str],
        weights: Optional[Sequence[int]] = None,
        order_kind: str = OrderKinds.WGREVLEX,
        block: int = 0,
    ):
        if not variables:
            raise ArgumentError("empty variable set")
        if len(set(variables)) != len(variables):
            raise ArgumentError(f"duplicate variable names: {list(variables)}")
        weights = tuple(weights) if weights is not None else (1,) * len(variables)
        if len(weights) != len(variables):
            raise ArgumentError("weights and variables differ in length")
        if any((not isinstance(w, int)) or w < 1 for w in weights):
            raise ArgumentError(f"weights must be positive integers: {list(weights)}")
        self.field = field_spec
        self.p = field_spec.p
        self.variables = tuple(variables)
        self.nvars = len(variables)
        self.weights = weights
        self.order = MonomialOrder(order_kind, weights, block)
        self.signature = (self.p, self.variables, self.weights, order_kind, block)
        self._keys: dict[Exponents, tuple] = {}
        self._degree_monomials: dict[int, list[Exponents]] = {}

    def __eq__(self, other) -> bool:
        return isinstance(other, PolynomialRing) and self.signature == other.signature

    def __hash__(self) -> int:
        return hash(self.signature)

    def __repr__(self) -> str:
        return f"PolynomialRing(F_{self.p}[{', '.join(self.variables)}], weights={list(self.weights)})"

    def sort_key(self, exps: Exponents) -> tuple:
        key = self._keys.get(exps)
        if key is None:
            key = self.order.key(exps)
            self._keys[exps] = key
        return key

    def weighted_degree(self, exps: Exponents) -> int:
        return _dot(self.weights, exps)

    @property
    def one_exponent(self) -> Exponents:
        return (0,) * self.nvars

    # --- constructors ---

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return Polynomial(self, {self.one_exponent: c})

    def gen(self, index: int) -> "Polynomial":
        exps = [0] * self.nvars
        exps[index] = 1
        return Polynomial(self, {tuple(exps): 1})

    def var(self, name: str) -> "Polynomial":
        if name not in self.variables:
            raise ArgumentError(f"unknown variable: {name}")
        return self.gen(self.variables.index(name))

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps: Exponents, coeff: int = 1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise StructuralError(f"exponent vector {exps} has wrong length for {self}")
        return Polynomial(self, {tuple(exps): coeff})

    def from_terms(self, terms: Iterable[tuple[int, Exponents]]) -> "Polynomial":
        data: dict[Exponents, int] = {}
        for c, exps in terms:
            data[tuple(exps)] = data.get(tuple(exps), 0) + c
        return Polynomial(self, data)

    def monomials_of_degree(self, d: int) -> list[Exponents]:
        """All exponent vectors of weighted degree d, descending in the ring order."""
        cached = self._degree_monomials.get(d)
        if cached is not None:
            return cached
        out: list[Exponents] = []
        if d >= 0:
            self._fill_degree(d, 0, [], out)
        out.sort(key=self.sort_key, reverse=True)
        self._degree_monomials[d] = out
        return out

    def _fill_degree(self, remaining: int, index: int, prefix: list[int], out: list[Exponents]):
        if index == self.nvars - 1:
            w = self.weights[index]
            if remaining % w == 0:
                out.append(tuple(prefix + [remaining // w]))
            return
        w = self.weights[index]
        for a in range(remaining // w + 1):
            self._fill_degree(remaining - a * w, index + 1, prefix + [a], out)

    def monomials_of_total_degree(self, n: int) -> list[Exponents]:
        """Exponent vectors with exponent sum exactly n (generators of m^n)."""
        out = []
        for combo in combinations_with_replacement(range(self.nvars), n):
            exps = [0] * self.nvars
            for i in combo:
                exps[i] += 1
            out.append(tuple(exps))
        return out

    def check_same(self, other: "PolynomialRing"):
        if self.signature != other.signature:
            raise StructuralError(f"mismatched rings: {self!r} vs {other!r}")


Scalar = Union[int, "Polynomial"]


class Polynomial:
    """Immutable polynomial; coefficients live in [1, p)."""

    __slots__ = ("ring", "_data", "_terms", "_hash")

    def __init__(self, ring: PolynomialRing, data: dict[Exponents, int]):
        p = ring.p
        self.ring = ring
        self._data = {m: c % p for m, c in data.items() if c % p}
        self._terms: Optional[list[tuple[int, Exponents]]] = None
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, ring: PolynomialRing, data: dict[Exponents, int]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._data = data
        obj._terms = None
        obj._hash = None
        return obj

    # --- views ---

    @property
    def data(self) -> dict[Exponents, int]:
        return self._data

    @property
    def terms(self) -> list[tuple[int, Exponents]]:
        """(coefficient, exponents) pairs, strictly descending in the ring order."""
        if self._terms is None:
            key = self.ring.sort_key
            self._terms = [(self._data[m], m) for m in sorted(self._data, key=key, reverse=True)]
        return self._terms

    def is_zero(self) -> bool:
        return not self._data

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._data)

    @property
    def lm(self) -> Exponents:
        if not self._data:
            raise ArgumentError("zero polynomial has no leading monomial")
        if self._terms is not None:
            return self._terms[0][1]
        return max(self._data, key=self.ring.sort_key)

    @property
    def lc(self) -> int:
        return self._data[self.lm]

    def term_degrees(self) -> list[int]:
        return sorted({self.ring.weighted_degree(m) for m in self._data})

    def degree(self) -> int:
        """Largest weighted degree of a term; -1 for zero."""
        return max((self.ring.weighted_degree(m) for m in self._data), default=-1)

    def is_quasi_homogeneous(self) -> bool:
        return len(self.term_degrees()) <= 1

    def min_exponent_sum(self) -> int:
        return min((sum(m) for m in self._data), default=0)

    # --- arithmetic ---

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self.ring.check_same(other.ring)
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        raise StructuralError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other: Scalar) -> "Polynomial":
        other = self._coerce(other)
        p = self.ring.p
        out = dict(self._data)
        for m, c in other._data.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._trusted(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.ring.p
        return Polynomial._trusted(self.ring, {m: p - c for m, c in self._data.items()})

    def __sub__(self, other: Scalar) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        p = self.ring.p
        out: dict[Exponents, int] = {}
        for m1, c1 in self._data.items():
            for m2, c2 in other._data.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Polynomial._trusted(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ArgumentError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero()
        return Polynomial._trusted(self.ring, {m: (v * c) % p for m, v in self._data.items()})

    def mul_term(self, exps: Exponents, c: int = 1) -> "Polynomial":
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero()
        return Polynomial._trusted(
            self.ring,
            {tuple(a + b for a, b in zip(m, exps)): (v * c) % p for m, v in self._data.items()},
        )

    def monic(self) -> "Polynomial":
        if not self._data:
            return self
        return self.scale(self.ring.field.inverse(self.lc))

    def frobenius_power(self, q: int) -> "Polynomial":
        self.ring.field.require_power(q)
        return Polynomial._trusted(
            self.ring, {tuple(q * a for a in m): c for m, c in self._data.items()}
        )

    def change_ring(self, target: PolynomialRing, positions: Sequence[int]) -> "Polynomial":
        """Relabel variables: variable i of this ring becomes variable positions[i] of target."""
        if target.p != self.ring.p:
            raise StructuralError("change_ring across characteristics")
        out = {}
        for m, c in self._data.items():
            exps = [0] * target.nvars
            for i, a in enumerate(m):
                exps[positions[i]] += a
            out[tuple(exps)] = c
        return Polynomial._trusted(target, out)

    # --- comparison / printing ---

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.signature == other.ring.signature and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.signature, frozenset(self._data.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._data)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self._data:
            return "0"
        names = self.ring.variables
        parts = []
        for c, m in self.terms:
            factors = [
                name if a == 1 else f"{name}^{a}" for name, a in zip(names, m) if a
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    f.ring.check_same(g.ring)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ArgumentError(f"unknown operation: {op}")


def frobenius_power_poly(f: Polynomial, q: int) -> Polynomial:
    return f.frobenius_power(q)
