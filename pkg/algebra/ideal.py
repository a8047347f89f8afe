"""Ideals of the ambient ring with a lazily attached reduced Groebner basis."""

import threading
from itertools import combinations
from typing import Iterable, Optional, Sequence

from algebra.groebner import buchberger, divide_exact, reduce
from algebra.polynomial import Exponents, Polynomial, PolynomialRing, monomial_divides
from constants import OrderKinds
from exceptions import ArgumentError


class IdealHandle:
    """Generators plus a reduced Groebner basis attached exactly once."""

    def __init__(self, ring: PolynomialRing, generators: Iterable[Polynomial] = ()):
        gens = []
        seen = set()
        for g in generators:
            ring.check_same(g.ring)
            if g.is_zero() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._gb: Optional[tuple[Polynomial, ...]] = None
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"IdealHandle({', '.join(str(g) for g in self.generators) or '0'})"

    @property
    def gb(self) -> tuple[Polynomial, ...]:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = tuple(buchberger(self.ring, self.generators))
        return self._gb

    @property
    def leading_monomials(self) -> list[Exponents]:
        return [g.lm for g in self.gb]

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.gb)

    def normal_form(self, f: Polynomial) -> Polynomial:
        self.ring.check_same(f.ring)
        return reduce(f, self.gb)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "IdealHandle") -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_ideal(self, other: "IdealHandle") -> bool:
        self.ring.check_same(other.ring)
        return self.gb == other.gb

    def is_standard(self, exps: Exponents) -> bool:
        return not any(monomial_divides(lm, exps) for lm in self.leading_monomials)

    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.generators), default=0)

    def is_quasi_homogeneous(self) -> bool:
        return all(g.is_quasi_homogeneous() for g in self.generators)

    def extended(self, extra: Iterable[Polynomial]) -> "IdealHandle":
        return IdealHandle(self.ring, list(self.generators) + list(extra))


def normal_form(f: Polynomial, ideal: IdealHandle) -> Polynomial:
    return ideal.normal_form(f)


def ideal_sum(*ideals: IdealHandle) -> IdealHandle:
    ring = ideals[0].ring
    gens: list[Polynomial] = []
    for ideal in ideals:
        ring.check_same(ideal.ring)
        gens.extend(ideal.generators)
    return IdealHandle(ring, gens)


def ideal_product(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    a.ring.check_same(b.ring)
    return IdealHandle(a.ring, [f * g for f in a.generators for g in b.generators])


def maximal_ideal(ring: PolynomialRing) -> IdealHandle:
    return IdealHandle(ring, ring.gens())


def maximal_ideal_power(ring: PolynomialRing, n: int) -> IdealHandle:
    """m^n, generated by the monomials with exponent sum n."""
    return IdealHandle(ring, [ring.monomial(m) for m in ring.monomials_of_total_degree(n)])


def _elimination_ring(ring: PolynomialRing) -> PolynomialRing:
    tag = "_t"
    while tag in ring.variables:
        tag = "_" + tag
    return PolynomialRing(
        ring.field,
        (tag,) + ring.variables,
        (1,) + ring.weights,
        order_kind=OrderKinds.ELIMINATION,
        block=1,
    )


def intersect(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """a ∩ b by eliminating t from t*a + (1 - t)*b."""
    ring = a.ring
    ring.check_same(b.ring)
    if a.is_zero() or b.is_zero():
        return IdealHandle(ring)
    big = _elimination_ring(ring)
    shift = list(range(1, ring.nvars + 1))
    t = big.gen(0)
    gens = [t * f.change_ring(big, shift) for f in a.generators]
    gens += [(1 - t) * g.change_ring(big, shift) for g in b.generators]
    kept = [_drop_tag(g, ring) for g in buchberger(big, gens) if g.lm[0] == 0]
    return IdealHandle(ring, kept)


def _drop_tag(g: Polynomial, ring: PolynomialRing) -> Polynomial:
    return Polynomial._trusted(ring, {m[1:]: c for m, c in g.data.items()})


def colon_element(a: IdealHandle, g: Polynomial) -> IdealHandle:
    ring = a.ring
    if g.is_zero():
        raise ArgumentError("colon by the zero ideal")
    if g.is_constant() or a.is_zero():
        return IdealHandle(ring, a.generators)
    if a.contains(g):
        return IdealHandle(ring, [ring.one()])
    meet = intersect(a, IdealHandle(ring, [g]))
    return IdealHandle(ring, [divide_exact(h, g) for h in meet.gb])


def colon(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """a : b, as the intersection of a : g over the generators g of b."""
    a.ring.check_same(b.ring)
    if b.is_zero():
        raise ArgumentError("colon by the zero ideal")
    result: Optional[IdealHandle] = None
    for g in b.generators:
        part = colon_element(a, g)
        result = part if result is None else intersect(result, part)
        if result.same_ideal(a):
            break
    return result


def colon_maximal_power(a: IdealHandle, n: int) -> IdealHandle:
    """a : m^n by iterating a : m; stops early once the chain stabilizes."""
    m = maximal_ideal(a.ring)
    current = a
    for _ in range(n):
        nxt = colon(current, m)
        if nxt.same_ideal(current):
            break
        current = nxt
    return current


def independent_sets(lms: Sequence[Exponents], nvars: int) -> Iterable[tuple[int, ...]]:
    """Variable subsets containing the support of no leading monomial, largest first."""
    supports = [frozenset(i for i, a in enumerate(m) if a) for m in lms]
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                yield subset


def krull_dimension(ideal: IdealHandle) -> int:
    """Dimension of S/I; -1 for the unit ideal."""
    if ideal.is_unit():
        return -1
    for subset in independent_sets(ideal.leading_monomials, ideal.ring.nvars):
        return len(subset)
    return 0


def graded_piece_basis(ideal: IdealHandle, d: int) -> list[Exponents]:
    """Standard monomials of weighted degree d, descending in the ring order."""
    return [m for m in ideal.ring.monomials_of_degree(d) if ideal.is_standard(m)]


def standard_monomials(ideal: IdealHandle) -> list[Exponents]:
    """All standard monomials of a zero-dimensional ideal."""
    if krull_dimension(ideal) > 0:
        raise ArgumentError("infinite length: quotient is not zero-dimensional")
    if ideal.is_unit():
        return []
    ring = ideal.ring
    start = ring.one_exponent
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(ring.nvars):
                cand = m[:i] + (m[i] + 1,) + m[i + 1:]
                if cand not in found and ideal.is_standard(cand):
                    found.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return sorted(found, key=ring.sort_key, reverse=True)
