"""Buchberger's algorithm with sugar selection and Gebauer-Moeller pair criteria."""

import threading
from typing import Optional, Sequence

from cachetools import LRUCache

from algebra.polynomial import (
    Exponents,
    Polynomial,
    PolynomialRing,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomials_coprime,
)
from config import config
from exceptions import CertificateError, ResourceExhausted
from logging_config import get_logger

logger = get_logger("groebner")

_memo: LRUCache = LRUCache(maxsize=config.GB_CACHE_SIZE)
_memo_lock = threading.Lock()


def _reduce_dict(
    f: dict[Exponents, int], basis: Sequence[Polynomial], ring: PolynomialRing, full: bool = True
) -> dict[Exponents, int]:
    """Remainder of f modulo basis. `full=False` stops at the first irreducible leading term."""
    p = ring.p
    key = ring.sort_key
    leads = [(g.lm, ring.field.inverse(g.lc), g.data) for g in basis]
    f = dict(f)
    rem: dict[Exponents, int] = {}
    while f:
        m = max(f, key=key)
        c = f[m]
        for lm, inv, gdata in leads:
            if monomial_divides(lm, m):
                shift = monomial_div(m, lm)
                factor = (c * inv) % p
                for gm, gc in gdata.items():
                    mm = tuple(a + b for a, b in zip(gm, shift))
                    v = (f.get(mm, 0) - factor * gc) % p
                    if v:
                        f[mm] = v
                    else:
                        f.pop(mm, None)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[m] = c
            del f[m]
    return rem


def reduce(f: Polynomial, basis: Sequence[Polynomial], full: bool = True) -> Polynomial:
    return Polynomial._trusted(f.ring, _reduce_dict(f.data, basis, f.ring, full))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lcm = monomial_lcm(f.lm, g.lm)
    ring = f.ring
    inv_f = ring.field.inverse(f.lc)
    inv_g = ring.field.inverse(g.lc)
    return f.mul_term(monomial_div(lcm, f.lm), inv_f) - g.mul_term(monomial_div(lcm, g.lm), inv_g)


class _Pair:
    __slots__ = ("i", "j", "lcm", "sugar", "rank")

    def __init__(self, i: int, j: int, lcm: Exponents, sugar: int, ring: PolynomialRing):
        self.i, self.j, self.lcm, self.sugar = i, j, lcm, sugar
        self.rank = (sugar, ring.sort_key(lcm), i, j)


class _Buchberger:
    def __init__(self, ring: PolynomialRing, max_pairs: int):
        self.ring = ring
        self.max_pairs = max_pairs
        self.polys: list[Polynomial] = []
        self.sugars: list[int] = []
        self.active: list[bool] = []
        self.pairs: list[_Pair] = []
        self.reductions = 0

    def _active_basis(self) -> list[Polynomial]:
        return [g for g, a in zip(self.polys, self.active) if a]

    def _pair_sugar(self, i: int, lcm: Exponents, j: int) -> int:
        w = self.ring.weighted_degree
        d = w(lcm)
        return max(
            self.sugars[i] + d - w(self.polys[i].lm),
            self.sugars[j] + d - w(self.polys[j].lm),
        )

    def update(self, h: Polynomial, sugar: int):
        k = len(self.polys)
        self.polys.append(h)
        self.sugars.append(sugar)
        self.active.append(True)
        hm = h.lm

        candidates = [(i, monomial_lcm(self.polys[i].lm, hm)) for i in range(k) if self.active[i]]
        kept: list[tuple[int, Exponents]] = []
        for idx, (i, lcm) in enumerate(candidates):
            if monomials_coprime(self.polys[i].lm, hm):
                kept.append((i, lcm))
                continue
            others = candidates[idx + 1:] + kept
            if not any(monomial_divides(other, lcm) for _, other in others):
                kept.append((i, lcm))
        new_pairs = [
            _Pair(i, k, lcm, self._pair_sugar(i, lcm, k), self.ring)
            for i, lcm in kept
            if not monomials_coprime(self.polys[i].lm, hm)
        ]

        survivors = []
        for pair in self.pairs:
            if monomial_divides(hm, pair.lcm):
                lcm_ih = monomial_lcm(self.polys[pair.i].lm, hm)
                lcm_jh = monomial_lcm(self.polys[pair.j].lm, hm)
                if lcm_ih != pair.lcm and lcm_jh != pair.lcm:
                    continue
            survivors.append(pair)
        self.pairs = survivors + new_pairs

        for i in range(k):
            if self.active[i] and monomial_divides(hm, self.polys[i].lm):
                self.active[i] = False

    def run(self, generators: Sequence[Polynomial]) -> list[Polynomial]:
        gens = sorted(
            (g.monic() for g in generators if not g.is_zero()),
            key=lambda g: self.ring.sort_key(g.lm),
        )
        for g in gens:
            h = reduce(g, self._active_basis())
            if not h.is_zero():
                self.update(h.monic(), g.degree())
        while self.pairs:
            pair = min(self.pairs, key=lambda pr: pr.rank)
            self.pairs.remove(pair)
            self.reductions += 1
            if self.reductions > self.max_pairs:
                raise ResourceExhausted(
                    f"Groebner basis exceeded {self.max_pairs} pair reductions"
                )
            s = s_polynomial(self.polys[pair.i], self.polys[pair.j])
            h = reduce(s, self._active_basis())
            if not h.is_zero():
                self.update(h.monic(), pair.sugar)
        return reduce_basis(self._active_basis())


def reduce_basis(basis: Sequence[Polynomial]) -> list[Polynomial]:
    """Minimalize, interreduce and make monic; sorted ascending by leading monomial."""
    if not basis:
        return []
    ring = basis[0].ring
    ordered = sorted((g.monic() for g in basis if not g.is_zero()), key=lambda g: ring.sort_key(g.lm))
    minimal: list[Polynomial] = []
    for g in ordered:
        if not any(monomial_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = Polynomial._trusted(ring, {m: c for m, c in g.data.items() if m != g.lm})
        reduced.append(ring.monomial(g.lm, 1) + reduce(tail, others))
    return sorted(reduced, key=lambda g: ring.sort_key(g.lm))


def _memo_key(ring: PolynomialRing, generators: Sequence[Polynomial]) -> tuple:
    return (ring.signature, tuple(frozenset(g.data.items()) for g in generators))


def buchberger(
    ring: PolynomialRing, generators: Sequence[Polynomial], max_pairs: Optional[int] = None
) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by `generators`. Deterministic."""
    for g in generators:
        ring.check_same(g.ring)
    key = _memo_key(ring, generators)
    with _memo_lock:
        cached = _memo.get(key)
    if cached is not None:
        return list(cached)
    if any(g.is_constant() and not g.is_zero() for g in generators):
        gb = [ring.one()]
    else:
        engine = _Buchberger(ring, max_pairs or config.GB_MAX_PAIRS)
        gb = engine.run(generators)
        logger.debug(
            "Groebner basis computed",
            extra={"data": {"generators": len(generators), "size": len(gb), "pairs": engine.reductions}},
        )
    with _memo_lock:
        _memo[key] = tuple(gb)
    return gb


def divide_exact(h: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient h / g; raises when g does not divide h."""
    ring = h.ring
    p = ring.p
    inv = ring.field.inverse(g.lc)
    glm = g.lm
    rest = dict(h.data)
    quotient: dict[Exponents, int] = {}
    key = ring.sort_key
    while rest:
        m = max(rest, key=key)
        if not monomial_divides(glm, m):
            raise CertificateError(f"exact division failed: {g} does not divide {h}")
        shift = monomial_div(m, glm)
        factor = (rest[m] * inv) % p
        quotient[shift] = factor
        for gm, gc in g.data.items():
            mm = tuple(a + b for a, b in zip(gm, shift))
            v = (rest.get(mm, 0) - factor * gc) % p
            if v:
                rest[mm] = v
            else:
                rest.pop(mm, None)
    return Polynomial._trusted(ring, quotient)
