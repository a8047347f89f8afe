"""Hilbert series numerators of monomial ideals by pivot splitting."""

from typing import Sequence

from sympy import Poly, ZZ, symbols

from algebra.ideal import IdealHandle
from algebra.polynomial import Exponents, monomial_divides
from exceptions import ArgumentError

t = symbols("t")


def _minimalize(gens: Sequence[Exponents]) -> list[Exponents]:
    ordered = sorted(set(gens), key=sum)
    out: list[Exponents] = []
    for g in ordered:
        if not any(monomial_divides(h, g) for h in out):
            out.append(g)
    return out


def _poly_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _poly_add(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _numerator(gens: list[Exponents], weights: Sequence[int]) -> dict[int, int]:
    gens = _minimalize(gens)
    if not gens:
        return {0: 1}
    deg = lambda m: sum(w * a for w, a in zip(weights, m))
    supports = [frozenset(i for i, a in enumerate(m) if a) for m in gens]
    if all(not (supports[a] & supports[b]) for a in range(len(gens)) for b in range(a + 1, len(gens))):
        out = {0: 1}
        for m in gens:
            out = _poly_mul(out, {0: 1, deg(m): -1})
        return out

    counts: dict[int, int] = {}
    for m, s in zip(gens, supports):
        if len(s) > 1:
            for i in s:
                counts[i] = counts.get(i, 0) + 1
    pivot_var = max(sorted(counts), key=lambda i: counts[i])
    a = min(m[pivot_var] for m in gens if m[pivot_var])
    pivot = tuple(a if i == pivot_var else 0 for i in range(len(weights)))

    with_pivot = _numerator(gens + [pivot], weights)
    quotient = [tuple(max(0, e - a) if i == pivot_var else e for i, e in enumerate(m)) for m in gens]
    shifted = {k + deg(pivot): v for k, v in _numerator(quotient, weights).items()}
    return _poly_add(with_pivot, shifted)


def monomial_numerator(gens: Sequence[Exponents], weights: Sequence[int]) -> Poly:
    coeffs = _numerator(list(gens), weights)
    expr = sum(c * t**k for k, c in coeffs.items())
    return Poly(expr, t, domain=ZZ)


def hilbert_series_numerator(ideal: IdealHandle, weights: Sequence[int] = None) -> Poly:
    """N(t) with HS_{S/I}(t) = N(t) / prod(1 - t^w_i)."""
    weights = tuple(weights) if weights is not None else ideal.ring.weights
    if tuple(weights) != ideal.ring.weights:
        raise ArgumentError("weights differ from the ring grading")
    for g in ideal.generators:
        if not g.is_quasi_homogeneous():
            raise ArgumentError(
                f"inhomogeneous generator {g}: term degrees {g.term_degrees()}"
            )
    if ideal.is_unit():
        return Poly(0, t, domain=ZZ)
    return monomial_numerator(ideal.leading_monomials, weights)


def series_coefficients(numerator: Poly, weights: Sequence[int], upto: int) -> list[int]:
    """Coefficients of N(t) / prod(1 - t^w) for degrees 0..upto."""
    series = [0] * (upto + 1)
    for (k,), c in numerator.terms():
        if k <= upto:
            series[k] += int(c)
    for w in weights:
        for d in range(w, upto + 1):
            series[d] += series[d - w]
    return series
