"""Linear algebra over F_p on sympy DomainMatrix."""

from typing import Optional, Sequence

from sympy import GF
from sympy.polys.matrices import DomainMatrix


def _matrix(rows: Sequence[Sequence[int]], ncols: int, p: int) -> DomainMatrix:
    K = GF(p)
    return DomainMatrix([[K(v % p) for v in row] for row in rows], (len(rows), ncols), K)


def _to_ints(matrix: DomainMatrix, p: int) -> list[list[int]]:
    return [[int(v) % p for v in row] for row in matrix.to_list()]


def kernel_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {c : A c = 0} for the matrix with the given rows, in reduced echelon form."""
    if ncols == 0:
        return []
    nonzero = [list(r) for r in rows if any(v % p for v in r)]
    if not nonzero:
        return [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    null = _matrix(nonzero, ncols, p).nullspace()
    basis = _to_ints(null, p)
    basis = [v for v in basis if any(v)]
    if not basis:
        return []
    reduced, _ = rref_mod_p(basis, ncols, p)
    return reduced


def rref_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> tuple[list[list[int]], tuple[int, ...]]:
    """Nonzero rows of the reduced row echelon form and the pivot columns."""
    nonzero = [list(r) for r in rows if any(v % p for v in r)]
    if not nonzero or ncols == 0:
        return [], ()
    reduced, pivots = _matrix(nonzero, ncols, p).rref()
    out = [row for row in _to_ints(reduced, p) if any(row)]
    return out, tuple(pivots)


def rank_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> int:
    return len(rref_mod_p(rows, ncols, p)[1])


def coordinates_in_rowspace(
    basis_rref: Sequence[Sequence[int]], pivots: Sequence[int], v: Sequence[int], p: int
) -> Optional[list[int]]:
    """Coefficients a with sum a_k basis_k = v, or None when v is outside the row space."""
    coeffs = [v[c] % p for c in pivots]
    combo = [0] * len(v)
    for a, row in zip(coeffs, basis_rref):
        if a:
            for idx, x in enumerate(row):
                combo[idx] = (combo[idx] + a * x) % p
    if any((x - y) % p for x, y in zip(combo, v)):
        return None
    return coeffs
