"""Exact dense linear algebra over Fractions for per-degree basis changes."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from chromsym.compositions import Partition, partitions_of
from chromsym.errors import InvariantViolation

Matrix = list[list[Fraction]]


def expand_in_basis(f, member: Callable[[Partition], object], n: int,
                    longer_terms: bool) -> dict[Partition, Fraction]:
    """Solve ``f = sum_lambda c_lambda member(lambda)`` in degree ``n``.

    ``member(lambda)`` must equal a nonzero multiple of ``p_lambda`` plus
    terms indexed by partitions with strictly more parts (``longer_terms``)
    or strictly fewer parts.  Partitions are then resolved one at a time.
    """
    order = sorted(partitions_of(n), key=len, reverse=not longer_terms)
    residual = dict(f.terms)
    out: dict[Partition, Fraction] = {}
    for lam in order:
        c = residual.get(lam, Fraction(0))
        if c == 0:
            continue
        b = member(lam)
        lead = b.coefficient(lam)
        _check_triangular(b, lam, longer_terms)
        coef = c / lead
        out[lam] = coef
        for mu, v in b.terms.items():
            r = residual.get(mu, Fraction(0)) - coef * v
            if r:
                residual[mu] = r
            else:
                residual.pop(mu, None)
    if residual:
        raise InvariantViolation(f"expansion left a residual {residual}")
    return out


def _check_triangular(b, lam: Partition, longer_terms: bool) -> None:
    if b.coefficient(lam) == 0:
        raise InvariantViolation(f"basis element for {lam} has zero leading coefficient")
    for mu in b.terms:
        if mu == lam:
            continue
        if (len(mu) > len(lam)) != longer_terms or len(mu) == len(lam):
            raise InvariantViolation(f"basis element for {lam} has out-of-order term {mu}")


def is_lower_triangular(m: Matrix, unit: bool = False) -> bool:
    for i, row in enumerate(m):
        if any(row[j] != 0 for j in range(i + 1, len(row))):
            return False
        if row[i] == 0 or (unit and row[i] != 1):
            return False
    return True


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def determinant(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by Gaussian elimination with exact pivots."""
    a = [[Fraction(x) for x in row] for row in m]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            factor = a[r][col] / a[col][col]
            if factor:
                for c in range(col, size):
                    a[r][c] -= factor * a[col][c]
    return det
