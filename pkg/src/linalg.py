from __future__ import annotations

from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from src.coeffs import QT_DOMAIN, RatFun, ZERO

Vector = Mapping[Hashable, RatFun]


def _matrix(columns: Sequence[Vector]) -> Tuple[DomainMatrix, List[Hashable]]:
    """Kolonnevektorer -> sparsom DomainMatrix over Q(q,t)."""
    keys = sorted({k for col in columns for k in col})
    row_of = {k: r for r, k in enumerate(keys)}
    rows: Dict[int, Dict[int, RatFun]] = {}
    for j, col in enumerate(columns):
        for k, c in col.items():
            if c:
                rows.setdefault(row_of[k], {})[j] = c
    return DomainMatrix(rows, (len(keys), len(columns)), QT_DOMAIN), keys


def rank(columns: Sequence[Vector]) -> int:
    if not columns:
        return 0
    m, keys = _matrix(columns)
    if not keys:
        return 0
    _, pivots = m.rref(method="GJ")
    return len(pivots)


def solve(columns: Sequence[Vector], target: Vector) -> Optional[List[RatFun]]:
    """x med sum_j x_j columns[j] == target, eller None hvis systemet er inkonsistent.

    Frie variable settes til 0.
    """
    m, keys = _matrix(list(columns) + [target])
    ncols = len(columns)
    if not keys:
        return [ZERO] * ncols
    reduced, pivots = m.rref(method="GJ")
    if ncols in pivots:
        return None
    dense = reduced.to_list()
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        x[p] = dense[r][ncols]
    return x


def in_span(columns: Sequence[Vector], target: Vector) -> bool:
    return solve(columns, target) is not None
