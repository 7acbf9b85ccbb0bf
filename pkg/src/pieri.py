"""
Pieri-regelen e_r * P_T = sum_S d_{S,T} P_S: lukket formel, eksakt orakel og
stabil koeffisient.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional

from src.coeffs import RatFun, ZERO, elementary_principal, t_power
from src.daha import VElement, act_sym_mult
from src.linalg import solve
from src.limits import OmegaFilling, rank_of
from src.spherical import K_coeff, compute_P_formula, product_A, product_B
from src.tableaux import (
    CertificateError,
    Filling,
    boxes,
    enumerate_fillings,
    enumerate_psyt,
    is_rssyt,
    psi,
    require_rssyt,
)


def candidates(T: Filling, r: int) -> List[Filling]:
    """T + 1 i r distinkte bokser, beholdt hvis RSSYT (radvis kombinasjonsrekkefølge)."""
    require_rssyt(T)
    cells = boxes(T.shape)
    out: List[Filling] = []
    seen = set()
    for chosen in combinations(cells, r):
        picked = set(chosen)
        S = Filling(tuple(
            tuple(x + (1 if (ri + 1, ci + 1) in picked else 0) for ci, x in enumerate(row))
            for ri, row in enumerate(T.rows)
        ))
        if is_rssyt(S) and S not in seen:
            seen.add(S)
            out.append(S)
    return out


def coeff_formula(S: Filling, T: Filling, r: int) -> RatFun:
    """d_{S,T} = e_r(1,...,t^{n-1}) K_S sum_tau t^{c_tau(1)+...+c_tau(r)} prod A_T prod B_S."""
    if S.shape != T.shape:
        raise ValueError(f"shape mismatch: {S.shape} vs {T.shape}")
    if S not in candidates(T, r):
        raise ValueError(f"invalid target: {S.to_json()} is not in candidates(T, {r})")
    n = len(boxes(T.shape))
    total = ZERO
    for tau in enumerate_psyt(T):
        lifted = tau
        for _ in range(r):
            lifted = psi(lifted)
        if lifted.filling() != S:
            continue
        shift = sum(tau.c(i) for i in range(1, r + 1))
        total += t_power(shift) * product_A(tau) * product_B(lifted)
    return elementary_principal(r, n) * K_coeff(S) * total


def expand_in_P_basis(v: VElement, degree: int) -> Dict[Filling, RatFun]:
    """Eksakt løsning av v = sum_S c_S P_S over alle RSSYT S av gitt grad."""
    basis = enumerate_fillings(v.shape, degree, "RSSYT")
    cols = [compute_P_formula(S) for S in basis]
    coeffs = solve([c.terms for c in cols], v.terms)
    if coeffs is None:
        raise CertificateError("vector is not in the span of the P_S basis")
    residual = v
    for S, c, col in zip(basis, coeffs, cols):
        residual = residual - col.scale(c)
    if not residual.is_zero():
        raise CertificateError("nonzero residual after P_S expansion")
    return {S: c for S, c in zip(basis, coeffs) if c}


def bruteforce_expansion(T: Filling, r: int) -> Dict[Filling, RatFun]:
    """e_r * P_T utviklet i P_S; støtten må ligge i candidates(T, r)."""
    require_rssyt(T)
    prod = act_sym_mult("e", r, compute_P_formula(T))
    expansion = expand_in_P_basis(prod, T.degree + r)
    allowed = set(candidates(T, r))
    stray = [S for S in expansion if S not in allowed]
    if stray:
        raise CertificateError(f"Pieri support outside candidates: {[S.to_json() for S in stray]}")
    return expansion


def coeff_bruteforce(S: Filling, T: Filling, r: int) -> RatFun:
    return bruteforce_expansion(T, r).get(S, ZERO)


def stable_coeff(S: OmegaFilling, T: OmegaFilling, r: int) -> RatFun:
    """d_{S,T} ved n0 = rank_of(T) + r, sertifisert mot n0 + 1."""
    if S.base != T.base:
        raise ValueError(f"shape mismatch: bases {S.base} vs {T.base}")
    n0 = rank_of(T) + r
    here = coeff_formula(S.at_rank(n0), T.at_rank(n0), r)
    there = coeff_formula(S.at_rank(n0 + 1), T.at_rank(n0 + 1), r)
    if here != there:
        raise CertificateError(f"Pieri coefficient not stable between n={n0} and n={n0 + 1}")
    return here


@dataclass
class PieriEntry:
    S: Filling
    formula: RatFun
    oracle: Optional[RatFun] = None

    @property
    def agree(self) -> Optional[bool]:
        if self.oracle is None:
            return None
        return self.formula == self.oracle


def pieri_table(T: Filling, r: int, with_oracle: bool = True) -> List[PieriEntry]:
    oracle = bruteforce_expansion(T, r) if with_oracle else None
    out = []
    for S in candidates(T, r):
        out.append(PieriEntry(
            S=S,
            formula=coeff_formula(S, T, r),
            oracle=oracle.get(S, ZERO) if oracle is not None else None,
        ))
    return out
