"""
Uavhengig orakel: klassiske Macdonald-polynomer P_mu(x; q, t) via
Gram-Schmidt på monomialbasisen med q,t-skalarproduktet på potenssummer.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from src.coeffs import ONE, QT_DOMAIN, RatFun, ZERO, qt_monomial, t_power
from src.daha import VElement
from src.tableaux import Partition

Poly = Dict[Tuple[int, ...], RatFun]


def partitions_of(d: int) -> List[Partition]:
    """Partisjoner av d i stigende leksikografisk rekkefølge, (1^d) først."""
    out: List[Partition] = []

    def rec(rest: int, cap: int, acc: Tuple[int, ...]) -> None:
        if rest == 0:
            out.append(acc)
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, acc + (p,))

    rec(d, d, ())
    return sorted(out)


def _z(lam: Partition) -> int:
    out = 1
    for part in set(lam):
        m = lam.count(part)
        out *= part ** m * factorial(m)
    return out


def z_qt(lam: Partition, invert_q: bool = False) -> RatFun:
    sign = -1 if invert_q else 1
    out = ONE * _z(lam)
    for part in lam:
        out *= (1 - qt_monomial(sign * part, 0)) / (1 - t_power(part))
    return out


def power_to_monomial(lam: Partition, mu: Partition) -> int:
    """Koeffisienten til m_mu i p_lam."""
    @lru_cache(maxsize=None)
    def count(k: int, rest: Tuple[int, ...]) -> int:
        if k == len(lam):
            return 1 if not any(rest) else 0
        total = 0
        for j, r in enumerate(rest):
            if r >= lam[k]:
                total += count(k + 1, rest[:j] + (r - lam[k],) + rest[j + 1:])
        return total

    return count(0, tuple(mu))


@lru_cache(maxsize=None)
def _gram(d: int, invert_q: bool) -> Tuple[Tuple[Partition, ...], Tuple[Tuple[RatFun, ...], ...]]:
    parts = tuple(partitions_of(d))
    L = DomainMatrix(
        [[ONE * power_to_monomial(a, b) for b in parts] for a in parts],
        (len(parts), len(parts)),
        QT_DOMAIN,
    )
    M = L.inv().to_list()
    z = [z_qt(p, invert_q) for p in parts]
    G = tuple(
        tuple(sum((M[a][k] * M[b][k] * z[k] for k in range(len(parts))), ZERO) for b in range(len(parts)))
        for a in range(len(parts))
    )
    return parts, G


def _inner(u: Sequence[RatFun], v: Sequence[RatFun], G) -> RatFun:
    out = ZERO
    for a, x in enumerate(u):
        if not x:
            continue
        for b, y in enumerate(v):
            if y:
                out += x * y * G[a][b]
    return out


@lru_cache(maxsize=None)
def macdonald_basis(d: int, invert_q: bool = False) -> Dict[Partition, Dict[Partition, RatFun]]:
    """{mu: {nu: koeffisient til m_nu i P_mu}} for alle mu |- d."""
    parts, G = _gram(d, invert_q)
    done: List[Tuple[int, List[RatFun]]] = []
    out: Dict[Partition, Dict[Partition, RatFun]] = {}
    for j, mu in enumerate(parts):
        vec = [ONE if k == j else ZERO for k in range(len(parts))]
        for i, prev in done:
            c = _inner(vec, prev, G) / _inner(prev, prev, G)
            vec = [x - c * y for x, y in zip(vec, prev)]
        done.append((j, vec))
        out[mu] = {parts[k]: x for k, x in enumerate(vec) if x}
    return out


def classical_P(mu: Partition, invert_q: bool = False) -> Dict[Partition, RatFun]:
    return macdonald_basis(sum(mu), invert_q)[tuple(mu)]


def as_velement(coeffs: Dict[Partition, RatFun], n: int) -> VElement:
    """Symmetrisk polynom i n variable som element av V_(n) (enradig form)."""
    u = (tuple(range(1, n + 1)),)
    shape = (n,) if n else ()
    out = {}
    for nu, c in coeffs.items():
        if len(nu) > n:
            continue
        base = tuple(nu) + (0,) * (n - len(nu))
        for alpha in set(_distinct_permutations(base)):
            out[(alpha, u)] = c
    return VElement(shape, out)


def _distinct_permutations(seq: Tuple[int, ...]):
    if not seq:
        yield ()
        return
    for k in sorted(set(seq)):
        i = seq.index(k)
        for rest in _distinct_permutations(seq[:i] + seq[i + 1:]):
            yield (k,) + rest


# ----------------------------
# Pieri i klassisk form
# ----------------------------

def _expand(coeffs: Dict[Partition, RatFun], nvars: int) -> Poly:
    out: Poly = {}
    for nu, c in coeffs.items():
        base = tuple(nu) + (0,) * (nvars - len(nu))
        for alpha in _distinct_permutations(base):
            out[alpha] = c
    return out


def classical_pieri(mu: Partition, r: int, n: int, invert_q: bool = False) -> Dict[Partition, RatFun]:
    """e_r P_mu = sum_nu c_nu P_nu i n variable (nu med lengde <= n)."""
    d = sum(mu)
    nvars = d + r
    f = _expand(classical_P(mu, invert_q), nvars)
    prod: Poly = {}
    for subset in combinations(range(nvars), r):
        for alpha, c in f.items():
            beta = tuple(a + (1 if k in subset else 0) for k, a in enumerate(alpha))
            prod[beta] = prod.get(beta, ZERO) + c
    # m-koeffisienter, deretter trekk ut P_nu ovenfra
    residual = {nu: prod.get(tuple(nu) + (0,) * (nvars - len(nu)), ZERO) for nu in partitions_of(d + r)}
    basis = macdonald_basis(d + r, invert_q)
    out: Dict[Partition, RatFun] = {}
    for nu in sorted(residual, reverse=True):
        c = residual[nu]
        if not c:
            continue
        out[nu] = c
        for kappa, x in basis[nu].items():
            residual[kappa] = residual[kappa] - c * x
    return {nu: c for nu, c in out.items() if len(nu) <= n}
