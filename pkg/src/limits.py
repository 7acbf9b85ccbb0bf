"""
Stabile grenser: restriksjonsavbildningen Phi: W^(n+1) -> W^(n), Omega-fyllinger,
rang, kompatible familier og Delta_l.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from src.coeffs import RatFun, ZERO, qt_monomial, t_power
from src.daha import VElement, build_F, compositions_up_to
from src.hecke import restrict_syt
from src.spherical import act_P0l, compute_P_formula, epsilon_project
from src.tableaux import (
    Filling,
    Partition,
    boxes,
    content,
    enumerate_fillings,
    extend_filling,
    extended_shape,
    is_rssyt,
    min_top,
    n_lambda,
    restrict_filling,
    size,
    standard_tableaux,
)


def rank_of_filling(base: Partition, T: Filling) -> int:
    """Minste n >= n_lambda med T lik 0 utenfor lambda^(n)."""
    first = T.rows[0] if T.rows else ()
    last = max((c + 1 for c, x in enumerate(first) if x), default=0)
    return max(n_lambda(base), size(base) + last)


@dataclass(frozen=True)
class OmegaFilling:
    """RSSYT av lambda^(rank) sett som element av Omega(lambda)."""

    base: Partition
    filling: Filling

    def __post_init__(self) -> None:
        shape = self.filling.shape
        n = size(shape)
        if shape != extended_shape(self.base, n):
            raise ValueError(f"shape mismatch: {shape} is not lambda^({n}) for base {self.base}")
        if not is_rssyt(self.filling):
            raise ValueError(f"malformed filling: not RSSYT: {self.filling.to_json()}")

    @property
    def n(self) -> int:
        return size(self.filling.shape)

    @property
    def degree(self) -> int:
        return self.filling.degree

    def at_rank(self, m: int) -> Filling:
        """T|lambda^(m) (nullutvidet eller restriksjon)."""
        shape = extended_shape(self.base, m)
        if m >= self.n:
            return extend_filling(self.filling, shape)
        return restrict_filling(self.filling, shape)

    def canonical(self) -> "OmegaFilling":
        return OmegaFilling(self.base, self.at_rank(rank_of(self)))

    def key(self) -> Tuple:
        return (self.base, self.canonical().filling.rows)


def omega_filling(base: Sequence[int], rows: Sequence[Sequence[int]]) -> OmegaFilling:
    """Bygger T fra radene; manglende bokser fylles med 0 opp til minste gyldige rang."""
    base = tuple(base)
    rs = [list(r) for r in rows] or [[]]
    width = max(len(rs[0]), 1)
    n = max(n_lambda(base), size(base) + width)
    shape = extended_shape(base, n)
    full = []
    for r, length in enumerate(shape):
        src = rs[r] if r < len(rs) else []
        if len(src) > length:
            raise ValueError(f"shape mismatch: row {r + 1} too long for lambda^({n})")
        full.append(tuple(int(x) for x in src) + (0,) * (length - len(src)))
    if len(rs) > len(shape) and any(any(r) for r in rs[len(shape):]):
        raise ValueError(f"shape mismatch: too many rows for base {base}")
    return OmegaFilling(base, Filling(tuple(full)))


def rank_of(T: OmegaFilling) -> int:
    return rank_of_filling(T.base, T.filling)


def omega_fillings(base: Partition, degree: int) -> List[OmegaFilling]:
    """Alle T i Omega(lambda) av gitt grad, i kanonisk (minimal) form."""
    m = max(n_lambda(base), size(base) + degree)
    seen: Dict[Tuple, OmegaFilling] = {}
    for T in enumerate_fillings(extended_shape(base, m), degree, "RSSYT"):
        omega = OmegaFilling(base, T).canonical()
        seen.setdefault(omega.key(), omega)
    return list(seen.values())


# ----------------------------
# Phi
# ----------------------------

def phi_map(base: Partition, n: int, v: VElement) -> VElement:
    """X_{n+1} -> 0 og restriksjon av standardtableauet til lambda^(n).

    Ingen eps^(n) her: bildet av et sfærisk element er allerede sfærisk.
    phi_map_projected legger eps^(n) på eksplisitt.
    """
    big = extended_shape(base, n + 1)
    if v.shape != big:
        raise ValueError(f"shape mismatch: expected {big}, got {v.shape}")
    small = extended_shape(base, n)
    out: Dict = {}
    for (alpha, u), c in v.terms.items():
        if alpha[n] != 0:
            continue
        u2 = restrict_syt(u)
        if u2 is None:
            continue
        key = (alpha[:n], u2)
        out[key] = out.get(key, ZERO) + c
    return VElement(small, out)


def phi_map_projected(base: Partition, n: int, v: VElement) -> VElement:
    """Samme avbildning med eksplisitt eps^(n) (identitet på symmetriske bilder)."""
    return epsilon_project(phi_map(base, n, v))


@dataclass
class CompatibleFamily:
    base: Partition
    entries: Dict[int, VElement] = field(default_factory=dict)

    def check(self) -> List[int]:
        """Ranger n der Phi(entry_{n+1}) != entry_n."""
        bad = []
        for n in sorted(self.entries):
            if n + 1 in self.entries and phi_map(self.base, n, self.entries[n + 1]) != self.entries[n]:
                bad.append(n)
        return bad


def macdonald_family(T: OmegaFilling, ranks: Sequence[int]) -> CompatibleFamily:
    fam = CompatibleFamily(T.base)
    lo = rank_of(T)
    for m in ranks:
        if m < lo:
            raise ValueError(f"invalid rank: {m} < rank_of(T) = {lo}")
        fam.entries[m] = compute_P_formula(T.at_rank(m))
    return fam


def top_family(T: OmegaFilling, ranks: Sequence[int]) -> CompatibleFamily:
    fam = CompatibleFamily(T.base)
    for m in ranks:
        fam.entries[m] = build_F(min_top(T.at_rank(m))[1]).element
    return fam


# ----------------------------
# Delta_l
# ----------------------------

def box_sum(base: Partition, n: int, ell: int) -> RatFun:
    out = ZERO
    for b in boxes(extended_shape(base, n)):
        out += t_power(ell * content(b))
    return out


def delta_truncated(base: Partition, n: int, ell: int, v: VElement) -> VElement:
    """P_{0,l}^(n) - sum_{b in lambda^(n)} t^{l c(b)}."""
    return act_P0l(ell, v) - v.scale(box_sum(base, n, ell))


def delta_eigenvalue(T: OmegaFilling, ell: int) -> RatFun:
    """sum_b (q^{l T(b)} - 1) t^{l c(b)}; endelig fordi T har endelig støtte."""
    F = T.canonical().filling
    out = ZERO
    for b in boxes(F.shape):
        x = F.value(b)
        if x:
            out += qt_monomial(ell * x, ell * content(b)) - t_power(ell * content(b))
    return out


@dataclass
class IntertwineReport:
    base: Partition
    n: int
    ell: int
    degree: int
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def spanning_set(base: Partition, n: int, degree: int, kind: str = "macdonald") -> List[Tuple[str, VElement]]:
    """Utspennende mengde for W^(n)_lambda i grad <= degree."""
    shape = extended_shape(base, n)
    out: List[Tuple[str, VElement]] = []
    if kind == "macdonald":
        for d in range(degree + 1):
            for T in enumerate_fillings(shape, d, "RSSYT"):
                out.append((f"P_{T.to_json()}", compute_P_formula(T)))
    elif kind == "monomial":
        for alpha in compositions_up_to(n, degree):
            for u in standard_tableaux(shape):
                v = epsilon_project(VElement.basis(alpha, u))
                if not v.is_zero():
                    out.append((f"eps X^{alpha}(x){u}", v))
    else:
        raise ValueError(f"unknown spanning set: {kind}")
    return out


def intertwine_check(base: Partition, n: int, ell: int, degree: int, kind: str = "macdonald") -> IntertwineReport:
    """Phi o Delta^(n+1) == Delta^(n) o Phi på en utspennende mengde."""
    rep = IntertwineReport(base=base, n=n, ell=ell, degree=degree)
    for name, v in spanning_set(base, n + 1, degree, kind):
        lhs = phi_map(base, n, delta_truncated(base, n + 1, ell, v))
        rhs = delta_truncated(base, n, ell, phi_map(base, n, v))
        rep.checked += 1
        if lhs != rhs:
            rep.failures.append(name)
    return rep


def graded_spectrum(base: Partition, max_degree: int, ell: int = 1) -> Dict[int, List[Tuple[OmegaFilling, RatFun]]]:
    return {
        d: [(T, delta_eigenvalue(T, ell)) for T in omega_fillings(base, d)]
        for d in range(max_degree + 1)
    }


def spectrum_is_simple(graded: Dict[int, List[Tuple[OmegaFilling, RatFun]]]) -> bool:
    vals = [ev for entries in graded.values() for _, ev in entries]
    return all(a != b for i, a in enumerate(vals) for b in vals[i + 1:])
