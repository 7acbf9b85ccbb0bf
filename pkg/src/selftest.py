from __future__ import annotations

import argparse
from dataclasses import dataclass
from typing import Callable, List, Tuple

from src.coeffs import ONE
from src.daha import build_F, check_triangularity, relation_suite
from src.spherical import (
    K_coeff,
    SphericalElement,
    act_P0l,
    compute_P_formula,
    compute_P_projection,
    eigenvalue_P0l,
    epsilon_project,
    inverse_K_sum,
    is_spherical,
)
from src.tableaux import CertificateError, Partition, enumerate_fillings, enumerate_psyt, partition

Outcome = Tuple[int, List[str]]


@dataclass
class Check:
    name: str
    run: Callable[[], Outcome]
    warn_only: bool = False


def _fillings(shape: Partition, degree: int, kind: str):
    for d in range(degree + 1):
        yield from enumerate_fillings(shape, d, kind)


def _spectrum(shape: Partition, degree: int) -> Outcome:
    bad: List[str] = []
    for T in _fillings(shape, degree, "RYT"):
        for tau in enumerate_psyt(T):
            try:
                build_F(tau, certify=True)
            except CertificateError as e:
                bad.append(str(e))
    return len(bad), bad


def _triangular(shape: Partition, degree: int) -> Outcome:
    bad = [str(T.to_json()) for T in _fillings(shape, degree, "RYT") if not check_triangularity(T)]
    return len(bad), bad


def _macdonald(shape: Partition, degree: int) -> Outcome:
    bad: List[str] = []
    for T in _fillings(shape, degree, "RSSYT"):
        P = compute_P_formula(T)
        proj = compute_P_projection(T)
        if not is_spherical(P) or epsilon_project(P) != P:
            bad.append(f"{T.to_json()} not spherical")
        if proj.dim != 1 or proj.element != P:
            bad.append(f"{T.to_json()} formula != projection (dim={proj.dim})")
    return len(bad), bad


def _normalization(shape: Partition, degree: int) -> Outcome:
    bad = [
        str(T.to_json())
        for T in _fillings(shape, degree, "RSSYT")
        if inverse_K_sum(T) * K_coeff(T) != ONE
    ]
    return len(bad), bad


def _eigen(shape: Partition, degree: int) -> Outcome:
    bad: List[str] = []
    for T in _fillings(shape, degree, "RSSYT"):
        P = compute_P_formula(T)
        try:
            sph = SphericalElement.certify(P)
        except CertificateError as e:
            bad.append(f"{T.to_json()} {e}")
            continue
        for ell in (1, 2):
            if act_P0l(ell, sph) != P.scale(eigenvalue_P0l(T, ell)):
                bad.append(f"{T.to_json()} l={ell}")
    return len(bad), bad


def build_checks(shape: Partition, degree: int, relations_only: bool = False) -> List[Check]:
    report = {}

    def relation(name: str) -> Callable[[], Outcome]:
        def run() -> Outcome:
            if "r" not in report:
                report["r"] = relation_suite(shape, degree)
            res = next(c for c in report["r"].checks if c.name == name)
            return res.failures, res.examples
        return run

    names = [
        "hecke_quadratic", "hecke_braid", "hecke_far_commute",
        "theta_commute", "theta_recursion", "theta_T_commute",
        "X_commute", "X_recursion", "X_T_commute",
        "pi_X", "pi_X_n", "pi_inverse",
    ]
    checks = [Check(f"Relasjon {nm}", relation(nm)) for nm in names]
    if relations_only:
        return checks
    checks += [
        Check("theta-spektrum for alle F_tau", lambda: _spectrum(shape, degree)),
        Check("Trianguleritet for F_Top", lambda: _triangular(shape, degree)),
        Check("P_T: formel == eps-projeksjon", lambda: _macdonald(shape, degree)),
        Check("K_T * sum_y prod AB == 1", lambda: _normalization(shape, degree)),
        Check("P_(0,l) egenverdier (l=1,2)", lambda: _eigen(shape, degree)),
    ]
    return checks


def run_checks(checks: List[Check]) -> int:
    failed: List[str] = []
    warned: List[str] = []

    print("\nmacvv self-test\n" + "-" * 60)

    for chk in checks:
        count, examples = chk.run()
        ok = count == 0
        status = "OK" if ok else ("WARN" if chk.warn_only else "FAIL")
        print(f"{status:4}  {chk.name}: {count}")

        if not ok:
            (warned if chk.warn_only else failed).append(chk.name)
            if examples:
                print("      Eksempler:")
                for r in examples[:10]:
                    print("       -", r)

    print("-" * 60)
    if failed:
        print(f"FAILED checks ({len(failed)}):")
        for n in failed:
            print(" -", n)
        return 2

    if warned:
        print(f"WARNINGS ({len(warned)}):")
        for n in warned:
            print(" -", n)

    print("All critical checks passed ✅")
    return 0


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description="Exact self-test of the DAHA representation and Macdonald functions.")
    p.add_argument("--shape", default="2,1", help="Partition of n, comma separated.")
    p.add_argument("--degree", type=int, default=1, help="Maximal polynomial degree.")
    p.add_argument("--relations-only", action="store_true", help="Only the DAHA relation checks.")
    args = p.parse_args(argv)
    shape = partition(int(x) for x in args.shape.split(",") if x.strip())
    return run_checks(build_checks(shape, args.degree, args.relations_only))


if __name__ == "__main__":
    raise SystemExit(main())
