"""Cross-module verification gates: closed-form tables vs the matrix oracle."""

from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .liealg import (
    RepKind,
    Subgroup,
    build_algebra,
    casimir_scalar,
    check_cartan,
    check_jacobi,
    check_killing_ad_trace,
    oracle_weyl_action,
    restricted_grading,
    verify_horocycle_brackets,
)
from .reps import (
    IrrepSpec,
    branch_to_M,
    casimir_invariant,
    k_group,
    m_group,
    spherical_harmonic,
    weyl_action,
)
from .rootdata import Family, RankOneGroup, restricted_root_data
from .spectrum import closed_form_weight_term, weight_term

PROFILE_ENV = "RUELLE_BANDS_PROFILE"


@dataclass(frozen=True)
class Profile:
    name: str
    structure_max_n: int
    casimir_max_n: int
    sym2: bool


PROFILES = {
    "fast": Profile("fast", structure_max_n=3, casimir_max_n=3, sym2=False),
    "full": Profile("full", structure_max_n=4, casimir_max_n=5, sym2=True),
}


def resolve_profile(name: Optional[str] = None) -> Profile:
    name = name or os.environ.get(PROFILE_ENV, "fast")
    try:
        return PROFILES[name]
    except KeyError:
        raise ValueError(f"unknown selftest profile {name!r} (fast|full)") from None


@dataclass(frozen=True)
class GateResult:
    check_name: str
    status: str  # "pass" | "fail"
    witness: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"check_name": self.check_name, "status": self.status, "witness": self.witness}


def _result(name: str, ok: bool, witness: str = "") -> GateResult:
    return GateResult(name, "pass" if ok else "fail", "" if ok else witness)


def root_table_gate(g: RankOneGroup, alg=None) -> GateResult:
    alg = alg or build_algebra(g)
    dims = restricted_grading(alg)
    rd = restricted_root_data(g)
    expected = (rd.m_alpha, rd.m_2alpha, rd.norm_alpha0_sq)
    got = (dims.alpha, dims.two_alpha, dims.norm_alpha0_sq)
    ok = expected == got and dims.alpha == dims.minus_alpha and dims.two_alpha == dims.minus_two_alpha
    ok = ok and alg.dim == 2 * rd.m_alpha + 2 * rd.m_2alpha + dims.m + 1
    return _result(f"root_table[{g}]", ok, f"table {expected} vs oracle {got}")


def structure_gates(g: RankOneGroup, alg=None) -> list[GateResult]:
    alg = alg or build_algebra(g)
    out = []
    for name, check in (
        ("jacobi", check_jacobi),
        ("killing_ad_trace", check_killing_ad_trace),
        ("cartan", check_cartan),
        ("horocycle_brackets", verify_horocycle_brackets),
    ):
        res = check(alg)
        out.append(_result(f"{name}[{g}]", res.ok, res.witness or ""))
    return out


def casimir_gates(g: RankOneGroup, sym2: bool) -> list[GateResult]:
    alg = build_algebra(g)
    K, M = k_group(g), m_group(g)
    cases = [(RepKind.DEFINING, Subgroup.K, spherical_harmonic(K, 1))]
    if M.m >= 2:
        cases.append((RepKind.DEFINING, Subgroup.M, spherical_harmonic(M, 1)))
    if sym2:
        cases.append((RepKind.SYM2_TRACELESS, Subgroup.K, spherical_harmonic(K, 2)))
        if M.m >= 2:
            cases.append((RepKind.SYM2_TRACELESS, Subgroup.M, spherical_harmonic(M, 2)))
    out = []
    for rep, sub, irrep in cases:
        oracle = casimir_scalar(alg, rep, sub)
        table = casimir_invariant(irrep)
        out.append(
            _result(f"casimir[{g},{rep.value},{sub.value}]", oracle == table, f"oracle {oracle} vs weights {table}")
        )
    return out


def _small_dominant_weights(grp, bound: int = 2) -> Iterator[IrrepSpec]:
    for hw in itertools.product(range(-bound, bound + 1), repeat=grp.rank):
        try:
            yield IrrepSpec(grp, hw)
        except ValueError:
            continue


def weyl_gate(g: RankOneGroup) -> GateResult:
    alg = build_algebra(g)
    for tau in _small_dominant_weights(m_group(g)):
        a, b = oracle_weyl_action(alg, tau), weyl_action(tau)
        if a != b:
            return _result(f"weyl_action[{g}]", False, f"{tau}: oracle {a} vs table {b}")
    return _result(f"weyl_action[{g}]", True)


def closed_form_gate(n: int, m_max: int = 5) -> GateResult:
    g = RankOneGroup(Family.REAL_HYPERBOLIC, n)
    K, M = k_group(g), m_group(g)
    for m in range(m_max + 1):
        sigma = spherical_harmonic(K, m)
        for tau, _ in branch_to_M(sigma).entries:
            if tau.highest_weight[1:] and any(tau.highest_weight[1:]):
                continue
            mp = tau.highest_weight[0]
            got = weight_term(sigma, tau, g)
            want = closed_form_weight_term(n, m, mp)
            if got != want:
                return _result(f"closed_form_weight_term[n={n}]", False, f"m={m}, m'={mp}: {got} vs {want}")
    return _result(f"closed_form_weight_term[n={n}]", True)


def run_gates(profile: Profile, inject_fault: bool = False) -> list[GateResult]:
    results: list[GateResult] = []
    for family in Family:
        for n in range(1, profile.structure_max_n + 1):
            g = RankOneGroup(family, n)
            alg = build_algebra(g)
            if inject_fault and family is Family.REAL_HYPERBOLIC and n == 2:
                sc = alg.sc_num.copy()
                sc[0, 1] += 1
                alg = alg.with_structure_constants(sc)
            results.append(root_table_gate(g, alg))
            results.extend(structure_gates(g, alg))
    for n in range(2, profile.casimir_max_n + 1):
        g = RankOneGroup(Family.REAL_HYPERBOLIC, n)
        results.extend(casimir_gates(g, profile.sym2))
        results.append(weyl_gate(g))
    for n in range(2, 9):
        results.append(closed_form_gate(n))
    return results


def selftest_report(profile_name: Optional[str] = None, inject_fault: bool = False) -> dict:
    profile = resolve_profile(profile_name)
    t0 = time.perf_counter()
    results = run_gates(profile, inject_fault=inject_fault)
    return {
        "profile": profile.name,
        "passed": all(r.passed for r in results),
        "seconds": round(time.perf_counter() - t0, 3),
        "checks": [r.to_json() for r in results],
    }
