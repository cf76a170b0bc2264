"""First-band resonance <-> Bochner Laplacian eigenvalue correspondence.

A first-band resonance ``lambda`` on the line bundle given by ``tau`` is sent
to an eigensection of the Bochner Laplacian on the bundle given by ``sigma``
with eigenvalue

    mu(lambda) = |rho|^2 - (lambda + |rho|)^2 + w(sigma, tau)
               = -lambda (lambda + 2|rho|) + w(sigma, tau),

where the weight term ``w`` is assembled from highest weights and half-sums of
K and M.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import IncompatiblePair
from .exactnum import I, ComplexQuad, QuadExt, as_rational, quad_sqrt
from .reps import (
    IrrepSpec,
    branch_to_M,
    casimir_invariant,
    check_assumption1,
    check_assumption2,
    delta_half_sum,
    k_group,
    m_group,
    multiplicity,
)
from .rootdata import RankOneGroup, restricted_root_data

# lambda is the complex number lambda(H0); exact values live in Q(sqrt d) + i Q(sqrt d)
SpectralParameter = ComplexQuad

LambdaLike = Union[int, Fraction, str, QuadExt, ComplexQuad]

EXCEPTIONAL_SET_CAVEAT = (
    "the pushforward is injective (bijective) only outside a discrete exceptional "
    "subset of the real axis that depends on sigma and tau; this set is not computed"
)
WEAK_REGULARITY_NOTE = "verdict assumes lambda is a weakly regular first band resonance"


def as_lambda(x: LambdaLike) -> ComplexQuad:
    if isinstance(x, str):
        x = as_rational(x)
    return ComplexQuad.coerce(x)


def _check_pair(group: RankOneGroup, sigma: IrrepSpec, tau: IrrepSpec, paper_n1_convention: bool):
    if sigma.group != k_group(group) or tau.group != m_group(group):
        raise IncompatiblePair(f"{sigma} / {tau} are not K / M representations of {group}")
    if multiplicity(sigma, tau, paper_n1_convention) == 0:
        raise IncompatiblePair(f"{tau} does not occur in the restriction of {sigma}")


@lru_cache(maxsize=8192)
def weight_term(
    sigma: IrrepSpec, tau: IrrepSpec, group: RankOneGroup, paper_n1_convention: bool = False
) -> Fraction:
    """|i w_sigma + i delta_k|^2 - |i w_tau + i delta_m|^2 + |i delta_m|^2 - |i delta_k|^2."""
    _check_pair(group, sigma, tau, paper_n1_convention)
    dk = delta_half_sum(sigma.group)
    dm = delta_half_sum(tau.group)
    return (
        (sigma.weight + dk).normsq()
        - (tau.weight + dm).normsq()
        + dm.normsq()
        - dk.normsq()
    )


def closed_form_weight_term(n: int, m: int, m_prime: int) -> Fraction:
    """(m' + (m - m')(m + m' + n - 1)) / (2n) for spherical harmonics of degree m, m'."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(m_prime + (m - m_prime) * (m + m_prime + n - 1), 2 * n)


def _mu_from_weight(lam: ComplexQuad, norm_rho: QuadExt, w: Fraction) -> ComplexQuad:
    return -lam * (lam + 2 * norm_rho) + w


def mu_of_lambda(
    group: RankOneGroup,
    sigma: IrrepSpec,
    tau: IrrepSpec,
    lam: LambdaLike,
    paper_n1_convention: bool = False,
) -> ComplexQuad:
    lam = as_lambda(lam)
    w = weight_term(sigma, tau, group, paper_n1_convention)
    return _mu_from_weight(lam, restricted_root_data(group).norm_rho, w)


def lambda_of_mu(
    group: RankOneGroup,
    sigma: IrrepSpec,
    tau: IrrepSpec,
    mu,
    paper_n1_convention: bool = False,
) -> tuple[ComplexQuad, ComplexQuad]:
    """Both solutions of mu_of_lambda(lambda) = mu, the '+' root first.

    The roots are -|rho| +- sqrt(|rho|^2 + w - mu); a negative discriminant
    gives a conjugate pair on the critical line.
    """
    norm_rho = restricted_root_data(group).norm_rho
    w = weight_term(sigma, tau, group, paper_n1_convention)
    if isinstance(mu, ComplexQuad):
        if mu.im:
            raise ValueError("the Laplace eigenvalue must be real")
        mu = mu.re
    disc = norm_rho * norm_rho + w - QuadExt.coerce(mu)
    if disc.sign() >= 0:
        root = ComplexQuad(quad_sqrt(disc))
    else:
        root = I * quad_sqrt(-disc)
    base = ComplexQuad(-norm_rho)
    return base + root, base - root


@dataclass(frozen=True)
class SmbEntry:
    tau: IrrepSpec
    scalar: ComplexQuad


def smb_I_delta(
    group: RankOneGroup, sigma: IrrepSpec, lam: LambdaLike, paper_n1_convention: bool = False
) -> list[SmbEntry]:
    """smb_I of the Bochner Laplacian on each M-isotypic part of sigma.

    On the tau-component the value is |rho|^2 - lambda^2 - c_sigma + c_tau.
    """
    lam = as_lambda(lam)
    rd = restricted_root_data(group)
    c_sigma = casimir_invariant(sigma)
    base = -lam * lam + rd.norm_rho_sq - c_sigma
    return [
        SmbEntry(tau, base + casimir_invariant(tau))
        for tau, _ in branch_to_M(sigma, paper_n1_convention).entries
    ]


@dataclass(frozen=True)
class JordanVerdict:
    max_size: int
    exact: bool
    hypothesis_note: str = WEAK_REGULARITY_NOTE

    def describe(self) -> str:
        if self.max_size == 1:
            return "no non-trivial first band Jordan blocks"
        if self.exact:
            return "first band Jordan blocks exactly of size 2"
        return "first band Jordan blocks of size at most 2"

    def to_json(self) -> dict:
        return {
            "max_size": self.max_size,
            "exact": self.exact,
            "summary": self.describe(),
            "hypothesis_note": self.hypothesis_note,
        }


def jordan_classify(
    group: RankOneGroup,
    tau: IrrepSpec,
    assumption1: bool,
    assumption2: bool,
    lam: LambdaLike,
) -> JordanVerdict:
    lam = as_lambda(lam)
    norm_rho = restricted_root_data(group).norm_rho
    if lam != ComplexQuad(-norm_rho):
        return JordanVerdict(1, True)
    if not assumption1:
        return JordanVerdict(2, False)
    if assumption2:
        return JordanVerdict(2, True)
    return JordanVerdict(1, True)


@dataclass(frozen=True)
class CorrespondenceReport:
    group: RankOneGroup
    sigma: IrrepSpec
    tau: IrrepSpec
    lam: ComplexQuad
    mu: ComplexQuad
    weight_term: Fraction
    norm_rho: QuadExt
    assumption1: bool
    assumption2: bool
    on_critical_line: bool
    on_real_axis: bool
    jordan: JordanVerdict
    caveats: tuple[str, ...] = field(default=())


def correspondence_report(
    group: RankOneGroup,
    sigma: IrrepSpec,
    tau: IrrepSpec,
    lam: LambdaLike,
    paper_n1_convention: bool = False,
) -> CorrespondenceReport:
    lam = as_lambda(lam)
    w = weight_term(sigma, tau, group, paper_n1_convention)
    norm_rho = restricted_root_data(group).norm_rho
    a1 = check_assumption1(sigma, tau, paper_n1_convention)
    a2 = check_assumption2(tau)
    on_line = lam.re == -norm_rho
    on_axis = lam.is_real
    caveats = [EXCEPTIONAL_SET_CAVEAT]
    if not (on_line or on_axis):
        caveats.append(
            "a first band resonance is either real or has real part -|rho|; "
            "this lambda can not be a first band resonance"
        )
    if group.n == 1:
        caveats.append(
            "n = 1: the weight term uses the scale (i/2) m e_1 for SO(2) characters"
            + (" and only m = 0 is treated as compatible" if paper_n1_convention else "")
        )
    return CorrespondenceReport(
        group=group,
        sigma=sigma,
        tau=tau,
        lam=lam,
        mu=_mu_from_weight(lam, norm_rho, w),
        weight_term=w,
        norm_rho=norm_rho,
        assumption1=a1,
        assumption2=a2,
        on_critical_line=on_line,
        on_real_axis=on_axis,
        jordan=jordan_classify(group, tau, a1, a2, lam),
        caveats=tuple(caveats),
    )
