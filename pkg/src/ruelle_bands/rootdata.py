"""Restricted-root data of the rank-one families and the resonance band lines.

With ``H0`` the unit vector of ``a`` dual to the reduced root, the Killing form
restricted to ``a`` gives ``1 = (2*m_alpha + 8*m_2alpha) * alpha0(H0)**2``,
hence ``|alpha0|**2 = 1/(2 m_alpha + 8 m_2alpha)`` and
``rho = (m_alpha + 2 m_2alpha)/2 * alpha0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedFamily
from .exactnum import ComplexQuad, QuadExt, as_rational, sqrt_rational


class Family(enum.Enum):
    REAL_HYPERBOLIC = "so"  # SO(n+1,1)_0
    COMPLEX_HYPERBOLIC = "su"  # SU(n+1,1)

    @classmethod
    def parse(cls, name: str) -> "Family":
        key = name.strip().lower()
        aliases = {
            "so": cls.REAL_HYPERBOLIC,
            "real": cls.REAL_HYPERBOLIC,
            "realhyperbolic": cls.REAL_HYPERBOLIC,
            "su": cls.COMPLEX_HYPERBOLIC,
            "complex": cls.COMPLEX_HYPERBOLIC,
            "complexhyperbolic": cls.COMPLEX_HYPERBOLIC,
        }
        try:
            return aliases[key.replace("_", "").replace("-", "")]
        except KeyError:
            raise UnsupportedFamily(
                f"family {name!r} is not supported (only 'so' and 'su')"
            ) from None


@dataclass(frozen=True)
class RankOneGroup:
    family: Family
    n: int

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family.parse(self.family))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def name(self) -> str:
        if self.family is Family.REAL_HYPERBOLIC:
            return f"SO({self.n + 1},1)"
        return f"SU({self.n + 1},1)"

    def __str__(self):
        return self.name


def real_hyperbolic(n: int) -> RankOneGroup:
    return RankOneGroup(Family.REAL_HYPERBOLIC, n)


def complex_hyperbolic(n: int) -> RankOneGroup:
    return RankOneGroup(Family.COMPLEX_HYPERBOLIC, n)


@dataclass(frozen=True)
class RestrictedRootData:
    m_alpha: int
    m_2alpha: int
    norm_alpha0_sq: Fraction
    rho_coeff: Fraction
    norm_rho: QuadExt
    norm_alpha0: QuadExt

    @property
    def norm_rho_sq(self) -> Fraction:
        return self.rho_coeff ** 2 * self.norm_alpha0_sq

    @property
    def radicand(self) -> int:
        return self.norm_alpha0.d


# Multiplicities (dim g_alpha0, dim g_2alpha0).  The SU row is confirmed
# against the explicit matrix realization in liealg.restricted_grading.
_MULTIPLICITIES = {
    Family.REAL_HYPERBOLIC: lambda n: (n, 0),
    Family.COMPLEX_HYPERBOLIC: lambda n: (2 * n, 1),
}


def restricted_root_data(g: RankOneGroup) -> RestrictedRootData:
    m1, m2 = _MULTIPLICITIES[g.family](g.n)
    alpha_sq = Fraction(1, 2 * m1 + 8 * m2)
    rho_coeff = Fraction(m1 + 2 * m2, 2)
    norm_alpha0 = sqrt_rational(alpha_sq)
    return RestrictedRootData(
        m_alpha=m1,
        m_2alpha=m2,
        norm_alpha0_sq=alpha_sq,
        rho_coeff=rho_coeff,
        norm_rho=rho_coeff * norm_alpha0,
        norm_alpha0=norm_alpha0,
    )


BAND_NOTE = (
    "a resonance either lies on the real axis (Im lambda = 0) or has real part "
    "on one of these lines"
)


@dataclass(frozen=True)
class BandStructure:
    norm_rho: QuadExt
    norm_alpha0: QuadExt
    lines: tuple[QuadExt, ...]
    note: str = BAND_NOTE


def band_lines(g: RankOneGroup, k_max: int) -> BandStructure:
    """Real parts ``-|rho| - k*|alpha0|`` for ``k = 0..k_max``."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    rd = restricted_root_data(g)
    lines = tuple(-rd.norm_rho - k * rd.norm_alpha0 for k in range(k_max + 1))
    return BandStructure(rd.norm_rho, rd.norm_alpha0, lines)


def normalization_convert(g: RankOneGroup, lambda_k, mu_k):
    """Rescale (lambda, mu) to the curvature -1 metric on real hyperbolic space.

    The Killing-form metric on p is 2n times smaller than the constant
    curvature -1 metric, so lambda scales by sqrt(2n) and mu by 2n.
    """
    if g.family is not Family.REAL_HYPERBOLIC:
        raise UnsupportedFamily("normalization conversion is defined for SO(n+1,1) only")
    scale = sqrt_rational(2 * g.n)
    lam = ComplexQuad.coerce(lambda_k)
    lam_dfg = ComplexQuad(lam.re * scale, lam.im * scale)
    if isinstance(mu_k, ComplexQuad):
        mu_dfg = ComplexQuad(mu_k.re * (2 * g.n), mu_k.im * (2 * g.n))
    elif isinstance(mu_k, QuadExt):
        mu_dfg = mu_k * (2 * g.n)
    else:
        mu_dfg = as_rational(mu_k) * (2 * g.n)
    return lam_dfg, mu_dfg
