"""Exact first band resonance / Laplace eigenvalue correspondence on rank-one spaces."""

from .errors import RuelleBandsError
from .exactnum import ComplexQuad, QuadExt
from .reps import IrrepSpec, branch_to_M, k_group, m_group, spherical_harmonic, trivial_rep
from .rootdata import Family, RankOneGroup, band_lines, normalization_convert, restricted_root_data
from .spectrum import (
    correspondence_report,
    jordan_classify,
    lambda_of_mu,
    mu_of_lambda,
    smb_I_delta,
    weight_term,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexQuad",
    "Family",
    "IrrepSpec",
    "QuadExt",
    "RankOneGroup",
    "RuelleBandsError",
    "band_lines",
    "branch_to_M",
    "correspondence_report",
    "jordan_classify",
    "k_group",
    "lambda_of_mu",
    "m_group",
    "mu_of_lambda",
    "normalization_convert",
    "restricted_root_data",
    "smb_I_delta",
    "spherical_harmonic",
    "trivial_rep",
    "weight_term",
]
