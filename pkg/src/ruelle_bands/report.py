"""JSON rendering of results: exact values plus a float approximation.

Output is canonical (sorted keys, fixed separators) so that parsing and
re-serializing a report reproduces it byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exactnum import ComplexQuad, QuadExt, rational_to_json
from .reps import BranchingDecomposition, IrrepSpec
from .rootdata import BandStructure, RankOneGroup, RestrictedRootData, normalization_convert
from .spectrum import CorrespondenceReport, JordanVerdict


def approx(x) -> float | dict:
    """Float rendering to 15 significant digits."""
    if isinstance(x, ComplexQuad):
        return {"re": approx(x.re), "im": approx(x.im)}
    return float(f"{float(x):.15g}")


def exact(x):
    if isinstance(x, (QuadExt, ComplexQuad)):
        return x.to_json()
    return rational_to_json(x)


def dual(x) -> dict:
    return {"exact": exact(x), "approx": approx(x)}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def group_json(g: RankOneGroup) -> dict:
    return {"family": g.family.value, "n": g.n, "name": g.name}


def root_data_json(g: RankOneGroup, rd: RestrictedRootData, bands: BandStructure | None) -> dict:
    lines = bands.lines if bands is not None else ()
    return {
        "family": g.family.value,
        "n": g.n,
        "m_alpha": rd.m_alpha,
        "m_2alpha": rd.m_2alpha,
        "norm_alpha0_sq": rational_to_json(rd.norm_alpha0_sq),
        "rho_coeff": rational_to_json(rd.rho_coeff),
        "norm_rho": rd.norm_rho.to_json(),
        "lines": [x.to_json() for x in lines],
        "approx": {
            "norm_rho": approx(rd.norm_rho),
            "norm_alpha0": approx(rd.norm_alpha0),
            "lines": [approx(x) for x in lines],
        },
        "note": bands.note if bands is not None else "",
    }


def branching_json(b: BranchingDecomposition) -> dict:
    return {"sigma": b.parent.to_json(), "entries": b.to_json()}


def jordan_json(v: JordanVerdict) -> dict:
    return v.to_json()


def correspondence_json(r: CorrespondenceReport, normalization: str = "paper") -> dict:
    lam, mu = r.lam, r.mu
    out = {
        "group": group_json(r.group),
        "sigma": r.sigma.to_json(),
        "tau": r.tau.to_json(),
        "normalization": normalization,
        "weight_term": dual(r.weight_term),
        "norm_rho": dual(r.norm_rho),
        "assumption1": r.assumption1,
        "assumption2": r.assumption2,
        "on_critical_line": r.on_critical_line,
        "on_real_axis": r.on_real_axis,
        "jordan": jordan_json(r.jordan),
        "caveats": list(r.caveats),
    }
    if normalization == "curvature_minus_one":
        lam_c, mu_c = normalization_convert(r.group, lam, mu)
        out["lambda"] = dual(lam_c)
        out["mu"] = dual(mu_c)
        out["paper_convention"] = {"lambda": dual(lam), "mu": dual(mu)}
    else:
        out["lambda"] = dual(lam)
        out["mu"] = dual(mu)
    return out


def irrep_from_json(obj, group) -> IrrepSpec:
    return IrrepSpec(group, tuple(obj["hw"]))


def parse_dual(obj):
    """Inverse of :func:`dual` for the exact part."""
    e = obj["exact"]
    if isinstance(e, str):
        return Fraction(e)
    if "re" in e:
        return ComplexQuad.from_json(e)
    return QuadExt.from_json(e)
