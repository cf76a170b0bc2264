"""Command line interface.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 self-test failure.

Representations are written in a small language:

    triv          trivial representation
    sh:<m>        degree-m spherical harmonics (the character z**m on SO(2))
    circ:<s>      character s of the circle SO(2)
    hw:[a,b,...]  explicit dominant highest weight

Spectral parameters are sums of terms ``q``, ``q*rho``/``rho`` and ``qi``
with rational ``q``, e.g. ``-rho+3/2i`` or ``-1/2-2i``.  ``rho`` is |rho|;
with ``--unit alpha0`` the numeric terms are multiples of |alpha0|.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import report
from .errors import RuelleBandsError, UnsupportedFamily
from .exactnum import ComplexQuad, QuadExt, rational_to_json
from .reps import (
    CompactGroupData,
    GroupKind,
    IrrepSpec,
    branch_to_M,
    check_assumption1,
    check_assumption2,
    k_group,
    m_group,
    multiplicity,
    spherical_harmonic,
    trivial_rep,
    weyl_action,
)
from .rootdata import Family, RankOneGroup, band_lines, restricted_root_data
from .selftest import selftest_report
from .spectrum import correspondence_report, jordan_classify

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_SELFTEST = 0, 2, 3, 4


@dataclass(frozen=True)
class JobConfig:
    group: RankOneGroup
    sigma: Optional[str] = None
    tau: Optional[str] = None
    unit: str = "plain"
    normalization: str = "paper"
    paper_n1_convention: bool = False
    output: str = "json"
    float_only: bool = False
    jobs: int = 1


# ---------------------------------------------------------------- parsing


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except UnsupportedFamily as exc:
        raise argparse.ArgumentTypeError(f"UnsupportedFamily: {exc}") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _normalize_minus(text: str) -> str:
    return text.replace("−", "-").replace(" ", "")


def parse_irrep(text: str, grp: CompactGroupData) -> IrrepSpec:
    t = _normalize_minus(text).lower()
    if t == "triv":
        return trivial_rep(grp)
    kind, _, arg = t.partition(":")
    try:
        if kind == "sh":
            return spherical_harmonic(grp, int(arg))
        if kind == "circ":
            if grp.kind is not GroupKind.CIRCLE:
                raise argparse.ArgumentTypeError(f"circ: needs the circle group, not {grp}")
            return IrrepSpec(grp, (int(arg),), label=f"circ:{arg}")
        if kind == "hw":
            coords = json.loads(arg)
            if not isinstance(coords, list):
                raise ValueError
            return IrrepSpec(grp, tuple(coords))
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        if isinstance(exc, RuelleBandsError):
            raise
        raise argparse.ArgumentTypeError(f"malformed representation {text!r}") from None
    raise argparse.ArgumentTypeError(f"unknown representation syntax {text!r}")


_TERM = re.compile(r"([+-]?)([^+-]+)")


def parse_lambda(text: str, g: RankOneGroup, unit: str = "plain") -> ComplexQuad:
    t = _normalize_minus(text).lower()
    if not t or _TERM.sub("", t):
        raise argparse.ArgumentTypeError(f"malformed spectral parameter {text!r}")
    rd = restricted_root_data(g)
    scale = rd.norm_alpha0 if unit == "alpha0" else QuadExt(1)
    re_part, im_part = QuadExt(0), QuadExt(0)
    for sign, body in _TERM.findall(t):
        s = -1 if sign == "-" else 1
        try:
            if body.endswith("i"):
                coeff = body[:-1].rstrip("*")
                im_part = im_part + s * Fraction(coeff or 1) * scale
            elif body.endswith("rho"):
                coeff = body[:-3].rstrip("*")
                re_part = re_part + s * Fraction(coeff or 1) * rd.norm_rho
            else:
                re_part = re_part + s * Fraction(body) * scale
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"malformed spectral parameter {text!r}") from None
    return ComplexQuad(re_part, im_part)


def parse_grid(text: str) -> list[Fraction]:
    """``start:stop:step`` with rational entries, stop included."""
    parts = _normalize_minus(text).split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be start:stop:step, got {text!r}")
    start, stop, step = (_rational(p) for p in parts)
    if step <= 0:
        raise argparse.ArgumentTypeError("grid step must be positive")
    if stop < start:
        raise argparse.ArgumentTypeError("grid stop is below start")
    count = int((stop - start) / step) + 1
    return [start + k * step for k in range(count)]


# -------------------------------------------------------------- rendering


def _strip_exact(obj):
    """--float: replace every {"exact", "approx"} pair by its approximation."""
    if isinstance(obj, dict):
        if set(obj) == {"exact", "approx"}:
            return obj["approx"]
        return {k: _strip_exact(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_strip_exact(v) for v in obj]
    return obj


def _fmt(x) -> str:
    if isinstance(x, dict) and set(x) == {"exact", "approx"}:
        return _fmt(x["approx"])
    if isinstance(x, dict) and set(x) == {"re", "im"}:
        return f"{x['re']:+.6g}{x['im']:+.6g}i"
    if isinstance(x, float):
        return f"{x:.6g}"
    if isinstance(x, (dict, list)):
        return report.dumps(x)
    return str(x)


def _table(rows: list[dict], columns: Sequence[str]) -> str:
    cells = [[_fmt(r.get(c, "")) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(line.rstrip() for line in lines)


def _emit(payload, cfg: JobConfig, columns: Sequence[str] = (), rows_key: Optional[str] = None):
    if cfg.float_only:
        payload = _strip_exact(payload)
    if cfg.output == "table":
        rows = payload[rows_key] if rows_key else (payload if isinstance(payload, list) else [payload])
        if not columns:
            columns = sorted(rows[0]) if rows else ()
        print(_table(rows, columns))
    else:
        print(report.dumps(payload))


# ------------------------------------------------------------- commands


def _config(args) -> JobConfig:
    return JobConfig(
        group=RankOneGroup(args.family, args.n),
        sigma=getattr(args, "sigma", None),
        tau=getattr(args, "tau", None),
        unit=getattr(args, "unit", "plain"),
        normalization=getattr(args, "normalization", "paper"),
        paper_n1_convention=getattr(args, "paper_n1_convention", False),
        output=args.output,
        float_only=args.float,
        jobs=getattr(args, "jobs", 1),
    )


def _sigma_tau(cfg: JobConfig) -> tuple[IrrepSpec, IrrepSpec]:
    sigma = parse_irrep(cfg.sigma, k_group(cfg.group))
    tau = parse_irrep(cfg.tau, m_group(cfg.group))
    return sigma, tau


def cmd_describe_group(args) -> int:
    cfg = _config(args)
    g = cfg.group
    rd = restricted_root_data(g)
    payload = {
        "group": report.group_json(g),
        "root_data": report.root_data_json(g, rd, band_lines(g, args.k_max)),
        "dim_g": (g.n + 1) * (g.n + 2) // 2 if g.family is Family.REAL_HYPERBOLIC else (g.n + 2) ** 2 - 1,
    }
    if g.family is Family.REAL_HYPERBOLIC:
        payload["K"] = k_group(g).name
        payload["M"] = m_group(g).name
        payload["norm_rho_sq"] = rational_to_json(rd.norm_rho_sq)
    _emit(payload, cfg, columns=("group", "dim_g", "K", "M", "norm_rho_sq"))
    return EXIT_OK


def cmd_bands(args) -> int:
    cfg = _config(args)
    g = cfg.group
    bands = band_lines(g, args.k_max)
    rows = [{"k": k, "real_part": report.dual(x)} for k, x in enumerate(bands.lines)]
    payload = {"group": report.group_json(g), "bands": rows, "note": bands.note}
    _emit(payload, cfg, columns=("k", "real_part"), rows_key="bands")
    return EXIT_OK


def cmd_branch(args) -> int:
    cfg = _config(args)
    sigma = parse_irrep(cfg.sigma, k_group(cfg.group))
    b = branch_to_M(sigma, cfg.paper_n1_convention)
    payload = report.branching_json(b)
    payload["group"] = report.group_json(cfg.group)
    _emit(payload, cfg, columns=("tau", "mult"), rows_key="entries")
    return EXIT_OK


def _lambda_points(args, cfg: JobConfig) -> list[ComplexQuad]:
    base = parse_lambda(args.lam, cfg.group, cfg.unit) if args.lam is not None else ComplexQuad()
    if args.grid is None and args.grid_imag is None:
        if args.lam is None:
            raise argparse.ArgumentTypeError("give --lambda, --grid or --grid-imag")
        return [base]
    scale = restricted_root_data(cfg.group).norm_alpha0 if cfg.unit == "alpha0" else QuadExt(1)
    res = parse_grid(args.grid) if args.grid else [Fraction(0)]
    ims = parse_grid(args.grid_imag) if args.grid_imag else [Fraction(0)]
    return [base + ComplexQuad(r * scale, i * scale) for r, i in itertools.product(res, ims)]


def cmd_correspond(args) -> int:
    cfg = _config(args)
    sigma, tau = _sigma_tau(cfg)
    points = _lambda_points(args, cfg)

    def one(lam):
        r = correspondence_report(cfg.group, sigma, tau, lam, cfg.paper_n1_convention)
        return report.correspondence_json(r, cfg.normalization)

    if cfg.jobs > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(one, points))  # map preserves input order
    else:
        results = [one(p) for p in points]
    payload = results[0] if args.grid is None and args.grid_imag is None else {"results": results}
    cols = ("lambda", "mu", "on_critical_line", "on_real_axis")
    _emit(payload, cfg, columns=cols, rows_key=None if "results" not in payload else "results")
    return EXIT_OK


def cmd_jordan(args) -> int:
    cfg = _config(args)
    sigma, tau = _sigma_tau(cfg)
    lam = parse_lambda(args.lam, cfg.group, cfg.unit)
    a1 = check_assumption1(sigma, tau, cfg.paper_n1_convention)
    a2 = check_assumption2(tau)
    verdict = jordan_classify(cfg.group, tau, a1, a2, lam)
    payload = {
        "group": report.group_json(cfg.group),
        "sigma": sigma.to_json(),
        "tau": tau.to_json(),
        "lambda": report.dual(lam),
        "assumption1": a1,
        "assumption2": a2,
        "jordan": report.jordan_json(verdict),
    }
    _emit(payload, cfg, columns=("lambda", "assumption1", "assumption2", "jordan"))
    return EXIT_OK


def cmd_check_assumptions(args) -> int:
    cfg = _config(args)
    sigma = parse_irrep(cfg.sigma, k_group(cfg.group))
    tau = parse_irrep(cfg.tau, m_group(cfg.group))
    payload = {
        "group": report.group_json(cfg.group),
        "sigma": sigma.to_json(),
        "tau": tau.to_json(),
        "multiplicity": multiplicity(sigma, tau, cfg.paper_n1_convention),
        "weyl_image": weyl_action(tau).to_json(),
        "assumption1": check_assumption1(sigma, tau, cfg.paper_n1_convention),
        "assumption2": check_assumption2(tau),
    }
    _emit(payload, cfg, columns=("multiplicity", "assumption1", "assumption2"))
    return EXIT_OK


def cmd_selftest(args) -> int:
    rep = selftest_report(args.profile, inject_fault=args.inject_fault)
    if args.output == "table":
        print(_table(rep["checks"], ("check_name", "status", "witness")))
        print(f"profile={rep['profile']} passed={rep['passed']} seconds={rep['seconds']}")
    else:
        print(report.dumps(rep))
    return EXIT_OK if rep["passed"] else EXIT_SELFTEST


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ruelle-bands", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, group=True):
        if group:
            sp.add_argument("--family", type=_family, default=Family.REAL_HYPERBOLIC, help="so | su")
            sp.add_argument("--n", type=_positive_int, required=True, help="dimension of the boundary sphere")
        sp.add_argument("--output", choices=("json", "table"), default="json")
        sp.add_argument("--float", action="store_true", help="print approximations only")
        sp.add_argument("--paper-n1-convention", action="store_true",
                        help="n = 1: treat only the trivial K-character as compatible")

    def lam_opts(sp, grid=True):
        sp.add_argument("--lambda", dest="lam", help="spectral parameter, e.g. -rho+2i")
        sp.add_argument("--unit", choices=("plain", "alpha0"), default="plain")
        if grid:
            sp.add_argument("--grid", help="real parts start:stop:step (inclusive)")
            sp.add_argument("--grid-imag", help="imaginary parts start:stop:step (inclusive)")

    sp = sub.add_parser("describe-group", help="restricted root data and band lines")
    common(sp)
    sp.add_argument("--bands", "--k-max", dest="k_max", type=int, default=3, help="number of band lines after the first")
    sp.set_defaults(func=cmd_describe_group)

    sp = sub.add_parser("bands", help="real parts of the band lines")
    common(sp)
    sp.add_argument("--k-max", type=int, default=3)
    sp.set_defaults(func=cmd_bands)

    sp = sub.add_parser("branch", help="restriction of a K-representation to M")
    common(sp)
    sp.add_argument("--sigma", required=True)
    sp.set_defaults(func=cmd_branch)

    sp = sub.add_parser("correspond", help="first band resonance -> Laplace eigenvalue")
    common(sp)
    sp.add_argument("--sigma", required=True)
    sp.add_argument("--tau", required=True)
    lam_opts(sp)
    sp.add_argument("--normalization", choices=("paper", "curvature_minus_one"), default="paper")
    sp.add_argument("--jobs", type=_positive_int, default=1)
    sp.set_defaults(func=cmd_correspond)

    sp = sub.add_parser("jordan", help="maximal first band Jordan block size")
    common(sp)
    sp.add_argument("--sigma", required=True)
    sp.add_argument("--tau", required=True)
    lam_opts(sp, grid=False)
    sp.set_defaults(func=cmd_jordan)

    sp = sub.add_parser("check-assumptions", help="multiplicity one and Weyl invariance")
    common(sp)
    sp.add_argument("--sigma", required=True)
    sp.add_argument("--tau", required=True)
    sp.set_defaults(func=cmd_check_assumptions)

    sp = sub.add_parser("selftest", help="cross-check closed forms against the matrix oracle")
    common(sp, group=False)
    sp.add_argument("--profile", choices=("fast", "full"), default=None,
                    help="defaults to $RUELLE_BANDS_PROFILE or fast")
    sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "jordan" and args.lam is None:
        parser.error("jordan needs --lambda")
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        print(f"ruelle-bands: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuelleBandsError as exc:
        print(f"ruelle-bands: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
