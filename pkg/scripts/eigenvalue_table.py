"""Laplace eigenvalues attached to first band resonances on the critical line.

For each real hyperbolic dimension and each compatible pair (sigma_m, tau_m')
of spherical harmonics, lists the bottom value mu(-|rho|) = |rho|^2 + w and the
eigenvalue at a few points -|rho| + i t, in both normalizations.

    python3 scripts/eigenvalue_table.py --n-max 5 --m-max 3
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from ruelle_bands.exactnum import ComplexQuad
from ruelle_bands.reps import k_group, m_group, spherical_harmonic
from ruelle_bands.rootdata import normalization_convert, real_hyperbolic, restricted_root_data
from ruelle_bands.spectrum import mu_of_lambda


@dataclass(frozen=True)
class TableConfig:
    n_max: int = 4
    m_max: int = 2
    t_values: tuple = (Fraction(0), Fraction(1), Fraction(2))


def rows(cfg: TableConfig):
    for n in range(2, cfg.n_max + 1):
        g = real_hyperbolic(n)
        rho = restricted_root_data(g).norm_rho
        for m in range(cfg.m_max + 1):
            for mp in range(m + 1):
                sigma = spherical_harmonic(k_group(g), m)
                tau = spherical_harmonic(m_group(g), mp)
                for t in cfg.t_values:
                    lam = ComplexQuad(-rho, t)
                    mu = mu_of_lambda(g, sigma, tau, lam)
                    _, mu_c = normalization_convert(g, lam, mu)
                    yield n, m, mp, t, mu.re, mu_c.re


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--m-max", type=int, default=2)
    args = p.parse_args(argv)
    cfg = TableConfig(n_max=args.n_max, m_max=args.m_max)
    print(f"{'n':>2} {'m':>2} {'m_':>2} {'Im lam':>6}  {'mu (Killing)':>14}  {'mu (curv -1)':>14}")
    for n, m, mp, t, mu, mu_c in rows(cfg):
        print(f"{n:>2} {m:>2} {mp:>2} {str(t):>6}  {str(mu):>14}  {str(mu_c):>14}")


if __name__ == "__main__":
    main()
