"""Worked example on hyperbolic 3-space, G = SO(3,1), K = SO(3), M = SO(2).

sigma_1 is the defining representation of SO(3) (vector fields / 1-forms),
tau_s the SO(2) character of weight s.  Prints the branching, the two
assumptions, the Laplace eigenvalue as a polynomial in lambda and the
first-order operator eigenvalues that are carried as reference constants only.

    python3 scripts/h3_walkthrough.py
"""

from fractions import Fraction

from ruelle_bands.exactnum import ComplexQuad
from ruelle_bands.reps import (
    IrrepSpec,
    branch_to_M,
    check_assumption1,
    check_assumption2,
    k_group,
    m_group,
    spherical_harmonic,
)
from ruelle_bands.rootdata import real_hyperbolic, restricted_root_data
from ruelle_bands.spectrum import jordan_classify, mu_of_lambda, weight_term

# Eigenvalue of the order-one operator D_1 (curl, or *d on 1-forms) on the
# tau_s component at spectral parameter lambda: -s*i*lambda.  Not computed by
# the package; shown for comparison only.
D1_REFERENCE = {-1: "i*lambda", 0: "0", 1: "-i*lambda"}


def main():
    g = real_hyperbolic(2)
    rd = restricted_root_data(g)
    sigma = spherical_harmonic(k_group(g), 1)
    print(f"{g}: |rho| = {rd.norm_rho}, |alpha0|^2 = {rd.norm_alpha0_sq}")
    print(f"sigma_1 restricted to M: {[str(t) for t, _ in branch_to_M(sigma).entries]}")
    at_rho = ComplexQuad(-rd.norm_rho)
    for s in (-1, 0, 1):
        tau = IrrepSpec(m_group(g), (s,))
        a1, a2 = check_assumption1(sigma, tau), check_assumption2(tau)
        w = weight_term(sigma, tau, g)
        # mu is -lambda^2 - lambda + w; confirm at a sample point
        lam = Fraction(3, 7)
        assert mu_of_lambda(g, sigma, tau, lam) == ComplexQuad(-lam * (lam + 1) + w)
        verdict = jordan_classify(g, tau, a1, a2, at_rho)
        print(
            f"s = {s:+d}: A1 = {a1}, A2 = {a2}, mu(lambda) = -lambda(lambda+1) + {w}, "
            f"D_1 -> {D1_REFERENCE[s]}, at lambda = -|rho|: {verdict.describe()}"
        )


if __name__ == "__main__":
    main()
