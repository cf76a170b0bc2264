from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ruelle_bands.errors import IncompatiblePair, IncompatibleRadicand
from ruelle_bands.exactnum import ComplexQuad, QuadExt
from ruelle_bands.reps import IrrepSpec, branch_to_M, k_group, m_group, spherical_harmonic, trivial_rep
from ruelle_bands.rootdata import real_hyperbolic, restricted_root_data
from ruelle_bands.spectrum import (
    EXCEPTIONAL_SET_CAVEAT,
    as_lambda,
    closed_form_weight_term,
    correspondence_report,
    jordan_classify,
    lambda_of_mu,
    mu_of_lambda,
    smb_I_delta,
    weight_term,
)

small = st.fractions(max_denominator=12).filter(lambda q: abs(q) < 50)


@st.composite
def harmonic_pairs(draw, n_max=8):
    n = draw(st.integers(2, n_max))
    m = draw(st.integers(0, 6))
    mp = draw(st.integers(0, m))
    g = real_hyperbolic(n)
    return g, spherical_harmonic(k_group(g), m), spherical_harmonic(m_group(g), mp)


@given(harmonic_pairs())
def test_weight_term_closed_form_on_harmonics(case):
    g, sigma, tau = case
    assert weight_term(sigma, tau, g) == closed_form_weight_term(g.n, sigma.highest_weight[0], tau.highest_weight[0])


def test_weight_term_at_n1_differs_from_killing_closed_form():
    # On the hyperbolic plane the circle characters carry the scale (i/2) m e_1,
    # so the weight term is m^2/4; the closed form evaluated at n = 1 gives m^2/2,
    # which is what the Killing-form normalization of so(2,1) would produce.
    g = real_hyperbolic(1)
    for m in range(1, 5):
        sigma = IrrepSpec(k_group(g), (m,))
        w = weight_term(sigma, trivial_rep(m_group(g)), g)
        assert w == Fraction(m * m, 4)
        assert closed_form_weight_term(1, m, 0) == 2 * w


def test_incompatible_pairs():
    g = real_hyperbolic(2)
    with pytest.raises(IncompatiblePair):
        weight_term(spherical_harmonic(k_group(g), 1), IrrepSpec(m_group(g), (2,)), g)
    with pytest.raises(IncompatiblePair):
        weight_term(spherical_harmonic(k_group(g), 1), trivial_rep(m_group(real_hyperbolic(3))), g)
    g1 = real_hyperbolic(1)
    with pytest.raises(IncompatiblePair):
        weight_term(IrrepSpec(k_group(g1), (1,)), trivial_rep(m_group(g1)), g1, paper_n1_convention=True)


@given(harmonic_pairs(), small, small)
def test_reflection_symmetry(case, a, b):
    g, sigma, tau = case
    lam = ComplexQuad(a, b)
    rho = restricted_root_data(g).norm_rho
    assert mu_of_lambda(g, sigma, tau, lam) == mu_of_lambda(g, sigma, tau, -2 * rho - lam)


@given(harmonic_pairs(), small)
def test_critical_line_gives_real_eigenvalues(case, t):
    g, sigma, tau = case
    rho = restricted_root_data(g).norm_rho
    mu = mu_of_lambda(g, sigma, tau, ComplexQuad(-rho, t))
    assert mu.is_real
    # and the eigenvalue is at least |rho|^2 + w
    assert mu.re >= rho * rho + weight_term(sigma, tau, g)


@given(harmonic_pairs(), small)
@settings(max_examples=50)
def test_lambda_of_mu_round_trip(case, a):
    g, sigma, tau = case
    lam = ComplexQuad(a)
    plus, minus = lambda_of_mu(g, sigma, tau, mu_of_lambda(g, sigma, tau, lam))
    assert lam in (plus, minus)
    rho = restricted_root_data(g).norm_rho
    assert plus + minus == ComplexQuad(-2 * rho)


def test_lambda_of_mu_outside_field():
    g = real_hyperbolic(3)  # |rho| = sqrt(6)/4
    sigma, tau = spherical_harmonic(k_group(g), 0), trivial_rep(m_group(g))
    with pytest.raises(IncompatibleRadicand):
        lambda_of_mu(g, sigma, tau, QuadExt(Fraction(1, 3), 1, 6))
    with pytest.raises(ValueError):
        lambda_of_mu(g, sigma, tau, ComplexQuad(0, 1))


@given(harmonic_pairs(), small, small)
def test_smb_shift(case, a, b):
    g, sigma, tau = case
    lam = ComplexQuad(a, b)
    rho = restricted_root_data(g).norm_rho
    entries = {e.tau: e.scalar for e in smb_I_delta(g, sigma, lam + rho)}
    assert set(entries) == {t for t, _ in branch_to_M(sigma).entries}
    assert entries[tau] == mu_of_lambda(g, sigma, tau, lam)


def test_as_lambda_parses_strings():
    assert as_lambda("-1/2") == ComplexQuad(Fraction(-1, 2))


def test_jordan_verdict_text():
    g = real_hyperbolic(2)
    tau = trivial_rep(m_group(g))
    at_rho = ComplexQuad(-restricted_root_data(g).norm_rho)
    v = jordan_classify(g, tau, False, True, at_rho)
    assert (v.max_size, v.exact) == (2, False)
    assert v.describe() == "first band Jordan blocks of size at most 2"
    assert v.to_json()["hypothesis_note"]


def test_correspondence_report_caveats():
    g = real_hyperbolic(2)
    sigma, tau = spherical_harmonic(k_group(g), 1), trivial_rep(m_group(g))
    r = correspondence_report(g, sigma, tau, ComplexQuad(1, 1))
    assert EXCEPTIONAL_SET_CAVEAT in r.caveats
    assert not r.on_critical_line and not r.on_real_axis
    assert len(r.caveats) == 2
    r = correspondence_report(g, sigma, tau, ComplexQuad(Fraction(-1, 2), 3))
    assert r.on_critical_line and r.mu.is_real and len(r.caveats) == 1
    g1 = real_hyperbolic(1)
    r1 = correspondence_report(g1, trivial_rep(k_group(g1)), trivial_rep(m_group(g1)), 0)
    assert any(c.startswith("n = 1") for c in r1.caveats)
