import math

import numpy as np
import pytest

from ruelle_bands.errors import FactorizationDiverged
from ruelle_bands.liealg import build_algebra
from ruelle_bands.liealg.iwasawa import (
    exp_H0,
    iwasawa_opposite,
    phi,
    random_group_element,
    random_k,
    random_n_minus,
)
from ruelle_bands.rootdata import complex_hyperbolic, real_hyperbolic

GROUPS = [real_hyperbolic(1), real_hyperbolic(2), real_hyperbolic(4), complex_hyperbolic(1), complex_hyperbolic(2)]


@pytest.fixture(params=GROUPS, ids=str)
def alg(request):
    return build_algebra(request.param)


def test_identity(alg):
    f = iwasawa_opposite(alg, np.eye(alg.size))
    assert f.t == pytest.approx(0, abs=1e-14)
    assert phi(alg, np.eye(alg.size)) == pytest.approx(1.0)


def test_phi_along_H0(alg):
    g = exp_H0(alg, 1.0)
    assert phi(alg, g) == pytest.approx(math.exp(-1), rel=1e-12)


def test_recovery_and_invariances(alg):
    rng = np.random.default_rng(0)
    for _ in range(20):
        g, k0, t0, n0 = random_group_element(alg, rng)
        f = iwasawa_opposite(alg, g)
        assert f.t == pytest.approx(t0, abs=1e-9)
        np.testing.assert_allclose(f.k, k0, atol=1e-9)
        np.testing.assert_allclose(f.n_minus, n0, atol=1e-9)
        # K is orthogonal (in the realified picture for SU as well)
        np.testing.assert_allclose(f.k.T @ f.k, np.eye(alg.size), atol=1e-10)
        p = phi(alg, g)
        assert phi(alg, g @ random_n_minus(alg, rng)) == pytest.approx(p, rel=1e-10)
        assert phi(alg, random_k(alg, rng) @ g) == pytest.approx(p, rel=1e-10)
        assert phi(alg, g @ exp_H0(alg, 0.7)) == pytest.approx(math.exp(-0.7) * p, rel=1e-10)


def test_non_finite_input_rejected():
    alg = build_algebra(real_hyperbolic(1))
    g = np.eye(alg.size)
    g[0, 0] = np.nan
    with pytest.raises(FactorizationDiverged):
        iwasawa_opposite(alg, g)


def test_non_group_element_rejected():
    alg = build_algebra(real_hyperbolic(2))
    g = np.eye(alg.size)
    g[0, 1] = 3.0  # not in SO(3,1): A N^- K cannot reproduce it
    with pytest.raises(FactorizationDiverged):
        iwasawa_opposite(alg, g)
