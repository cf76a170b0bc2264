from fractions import Fraction

import numpy as np
import pytest

from ruelle_bands.errors import SizeLimit
from ruelle_bands.liealg import (
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
    weyl_torus_signs,
)
from ruelle_bands.liealg.linalg import CoordinateSolver, inverse, is_positive_definite, nullspace, rank
from ruelle_bands.reps import IrrepSpec, m_group, weyl_action
from ruelle_bands.rootdata import complex_hyperbolic, real_hyperbolic


def test_linalg_basics():
    M = [[1, 2], [2, 4]]
    assert rank(M) == 1
    (v,) = nullspace(M)
    assert v == [-2, 1]
    assert inverse([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]
    assert is_positive_definite([[2, 1], [1, 2]])
    assert not is_positive_definite([[1, 2], [2, 1]])
    assert not is_positive_definite([[1, 0], [1, 1]])


def test_coordinate_solver():
    s = CoordinateSolver(np.array([[1, 1, 0], [0, 1, 1]]))
    num, den = s.solve_int(np.array([[2, 3, 1]]))
    assert (num[0] / den).tolist() == [2, 1]
    assert s.solve([1, Fraction(3, 2), Fraction(1, 2)]) == [1, Fraction(1, 2)]
    with pytest.raises(ValueError):
        s.solve([1, 0, 0])


def test_killing_form_is_n_trace_form():
    # B(X, Y) = n tr(XY) on so(n+1,1)
    for n in (1, 2, 3):
        alg = build_algebra(real_hyperbolic(n))
        for i in range(alg.dim):
            for j in range(alg.dim):
                assert alg.killing[i, j] == n * int(np.trace(alg.basis[i] @ alg.basis[j]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dimensions(n):
    assert build_algebra(real_hyperbolic(n)).dim == (n + 1) * (n + 2) // 2
    assert build_algebra(complex_hyperbolic(n)).dim == (n + 2) ** 2 - 1


def test_su_grading():
    dims = restricted_grading(build_algebra(complex_hyperbolic(2)))
    assert (dims.alpha, dims.two_alpha, dims.m) == (4, 1, 4)
    assert dims.norm_alpha0_sq == Fraction(1, 16)


def test_size_limit():
    with pytest.raises(SizeLimit):
        build_algebra(real_hyperbolic(9))


def test_perturbed_structure_constants_are_detected():
    alg = build_algebra(real_hyperbolic(2))
    sc = alg.sc_num.copy()
    sc[0, 1] += 1
    bad = alg.with_structure_constants(sc)
    assert not check_jacobi(bad)
    assert check_jacobi(bad).witness
    assert not check_killing_ad_trace(bad)
    # the original is untouched
    assert check_jacobi(alg) and check_cartan(alg) and verify_horocycle_brackets(alg)


def test_broken_antisymmetry_detected():
    alg = build_algebra(real_hyperbolic(1))
    sc = alg.sc_num.copy()
    assert sc[0, 1].any()
    sc[1, 0] = sc[0, 1]
    res = check_jacobi(alg.with_structure_constants(sc))
    assert not res.ok


@pytest.mark.parametrize("n, expected", [(2, (-1,)), (3, (1,)), (4, (1, -1)), (5, (1, 1))])
def test_weyl_torus_signs(n, expected):
    assert weyl_torus_signs(build_algebra(real_hyperbolic(n))) == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_oracle_weyl_matches_table(n):
    alg = build_algebra(real_hyperbolic(n))
    M = m_group(real_hyperbolic(n))
    for hw in ((1,) + (0,) * (M.rank - 1), (2,) * M.rank):
        tau = IrrepSpec(M, hw)
        assert oracle_weyl_action(alg, tau) == weyl_action(tau)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_casimir_defining(n):
    alg = build_algebra(real_hyperbolic(n))
    assert casimir_scalar(alg, RepKind.DEFINING, Subgroup.K) == Fraction(-1, 2)
    assert casimir_scalar(alg, RepKind.DEFINING, Subgroup.M) == -Fraction(n - 1, 2 * n)
    assert casimir_scalar(alg, RepKind.TRIVIAL, Subgroup.K) == 0


def test_casimir_n1_normalization_gap():
    # The Killing form of so(2,1) gives the circle character its m^2/2 value;
    # the weight machinery uses m^2/4 on the hyperbolic plane (recorded convention).
    alg = build_algebra(real_hyperbolic(1))
    assert casimir_scalar(alg, RepKind.DEFINING, Subgroup.K) == Fraction(-1, 2)
