"""Explicit matrix Lie algebras used as an independent verification oracle."""

from .algebra import (
    CheckResult,
    GradingDims,
    MatrixLieAlgebra,
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
