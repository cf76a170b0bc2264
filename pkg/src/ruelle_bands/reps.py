"""Weights of the compact groups K = SO(n+1) and M = SO(n) inside SO(n+1,1)_0.

Weights are written in an orthonormal family ``e_j``; the ambient inner
product (minus the Killing form of so(n+1,1)) differs from the standard one by
``scale_sq`` so that ``|i w|**2 = scale_sq * sum(c_j**2)``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .errors import UnsupportedFamily, UnsupportedGroup, UnsupportedWeight
from .rootdata import Family, RankOneGroup


class GroupKind(enum.Enum):
    SPECIAL_ORTHOGONAL = "SO"
    CIRCLE = "SO(2)"
    TRIVIAL = "SO(1)"


@dataclass(frozen=True)
class WeightVector:
    coeffs: tuple[Fraction, ...]
    scale_sq: Fraction

    def normsq(self) -> Fraction:
        return self.scale_sq * sum((c * c for c in self.coeffs), Fraction(0))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        if self.scale_sq != other.scale_sq or len(self.coeffs) != len(other.coeffs):
            raise ValueError("weights live in different spaces")
        return WeightVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.scale_sq)


@dataclass(frozen=True)
class CompactGroupData:
    """SO(m) with the ambient scale; m = 2 is the circle, m = 1 the trivial group."""

    m: int
    scale_sq: Fraction

    def __post_init__(self):
        if self.m < 1:
            raise UnsupportedGroup(f"SO({self.m}) is not a group here")
        object.__setattr__(self, "scale_sq", Fraction(self.scale_sq))

    @property
    def kind(self) -> GroupKind:
        if self.m == 1:
            return GroupKind.TRIVIAL
        if self.m == 2:
            return GroupKind.CIRCLE
        return GroupKind.SPECIAL_ORTHOGONAL

    @property
    def rank(self) -> int:
        return self.m // 2

    @property
    def delta(self) -> WeightVector:
        return delta_half_sum(self)

    @property
    def name(self) -> str:
        return f"SO({self.m})"

    def __str__(self):
        return self.name


def ambient_scale_sq(n: int) -> Fraction:
    """Squared prefactor of the weights for so(n+1,1).

    For n >= 2 this is 1/(2n).  For n = 1 the weights are taken as displayed for
    the hyperbolic plane, (i/2) m e_1, i.e. scale 1/4.
    """
    if n == 1:
        return Fraction(1, 4)
    return Fraction(1, 2 * n)


def _require_real(g: RankOneGroup):
    if g.family is not Family.REAL_HYPERBOLIC:
        raise UnsupportedFamily(f"compact weight data is implemented for SO(n+1,1) only, not {g}")


def k_group(g: RankOneGroup) -> CompactGroupData:
    _require_real(g)
    return CompactGroupData(g.n + 1, ambient_scale_sq(g.n))


def m_group(g: RankOneGroup) -> CompactGroupData:
    _require_real(g)
    return CompactGroupData(g.n, ambient_scale_sq(g.n))


def delta_half_sum(grp: CompactGroupData) -> WeightVector:
    """Half-sum of positive roots: B_l gives (2l-2j+1)/2, D_l gives l-j."""
    l = grp.rank
    if grp.kind is not GroupKind.SPECIAL_ORTHOGONAL:
        coeffs = tuple(Fraction(0) for _ in range(l))
    elif grp.m % 2:
        coeffs = tuple(Fraction(2 * l - 2 * j + 1, 2) for j in range(1, l + 1))
    else:
        coeffs = tuple(Fraction(l - j) for j in range(1, l + 1))
    return WeightVector(coeffs, grp.scale_sq)


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise UnsupportedWeight("bool is not a weight coordinate")
    if isinstance(x, int):
        return x
    q = Fraction(x)
    if q.denominator != 1:
        raise UnsupportedWeight(f"half-integral (spin) weight coordinate {q} is not supported")
    return q.numerator


def is_dominant(grp: CompactGroupData, hw: Sequence[int]) -> bool:
    if len(hw) != grp.rank:
        return False
    if grp.kind is GroupKind.CIRCLE or grp.kind is GroupKind.TRIVIAL:
        return True
    if any(hw[i] < hw[i + 1] for i in range(len(hw) - 1)):
        return False
    if grp.m % 2:
        return hw[-1] >= 0
    return len(hw) < 2 or hw[-2] >= abs(hw[-1])


@dataclass(frozen=True)
class IrrepSpec:
    group: CompactGroupData
    highest_weight: tuple[int, ...]
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        hw = tuple(_as_int(x) for x in self.highest_weight)
        object.__setattr__(self, "highest_weight", hw)
        if len(hw) != self.group.rank:
            raise UnsupportedWeight(
                f"{self.group} needs {self.group.rank} weight coordinates, got {len(hw)}"
            )
        if not is_dominant(self.group, hw):
            raise UnsupportedWeight(f"{hw} is not dominant for {self.group}")

    @property
    def weight(self) -> WeightVector:
        return WeightVector(tuple(Fraction(c) for c in self.highest_weight), self.group.scale_sq)

    @property
    def is_trivial(self) -> bool:
        return not any(self.highest_weight)

    def __str__(self):
        if self.group.kind is GroupKind.TRIVIAL:
            return "triv"
        return f"{self.group}{list(self.highest_weight)}"

    def to_json(self) -> dict:
        return {"group": self.group.name, "hw": list(self.highest_weight), "dim": rep_dimension(self)}


def trivial_rep(grp: CompactGroupData) -> IrrepSpec:
    return IrrepSpec(grp, (0,) * grp.rank, label="triv")


def spherical_harmonic(grp: CompactGroupData, degree: int) -> IrrepSpec:
    """Degree-m spherical harmonics; on the circle this is the character z**m."""
    if grp.kind is GroupKind.TRIVIAL:
        if degree != 0:
            raise UnsupportedWeight("the trivial group only has the trivial representation")
        return trivial_rep(grp)
    if grp.kind is GroupKind.CIRCLE:
        return IrrepSpec(grp, (degree,), label=f"sh:{degree}")
    if degree < 0:
        raise UnsupportedWeight("spherical harmonic degree must be non-negative")
    return IrrepSpec(grp, (degree,) + (0,) * (grp.rank - 1), label=f"sh:{degree}")


def casimir_invariant(rep: IrrepSpec) -> Fraction:
    """c = |i delta|^2 - |i omega + i delta|^2 (a non-positive rational)."""
    delta = delta_half_sum(rep.group)
    return delta.normsq() - (rep.weight + delta).normsq()


def _positive_roots(grp: CompactGroupData) -> list[tuple[int, ...]]:
    l = grp.rank
    if grp.kind is not GroupKind.SPECIAL_ORTHOGONAL:
        return []
    roots = []
    for i, j in itertools.combinations(range(l), 2):
        for s in (-1, 1):
            r = [0] * l
            r[i], r[j] = 1, s
            roots.append(tuple(r))
    if grp.m % 2:
        for i in range(l):
            r = [0] * l
            r[i] = 1
            roots.append(tuple(r))
    return roots


def rep_dimension(rep: IrrepSpec) -> int:
    """Weyl dimension formula."""
    grp = rep.group
    delta = delta_half_sum(grp).coeffs
    shifted = [Fraction(w) + d for w, d in zip(rep.highest_weight, delta)]
    num = den = Fraction(1)
    for root in _positive_roots(grp):
        num *= sum((r * x for r, x in zip(root, shifted)), Fraction(0))
        den *= sum((r * x for r, x in zip(root, delta)), Fraction(0))
    dim = num / den
    assert dim.denominator == 1
    return int(dim)


@dataclass(frozen=True)
class BranchingDecomposition:
    parent: IrrepSpec
    entries: tuple[tuple[IrrepSpec, int], ...]

    def multiplicity(self, tau: IrrepSpec) -> int:
        return sum(mult for t, mult in self.entries if t == tau)

    def to_json(self) -> list:
        return [{"tau": t.to_json(), "mult": mult} for t, mult in self.entries]


def restriction_group(grp: CompactGroupData) -> CompactGroupData:
    return CompactGroupData(grp.m - 1, grp.scale_sq)


def _interlacing(hw: tuple[int, ...], m: int) -> list[tuple[int, ...]]:
    """Highest weights of SO(m-1) occurring in the SO(m) irrep ``hw`` (m >= 3)."""
    l = len(hw)
    if m % 2:
        # SO(2l+1) -> SO(2l): hw_1 >= mu_1 >= hw_2 >= ... >= hw_l >= |mu_l|
        ranges = []
        for j in range(l):
            lo = hw[j + 1] if j + 1 < l else None
            if lo is None:
                ranges.append(range(-hw[j], hw[j] + 1))
            else:
                ranges.append(range(lo, hw[j] + 1))
        return [tuple(mu) for mu in itertools.product(*ranges)]
    # SO(2l) -> SO(2l-1): hw_1 >= mu_1 >= hw_2 >= ... >= mu_{l-1} >= |hw_l|
    ranges = []
    for j in range(l - 1):
        lo = abs(hw[j + 1]) if j + 1 == l - 1 else hw[j + 1]
        ranges.append(range(lo, hw[j] + 1))
    return [tuple(mu) for mu in itertools.product(*ranges)]


@lru_cache(maxsize=4096)
def branch_to_M(sigma: IrrepSpec, paper_n1_convention: bool = False) -> BranchingDecomposition:
    """Restriction of a K-irrep to M = SO(m-1).

    For the circle K = SO(2) (n = 1) the literal restriction to the trivial
    group contains the trivial representation once.  With
    ``paper_n1_convention`` only the trivial K-character is declared
    compatible, following the convention used for the hyperbolic plane.
    """
    grp = sigma.group
    sub = restriction_group(grp) if grp.m > 1 else None
    if sub is None:
        raise UnsupportedGroup("the trivial group has no restriction")
    if grp.kind is GroupKind.CIRCLE:
        if paper_n1_convention and sigma.highest_weight[0] != 0:
            return BranchingDecomposition(sigma, ())
        return BranchingDecomposition(sigma, ((trivial_rep(sub), rep_dimension(sigma)),))
    entries = []
    for mu in _interlacing(sigma.highest_weight, grp.m):
        tau = IrrepSpec(sub, mu)
        entries.append((tau, 1))
    return BranchingDecomposition(sigma, tuple(entries))


def multiplicity(sigma: IrrepSpec, tau: IrrepSpec, paper_n1_convention: bool = False) -> int:
    """[sigma|_M : tau], i.e. dim Hom_M(V_tau, W_sigma)."""
    if tau.group != restriction_group(sigma.group):
        return 0
    return branch_to_M(sigma, paper_n1_convention).multiplicity(tau)


def weyl_action(tau: IrrepSpec) -> IrrepSpec:
    """Action of the nontrivial Weyl element on the class of an M-irrep.

    SO(2l) has the outer automorphism negating the last coordinate; for
    SO(2l+1) and the trivial group it is inner and acts trivially.
    """
    grp = tau.group
    hw = tau.highest_weight
    if grp.kind is GroupKind.TRIVIAL or grp.m % 2:
        return tau
    return IrrepSpec(grp, hw[:-1] + (-hw[-1],), label=tau.label)


def check_assumption1(sigma: IrrepSpec, tau: IrrepSpec, paper_n1_convention: bool = False) -> bool:
    return multiplicity(sigma, tau, paper_n1_convention) == 1


def check_assumption2(tau: IrrepSpec) -> bool:
    return weyl_action(tau) == tau


def dominant_representative(grp: CompactGroupData, weight: Sequence[int]) -> tuple[int, ...]:
    """Dominant element of the Weyl orbit of an integral weight."""
    w = [int(x) for x in weight]
    if grp.kind is not GroupKind.SPECIAL_ORTHOGONAL:
        return tuple(w)
    negatives = sum(1 for x in w if x < 0)
    out = sorted((abs(x) for x in w), reverse=True)
    if grp.m % 2 == 0 and negatives % 2 and out[-1] != 0:
        out[-1] = -out[-1]
    return tuple(out)
