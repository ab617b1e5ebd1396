"""
Cyclic Plücker-monomial sections and the rank-one check.

The hypersurface Π is x_{1..d} · x_{2..d+1} ⋯ x_{N,1..d−1} = 0. For d = 1 the
Grassmannian is P^{N−1}, Π is the union of the coordinate hyperplanes and the
complement is an algebraic torus, homotopic to the compact (N−1)-torus.
"""
import itertools as it
import logging
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence, Tuple

import sympy as sp

from PyCayley_Cohomology._complex import BettiTable, cohomology
from PyCayley_Cohomology._constants import (
    MAX_RANK_ONE_N,
    MAX_TORUS_DIMENSION,
    MIN_RANK_ONE_N,
    MIN_TORUS_DIMENSION,
    RANK_ONE_ERR_MSG,
    TORUS_DIMENSION_ERR_MSG,
)
from PyCayley_Cohomology._exceptions import InvariantViolation, UnsupportedParameterException
from PyCayley_Cohomology._report import Report, Status, timed
from PyCayley_Cohomology._simplicial import SimplicialComplex, closure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PluckerIndex:
    d: int
    N: int
    start: int

    def __post_init__(self):
        if not 1 <= self.d <= self.N:
            raise UnsupportedParameterException(f"need 1 <= d <= N, got d={self.d}, N={self.N}")
        if not 1 <= self.start <= self.N:
            raise UnsupportedParameterException(f"start {self.start} is outside 1..{self.N}")

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple((self.start - 1 + k) % self.N + 1 for k in range(self.d))

    @property
    def symbol(self) -> sp.Symbol:
        return sp.Symbol("x_" + "_".join(str(i) for i in self.indices))

    def __str__(self) -> str:
        return "x_{" + ",".join(str(i) for i in self.indices) + "}"


@dataclass(frozen=True)
class PluckerMonomialSection:
    degree: int
    factors: Tuple[PluckerIndex, ...]

    def __post_init__(self):
        if len(self.factors) != self.degree:
            raise InvariantViolation("section-degree", f"{len(self.factors)} factors for degree {self.degree}")

    @property
    def monomial(self) -> sp.Expr:
        return sp.Mul(*(f.symbol for f in self.factors))

    def __str__(self) -> str:
        return "·".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class RankOneInstance:
    d: int
    N: int
    degrees: Tuple[int, ...]
    sections: Tuple[PluckerMonomialSection, ...]
    complement: Optional[SimplicialComplex] = None


def plucker_sections(d: int, N: int, degrees: Sequence[int]) -> Tuple[PluckerMonomialSection, ...]:
    """The i-th section is the product of the next ``degrees[i]`` cyclic coordinates."""
    degrees = tuple(degrees)
    if not 1 <= d <= N:
        raise UnsupportedParameterException(f"need 1 <= d <= N, got d={d}, N={N}")
    if any(degree < 1 for degree in degrees):
        raise InvariantViolation("section-degree", f"degrees must be positive, got {degrees}")
    if sum(degrees) != N:
        raise InvariantViolation("degree-sum", f"degrees {degrees} must sum to N={N}")
    starts = iter(range(1, N + 1))
    return tuple(
        PluckerMonomialSection(degree, tuple(PluckerIndex(d, N, next(starts)) for _ in range(degree)))
        for degree in degrees
    )


def pi_polynomial(d: int, N: int) -> sp.Expr:
    """Left-hand side of the equation of Π."""
    return sp.Mul(*(PluckerIndex(d, N, start).symbol for start in range(1, N + 1)))


def torus_model(k: int) -> SimplicialComplex:
    """
    Product of k triangle-boundary circles with the staircase triangulation.
    Vertex (v₁, …, v_k) ∈ (ℤ/3)^k is numbered Σ v_i·3^(i−1).
    """
    if not MIN_TORUS_DIMENSION <= k <= MAX_TORUS_DIMENSION:
        raise UnsupportedParameterException(f"{TORUS_DIMENSION_ERR_MSG}: {k}")

    def number(point: Sequence[int]) -> int:
        return sum((v % 3) * 3 ** i for i, v in enumerate(point))

    simplices = []
    for corner in it.product(range(3), repeat=k):
        for order in it.permutations(range(k)):
            point = list(corner)
            vertices = [number(point)]
            for axis in order:
                point[axis] += 1
                vertices.append(number(point))
            simplices.append(tuple(sorted(vertices)))
    return closure(simplices, 3 ** k)


def rank_one_instance(N: int, degrees: Sequence[int], d: int = 1) -> RankOneInstance:
    if d != 1 or not MIN_RANK_ONE_N <= N <= MAX_RANK_ONE_N:
        raise UnsupportedParameterException(f"{RANK_ONE_ERR_MSG}: d={d}, N={N}")
    sections = plucker_sections(d, N, degrees)
    return RankOneInstance(d, N, tuple(degrees), sections, torus_model(N - 1))


def rank_one_check(N: int, degrees: Sequence[int], d: int = 1) -> Report:
    inst = rank_one_instance(N, degrees, d)
    name = f"rank-one-N{N}-" + "-".join(str(degree) for degree in inst.degrees)
    with timed() as watch:
        table = cohomology(inst.complement.cochains)
        expected = BettiTable({m: comb(N - 1, m) for m in range(N)})
        product = sp.expand(sp.Mul(*(s.monomial for s in inst.sections)))
        covers_pi = product == sp.expand(pi_polynomial(d, N))
        report = Report.compare(name, "rank-one", table, expected)
        if not covers_pi:
            report.status = Status.INVALID_INSTANCE
            report.detail = "the sections do not multiply to the equation of Π"
        report.extra.update({
            "sections": [str(s) for s in inst.sections],
            "top_betti": table[N - 1],
        })
    report.elapsed = watch.elapsed
    logger.info("%s: %s", name, report.status.value)
    return report


__all__ = [
    "PluckerIndex",
    "PluckerMonomialSection",
    "RankOneInstance",
    "plucker_sections",
    "pi_polynomial",
    "torus_model",
    "rank_one_instance",
    "rank_one_check",
]
