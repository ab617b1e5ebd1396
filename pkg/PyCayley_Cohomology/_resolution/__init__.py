"""
The closed-cover resolution of a pair (F, E₁ ∪ ⋯ ∪ E_r).

Column ``m`` of the resolution double complex is the direct sum of the cochain
complexes of the m-fold intersections E_J; its totalization computes the
relative cohomology H^•(F, ⋃E_i) for any family of closed subcomplexes.
"""
import functools as ft
import itertools as it
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from PyCayley_Cohomology._complex import (
    ChainMap,
    CochainComplex,
    DoubleComplex,
    cohomology,
    totalize,
)
from PyCayley_Cohomology._exceptions import InvariantViolation, LevelRangeException
from PyCayley_Cohomology._linalg import RationalMatrix
from PyCayley_Cohomology._report import Report, timed
from PyCayley_Cohomology._simplicial import (
    SimplicialComplex,
    Subcomplex,
    relative_cochain_complex,
    restriction_double_complex,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpacePairInstance:
    name: str
    complex: SimplicialComplex
    subcomplexes: Tuple[Subcomplex, ...]
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "subcomplexes", tuple(self.subcomplexes))
        if not self.subcomplexes:
            raise InvariantViolation("nonempty-family", "at least one closed subcomplex is required", self.name)
        for i, sub in enumerate(self.subcomplexes, start=1):
            if sub.parent is not self.complex and sub.parent != self.complex:
                raise InvariantViolation("subcomplex-parent", f"E{i} is not a subcomplex of F", self.name)

    @property
    def r(self) -> int:
        return len(self.subcomplexes)

    @ft.cached_property
    def union(self) -> Subcomplex:
        return ft.reduce(Subcomplex.union, self.subcomplexes)

    def reordered(self, order: Sequence[int]) -> "SpacePairInstance":
        return SpacePairInstance(self.name, self.complex, tuple(self.subcomplexes[i] for i in order), self.metadata)


def _subsets(r: int, m: int) -> List[Tuple[int, ...]]:
    return list(it.combinations(range(r), m))


def intersection_level(inst: SpacePairInstance, m: int) -> List[Subcomplex]:
    """One E_J per m-element index set J, in lexicographic order of J."""
    if not 1 <= m <= inst.r:
        raise LevelRangeException(f"level {m} is outside 1..{inst.r}")
    return [ft.reduce(Subcomplex.intersection, (inst.subcomplexes[j] for j in J)) for J in _subsets(inst.r, m)]


def resolution_double_complex(inst: SpacePairInstance) -> DoubleComplex:
    columns: List[List[SimplicialComplex]] = [[inst.complex]]
    for m in range(1, inst.r + 1):
        columns.append([sub.complex for sub in intersection_level(inst, m)])
    arrows = [(0, 0, j, 1) for j in range(inst.r)]
    for m in range(1, inst.r):
        position = {J: i for i, J in enumerate(_subsets(inst.r, m + 1))}
        for i, J in enumerate(_subsets(inst.r, m)):
            for j in range(inst.r):
                if j in J:
                    continue
                larger = tuple(sorted(J + (j,)))
                arrows.append((m, i, position[larger], (-1) ** larger.index(j)))
    logger.debug("resolution of %s: column sizes %s", inst.name, [len(c) for c in columns])
    return restriction_double_complex(columns, arrows)


def resolution_comparison_map(inst: SpacePairInstance) -> ChainMap:
    """Inclusion of the relative cochains into column 0 of the totalized resolution."""
    relative = relative_cochain_complex(inst.complex, inst.union)
    total = totalize(resolution_double_complex(inst))
    components = {}
    for d, layer in enumerate(inst.complex.by_dimension):
        kept = [i for i, s in enumerate(layer) if s not in inst.union]
        components[d] = RationalMatrix.from_entries(
            total.dim(d), len(kept), {(row, col): 1 for col, row in enumerate(kept)}
        )
    return ChainMap(relative, total, components)


def verify_resolution(inst: SpacePairInstance, certify_map: bool = False) -> Report:
    with timed() as watch:
        total = cohomology(totalize(resolution_double_complex(inst)))
        relative = cohomology(relative_cochain_complex(inst.complex, inst.union))
        report = Report.compare(inst.name, "verify-resolution", total, relative)
        if certify_map:
            report.certify(resolution_comparison_map(inst))
    report.elapsed = watch.elapsed
    logger.info("%s verify-resolution: %s", inst.name, report.status.value)
    return report


__all__ = [
    "SpacePairInstance",
    "intersection_level",
    "resolution_double_complex",
    "resolution_comparison_map",
    "verify_resolution",
]
