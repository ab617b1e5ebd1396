"""
Open covers U_b = U₁ ∪ ⋯ ∪ U_r of a simplicial base, with U_i the complement
of a closed subcomplex A_i, and the pseudo-Mayer–Vietoris complex

    (1,…,r) → ⊕_{#J=1} (J̄) → ⋯ → ⊕_{#J=r−1} (J̄)

whose total cohomology is that of U₁ ∩ ⋯ ∩ U_r shifted by r−1.
"""
import functools as ft
import itertools as it
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from PyCayley_Cohomology._complex import (
    BettiTable,
    ChainMap,
    DoubleComplex,
    cohomology,
    shift,
    totalize,
)
from PyCayley_Cohomology._exceptions import (
    CoverConditionException,
    CoverIndexException,
    InvariantViolation,
)
from PyCayley_Cohomology._linalg import RationalMatrix
from PyCayley_Cohomology._report import Report, Status, timed
from PyCayley_Cohomology._resolution import SpacePairInstance
from PyCayley_Cohomology._simplicial import (
    SimplicialComplex,
    Subcomplex,
    full_subcomplex,
    relative_cochain_complex,
    restriction_double_complex,
    restriction_matrix,
)

logger = logging.getLogger(__name__)

Blocks = Tuple[FrozenSet[int], ...]


@dataclass(frozen=True)
class CoverInstance:
    """
    ``avoided[i]`` is A_{i+1}; cover indices are 1-based throughout, as in
    the parenthesis notation of cover terms.
    """

    name: str
    complex: SimplicialComplex
    avoided: Tuple[Subcomplex, ...]
    companion: Optional[SpacePairInstance] = None
    shift: Optional[int] = None
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "avoided", tuple(self.avoided))
        if not self.avoided:
            raise InvariantViolation("nonempty-family", "a cover needs at least one member", self.name)
        for i, sub in enumerate(self.avoided, start=1):
            if sub.parent is not self.complex and sub.parent != self.complex:
                raise InvariantViolation("subcomplex-parent", f"A{i} is not a subcomplex of W", self.name)
        common = ft.reduce(Subcomplex.intersection, self.avoided)
        if not common.is_empty():
            raise CoverConditionException(
                f"simplex {min(common.simplices)} lies in every A_i, so the U_i do not cover W", self.name
            )
        if self.companion is not None and self.companion.r != self.r:
            raise InvariantViolation(
                "companion-size", f"companion has {self.companion.r} subcomplexes, cover has {self.r}", self.name
            )
        if self.shift is not None and self.shift != self.r - 1:
            raise InvariantViolation("shift-witness", f"shift must be r-1 = {self.r - 1}, got {self.shift}", self.name)

    @property
    def r(self) -> int:
        return len(self.avoided)

    @ft.cached_property
    def membership(self) -> Tuple[FrozenSet[int], ...]:
        """For each barycenter of the subdivision, the indices i with the barycenter in U_i."""
        _, order = self.complex.subdivision
        return tuple(
            frozenset(i for i, sub in enumerate(self.avoided, start=1) if s not in sub) for s in order
        )

    def reordered(self, order: Sequence[int]) -> "CoverInstance":
        companion = self.companion.reordered(order) if self.companion is not None else None
        return CoverInstance(self.name, self.complex, tuple(self.avoided[i] for i in order),
                             companion, self.shift, self.metadata)


def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> Blocks:
    return tuple(sorted((frozenset(b) for b in blocks), key=lambda b: min(b, default=0)))


def carrier_for_blocks(inst: CoverInstance, blocks: Iterable[Iterable[int]]) -> Subcomplex:
    """
    Model of ⋃_B ⋂_{i∈B} U_i as a full subcomplex of the subdivision of W.

    Full subcomplexes on up-closed barycenter sets are compatible with unions
    and intersections, so this agrees with combining the individual models.
    """
    blocks = _canonical_blocks(blocks)
    for block in blocks:
        if not block:
            raise CoverIndexException("empty block")
        stray = [i for i in block if not 1 <= i <= inst.r]
        if stray:
            raise CoverIndexException(f"cover index {stray[0]} is outside 1..{inst.r}")
    return _carrier(inst, blocks)


@ft.lru_cache(maxsize=4096)
def _carrier(inst: CoverInstance, blocks: Blocks) -> Subcomplex:
    sd, _ = inst.complex.subdivision
    kept = [v for v, inside in enumerate(inst.membership) if any(b <= inside for b in blocks)]
    return full_subcomplex(sd, kept)


def deepest_intersection(inst: CoverInstance) -> Subcomplex:
    return carrier_for_blocks(inst, [range(1, inst.r + 1)])


def _complement_blocks(r: int, J: Tuple[int, ...]) -> List[List[int]]:
    return [[i] for i in range(1, r + 1) if i not in J]


def _levels(r: int) -> List[List[Tuple[int, ...]]]:
    return [list(it.combinations(range(1, r + 1), p)) for p in range(r)]


def pseudo_mv_double_complex(inst: CoverInstance) -> DoubleComplex:
    levels = _levels(inst.r)
    columns = [
        [carrier_for_blocks(inst, _complement_blocks(inst.r, J)).complex for J in level] for level in levels
    ]
    arrows = []
    for p in range(inst.r - 1):
        position = {J: i for i, J in enumerate(levels[p + 1])}
        for i, J in enumerate(levels[p]):
            for j in range(1, inst.r + 1):
                if j in J:
                    continue
                larger = tuple(sorted(J + (j,)))
                arrows.append((p, i, position[larger], (-1) ** larger.index(j)))
    logger.debug("pseudo-Mayer-Vietoris complex of %s: columns %s", inst.name, [len(c) for c in columns])
    return restriction_double_complex(columns, arrows)


def comparison_map(inst: CoverInstance) -> ChainMap:
    """
    Chain map from the totalized pseudo-Mayer–Vietoris complex to the
    deepest intersection shifted by r−1. It is nonzero only on the last
    column, where the summand for U_i restricts with sign (−1)^(i−1).
    """
    double = pseudo_mv_double_complex(inst)
    total = totalize(double)
    deep = deepest_intersection(inst).complex
    target = shift(deep.cochains, -(inst.r - 1))
    last = inst.r - 1
    # lexicographic J of size r−1: position k misses index r−k
    summands = [carrier_for_blocks(inst, _complement_blocks(inst.r, J)).complex for J in _levels(inst.r)[last]]
    components = {}
    for n in total.degrees:
        q = n - last
        restrictions = {
            (0, k): restriction_matrix(summand, deep, q) * (-1) ** (inst.r - k - 1)
            for k, summand in enumerate(summands)
        }
        last_block = RationalMatrix.block(
            [target.dim(n)], [len(s.simplices_of_dimension(q)) for s in summands], restrictions
        )
        components[n] = RationalMatrix.block(
            [target.dim(n)], [column.dim(n - p) for p, column in enumerate(double.columns)], {(0, last): last_block}
        )
    return ChainMap(total, target, components)


def _deep_table(inst: CoverInstance) -> BettiTable:
    return cohomology(deepest_intersection(inst).complex.cochains).shifted(-(inst.r - 1))


def verify_final(inst: CoverInstance, certify_map: bool = False) -> Report:
    with timed() as watch:
        total = cohomology(totalize(pseudo_mv_double_complex(inst)))
        report = Report.compare(inst.name, "verify-final", total, _deep_table(inst))
        if certify_map:
            report.certify(comparison_map(inst))
    report.elapsed = watch.elapsed
    logger.info("%s verify-final: %s", inst.name, report.status.value)
    return report


def verify_theorem(inst: CoverInstance) -> Report:
    if inst.companion is None:
        return Report(inst.name, "verify-theorem", Status.NOT_APPLICABLE, detail="no Cayley companion declared")
    with timed() as watch:
        pair = inst.companion
        relative = cohomology(relative_cochain_complex(pair.complex, pair.union))
        report = Report.compare(inst.name, "verify-theorem", relative, _deep_table(inst))
    report.elapsed = watch.elapsed
    logger.info("%s verify-theorem: %s", inst.name, report.status.value)
    return report


__all__ = [
    "CoverInstance",
    "carrier_for_blocks",
    "deepest_intersection",
    "pseudo_mv_double_complex",
    "comparison_map",
    "verify_final",
    "verify_theorem",
]
