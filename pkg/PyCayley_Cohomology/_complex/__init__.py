"""
Bounded cochain complexes of finite-dimensional rational vector spaces.

Every constructor checks its defining identity eagerly and exactly:
d∘d = 0 for complexes, commutation for chain maps, and h∘h = 0 for double
complexes.
"""
import logging
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from PyCayley_Cohomology._exceptions import DifferentialException, MatrixShapeException
from PyCayley_Cohomology._linalg import RationalMatrix, rank

logger = logging.getLogger(__name__)


class BettiTable(Mapping[int, int]):
    """Degree → dim H^m, storing only the nonzero entries."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Optional[Mapping[int, int]] = None):
        entries = dict(entries or {})
        if any(value < 0 for value in entries.values()):
            raise ValueError("Betti numbers must be nonnegative")
        self._entries = {m: entries[m] for m in sorted(entries) if entries[m]}

    def __getitem__(self, degree: int) -> int:
        return self._entries.get(degree, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, degree: object) -> bool:
        return degree in self._entries

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BettiTable):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == {m: v for m, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def shifted(self, k: int) -> "BettiTable":
        """Table of ``shift(c, k)``: degree m of the result is degree m+k here."""
        return BettiTable({m - k: v for m, v in self._entries.items()})

    def euler_characteristic(self) -> int:
        return sum((-1) ** m * v for m, v in self._entries.items())

    def is_zero(self) -> bool:
        return not self._entries

    def differing_degrees(self, other: "BettiTable") -> List[int]:
        degrees = set(self._entries) | set(other._entries)
        return sorted(m for m in degrees if self[m] != other[m])

    def to_dict(self) -> Dict[int, int]:
        return dict(self._entries)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{m}:{v}" for m, v in self._entries.items()) + "}"

    def __repr__(self) -> str:
        return f"BettiTable({self})"


class CochainComplex:
    """
    Degrees ``lo .. lo+len(dims)-1``; ``differentials[k]`` maps degree
    ``lo+k`` to ``lo+k+1`` and has shape ``(dims[k+1], dims[k])``.
    """

    __slots__ = ("_lo", "_dims", "_differentials")

    def __init__(self, lo: int, dims: Sequence[int], differentials: Sequence[RationalMatrix]):
        dims = tuple(int(d) for d in dims)
        differentials = tuple(differentials)
        if any(d < 0 for d in dims):
            raise MatrixShapeException("negative dimension")
        if len(differentials) != max(len(dims) - 1, 0):
            raise MatrixShapeException(
                f"{len(dims)} degrees need {max(len(dims) - 1, 0)} differentials, got {len(differentials)}"
            )
        for k, d in enumerate(differentials):
            if d.shape != (dims[k + 1], dims[k]):
                raise MatrixShapeException(
                    f"differential in degree {lo + k} has shape {d.shape}, expected {(dims[k + 1], dims[k])}"
                )
        for k in range(len(differentials) - 1):
            if not (differentials[k + 1] @ differentials[k]).is_zero():
                raise DifferentialException(f"d∘d ≠ 0 in degree {lo + k}")
        self._lo = lo
        self._dims = dims
        self._differentials = differentials

    @classmethod
    def zero(cls) -> "CochainComplex":
        return cls(0, (), ())

    @classmethod
    def single(cls, degree: int, dim: int) -> "CochainComplex":
        return cls(degree, (dim,), ())

    @property
    def lo(self) -> int:
        return self._lo

    @property
    def hi(self) -> int:
        return self._lo + len(self._dims) - 1

    @property
    def degrees(self) -> range:
        return range(self._lo, self.hi + 1)

    @property
    def dims(self) -> Dict[int, int]:
        return {self._lo + k: d for k, d in enumerate(self._dims)}

    def dim(self, degree: int) -> int:
        k = degree - self._lo
        return self._dims[k] if 0 <= k < len(self._dims) else 0

    def differential(self, degree: int) -> RationalMatrix:
        k = degree - self._lo
        if 0 <= k < len(self._differentials):
            return self._differentials[k]
        return RationalMatrix.zeros(self.dim(degree + 1), self.dim(degree))

    def is_zero(self) -> bool:
        return not any(self._dims)

    def euler_characteristic(self) -> int:
        return sum((-1) ** m * d for m, d in self.dims.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CochainComplex):
            return NotImplemented
        return (
            self._lo == other._lo
            and self._dims == other._dims
            and self._differentials == other._differentials
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"CochainComplex(lo={self._lo}, dims={list(self._dims)})"


def cohomology(c: CochainComplex) -> BettiTable:
    ranks = {m: rank(c.differential(m)) for m in c.degrees}
    table = {m: c.dim(m) - ranks[m] - ranks.get(m - 1, 0) for m in c.degrees}
    logger.debug("cohomology of %r: %s", c, table)
    return BettiTable(table)


def shift(c: CochainComplex, k: int) -> CochainComplex:
    """Degree m of the result is degree m+k of ``c``; differentials pick up (−1)^k."""
    sign = -1 if k % 2 else 1
    return CochainComplex(c.lo - k, [c.dim(m) for m in c.degrees],
                          [c.differential(m) * sign for m in c.degrees][:-1])


def direct_sum(complexes: Sequence[CochainComplex]) -> CochainComplex:
    nonempty = [c for c in complexes if len(c.degrees)]
    if not nonempty:
        return CochainComplex.zero()
    lo = min(c.lo for c in nonempty)
    hi = max(c.hi for c in nonempty)
    dims = [sum(c.dim(m) for c in complexes) for m in range(lo, hi + 1)]
    differentials = []
    for m in range(lo, hi):
        blocks = {(i, i): c.differential(m) for i, c in enumerate(complexes)}
        differentials.append(RationalMatrix.block(
            [c.dim(m + 1) for c in complexes], [c.dim(m) for c in complexes], blocks
        ))
    return CochainComplex(lo, dims, differentials)


class ChainMap:
    __slots__ = ("_source", "_target", "_components")

    def __init__(self, source: CochainComplex, target: CochainComplex,
                 components: Mapping[int, RationalMatrix]):
        self._source = source
        self._target = target
        self._components = {}
        for m in _union_degrees(source, target):
            component = components.get(m)
            if component is None:
                component = RationalMatrix.zeros(target.dim(m), source.dim(m))
            if component.shape != (target.dim(m), source.dim(m)):
                raise MatrixShapeException(
                    f"chain map component in degree {m} has shape {component.shape}, "
                    f"expected {(target.dim(m), source.dim(m))}"
                )
            self._components[m] = component
        stray = set(components) - set(self._components)
        if any(not components[m].is_zero() for m in stray):
            raise MatrixShapeException(f"chain map has components outside the degree range: {sorted(stray)}")
        for m in self._components:
            left = target.differential(m) @ self._components[m]
            right = self.component(m + 1) @ source.differential(m)
            if left != right:
                raise DifferentialException(f"map does not commute with differentials in degree {m}")

    @classmethod
    def identity(cls, c: CochainComplex) -> "ChainMap":
        return cls(c, c, {m: RationalMatrix.identity(c.dim(m)) for m in c.degrees})

    @classmethod
    def zero(cls, source: CochainComplex, target: CochainComplex) -> "ChainMap":
        return cls(source, target, {})

    @property
    def source(self) -> CochainComplex:
        return self._source

    @property
    def target(self) -> CochainComplex:
        return self._target

    def component(self, degree: int) -> RationalMatrix:
        component = self._components.get(degree)
        if component is None:
            return RationalMatrix.zeros(self._target.dim(degree), self._source.dim(degree))
        return component

    def compose(self, after: "ChainMap") -> "ChainMap":
        """``after ∘ self``."""
        degrees = _union_degrees(self._source, after.target)
        return ChainMap(self._source, after.target,
                        {m: after.component(m) @ self.component(m) for m in degrees})


def _union_degrees(*complexes: CochainComplex) -> range:
    nonempty = [c for c in complexes if len(c.degrees)]
    if not nonempty:
        return range(0)
    return range(min(c.lo for c in nonempty), max(c.hi for c in nonempty) + 1)


def cone(f: ChainMap) -> CochainComplex:
    """
    Cone^n = S^{n+1} ⊕ T^n with d(s, t) = (−d_S s, f s + d_T t).
    """
    source, target = f.source, f.target
    degrees = _union_degrees(shift(source, 1), target)
    if not len(degrees):
        return CochainComplex.zero()
    dims = [source.dim(n + 1) + target.dim(n) for n in degrees]
    differentials = []
    for n in list(degrees)[:-1]:
        blocks = {
            (0, 0): -source.differential(n + 1),
            (1, 0): f.component(n + 1),
            (1, 1): target.differential(n),
        }
        differentials.append(RationalMatrix.block(
            [source.dim(n + 2), target.dim(n + 1)], [source.dim(n + 1), target.dim(n)], blocks
        ))
    return CochainComplex(degrees.start, dims, differentials)


def is_quasi_iso(f: ChainMap) -> bool:
    return cohomology(cone(f)).is_zero()


class DoubleComplex:
    """
    Columns ``p = 0..len(columns)-1`` with vertical index q; ``horizontals[p]``
    is a chain map from column p to column p+1.
    """

    __slots__ = ("_columns", "_horizontals")

    def __init__(self, columns: Sequence[CochainComplex], horizontals: Sequence[ChainMap]):
        columns = tuple(columns)
        horizontals = tuple(horizontals)
        if len(horizontals) != max(len(columns) - 1, 0):
            raise MatrixShapeException(
                f"{len(columns)} columns need {max(len(columns) - 1, 0)} horizontal maps, got {len(horizontals)}"
            )
        for p, h in enumerate(horizontals):
            for m in _union_degrees(columns[p], columns[p + 1]):
                if h.source.dim(m) != columns[p].dim(m) or h.target.dim(m) != columns[p + 1].dim(m):
                    raise MatrixShapeException(f"horizontal map {p} does not connect columns {p} and {p + 1}")
        for p in range(len(horizontals) - 1):
            for m in _union_degrees(columns[p], columns[p + 2]):
                if not (horizontals[p + 1].component(m) @ horizontals[p].component(m)).is_zero():
                    raise DifferentialException(f"h∘h ≠ 0 from column {p} in vertical degree {m}")
        self._columns = columns
        self._horizontals = horizontals

    @property
    def columns(self) -> Tuple[CochainComplex, ...]:
        return self._columns

    @property
    def horizontals(self) -> Tuple[ChainMap, ...]:
        return self._horizontals

    def total_degrees(self) -> range:
        spans = [(p + c.lo, p + c.hi) for p, c in enumerate(self._columns) if len(c.degrees)]
        if not spans:
            return range(0)
        return range(min(lo for lo, _ in spans), max(hi for _, hi in spans) + 1)

    def summands(self, n: int) -> List[Tuple[int, int, int]]:
        """Layout of total degree n as ``(p, offset, size)`` with q = n − p."""
        layout, offset = [], 0
        for p, column in enumerate(self._columns):
            size = column.dim(n - p)
            layout.append((p, offset, size))
            offset += size
        return layout

    def transpose(self) -> "DoubleComplex":
        """
        Rows become columns. Row q (shifted so the lowest row is column 0)
        carries the horizontal maps as its differentials, and the old vertical
        differentials become the new horizontal maps. Total cohomology of the
        result equals the original's shifted by the lowest vertical degree.
        """
        nonempty = [c for c in self._columns if len(c.degrees)]
        if not nonempty:
            return DoubleComplex([], [])
        q_lo = min(c.lo for c in nonempty)
        q_hi = max(c.hi for c in nonempty)
        width = len(self._columns)
        rows = []
        for q in range(q_lo, q_hi + 1):
            dims = [self._columns[p].dim(q) for p in range(width)]
            differentials = [self._horizontals[p].component(q) for p in range(width - 1)]
            rows.append(CochainComplex(0, dims, differentials))
        maps = []
        for k, q in enumerate(range(q_lo, q_hi)):
            components = {p: self._columns[p].differential(q) for p in range(width)}
            maps.append(ChainMap(rows[k], rows[k + 1], components))
        return DoubleComplex(rows, maps)


def totalize(d: DoubleComplex) -> CochainComplex:
    """
    Total degree n is ⊕_{p+q=n} C_p^q, ordered by p; the total differential on
    summand (p, q) is horizontal + (−1)^p · vertical.
    """
    degrees = d.total_degrees()
    if not len(degrees):
        return CochainComplex.zero()
    columns = d.columns
    dims = [sum(c.dim(n - p) for p, c in enumerate(columns)) for n in degrees]
    differentials = []
    for n in list(degrees)[:-1]:
        blocks = {}
        for p, column in enumerate(columns):
            q = n - p
            vertical = column.differential(q)
            blocks[(p, p)] = vertical * (-1) ** p
            if p + 1 < len(columns):
                blocks[(p + 1, p)] = d.horizontals[p].component(q)
        differentials.append(RationalMatrix.block(
            [c.dim(n + 1 - p) for p, c in enumerate(columns)],
            [c.dim(n - p) for p, c in enumerate(columns)],
            blocks,
        ))
    total = CochainComplex(degrees.start, dims, differentials)
    logger.debug("totalized %d columns into %r", len(columns), total)
    return total


__all__ = [
    "BettiTable",
    "CochainComplex",
    "ChainMap",
    "DoubleComplex",
    "cohomology",
    "shift",
    "cone",
    "totalize",
    "is_quasi_iso",
    "direct_sum",
]
