"""
Exact linear algebra over the rationals.

Matrices are immutable. Entries are :class:`fractions.Fraction`; storage keeps
the nonzero entries of each row, which is what incidence matrices and their
block assemblies are made of, while the public interface is the dense
row-major one.
"""
import logging
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from PyCayley_Cohomology._exceptions import MatrixShapeException

logger = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


class RationalMatrix:
    __slots__ = ("_rows", "_cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Optional[Iterable[Scalar]] = None):
        if rows < 0 or cols < 0:
            raise MatrixShapeException(f"negative shape {rows}x{cols}")
        data: List[Dict[int, Fraction]] = [{} for _ in range(rows)]
        if entries is not None:
            values = list(entries)
            if len(values) != rows * cols:
                raise MatrixShapeException(
                    f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(values)}"
                )
            for position, value in enumerate(values):
                if value:
                    data[position // cols][position % cols] = Fraction(value)
        self._rows = rows
        self._cols = cols
        self._data: Tuple[Dict[int, Fraction], ...] = tuple(data)

    @classmethod
    def _from_row_dicts(cls, rows: int, cols: int, data: Sequence[Dict[int, Fraction]]) -> "RationalMatrix":
        matrix = cls.__new__(cls)
        matrix._rows = rows
        matrix._cols = cols
        matrix._data = tuple(data)
        return matrix

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> "RationalMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise MatrixShapeException("rows have different lengths")
        return cls(len(rows), cols, (value for row in rows for value in row))

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Mapping[Tuple[int, int], Scalar]) -> "RationalMatrix":
        data: List[Dict[int, Fraction]] = [{} for _ in range(rows)]
        for (i, j), value in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise MatrixShapeException(f"entry ({i}, {j}) outside a {rows}x{cols} matrix")
            if value:
                data[i][j] = Fraction(value)
        return cls._from_row_dicts(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls._from_row_dicts(size, size, [{i: Fraction(1)} for i in range(size)])

    @classmethod
    def block(
        cls,
        row_sizes: Sequence[int],
        col_sizes: Sequence[int],
        blocks: Mapping[Tuple[int, int], "RationalMatrix"],
    ) -> "RationalMatrix":
        """Assemble a matrix from blocks; missing blocks are zero."""
        row_offsets = _offsets(row_sizes)
        col_offsets = _offsets(col_sizes)
        data: List[Dict[int, Fraction]] = [{} for _ in range(sum(row_sizes))]
        for (bi, bj), sub in blocks.items():
            if sub.shape != (row_sizes[bi], col_sizes[bj]):
                raise MatrixShapeException(
                    f"block ({bi}, {bj}) has shape {sub.shape}, expected {(row_sizes[bi], col_sizes[bj])}"
                )
            for i, row in enumerate(sub._data):
                target = data[row_offsets[bi] + i]
                for j, value in row.items():
                    column = col_offsets[bj] + j
                    total = target.get(column, _ZERO) + value
                    if total:
                        target[column] = total
                    else:
                        target.pop(column, None)
        return cls._from_row_dicts(sum(row_sizes), sum(col_sizes), data)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rows, self._cols

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        return tuple(row.get(j, _ZERO) for row in self._data for j in range(self._cols))

    def __getitem__(self, position: Tuple[int, int]) -> Fraction:
        i, j = position
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f"({i}, {j}) outside a {self._rows}x{self._cols} matrix")
        return self._data[i].get(j, _ZERO)

    def nonzero(self) -> Iterator[Tuple[int, int, Fraction]]:
        for i, row in enumerate(self._data):
            for j in sorted(row):
                yield i, j, row[j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return tuple(self._data[i].get(j, _ZERO) for j in range(self._cols))

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row.get(j, _ZERO) for row in self._data)

    def to_lists(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self._rows)]

    def is_zero(self) -> bool:
        return not any(self._data)

    def transpose(self) -> "RationalMatrix":
        data: List[Dict[int, Fraction]] = [{} for _ in range(self._cols)]
        for i, row in enumerate(self._data):
            for j, value in row.items():
                data[j][i] = value
        return RationalMatrix._from_row_dicts(self._cols, self._rows, data)

    T = property(transpose)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        position = {j: k for k, j in enumerate(cols)}
        data = []
        for i in rows:
            data.append({position[j]: v for j, v in self._data[i].items() if j in position})
        return RationalMatrix._from_row_dicts(len(rows), len(cols), data)

    def scale_row(self, i: int, factor: Scalar) -> "RationalMatrix":
        if not factor:
            raise ValueError("row scaling factor must be nonzero")
        data = list(self._data)
        data[i] = {j: v * factor for j, v in self._data[i].items()}
        return RationalMatrix._from_row_dicts(self._rows, self._cols, data)

    def permute(self, row_order: Sequence[int], col_order: Sequence[int]) -> "RationalMatrix":
        return self.submatrix(row_order, col_order)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self._cols != other._rows:
            raise MatrixShapeException(f"cannot multiply {self.shape} by {other.shape}")
        data = []
        for row in self._data:
            product: Dict[int, Fraction] = {}
            for k, a in row.items():
                for j, b in other._data[k].items():
                    product[j] = product.get(j, _ZERO) + a * b
            data.append({j: v for j, v in product.items() if v})
        return RationalMatrix._from_row_dicts(self._rows, other._cols, data)

    def __mul__(self, scalar: Scalar) -> "RationalMatrix":
        if not scalar:
            return RationalMatrix.zeros(self._rows, self._cols)
        data = [{j: v * scalar for j, v in row.items()} for row in self._data]
        return RationalMatrix._from_row_dicts(self._rows, self._cols, data)

    __rmul__ = __mul__

    def __neg__(self) -> "RationalMatrix":
        return self * -1

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise MatrixShapeException(f"cannot add {self.shape} and {other.shape}")
        return RationalMatrix._sum(self, other)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    @staticmethod
    def _sum(left: "RationalMatrix", right: "RationalMatrix") -> "RationalMatrix":
        data = []
        for a, b in zip(left._data, right._data):
            merged = dict(a)
            for j, v in b.items():
                total = merged.get(j, _ZERO) + v
                if total:
                    merged[j] = total
                else:
                    merged.pop(j, None)
            data.append(merged)
        return RationalMatrix._from_row_dicts(left._rows, left._cols, data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self._data, other._data))

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalMatrix({self._rows}x{self._cols}, nnz={sum(len(r) for r in self._data)})"


def _offsets(sizes: Sequence[int]) -> List[int]:
    offsets, total = [], 0
    for size in sizes:
        offsets.append(total)
        total += size
    return offsets


def _integer_rows(m: RationalMatrix) -> List[Dict[int, int]]:
    """Scale every nonzero row to integers; row scaling preserves rank."""
    rows = []
    for row in m._data:
        if not row:
            continue
        scale = lcm(*(v.denominator for v in row.values()))
        rows.append({j: int(v * scale) for j, v in row.items()})
    return rows


def rank(m: RationalMatrix) -> int:
    """
    Rank over the rationals by fraction-free (Bareiss) elimination with full
    pivoting.

    Each surviving entry after k steps is a (k+1)-minor of the integer-scaled
    matrix, so every division by the previous pivot is exact.
    """
    rows = _integer_rows(m)
    result = 0
    previous = 1
    while rows:
        best: Optional[Tuple[int, int, int, int]] = None
        for index, row in enumerate(rows):
            for col, value in row.items():
                key = (abs(value), len(row))
                if best is None or key < best[:2]:
                    best = (key[0], key[1], index, col)
        _, _, pivot_index, pivot_col = best
        pivot_row = rows.pop(pivot_index)
        pivot = pivot_row.pop(pivot_col)
        reduced = []
        for row in rows:
            factor = row.pop(pivot_col, 0)
            if factor:
                updated = {}
                for col in row.keys() | pivot_row.keys():
                    value = (pivot * row.get(col, 0) - factor * pivot_row.get(col, 0)) // previous
                    if value:
                        updated[col] = value
            else:
                updated = {col: value * pivot // previous for col, value in row.items()}
            if updated:
                reduced.append(updated)
        rows = reduced
        previous = pivot
        result += 1
    return result


def _rref(m: RationalMatrix) -> Tuple[List[int], List[Dict[int, Fraction]]]:
    pending = [dict(row) for row in m._data if row]
    pivots: List[int] = []
    reduced: List[Dict[int, Fraction]] = []
    for col in range(m.cols):
        chosen = next((i for i, row in enumerate(pending) if col in row), None)
        if chosen is None:
            continue
        row = pending.pop(chosen)
        inverse = 1 / row[col]
        row = {j: v * inverse for j, v in row.items()}
        for other in pending + reduced:
            factor = other.get(col)
            if factor:
                for j, v in row.items():
                    value = other.get(j, _ZERO) - factor * v
                    if value:
                        other[j] = value
                    else:
                        other.pop(j, None)
        pivots.append(col)
        reduced.append(row)
    return pivots, reduced


def kernel_basis(m: RationalMatrix) -> RationalMatrix:
    """Columns form a basis of the right kernel of ``m``."""
    pivots, reduced = _rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    entries: Dict[Tuple[int, int], Fraction] = {}
    for k, f in enumerate(free):
        entries[(f, k)] = Fraction(1)
        for pivot, row in zip(pivots, reduced):
            value = row.get(f)
            if value:
                entries[(pivot, k)] = -value
    return RationalMatrix.from_entries(m.cols, len(free), entries)


def image_basis(m: RationalMatrix) -> RationalMatrix:
    """Columns of ``m`` at the pivot positions; a basis of its column space."""
    pivots, _ = _rref(m)
    return m.submatrix(range(m.rows), pivots)


__all__ = [
    "Rational",
    "RationalMatrix",
    "rank",
    "kernel_basis",
    "image_basis",
]
