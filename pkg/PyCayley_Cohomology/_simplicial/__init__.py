"""
Finite abstract simplicial complexes and their cochains.

Simplices are ascending vertex tuples. Open complements of closed
subcomplexes are modelled by full subcomplexes of the barycentric
subdivision, so that every open set of a cover and every intersection or
union of them lives in the same ambient complex and restrictions between
them are coordinate projections of cochains.
"""
import functools as ft
import itertools as it
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from PyCayley_Cohomology._complex import ChainMap, CochainComplex, DoubleComplex, direct_sum
from PyCayley_Cohomology._exceptions import SubcomplexException, VertexRangeException
from PyCayley_Cohomology._linalg import RationalMatrix

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]


def _proper_faces(simplex: Simplex) -> Iterator[Simplex]:
    for size in range(1, len(simplex)):
        yield from it.combinations(simplex, size)


def _facets_of(simplex: Simplex) -> Iterator[Simplex]:
    for i in range(len(simplex)):
        yield simplex[:i] + simplex[i + 1:]


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    simplices: FrozenSet[Simplex] = field(default_factory=frozenset)

    def __post_init__(self):
        simplices = frozenset(tuple(s) for s in self.simplices)
        object.__setattr__(self, "simplices", simplices)
        for simplex in simplices:
            if not simplex:
                raise SubcomplexException("the empty simplex is not stored")
            if any(a >= b for a, b in zip(simplex, simplex[1:])):
                raise SubcomplexException(f"simplex {simplex} is not strictly ascending")
            if simplex[0] < 0 or simplex[-1] >= self.vertex_count:
                raise VertexRangeException(f"simplex {simplex} uses a vertex outside 0..{self.vertex_count - 1}")
            if len(simplex) > 1:
                missing = next((f for f in _facets_of(simplex) if f not in simplices), None)
                if missing is not None:
                    raise SubcomplexException(f"face {missing} of {simplex} is missing")

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, simplex: object) -> bool:
        return simplex in self.simplices

    def __iter__(self) -> Iterator[Simplex]:
        for layer in self.by_dimension:
            yield from layer

    @ft.cached_property
    def by_dimension(self) -> Tuple[Tuple[Simplex, ...], ...]:
        layers: Dict[int, List[Simplex]] = {}
        for simplex in self.simplices:
            layers.setdefault(len(simplex) - 1, []).append(simplex)
        return tuple(tuple(sorted(layers.get(d, ()))) for d in range(self.dimension + 1))

    @ft.cached_property
    def index(self) -> Dict[Simplex, int]:
        """Position of each simplex among those of its dimension."""
        return {s: i for layer in self.by_dimension for i, s in enumerate(layer)}

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def simplices_of_dimension(self, d: int) -> Tuple[Simplex, ...]:
        return self.by_dimension[d] if 0 <= d <= self.dimension else ()

    def facets(self) -> Tuple[Simplex, ...]:
        """Maximal simplices, sorted."""
        covered = {f for s in self.simplices for f in _facets_of(s)}
        return tuple(sorted(self.simplices - covered))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(layer) for d, layer in enumerate(self.by_dimension))

    @ft.cached_property
    def subdivision(self) -> Tuple["SimplicialComplex", Tuple[Simplex, ...]]:
        return _subdivide(self)

    @ft.cached_property
    def cochains(self) -> CochainComplex:
        return _coboundary_complex(self)

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={self.vertex_count}, simplices={len(self.simplices)})"


@dataclass(frozen=True)
class Subcomplex:
    parent: SimplicialComplex
    simplices: FrozenSet[Simplex] = field(default_factory=frozenset)

    def __post_init__(self):
        simplices = frozenset(tuple(s) for s in self.simplices)
        object.__setattr__(self, "simplices", simplices)
        stray = simplices - self.parent.simplices
        if stray:
            raise SubcomplexException(f"{sorted(stray)[0]} is not a simplex of the parent complex")
        for simplex in simplices:
            if len(simplex) > 1 and any(f not in simplices for f in _facets_of(simplex)):
                raise SubcomplexException(f"subcomplex is not closed under faces at {simplex}")

    @classmethod
    def empty(cls, parent: SimplicialComplex) -> "Subcomplex":
        return cls(parent, frozenset())

    @classmethod
    def full(cls, parent: SimplicialComplex) -> "Subcomplex":
        return cls(parent, parent.simplices)

    @classmethod
    def generated(cls, parent: SimplicialComplex, generators: Iterable[Sequence[int]]) -> "Subcomplex":
        """Smallest subcomplex of ``parent`` containing the given simplices."""
        return cls(parent, _face_closure(tuple(sorted(g)) for g in generators))

    def _check_parent(self, other: "Subcomplex") -> None:
        if other.parent is not self.parent and other.parent != self.parent:
            raise SubcomplexException("subcomplexes of different complexes")

    def union(self, other: "Subcomplex") -> "Subcomplex":
        self._check_parent(other)
        return Subcomplex(self.parent, self.simplices | other.simplices)

    def intersection(self, other: "Subcomplex") -> "Subcomplex":
        self._check_parent(other)
        return Subcomplex(self.parent, self.simplices & other.simplices)

    __or__ = union
    __and__ = intersection

    def is_empty(self) -> bool:
        return not self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, simplex: object) -> bool:
        return simplex in self.simplices

    @ft.cached_property
    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.parent.vertex_count, self.simplices)

    def facets(self) -> Tuple[Simplex, ...]:
        return self.complex.facets()

    def __repr__(self) -> str:
        return f"Subcomplex(simplices={len(self.simplices)} of {len(self.parent.simplices)})"


@dataclass(frozen=True)
class OpenModel:
    """The complement of ``avoided`` in ``parent``, as a full subcomplex of its subdivision."""

    parent: SimplicialComplex
    avoided: Tuple[Subcomplex, ...]
    ambient: SimplicialComplex
    carrier: Subcomplex

    @property
    def complex(self) -> SimplicialComplex:
        return self.carrier.complex


def _face_closure(generators: Iterable[Simplex]) -> FrozenSet[Simplex]:
    simplices = set()
    for generator in generators:
        if generator in simplices:
            continue
        simplices.add(generator)
        simplices.update(_proper_faces(generator))
    return frozenset(simplices)


def closure(generators: Iterable[Sequence[int]], vertex_count: int = None) -> SimplicialComplex:
    generators = [tuple(g) for g in generators]
    for g in generators:
        if len(set(g)) != len(g) or list(g) != sorted(g):
            raise SubcomplexException(f"{g} is not a strictly ascending vertex tuple")
    if vertex_count is None:
        vertex_count = max((g[-1] + 1 for g in generators if g), default=0)
    for g in generators:
        if g and (g[0] < 0 or g[-1] >= vertex_count):
            raise VertexRangeException(f"simplex {g} uses a vertex outside 0..{vertex_count - 1}")
    return SimplicialComplex(vertex_count, _face_closure(g for g in generators if g))


def _subdivide(k: SimplicialComplex) -> Tuple[SimplicialComplex, Tuple[Simplex, ...]]:
    order = tuple(k)
    position = {s: i for i, s in enumerate(order)}
    chains: Dict[Simplex, List[Simplex]] = {}
    for simplex in order:
        top = position[simplex]
        ending = [(top,)]
        for face in _proper_faces(simplex):
            ending.extend(chain + (top,) for chain in chains[face])
        chains[simplex] = ending
    sd = SimplicialComplex(len(order), frozenset(c for ending in chains.values() for c in ending))
    logger.debug("subdivided %r into %r", k, sd)
    return sd, order


def barycentric_subdivision(k: SimplicialComplex) -> Tuple[SimplicialComplex, Tuple[Simplex, ...]]:
    """
    Vertex ``i`` of the subdivision is the barycenter of the ``i``-th simplex
    of ``k`` in (dimension, lexicographic) order; the returned tuple lists
    those parent simplices.
    """
    return k.subdivision


def full_subcomplex(k: SimplicialComplex, vertices: Iterable[int]) -> Subcomplex:
    kept = frozenset(vertices)
    return Subcomplex(k, frozenset(s for s in k.simplices if kept.issuperset(s)))


def open_model(k: SimplicialComplex, avoided: Sequence[Subcomplex]) -> OpenModel:
    avoided = tuple(avoided)
    for sub in avoided:
        if sub.parent is not k and sub.parent != k:
            raise SubcomplexException("avoided subcomplex does not live in the given complex")
    sd, order = k.subdivision
    kept = [i for i, s in enumerate(order) if not any(s in sub for sub in avoided)]
    return OpenModel(k, avoided, sd, full_subcomplex(sd, kept))


def _coboundary_complex(k: SimplicialComplex) -> CochainComplex:
    if not k.simplices:
        return CochainComplex.zero()
    dims = [len(layer) for layer in k.by_dimension]
    index = k.index
    differentials = []
    for d in range(k.dimension):
        entries = {}
        for row, simplex in enumerate(k.by_dimension[d + 1]):
            for i, face in enumerate(_facets_of(simplex)):
                entries[(row, index[face])] = -1 if i % 2 else 1
        differentials.append(RationalMatrix.from_entries(dims[d + 1], dims[d], entries))
    return CochainComplex(0, dims, differentials)


def cochain_complex(k: SimplicialComplex) -> CochainComplex:
    return k.cochains


def restriction_matrix(source: SimplicialComplex, target: SimplicialComplex, d: int) -> RationalMatrix:
    rows = target.simplices_of_dimension(d)
    index = source.index
    return RationalMatrix.from_entries(
        len(rows), len(source.simplices_of_dimension(d)), {(i, index[s]): 1 for i, s in enumerate(rows)}
    )


def _check_contained(k: SimplicialComplex, simplices: FrozenSet[Simplex]) -> None:
    if not simplices <= k.simplices:
        raise SubcomplexException("subcomplex is not contained in the given complex")


def restriction_map(k: SimplicialComplex, sub: Subcomplex) -> ChainMap:
    _check_contained(k, sub.simplices)
    target = sub.complex
    return ChainMap(k.cochains, target.cochains,
                    {d: restriction_matrix(k, target, d) for d in range(k.dimension + 1)})


def relative_cochain_complex(k: SimplicialComplex, sub: Subcomplex) -> CochainComplex:
    """Cochains of ``k`` vanishing on ``sub``."""
    _check_contained(k, sub.simplices)
    if not k.simplices:
        return CochainComplex.zero()
    kept = [[i for i, s in enumerate(layer) if s not in sub] for layer in k.by_dimension]
    full = k.cochains
    differentials = [full.differential(d).submatrix(kept[d + 1], kept[d]) for d in range(k.dimension)]
    return CochainComplex(0, [len(rows) for rows in kept], differentials)


Arrow = Tuple[int, int, int, int]


def restriction_double_complex(columns: Sequence[Sequence[SimplicialComplex]],
                               arrows: Iterable[Arrow]) -> DoubleComplex:
    """
    Column ``p`` is the direct sum of the cochain complexes of
    ``columns[p]``; an arrow ``(p, i, j, sign)`` adds ``sign`` times the
    restriction from summand ``i`` of column ``p`` to summand ``j`` of column
    ``p + 1``, which must be a subcomplex of it.
    """
    complexes = [direct_sum([k.cochains for k in column]) for column in columns]
    signs: Dict[int, Dict[Tuple[int, int], int]] = {}
    for p, i, j, sign in arrows:
        source, target = columns[p][i], columns[p + 1][j]
        _check_contained(source, target.simplices)
        blocks = signs.setdefault(p, {})
        blocks[(j, i)] = blocks.get((j, i), 0) + sign
    horizontals = []
    for p in range(len(columns) - 1):
        source, target = columns[p], columns[p + 1]
        degrees = range(max([k.dimension for k in source] + [k.dimension for k in target] + [-1]) + 1)
        components = {}
        for d in degrees:
            blocks = {
                (j, i): restriction_matrix(source[i], target[j], d) * sign
                for (j, i), sign in signs.get(p, {}).items() if sign
            }
            components[d] = RationalMatrix.block(
                [len(k.simplices_of_dimension(d)) for k in target],
                [len(k.simplices_of_dimension(d)) for k in source],
                blocks,
            )
        horizontals.append(ChainMap(complexes[p], complexes[p + 1], components))
    return DoubleComplex(complexes, horizontals)


def simplex_closure(n: int) -> SimplicialComplex:
    """The full n-simplex on vertices 0..n."""
    return closure([tuple(range(n + 1))], n + 1)


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex, a triangulated (n−1)-sphere."""
    return closure(it.combinations(range(n + 1), n), n + 1)


def octahedron() -> SimplicialComplex:
    """Boundary of the octahedron; antipodal vertex pairs are (0,1), (2,3), (4,5)."""
    return closure(it.product((0, 1), (2, 3), (4, 5)), 6)


def seven_vertex_torus() -> SimplicialComplex:
    triangles = []
    for i in range(7):
        triangles.append(tuple(sorted({i, (i + 1) % 7, (i + 3) % 7})))
        triangles.append(tuple(sorted({i, (i + 2) % 7, (i + 3) % 7})))
    return closure(triangles, 7)


__all__ = [
    "Simplex",
    "SimplicialComplex",
    "Subcomplex",
    "OpenModel",
    "closure",
    "barycentric_subdivision",
    "full_subcomplex",
    "open_model",
    "cochain_complex",
    "restriction_map",
    "restriction_matrix",
    "relative_cochain_complex",
    "restriction_double_complex",
    "simplex_closure",
    "simplex_boundary",
    "octahedron",
    "seven_vertex_torus",
]
