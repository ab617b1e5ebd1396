import itertools as it

import pytest
from hypothesis import given, settings, strategies as st

from PyCayley_Cohomology._complex import cohomology
from PyCayley_Cohomology._exceptions import SubcomplexException, VertexRangeException
from PyCayley_Cohomology._linalg import RationalMatrix
from PyCayley_Cohomology._simplicial import (
    SimplicialComplex,
    Subcomplex,
    barycentric_subdivision,
    closure,
    cochain_complex,
    full_subcomplex,
    open_model,
    relative_cochain_complex,
    restriction_map,
    simplex_boundary,
    simplex_closure,
)

NORTH, SOUTH = 0, 1


@st.composite
def random_complexes(draw, max_vertices=6):
    n = draw(st.integers(1, max_vertices))
    candidates = [c for size in (1, 2, 3) for c in it.combinations(range(n), size)]
    generators = draw(st.lists(st.sampled_from(candidates), min_size=1, max_size=6))
    return closure(generators, n)


@st.composite
def complexes_with_subcomplex(draw):
    k = draw(random_complexes())
    simplices = sorted(k.simplices)
    generators = draw(st.lists(st.sampled_from(simplices), max_size=3))
    return k, Subcomplex.generated(k, generators)


def test_closure_of_a_triangle():
    k = closure([(0, 1, 2)])
    assert len(k) == 7
    assert [len(k.simplices_of_dimension(d)) for d in range(3)] == [3, 3, 1]


def test_closure_of_nothing_is_empty():
    k = closure([])
    assert len(k) == 0
    assert k.dimension == -1
    assert cohomology(cochain_complex(k)).is_zero()


def test_octahedron_size(sphere):
    assert len(sphere) == 26
    assert len(sphere.facets()) == 8


def test_closure_rejects_out_of_range_vertices():
    with pytest.raises(VertexRangeException):
        closure([(0, 5)], 3)


def test_closure_rejects_unsorted_tuples():
    with pytest.raises(SubcomplexException):
        closure([(2, 1)])


def test_complex_must_be_face_closed():
    with pytest.raises(SubcomplexException):
        SimplicialComplex(3, frozenset({(0,), (1,), (0, 1, 2)}))


def test_subdivision_of_an_edge():
    sd, order = barycentric_subdivision(closure([(0, 1)]))
    assert order == ((0,), (1,), (0, 1))
    assert [len(sd.simplices_of_dimension(d)) for d in range(2)] == [3, 2]


def test_subdivision_of_a_triangle():
    sd, _ = barycentric_subdivision(simplex_closure(2))
    assert len(sd) == 25
    assert [len(sd.simplices_of_dimension(d)) for d in range(3)] == [7, 12, 6]


@settings(max_examples=30, deadline=None)
@given(random_complexes())
def test_subdivision_preserves_euler_characteristic_and_cohomology(k):
    sd, _ = barycentric_subdivision(k)
    assert sd.euler_characteristic() == k.euler_characteristic()
    assert cohomology(cochain_complex(sd)) == cohomology(cochain_complex(k))


def test_subdivision_invariance_on_shipped_complexes(fixtures):
    for inst in fixtures.values():
        k = inst.instance.complex
        sd, _ = barycentric_subdivision(k)
        assert cohomology(sd.cochains) == cohomology(k.cochains), inst.name


def test_cochains_of_a_point():
    assert cohomology(cochain_complex(closure([(0,)]))) == {0: 1}


def test_cochains_of_a_circle():
    assert cohomology(cochain_complex(simplex_boundary(2))) == {0: 1, 1: 1}


def test_cochains_of_the_torus(torus):
    assert len(torus.simplices_of_dimension(2)) == 14
    assert cohomology(cochain_complex(torus)) == {0: 1, 1: 2, 2: 1}


def test_open_model_without_avoided_sets_is_everything(sphere):
    model = open_model(sphere, [])
    assert model.carrier.simplices == model.ambient.simplices


def test_open_model_of_twice_punctured_sphere(sphere):
    poles = [Subcomplex.generated(sphere, [(NORTH,)]), Subcomplex.generated(sphere, [(SOUTH,)])]
    model = open_model(sphere, poles)
    assert cohomology(model.complex.cochains) == {0: 1, 1: 1}


def test_open_model_of_open_triangle():
    disk = simplex_closure(2)
    boundary = Subcomplex.generated(disk, it.combinations(range(3), 2))
    model = open_model(disk, [boundary])
    assert len(model.carrier) == 1
    assert cohomology(model.complex.cochains) == {0: 1}


def test_open_model_is_monotone(sphere):
    north = Subcomplex.generated(sphere, [(NORTH,)])
    south = Subcomplex.generated(sphere, [(SOUTH,)])
    larger = open_model(sphere, [north]).carrier
    smaller = open_model(sphere, [north, south]).carrier
    assert smaller.simplices <= larger.simplices
    assert smaller.simplices < larger.simplices


def test_open_model_rejects_foreign_subcomplexes(sphere):
    other = Subcomplex.generated(simplex_closure(2), [(0,)])
    with pytest.raises(SubcomplexException):
        open_model(sphere, [other])


def test_full_subcomplex(sphere):
    sub = full_subcomplex(sphere, [0, 2, 4])
    assert sub.facets() == ((0, 2, 4),)


def test_subcomplex_union_and_intersection(sphere):
    a = Subcomplex.generated(sphere, [(0, 2)])
    b = Subcomplex.generated(sphere, [(2, 4)])
    assert (a & b).simplices == {(2,)}
    assert (a | b).facets() == ((0, 2), (2, 4))


def test_subcomplex_must_be_face_closed(sphere):
    with pytest.raises(SubcomplexException):
        Subcomplex(sphere, frozenset({(0, 2)}))


def test_restriction_to_everything_is_identity(sphere):
    f = restriction_map(sphere, Subcomplex.full(sphere))
    for d in range(3):
        assert f.component(d) == RationalMatrix.identity(len(sphere.simplices_of_dimension(d)))


def test_restriction_to_nothing_is_zero(sphere):
    f = restriction_map(sphere, Subcomplex.empty(sphere))
    assert f.target.is_zero()
    assert all(f.component(d).is_zero() for d in range(3))


def test_restriction_rejects_foreign_subcomplexes(sphere):
    with pytest.raises(SubcomplexException):
        restriction_map(simplex_closure(1), Subcomplex.full(sphere))


@settings(max_examples=30, deadline=None)
@given(complexes_with_subcomplex(), st.data())
def test_restrictions_compose(pair, data):
    k, middle = pair
    inner_generators = data.draw(st.lists(st.sampled_from(sorted(middle.simplices)), max_size=2)) if len(middle) else []
    inner = Subcomplex.generated(k, inner_generators)
    first = restriction_map(k, middle)
    second = restriction_map(middle.complex, Subcomplex.generated(middle.complex, inner_generators))
    direct = restriction_map(k, inner)
    composed = first.compose(second)
    for d in range(k.dimension + 1):
        assert composed.component(d) == direct.component(d)


def test_relative_disk_modulo_boundary():
    disk = simplex_closure(2)
    boundary = Subcomplex.generated(disk, it.combinations(range(3), 2))
    assert cohomology(relative_cochain_complex(disk, boundary)) == {2: 1}


def test_relative_complex_modulo_itself_vanishes(sphere):
    assert relative_cochain_complex(sphere, Subcomplex.full(sphere)).is_zero()


def test_relative_sphere_modulo_two_points(sphere):
    poles = Subcomplex.generated(sphere, [(NORTH,), (SOUTH,)])
    assert cohomology(relative_cochain_complex(sphere, poles)) == {1: 1, 2: 1}


@settings(max_examples=40, deadline=None)
@given(complexes_with_subcomplex())
def test_relative_euler_characteristic(pair):
    k, sub = pair
    relative = cohomology(relative_cochain_complex(k, sub))
    assert relative.euler_characteristic() == k.euler_characteristic() - sub.complex.euler_characteristic()
