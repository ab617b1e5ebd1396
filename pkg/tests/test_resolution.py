import itertools as it

import pytest
from hypothesis import given, settings, strategies as st

import PyCayley_Cohomology._resolution as resolution_module
from PyCayley_Cohomology._complex import ChainMap, cohomology, is_quasi_iso, totalize
from PyCayley_Cohomology._exceptions import InvariantViolation, LevelRangeException
from PyCayley_Cohomology._instances import generate_random
from PyCayley_Cohomology._report import Status
from PyCayley_Cohomology._resolution import (
    SpacePairInstance,
    intersection_level,
    resolution_comparison_map,
    resolution_double_complex,
    verify_resolution,
)
from PyCayley_Cohomology._simplicial import Subcomplex, relative_cochain_complex, simplex_boundary, simplex_closure


def _pair(name, k, generators):
    return SpacePairInstance(name, k, tuple(Subcomplex.generated(k, g) for g in generators))


@pytest.fixture
def two_edges():
    return _pair("two-edges", simplex_closure(2), [[(0, 1)], [(0, 2)]])


def test_level_two_is_the_shared_vertex(two_edges):
    (shared,) = intersection_level(two_edges, 2)
    assert shared.simplices == {(0,)}


def test_level_one_is_the_family(two_edges):
    assert intersection_level(two_edges, 1) == list(two_edges.subcomplexes)


@pytest.mark.parametrize("m", [0, 3])
def test_level_out_of_range(two_edges, m):
    with pytest.raises(LevelRangeException):
        intersection_level(two_edges, m)


def test_level_sizes_follow_binomials():
    k = simplex_boundary(3)
    inst = _pair("faces", k, [[face] for face in it.combinations(range(4), 3)][:3])
    assert [len(intersection_level(inst, m)) for m in (1, 2, 3)] == [3, 3, 1]


def test_empty_intersections_are_kept(sphere):
    inst = _pair("poles", sphere, [[(0,)], [(1,)]])
    (meet,) = intersection_level(inst, 2)
    assert meet.is_empty()


def test_single_member_resolution_is_relative_cohomology(sphere):
    inst = _pair("pole", sphere, [[(0,)]])
    total = cohomology(totalize(resolution_double_complex(inst)))
    assert total == cohomology(relative_cochain_complex(sphere, inst.union)) == {2: 1}


def test_two_edges_of_a_disk_are_acyclic(two_edges):
    assert cohomology(totalize(resolution_double_complex(two_edges))).is_zero()
    report = verify_resolution(two_edges)
    assert report.status is Status.PASS
    assert report.left.is_zero() and report.right.is_zero()


def test_sphere_modulo_poles(sphere):
    inst = _pair("poles", sphere, [[(0,)], [(1,)]])
    report = verify_resolution(inst, certify_map=True)
    assert report.status is Status.PASS
    assert report.left == {1: 1, 2: 1}
    assert report.extra["comparison_map"] == "quasi-isomorphism"


def test_resolution_columns(sphere):
    inst = _pair("three", sphere, [[(0,)], [(2,)], [(0, 2)]])
    double = resolution_double_complex(inst)
    assert len(double.columns) == 4
    assert double.columns[0] == sphere.cochains


def test_family_must_be_nonempty(sphere):
    with pytest.raises(InvariantViolation) as info:
        SpacePairInstance("empty", sphere, ())
    assert info.value.invariant == "nonempty-family"


def test_members_must_live_in_the_complex(sphere):
    foreign = Subcomplex.generated(simplex_closure(2), [(0,)])
    with pytest.raises(InvariantViolation) as info:
        SpacePairInstance("foreign", sphere, (foreign,))
    assert info.value.invariant == "subcomplex-parent"


@pytest.mark.parametrize("name, expected", [
    ("disk-two-edges", {}),
    ("disk-boundary", {2: 1}),
    ("s2-antipodal-pair", {1: 1, 2: 1}),
    ("tetra-boundary-faces", {2: 1}),
    ("s2-two-punctures", {1: 1, 2: 1}),
    ("s2-three-punctures", {1: 2, 2: 1}),
    ("torus-two-punctures", {1: 3, 2: 1}),
    ("circle-three-arcs", {1: 3}),
    ("cayley-point-r2", {1: 1}),
    ("cayley-point-r3", {2: 1}),
])
def test_shipped_pairs(fixtures, name, expected):
    report = verify_resolution(fixtures[name].space_pair(), certify_map=True)
    assert report.status is Status.PASS, report.differing_degrees
    assert report.left == expected


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_random_pairs(seed, r):
    inst = generate_random(seed, vertices=5, dimension=2, r=r, kind="space-pair").space_pair()
    assert verify_resolution(inst).status is Status.PASS
    assert is_quasi_iso(resolution_comparison_map(inst))


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000), st.permutations(range(3)))
def test_member_order_does_not_matter(seed, order):
    inst = generate_random(seed, vertices=5, dimension=2, r=3, kind="space-pair").space_pair()
    assert verify_resolution(inst.reordered(order)).left == verify_resolution(inst).left


def test_uncertified_comparison_map_fails_with_its_cone(sphere, monkeypatch):
    inst = _pair("poles", sphere, [[(0,)], [(1,)]])
    real = resolution_comparison_map(inst)
    monkeypatch.setattr(resolution_module, "resolution_comparison_map",
                        lambda pair: ChainMap.zero(real.source, real.target))
    report = verify_resolution(inst, certify_map=True)
    assert report.status is Status.FAIL
    assert report.extra["comparison_map"] == "not a quasi-isomorphism"
    assert report.extra["compared"]["left"] == {"1": 1, "2": 1}
    assert report.differing_degrees


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_total_euler_characteristic_is_the_alternating_column_sum(seed, r):
    inst = generate_random(seed, vertices=5, dimension=2, r=r, kind="space-pair").space_pair()
    double = resolution_double_complex(inst)
    columns = sum((-1) ** p * column.euler_characteristic() for p, column in enumerate(double.columns))
    assert totalize(double).euler_characteristic() == columns
    assert cohomology(totalize(double)).euler_characteristic() == columns
