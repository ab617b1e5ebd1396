import pytest
from hypothesis import given, settings, strategies as st

from PyCayley_Cohomology._complex import ChainMap, cohomology, cone, is_quasi_iso, totalize
import PyCayley_Cohomology._cover as cover_module
from PyCayley_Cohomology._cover import (
    CoverInstance,
    carrier_for_blocks,
    comparison_map,
    deepest_intersection,
    pseudo_mv_double_complex,
    verify_final,
    verify_theorem,
)
from PyCayley_Cohomology._exceptions import CoverConditionException, CoverIndexException, InvariantViolation
from PyCayley_Cohomology._instances import generate_random
from PyCayley_Cohomology._report import Status
from PyCayley_Cohomology._resolution import SpacePairInstance
from PyCayley_Cohomology._simplicial import Subcomplex, simplex_closure

DEEP_TABLES = {
    "s2-two-punctures": {1: 1, 2: 1},
    "s2-three-punctures": {2: 1, 3: 2},
    "s2-four-punctures": {3: 1, 4: 3},
    "s2-redundant-member": {1: 1},
    "torus-two-punctures": {1: 1, 2: 3},
    "circle-three-arcs": {2: 3},
    "cayley-point-r2": {1: 1},
    "cayley-point-r3": {2: 1},
}


def _cover(name, k, generators, **kwargs):
    return CoverInstance(name, k, tuple(Subcomplex.generated(k, g) for g in generators), **kwargs)


@pytest.fixture
def hemispheres(sphere):
    return _cover("hemispheres", sphere, [[(0,)], [(1,)]])


def test_cover_condition_is_enforced(sphere):
    with pytest.raises(CoverConditionException) as info:
        _cover("bad", sphere, [[(0, 2)], [(0, 3)]])
    assert info.value.invariant == "cover-condition"


def test_shift_witness_must_be_r_minus_one(sphere):
    with pytest.raises(InvariantViolation) as info:
        _cover("bad-shift", sphere, [[(0,)], [(1,)]], shift=2)
    assert info.value.invariant == "shift-witness"


def test_companion_must_have_r_members(sphere):
    disk = simplex_closure(2)
    companion = SpacePairInstance("c", disk, (Subcomplex.generated(disk, [(0,)]),))
    with pytest.raises(InvariantViolation) as info:
        _cover("bad-companion", sphere, [[(0,)], [(1,)]], companion=companion)
    assert info.value.invariant == "companion-size"


def test_membership_of_barycenters(hemispheres):
    _, order = hemispheres.complex.subdivision
    membership = dict(zip(order, hemispheres.membership))
    assert membership[(0,)] == {2}
    assert membership[(1,)] == {1}
    assert membership[(0, 2)] == {1, 2}


def test_deepest_intersection_is_an_annulus(hemispheres):
    assert cohomology(deepest_intersection(hemispheres).complex.cochains) == {0: 1, 1: 1}


def test_carriers_respect_unions_and_intersections(hemispheres):
    first = carrier_for_blocks(hemispheres, [[1]])
    second = carrier_for_blocks(hemispheres, [[2]])
    assert carrier_for_blocks(hemispheres, [[1], [2]]) == first | second
    assert carrier_for_blocks(hemispheres, [[1, 2]]) == first & second
    assert cohomology(first.complex.cochains) == {0: 1}


@pytest.mark.parametrize("blocks", [[[0]], [[3]], [[]]])
def test_carrier_rejects_bad_indices(hemispheres, blocks):
    with pytest.raises(CoverIndexException):
        carrier_for_blocks(hemispheres, blocks)


def test_pseudo_mv_shape(fixtures):
    double = pseudo_mv_double_complex(fixtures["s2-three-punctures"].cover())
    assert len(double.columns) == 3


def test_two_member_final_form_is_mayer_vietoris(hemispheres):
    report = verify_final(hemispheres, certify_map=True)
    assert report.status is Status.PASS
    assert report.left == report.right == {1: 1, 2: 1}
    assert report.extra["comparison_map"] == "quasi-isomorphism"


def test_cone_of_the_comparison_map_is_acyclic(hemispheres):
    f = comparison_map(hemispheres)
    assert f.source == totalize(pseudo_mv_double_complex(hemispheres))
    assert cohomology(cone(f)).is_zero()


@pytest.mark.parametrize("name, expected", sorted(DEEP_TABLES.items()))
def test_final_form_on_shipped_covers(fixtures, name, expected):
    report = verify_final(fixtures[name].cover(), certify_map=True)
    assert report.status is Status.PASS, report.differing_degrees
    assert report.right == expected


@pytest.mark.parametrize("name, expected", [("cayley-point-r2", {1: 1}), ("cayley-point-r3", {2: 1})])
def test_theorem_on_cayley_companions(fixtures, name, expected):
    report = verify_theorem(fixtures[name].cover())
    assert report.status is Status.PASS
    assert report.left == report.right == expected


def test_theorem_needs_a_companion(hemispheres):
    assert verify_theorem(hemispheres).status is Status.NOT_APPLICABLE


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_final_form_on_random_covers(seed, r):
    inst = generate_random(seed, vertices=5, dimension=2, r=r).cover()
    assert verify_final(inst).status is Status.PASS


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000))
def test_comparison_map_on_random_covers(seed):
    inst = generate_random(seed, vertices=5, dimension=2, r=3).cover()
    assert is_quasi_iso(comparison_map(inst))


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000), st.permutations(range(3)))
def test_member_order_does_not_matter(seed, order):
    inst = generate_random(seed, vertices=5, dimension=2, r=3).cover()
    assert verify_final(inst.reordered(order)).left == verify_final(inst).left


def test_uncertified_comparison_map_fails_with_its_cone(hemispheres, monkeypatch):
    real = comparison_map(hemispheres)
    monkeypatch.setattr(cover_module, "comparison_map", lambda inst: ChainMap.zero(real.source, real.target))
    report = verify_final(hemispheres, certify_map=True)
    assert report.status is Status.FAIL
    assert report.extra["comparison_map"] == "not a quasi-isomorphism"
    assert report.extra["compared"] == {"left": {"1": 1, "2": 1}, "right": {"1": 1, "2": 1}}
    assert report.differing_degrees
    assert report.right.is_zero()
    assert report.left == cohomology(cone(ChainMap.zero(real.source, real.target)))


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_total_euler_characteristic_is_the_alternating_column_sum(seed, r):
    inst = generate_random(seed, vertices=5, dimension=2, r=r).cover()
    double = pseudo_mv_double_complex(inst)
    columns = sum((-1) ** p * column.euler_characteristic() for p, column in enumerate(double.columns))
    assert totalize(double).euler_characteristic() == columns
    assert verify_final(inst).left.euler_characteristic() == columns


@pytest.mark.parametrize("name", sorted(DEEP_TABLES))
def test_euler_characteristic_on_shipped_covers(fixtures, name):
    double = pseudo_mv_double_complex(fixtures[name].cover())
    columns = sum((-1) ** p * column.euler_characteristic() for p, column in enumerate(double.columns))
    assert cohomology(totalize(double)).euler_characteristic() == columns
