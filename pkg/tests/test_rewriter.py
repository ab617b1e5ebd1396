import dataclasses

import pytest
from hypothesis import given, settings, strategies as st

from PyCayley_Cohomology._complex import cohomology, totalize
from PyCayley_Cohomology._cover import verify_final
from PyCayley_Cohomology._exceptions import RewriteException
from PyCayley_Cohomology._instances import generate_random
from PyCayley_Cohomology._report import Status
from PyCayley_Cohomology._rewriter import (
    INITIAL_ELIMINATION,
    PAIR_MERGE,
    CoverTerm,
    FormalComplex,
    RewriteTrace,
    initial_complex,
    mv_step,
    realize,
    realize_formal,
    reduce,
    step_bound,
    verify_trace,
)

COVER_FIXTURES = [
    "s2-two-punctures",
    "s2-three-punctures",
    "s2-four-punctures",
    "s2-redundant-member",
    "torus-two-punctures",
    "circle-three-arcs",
    "cayley-point-r2",
    "cayley-point-r3",
]


def test_term_notation():
    term = CoverTerm.of([3, 2], [1])
    assert str(term) == "(1,2∩3)"
    assert CoverTerm.parse("(1, 2∩3)") == term
    assert CoverTerm.parse("(1,2&3)") == term
    assert term.indices == {1, 2, 3}


@pytest.mark.parametrize("text", ["()", "1,2", "(1,a)", "(1,1)", "(0)", "(1∩2,2)"])
def test_malformed_terms(text):
    with pytest.raises(RewriteException):
        CoverTerm.parse(text)


def test_containment_of_opens():
    assert CoverTerm.parse("(1,2)").contains_open(CoverTerm.parse("(1∩2)"))
    assert CoverTerm.parse("(1,2)").contains_open(CoverTerm.parse("(1)"))
    assert not CoverTerm.parse("(1)").contains_open(CoverTerm.parse("(1,2)"))


def test_initial_complex_r1():
    assert initial_complex(1).render() == "(1)"


def test_initial_complex_r2():
    assert initial_complex(2).render() == "(1,2) -> (1) + (2)"


def test_initial_complex_r3():
    assert initial_complex(3).render() == "(1,2,3) -> (1,2) + (1,3) + (2,3) -> (1) + (2) + (3)"


def test_initial_complex_rejects_r0():
    with pytest.raises(RewriteException):
        initial_complex(0)


def test_reduce_r1_is_empty():
    trace = reduce(1)
    assert trace.steps == ()
    assert trace.final.render() == "(1)"


def test_reduce_r2_is_mayer_vietoris():
    trace = reduce(2)
    (step,) = trace.steps
    assert step.kind == INITIAL_ELIMINATION
    assert trace.final.render() == "0 -> (1∩2)"


def test_reduce_r3_matches_the_hand_computation():
    trace = reduce(3)
    assert [step.after.render() for step in trace.steps] == [
        "(1,2,3) -> (1,2) + (1,3) -> (1) + (2∩3)",
        "0 -> (1,2∩3) -> (1) + (2∩3)",
        "0 -> 0 -> (1∩2∩3)",
    ]
    assert [step.kind for step in trace.steps] == [PAIR_MERGE, INITIAL_ELIMINATION, INITIAL_ELIMINATION]
    assert trace.steps[0].describe() == "[pair-merge] (2,3) -> (2) + (3) -> (2∩3) (degrees 1, 2)"


def test_trace_rendering():
    lines = reduce(3).render().splitlines()
    assert lines[0] == "r = 3"
    assert lines[1] == "initial: (1,2,3) -> (1,2) + (1,3) + (2,3) -> (1) + (2) + (3)"
    assert lines[2].startswith("step 1 [pair-merge]")
    assert lines[-1] == "final: 0 -> 0 -> (1∩2∩3)"


@pytest.mark.parametrize("r", range(1, 7))
def test_reduce_terminates_in_the_deepest_intersection(r):
    trace = reduce(r)
    final = trace.final
    assert len(trace.steps) == step_bound(r)
    assert not any(final.slots[:-1])
    assert final.slots[-1] == (CoverTerm((tuple(range(1, r + 1)),)),)
    assert len(final) == r


def test_the_left_most_term_cannot_go_first():
    with pytest.raises(RewriteException):
        mv_step(initial_complex(3), CoverTerm.parse("(1,2,3)"))


def test_step_needs_both_merged_letters():
    with pytest.raises(RewriteException):
        mv_step(initial_complex(3), CoverTerm.parse("(1,2)"))


def test_step_checks_the_degree():
    with pytest.raises(RewriteException):
        mv_step(initial_complex(3), CoverTerm.parse("(2,3)"), degree=0)


def test_single_letter_cannot_step():
    with pytest.raises(RewriteException):
        mv_step(initial_complex(1), CoverTerm.parse("(1)"))


def test_manual_step_agrees_with_reduce():
    after, step = mv_step(initial_complex(3), CoverTerm.parse("(2,3)"))
    assert step.degree == 1
    assert step.intersection == CoverTerm.parse("(2∩3)")
    assert after == reduce(3).steps[0].after


def test_realized_terms(fixtures):
    inst = fixtures["s2-two-punctures"].cover()
    assert cohomology(realize(CoverTerm.parse("(1∩2)"), inst)) == {0: 1, 1: 1}
    assert cohomology(realize(CoverTerm.parse("(1)"), inst)) == {0: 1}
    assert cohomology(realize(CoverTerm.parse("(1,2)"), inst)) == {0: 1, 2: 1}


def test_realized_initial_state_is_the_pseudo_mayer_vietoris_complex(fixtures):
    inst = fixtures["s2-three-punctures"].cover()
    table = cohomology(totalize(realize_formal(initial_complex(3), inst)))
    assert table == verify_final(inst).left


@pytest.mark.parametrize("name", COVER_FIXTURES)
def test_every_step_preserves_cohomology(fixtures, name):
    inst = fixtures[name].cover()
    report = verify_trace(reduce(inst.r), inst)
    assert report.status is Status.PASS, report.detail
    assert len(report.extra["steps"]) == step_bound(inst.r) + 1
    assert len(set(report.extra["steps"])) == 1


@pytest.mark.parametrize("name", COVER_FIXTURES)
def test_trace_and_final_form_agree(fixtures, name):
    inst = fixtures[name].cover()
    final = verify_final(inst)
    trace = verify_trace(reduce(inst.r), inst)
    assert final.status is trace.status
    assert final.right == trace.right
    assert trace.extra["steps"][-1] == str(final.right)


def test_trace_for_the_wrong_r(fixtures):
    report = verify_trace(reduce(3), fixtures["s2-two-punctures"].cover())
    assert report.status is Status.INVALID_INSTANCE


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 4))
def test_random_traces(seed, r):
    inst = generate_random(seed, vertices=5, dimension=2, r=r).cover()
    assert verify_trace(reduce(r), inst).status is Status.PASS


def test_broken_step_is_reported_with_its_tables(fixtures):
    inst = fixtures["s2-two-punctures"].cover()
    (step,) = reduce(2).steps
    wrong = FormalComplex(step.after.letters, ((), (CoverTerm.parse("(1)"),)))
    trace = RewriteTrace(2, step.before, (dataclasses.replace(step, after=wrong),))
    report = verify_trace(trace, inst)
    assert report.status is Status.FAIL
    assert report.detail == "step 1 changes the total cohomology"
    assert report.left == {1: 1, 2: 1}
    assert report.right == {1: 1}
    assert report.differing_degrees == [2]
    assert report.extra["steps"] == ["{1:1, 2:1}", "{1:1}"]
