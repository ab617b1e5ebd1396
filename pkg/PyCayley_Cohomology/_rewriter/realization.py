"""
Realization of formal complexes over a concrete cover.

A term becomes the cochain complex of its open model; an arrow between terms
in adjacent degrees is a signed restriction. Relative to the round's letters
O ∪ {a, b}, a term is (K, code) with K ⊆ O and code one of ``both``, ``a``,
``b``, ``merged`` (a∩b) or ``none``. Arrows keeping K carry (−1)^|O−K| times
the local Mayer–Vietoris sign; arrows dropping a letter j from K carry the
Čech sign of j within (O−K) ∪ {j}, times −1 for (K,b) → (K−j,a∩b).
"""
import logging
from typing import List, Optional, Tuple

from PyCayley_Cohomology._complex import BettiTable, CochainComplex, DoubleComplex, cohomology, totalize
from PyCayley_Cohomology._cover import CoverInstance, carrier_for_blocks
from PyCayley_Cohomology._report import Report, Status, timed
from PyCayley_Cohomology._rewriter.terms import Block, CoverTerm, FormalComplex, RewriteTrace
from PyCayley_Cohomology._simplicial import restriction_double_complex

logger = logging.getLogger(__name__)

_KEEP_SIGNS = {
    ("both", "a"): 1,
    ("both", "b"): 1,
    ("a", "none"): 1,
    ("b", "none"): -1,
    ("merged", "none"): 1,
}
_DROP_SIGNS = {
    ("a", "merged"): 1,
    ("b", "merged"): -1,
}


def realize(t: CoverTerm, inst: CoverInstance) -> CochainComplex:
    return carrier_for_blocks(inst, t.blocks).complex.cochains


def _decode(term: CoverTerm, letters: Tuple[Block, ...]) -> Tuple[frozenset, str]:
    a, b = letters[-2:]
    blocks = set(term.blocks)
    kept = frozenset(blocks & set(letters[:-2]))
    rest = blocks - kept
    if rest == {a, b}:
        return kept, "both"
    if rest == {a}:
        return kept, "a"
    if rest == {b}:
        return kept, "b"
    if rest == {tuple(sorted(a + b))}:
        return kept, "merged"
    if not rest:
        return kept, "none"
    raise ValueError(f"{term} is not built from the letters {letters}")


def _arrow_sign(source: CoverTerm, target: CoverTerm, letters: Tuple[Block, ...]) -> int:
    """Sign of the restriction from ``source`` to ``target`` one degree higher; 0 if there is none."""
    if len(letters) < 2:
        return 0
    kept, code = _decode(source, letters)
    kept_after, code_after = _decode(target, letters)
    others = letters[:-2]
    complement = [l for l in others if l not in kept]
    if kept_after == kept:
        return _KEEP_SIGNS.get((code, code_after), 0) * (-1) ** len(complement)
    dropped = kept - kept_after
    if len(dropped) != 1 or not kept_after < kept:
        return 0
    if code == code_after:
        sign = 1
    else:
        sign = _DROP_SIGNS.get((code, code_after), 0)
    (j,) = dropped
    position = sorted(complement + [j], key=min).index(j)
    return sign * (-1) ** position


def realize_formal(c: FormalComplex, inst: CoverInstance) -> DoubleComplex:
    """Columns are the degrees of ``c``; summands follow the term order within each degree."""
    columns = [[carrier_for_blocks(inst, t.blocks).complex for t in slot] for slot in c.slots]
    arrows = []
    for p in range(len(c.slots) - 1):
        for i, source in enumerate(c.slots[p]):
            for j, target in enumerate(c.slots[p + 1]):
                sign = _arrow_sign(source, target, c.letters)
                if sign:
                    arrows.append((p, i, j, sign))
    return restriction_double_complex(columns, arrows)


def _check_letters(c: FormalComplex, inst: CoverInstance) -> Optional[str]:
    if c.r != inst.r:
        return f"the trace is for r={c.r}, the instance has r={inst.r}"
    return None


def verify_trace(tr: RewriteTrace, inst: CoverInstance) -> Report:
    """
    Realize every state of the trace over ``inst`` and compare total Betti
    tables of consecutive states; the final state is also compared with the
    deepest intersection shifted by r−1. A step that changes the cohomology
    is reported with the tables before and after it.
    """
    problem = _check_letters(tr.initial, inst)
    if problem is not None:
        return Report(inst.name, "verify-trace", Status.INVALID_INSTANCE, detail=problem, trace=tr.render())
    with timed() as watch:
        tables: List[BettiTable] = [cohomology(totalize(realize_formal(state, inst))) for state in tr.states()]
        broken = [n for n in range(1, len(tables)) if tables[n] != tables[n - 1]]
        deep = carrier_for_blocks(inst, [range(1, inst.r + 1)]).complex.cochains
        expected = cohomology(deep).shifted(-(inst.r - 1))
        report = Report.compare(inst.name, "verify-trace", tables[-1], expected, trace=tr.render())
        report.extra["steps"] = [str(table) for table in tables]
        if broken:
            n = broken[0]
            report.fail_on(tables[n - 1], tables[n], f"step {n} changes the total cohomology")
    report.elapsed = watch.elapsed
    logger.info("%s verify-trace: %s", inst.name, report.status.value)
    return report
