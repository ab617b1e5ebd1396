"""
Symbolic Mayer–Vietoris elimination.

Starting from the formal complex

    (1,…,r) → Σ (J̄) → ⋯ → Σ (i)

each round merges the two largest letters a, b into the intersection block
a∩b. A step removes a term (K,a,b) and replaces (K,a) + (K,b) one degree to
the right by (K,a∩b), which is the quotient by the Mayer–Vietoris triple

    (K,a,b) → (K,a) + (K,b) → (K,a∩b).

Within a round the terms are eliminated with the fewest kept letters first;
the last one, K = all other letters, is the left-most term of the complex.
"""
import itertools as it
import logging
from typing import List, Optional, Tuple

from PyCayley_Cohomology._constants import MAX_CHECKED_REDUCTION_R
from PyCayley_Cohomology._exceptions import RewriteException
from PyCayley_Cohomology._rewriter.terms import Block, CoverTerm, FormalComplex, RewriteStep, RewriteTrace
from PyCayley_Cohomology._rewriter.realization import realize, realize_formal, verify_trace

logger = logging.getLogger(__name__)

INITIAL_ELIMINATION = "initial-elimination"
PAIR_MERGE = "pair-merge"


def initial_complex(r: int) -> FormalComplex:
    if r < 1:
        raise RewriteException(f"r must be at least 1, got {r}")
    indices = range(1, r + 1)
    slots = []
    for p in range(r):
        slots.append(tuple(
            CoverTerm.singletons(i for i in indices if i not in J) for J in it.combinations(indices, p)
        ))
    return FormalComplex(tuple((i,) for i in indices), tuple(slots))


def _kept_letters(term: CoverTerm, c: FormalComplex) -> Optional[Tuple[Block, ...]]:
    """The letters of ``term`` other than the two largest, if it holds both of those."""
    a, b = c.letters[-2:]
    blocks = set(term.blocks)
    if a not in blocks or b not in blocks:
        return None
    kept = blocks - {a, b}
    if not kept <= set(c.letters[:-2]):
        return None
    return tuple(sorted(kept, key=min))


def mv_step(c: FormalComplex, target: CoverTerm, degree: Optional[int] = None) -> Tuple[FormalComplex, RewriteStep]:
    """
    Eliminate ``target`` through its Mayer–Vietoris triple. Cohomological
    equivalence of the result is not assumed here; it is certified per
    instance by the realization checks.
    """
    if len(c.letters) < 2:
        raise RewriteException("a single letter is left, nothing to merge")
    p = c.locate(target)
    if p is None or (degree is not None and degree != p):
        raise RewriteException(f"{target} does not occur in degree {degree if degree is not None else 'any'}")
    kept = _kept_letters(target, c)
    if kept is None:
        raise RewriteException(f"{target} does not contain both merged letters")
    smaller = [t for _, t in c.terms() if t != target and (k := _kept_letters(t, c)) is not None and len(k) < len(kept)]
    if smaller:
        raise RewriteException(f"{target} is eligible only after {smaller[0]} has been eliminated")
    a, b = c.letters[-2:]
    with_a = CoverTerm(kept + (a,))
    with_b = CoverTerm(kept + (b,))
    merged = CoverTerm(kept + (a + b,))
    if p + 1 >= len(c) or with_a not in c.slots[p + 1] or with_b not in c.slots[p + 1]:
        raise RewriteException(f"the summands {with_a} and {with_b} of {target} are missing from degree {p + 1}")
    after = c.replace({p: [target], p + 1: [with_a, with_b]}, {p + 1: [merged]})
    if not any(a in t.blocks or b in t.blocks for _, t in after.terms()):
        after = FormalComplex(c.letters[:-2] + (tuple(sorted(a + b)),), after.slots)
    kind = INITIAL_ELIMINATION if len(kept) == len(c.letters) - 2 else PAIR_MERGE
    step = RewriteStep(kind, target, (with_a, with_b), merged, p, c, after)
    logger.debug("%s", step.describe())
    return after, step


def step_bound(r: int) -> int:
    """Number of steps ``reduce(r)`` takes; it depends on r alone."""
    return 2 ** (r - 1) - 1


def reduce(r: int) -> RewriteTrace:
    c = initial_complex(r)
    initial = c
    steps: List[RewriteStep] = []
    while len(c.letters) > 1:
        a, b = c.letters[-2:]
        others = c.letters[:-2]
        for size in range(len(others) + 1):
            for kept in it.combinations(others, size):
                c, step = mv_step(c, CoverTerm(kept + (a, b)))
                steps.append(step)
    trace = RewriteTrace(r, initial, tuple(steps))
    expected = CoverTerm((tuple(range(1, r + 1)),))
    if trace.final.slots[-1] != (expected,) or any(trace.final.slots[:-1]):
        raise RewriteException(f"reduction of r={r} ended in {trace.final.render()}")
    if r <= MAX_CHECKED_REDUCTION_R and len(steps) != step_bound(r):
        raise RewriteException(f"reduction of r={r} took {len(steps)} steps, expected {step_bound(r)}")
    logger.debug("reduce(%d): %d steps", r, len(steps))
    return trace


__all__ = [
    "CoverTerm",
    "FormalComplex",
    "RewriteStep",
    "RewriteTrace",
    "INITIAL_ELIMINATION",
    "PAIR_MERGE",
    "initial_complex",
    "mv_step",
    "step_bound",
    "reduce",
    "realize",
    "realize_formal",
    "verify_trace",
]
