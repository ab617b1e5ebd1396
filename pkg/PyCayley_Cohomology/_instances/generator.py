import functools as ft
import logging
import random
from typing import Dict

from PyCayley_Cohomology._constants import (
    DEFAULT_RANDOM_DENSITY,
    DEFAULT_RANDOM_DIMENSION,
    DEFAULT_RANDOM_R,
    DEFAULT_RANDOM_VERTICES,
    DEFAULT_RETRY_BUDGET,
    MAX_RANDOM_DIMENSION,
    MAX_RANDOM_R,
    MAX_RANDOM_VERTICES,
    MAX_SUITE_VERTICES,
    MIN_RANDOM_R,
    MIN_RANDOM_VERTICES,
    MIN_SUITE_DIMENSION,
    MIN_SUITE_VERTICES,
    RANDOM_BOUNDS_ERR_MSG,
)
from PyCayley_Cohomology._exceptions import RetryBudgetException, UnsupportedParameterException
from PyCayley_Cohomology._instances import InstanceFile, PairData
from PyCayley_Cohomology._simplicial import Subcomplex, closure

logger = logging.getLogger(__name__)

_MAX_GENERATORS = 2


def _check_bounds(vertices: int, dimension: int, r: int, density: float, kind: str) -> None:
    problems = []
    if not MIN_RANDOM_VERTICES <= vertices <= MAX_RANDOM_VERTICES:
        problems.append(f"vertices={vertices} not in {MIN_RANDOM_VERTICES}..{MAX_RANDOM_VERTICES}")
    if not 0 <= dimension <= MAX_RANDOM_DIMENSION:
        problems.append(f"dimension={dimension} not in 0..{MAX_RANDOM_DIMENSION}")
    if not MIN_RANDOM_R <= r <= MAX_RANDOM_R:
        problems.append(f"r={r} not in {MIN_RANDOM_R}..{MAX_RANDOM_R}")
    if not 0 < density <= 1:
        problems.append(f"density={density} not in (0, 1]")
    if kind not in ("cover", "space-pair"):
        problems.append(f"kind={kind!r} is neither 'cover' nor 'space-pair'")
    if problems:
        raise UnsupportedParameterException(f"{RANDOM_BOUNDS_ERR_MSG}: {'; '.join(problems)}")


def generate_random(
    seed: int,
    vertices: int = DEFAULT_RANDOM_VERTICES,
    dimension: int = DEFAULT_RANDOM_DIMENSION,
    r: int = DEFAULT_RANDOM_R,
    density: float = DEFAULT_RANDOM_DENSITY,
    kind: str = "cover",
    max_retries: int = DEFAULT_RETRY_BUDGET,
) -> InstanceFile:
    """
    A seeded random instance.

    The complex is the closure of ``round(density * vertices)`` (at least one)
    random facets of dimension ``dimension``; each of the r subcomplexes is
    generated by up to two random simplices of it. Covers are redrawn until
    no simplex lies in every subcomplex.
    """
    _check_bounds(vertices, dimension, r, density, kind)
    rng = random.Random(seed)
    size = min(dimension + 1, vertices)
    prefix = "A" if kind == "cover" else "E"
    for attempt in range(max_retries):
        count = max(1, round(density * vertices))
        facets = sorted({tuple(sorted(rng.sample(range(vertices), size))) for _ in range(count)})
        k = closure(facets, vertices)
        simplices = list(k)
        family = []
        for _ in range(r):
            generators = rng.sample(simplices, min(rng.randint(0, _MAX_GENERATORS), len(simplices)))
            family.append(Subcomplex.generated(k, generators))
        if kind == "cover" and not ft.reduce(Subcomplex.intersection, family).is_empty():
            logger.warning("seed %d attempt %d violates the cover condition, redrawing", seed, attempt + 1)
            continue
        names = tuple(f"{prefix}{i}" for i in range(1, r + 1))
        data = PairData(
            vertices,
            k.facets(),
            {name: sub.facets() for name, sub in zip(names, family)},
            names,
        )
        notes = f"random seed={seed} vertices={vertices} dimension={dimension} r={r} density={density}"
        return InstanceFile(kind, f"random-{kind}-{seed}", data, notes=notes)
    raise RetryBudgetException(f"no valid instance for seed {seed} after {max_retries} attempts")


def suite_parameters(seed: int) -> Dict[str, int]:
    """
    Shape of the random suite instance for ``seed``: r cycles through
    1..4 with consecutive seeds, vertex count and dimension are drawn
    from a generator keyed on the seed.
    """
    rng = random.Random(f"suite-{seed}")
    dimension = rng.randint(MIN_SUITE_DIMENSION, MAX_RANDOM_DIMENSION)
    vertices = rng.randint(max(MIN_SUITE_VERTICES, dimension + 1), MAX_SUITE_VERTICES)
    r = MIN_RANDOM_R + seed % (MAX_RANDOM_R - MIN_RANDOM_R + 1)
    return {"vertices": vertices, "dimension": dimension, "r": r}


def generate_suite_instance(seed: int) -> InstanceFile:
    return generate_random(seed, **suite_parameters(seed))
