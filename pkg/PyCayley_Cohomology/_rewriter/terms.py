import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple

from PyCayley_Cohomology._exceptions import RewriteException

Block = Tuple[int, ...]

_INTERSECTION = "∩"
_TERM_PATTERN = re.compile(r"^\(\s*(?P<body>[0-9\s,∩&^]*)\s*\)$")


def _canonical(blocks: Iterable[Iterable[int]]) -> Tuple[Block, ...]:
    canonical = []
    for block in blocks:
        block = tuple(sorted(block))
        if not block:
            raise RewriteException("cover term blocks must be nonempty")
        if len(set(block)) != len(block):
            raise RewriteException(f"repeated index in block {block}")
        canonical.append(block)
    canonical.sort(key=lambda b: b[0])
    seen = [i for block in canonical for i in block]
    if len(set(seen)) != len(seen):
        raise RewriteException(f"cover term blocks overlap: {canonical}")
    if any(i < 1 for i in seen):
        raise RewriteException("cover indices start at 1")
    return tuple(canonical)


@dataclass(frozen=True, order=True)
class CoverTerm:
    """
    The open set ⋃_blocks ⋂_{i∈block} U_i, written ``(1,2∩3)``.

    Blocks are ascending and ordered by their minimum, so equal opens in
    this notation have equal terms.
    """

    blocks: Tuple[Block, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", _canonical(self.blocks))

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> "CoverTerm":
        return cls(tuple(tuple(b) for b in blocks))

    @classmethod
    def singletons(cls, indices: Iterable[int]) -> "CoverTerm":
        return cls(tuple((i,) for i in indices))

    @classmethod
    def parse(cls, text: str) -> "CoverTerm":
        match = _TERM_PATTERN.match(text.strip())
        if match is None or not match.group("body").strip():
            raise RewriteException(f"cannot parse cover term {text!r}")
        blocks = []
        for part in match.group("body").split(","):
            members = re.split(r"[∩&^]", part)
            try:
                blocks.append(tuple(int(m) for m in members))
            except ValueError as e:
                raise RewriteException(f"cannot parse cover term {text!r}") from e
        return cls(tuple(blocks))

    @property
    def indices(self) -> FrozenSet[int]:
        return frozenset(i for block in self.blocks for i in block)

    def contains_open(self, other: "CoverTerm") -> bool:
        """Whether ``other`` denotes a subset of this open for every cover."""
        return all(any(set(mine) <= set(theirs) for mine in self.blocks) for theirs in other.blocks)

    def __str__(self) -> str:
        return "(" + ",".join(_INTERSECTION.join(str(i) for i in block) for block in self.blocks) + ")"


@dataclass(frozen=True)
class FormalComplex:
    """
    Formal sums of cover terms in degrees ``0 .. len(slots)-1``.

    ``letters`` are the current index groups, ordered by minimum; every term
    is built from them, except that mid-round the two largest letters may
    also appear merged into one intersection block.
    """

    letters: Tuple[Block, ...]
    slots: Tuple[Tuple[CoverTerm, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(sorted((tuple(sorted(l)) for l in self.letters), key=min)))
        object.__setattr__(self, "slots", tuple(tuple(sorted(slot)) for slot in self.slots))

    @property
    def r(self) -> int:
        return sum(len(letter) for letter in self.letters)

    def __len__(self) -> int:
        return len(self.slots)

    def terms(self) -> Iterator[Tuple[int, CoverTerm]]:
        for p, slot in enumerate(self.slots):
            for term in slot:
                yield p, term

    def locate(self, term: CoverTerm) -> Optional[int]:
        return next((p for p, t in self.terms() if t == term), None)

    def replace(self, removals: Dict[int, Sequence[CoverTerm]], additions: Dict[int, Sequence[CoverTerm]],
                letters: Optional[Tuple[Block, ...]] = None) -> "FormalComplex":
        slots = [list(slot) for slot in self.slots]
        for p, terms in removals.items():
            for term in terms:
                slots[p].remove(term)
        for p, terms in additions.items():
            slots[p].extend(terms)
        return FormalComplex(self.letters if letters is None else letters, tuple(tuple(s) for s in slots))

    def render(self) -> str:
        return " -> ".join(" + ".join(str(t) for t in slot) if slot else "0" for slot in self.slots)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class RewriteStep:
    kind: str
    term: CoverTerm
    summands: Tuple[CoverTerm, CoverTerm]
    intersection: CoverTerm
    degree: int
    before: FormalComplex
    after: FormalComplex

    def describe(self) -> str:
        left, right = self.summands
        return (f"[{self.kind}] {self.term} -> {left} + {right} -> {self.intersection}"
                f" (degrees {self.degree}, {self.degree + 1})")


@dataclass(frozen=True)
class RewriteTrace:
    r: int
    initial: FormalComplex
    steps: Tuple[RewriteStep, ...] = field(default_factory=tuple)

    @property
    def final(self) -> FormalComplex:
        return self.steps[-1].after if self.steps else self.initial

    def states(self) -> Iterator[FormalComplex]:
        yield self.initial
        for step in self.steps:
            yield step.after

    def render(self) -> str:
        lines = [f"r = {self.r}", f"initial: {self.initial.render()}"]
        for number, step in enumerate(self.steps, start=1):
            lines.append(f"step {number} {step.describe()}")
            lines.append(f"  {step.after.render()}")
        lines.append(f"final: {self.final.render()}")
        return "\n".join(lines)
