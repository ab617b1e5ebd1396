"""
Instance files.

An instance file is a JSON object listing facets only; closures are computed
on load::

    {
      "schema": 1,
      "kind": "cover",
      "name": "s2-two-punctures",
      "vertex_count": 6,
      "facets": [[0, 2, 4], ...],
      "subcomplexes": {"A1": [[0]], "A2": [[1]]},
      "members": ["A1", "A2"],
      "notes": "octahedron punctured at the poles"
    }

``members`` orders the named subcomplexes into E₁..E_r (space pairs) or
A₁..A_r (covers). A ``cover-with-companion`` file adds a ``companion``
object with its own ``vertex_count``/``facets``/``subcomplexes``/``members``
and a ``shift`` witness equal to r−1.
"""
import functools as ft
import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from PyCayley_Cohomology._constants import INSTANCE_KINDS, SCHEMA_VERSION
from PyCayley_Cohomology._cover import CoverInstance
from PyCayley_Cohomology._exceptions import (
    InvariantViolation,
    SubcomplexException,
    VertexRangeException,
)
from PyCayley_Cohomology._formatter import InstanceFieldException, decode_json, encode_json
from PyCayley_Cohomology._resolution import SpacePairInstance
from PyCayley_Cohomology._simplicial import SimplicialComplex, Subcomplex, closure

logger = logging.getLogger(__name__)

Facets = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class PairData:
    """A complex with an ordered family of named subcomplexes, as written in a file."""

    vertex_count: int
    facets: Facets
    subcomplexes: Dict[str, Facets]
    members: Tuple[str, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "vertex_count": self.vertex_count,
            "facets": [list(f) for f in self.facets],
            "subcomplexes": {name: [list(f) for f in facets] for name, facets in self.subcomplexes.items()},
            "members": list(self.members),
        }

    def build(self, name: str, path: str = "") -> Tuple[SimplicialComplex, Tuple[Subcomplex, ...]]:
        try:
            k = closure(self.facets, self.vertex_count)
        except (SubcomplexException, VertexRangeException) as e:
            raise InstanceFieldException(f"{path}facets", str(e)) from e
        family = []
        for member in self.members:
            try:
                family.append(Subcomplex.generated(k, self.subcomplexes[member]))
            except SubcomplexException as e:
                raise InvariantViolation("subcomplex-in-complex", f"{member}: {e}", name) from e
        return k, tuple(family)


@dataclass(frozen=True)
class InstanceFile:
    kind: str
    name: str
    data: PairData
    companion: Optional[PairData] = None
    shift: Optional[int] = None
    notes: str = ""
    schema: int = SCHEMA_VERSION

    @property
    def r(self) -> int:
        return len(self.data.members)

    @ft.cached_property
    def instance(self) -> Union[SpacePairInstance, CoverInstance]:
        k, family = self.data.build(self.name)
        metadata = {"notes": self.notes} if self.notes else {}
        if self.kind == "space-pair":
            return SpacePairInstance(self.name, k, family, metadata)
        companion = None
        if self.companion is not None:
            f, e = self.companion.build(self.name, "companion.")
            companion = SpacePairInstance(f"{self.name}/companion", f, e)
        return CoverInstance(self.name, k, family, companion, self.shift, metadata)

    def space_pair(self) -> SpacePairInstance:
        """
        The pair checked by the resolution identity: the file's own pair, the
        companion of a Cayley instance, or (W, A₁..A_r) for a plain cover.
        """
        inst = self.instance
        if isinstance(inst, SpacePairInstance):
            return inst
        if inst.companion is not None:
            return inst.companion
        return SpacePairInstance(self.name, inst.complex, inst.avoided, inst.metadata)

    def cover(self) -> Optional[CoverInstance]:
        inst = self.instance
        return inst if isinstance(inst, CoverInstance) else None

    def to_json(self) -> Dict[str, Any]:
        data = {"schema": self.schema, "kind": self.kind, "name": self.name, **self.data.to_json()}
        if self.companion is not None:
            data["companion"] = self.companion.to_json()
        if self.shift is not None:
            data["shift"] = self.shift
        if self.notes:
            data["notes"] = self.notes
        return data


def _facet_list(value: Any, path: str, vertex_count: int) -> Facets:
    if not isinstance(value, list):
        raise InstanceFieldException(path, "expected a list of vertex lists")
    facets = []
    for n, facet in enumerate(value):
        if not isinstance(facet, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in facet):
            raise InstanceFieldException(f"{path}[{n}]", "expected a list of integers")
        if not facet or any(a >= b for a, b in zip(facet, facet[1:])):
            raise InstanceFieldException(f"{path}[{n}]", f"{facet} is not a nonempty strictly ascending vertex list")
        if facet[0] < 0 or facet[-1] >= vertex_count:
            raise InstanceFieldException(f"{path}[{n}]", f"{facet} uses a vertex outside 0..{vertex_count - 1}")
        facets.append(tuple(facet))
    return tuple(facets)


def _require(obj: Dict[str, Any], key: str, kind: type, prefix: str) -> Any:
    if key not in obj:
        raise InstanceFieldException(prefix + key, "missing field")
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InstanceFieldException(prefix + key, f"expected {kind.__name__}")
    return value


def _parse_pair(obj: Any, prefix: str = "") -> PairData:
    if not isinstance(obj, dict):
        raise InstanceFieldException(prefix.rstrip(".") or "<root>", "expected an object")
    vertex_count = _require(obj, "vertex_count", int, prefix)
    if vertex_count < 0:
        raise InstanceFieldException(prefix + "vertex_count", "must be nonnegative")
    facets = _facet_list(_require(obj, "facets", list, prefix), prefix + "facets", vertex_count)
    raw = _require(obj, "subcomplexes", dict, prefix)
    subcomplexes = {
        name: _facet_list(value, f"{prefix}subcomplexes.{name}", vertex_count) for name, value in raw.items()
    }
    members = _require(obj, "members", list, prefix)
    for n, member in enumerate(members):
        if not isinstance(member, str) or member not in subcomplexes:
            raise InstanceFieldException(f"{prefix}members[{n}]", f"unknown subcomplex {member!r}")
    return PairData(vertex_count, facets, subcomplexes, tuple(members))


def parse_instance(text: str) -> InstanceFile:
    """Decode, validate and build an instance; the built instance is cached on the result."""
    obj = decode_json(text)
    if not isinstance(obj, dict):
        raise InstanceFieldException("<root>", "expected an object")
    schema = _require(obj, "schema", int, "")
    if schema != SCHEMA_VERSION:
        raise InstanceFieldException("schema", f"unsupported schema version {schema}")
    kind = _require(obj, "kind", str, "")
    if kind not in INSTANCE_KINDS:
        raise InstanceFieldException("kind", f"expected one of {', '.join(INSTANCE_KINDS)}")
    name = _require(obj, "name", str, "")
    companion = None
    if kind == "cover-with-companion":
        companion = _parse_pair(obj.get("companion"), "companion.")
    shift = obj.get("shift")
    if shift is not None and (not isinstance(shift, int) or isinstance(shift, bool)):
        raise InstanceFieldException("shift", "expected int")
    notes = obj.get("notes", "")
    if not isinstance(notes, str):
        raise InstanceFieldException("notes", "expected str")
    parsed = InstanceFile(kind, name, _parse_pair(obj), companion, shift, notes, schema)
    parsed.instance  # builds the complexes and checks every invariant
    logger.debug("parsed %s instance %s with r=%d", kind, name, parsed.r)
    return parsed


def load_instance(path: Union[str, Path]) -> InstanceFile:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def dump_instance(inst: InstanceFile) -> str:
    return encode_json(inst.to_json()) + "\n"


def shipped_fixtures() -> List[InstanceFile]:
    """The curated instances bundled with the package, sorted by name."""
    directory = resources.files(__name__).joinpath("fixtures")
    files = sorted((entry for entry in directory.iterdir() if entry.name.endswith(".json")), key=lambda e: e.name)
    instances = [parse_instance(entry.read_text(encoding="utf-8")) for entry in files]
    return sorted(instances, key=lambda inst: inst.name)


from PyCayley_Cohomology._instances.generator import (  # noqa: E402
    generate_random,
    generate_suite_instance,
    suite_parameters,
)


__all__ = [
    "PairData",
    "InstanceFile",
    "parse_instance",
    "load_instance",
    "dump_instance",
    "shipped_fixtures",
    "generate_random",
    "generate_suite_instance",
    "suite_parameters",
]
