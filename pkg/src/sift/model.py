"""Core value types: taxon records, taxonomies, graphs, mappings and weights."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields, replace
from typing import Iterable, Iterator, Mapping as MappingType, Sequence

from .errors import InvalidTaxonomy

COUNT_FIELDS = ("depth", "children", "brothers", "brothersLeft", "sameLevel")
RECORD_FIELDS = COUNT_FIELDS + ("name",)

SIMILARITY = "="


@dataclass(frozen=True)
class TaxonRecord:
    """One taxon in a flattened preorder taxonomy.

    ``depth`` is the nesting level (roots are 0). The four counters are
    zero until the taxonomy goes through :func:`sift.analysis.annotate`.
    """

    depth: int
    children: int
    brothers: int
    brothersLeft: int
    sameLevel: int
    name: str

    def __post_init__(self):
        for name in COUNT_FIELDS:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise InvalidTaxonomy(f"{name} must be a non-negative integer, got {value!r}")
        if not isinstance(self.name, str):
            raise InvalidTaxonomy(f"name must be text, got {self.name!r}")

    def counts(self) -> tuple[int, int, int, int, int]:
        return (self.depth, self.children, self.brothers, self.brothersLeft, self.sameLevel)

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in RECORD_FIELDS}


def new_record(depth: int, name: str) -> TaxonRecord:
    """Record with the given depth and name and every counter at zero."""
    return TaxonRecord(depth, 0, 0, 0, 0, name)


@dataclass(frozen=True)
class Taxonomy:
    """Preorder sequence of records; depth alone encodes the nesting.

    ``annotated`` is set by the annotation pass (or when loading an already
    analyzed table) so that analyses needing the counters can refuse raw input.
    """

    records: tuple[TaxonRecord, ...] = ()
    annotated: bool = False

    def __post_init__(self):
        records = tuple(self.records)
        object.__setattr__(self, "records", records)
        previous = -1
        for index, record in enumerate(records):
            if not isinstance(record, TaxonRecord):
                raise InvalidTaxonomy(f"record {index} is not a TaxonRecord")
            if record.depth > previous + 1:
                raise InvalidTaxonomy(
                    f"record {index} ({record.name!r}) jumps from depth {previous} to {record.depth}"
                )
            previous = record.depth

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, str]]) -> "Taxonomy":
        return cls(tuple(new_record(depth, name) for depth, name in pairs))

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[TaxonRecord]:
        return iter(self.records)

    def __getitem__(self, index: int) -> TaxonRecord:
        return self.records[index]

    @property
    def depths(self) -> list[int]:
        return [r.depth for r in self.records]

    @property
    def names(self) -> list[str]:
        return [r.name for r in self.records]

    def find(self, name: str) -> TaxonRecord:
        """First record called ``name`` in preorder."""
        for record in self.records:
            if record.name == name:
                return record
        raise KeyError(name)

    def renamed(self, names: Sequence[str]) -> "Taxonomy":
        if len(names) != len(self.records):
            raise ValueError("need exactly one new name per record")
        records = tuple(replace(r, name=n) for r, n in zip(self.records, names))
        return Taxonomy(records, self.annotated)


@dataclass(frozen=True)
class KnowledgeGraph:
    """Named concepts plus directed parent -> child edges.

    Nodes and edges keep first-appearance order, which drives root
    discovery order. ``edge_lines`` optionally remembers the source line of
    each edge for diagnostics and takes no part in equality.
    """

    nodes: tuple[str, ...] = ()
    edges: tuple[tuple[str, str], ...] = ()
    edge_lines: MappingType[tuple[str, str], int] = field(
        default_factory=dict, compare=False, repr=False
    )

    def __post_init__(self):
        nodes = tuple(dict.fromkeys(self.nodes))
        edges = tuple(dict.fromkeys((p, c) for p, c in self.edges))
        known = set(nodes)
        for parent, child in edges:
            for endpoint in (parent, child):
                if endpoint not in known:
                    raise InvalidTaxonomy(f"edge ({parent!r}, {child!r}) references unknown node {endpoint!r}")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], nodes: Iterable[str] = ()) -> "KnowledgeGraph":
        edges = list(edges)
        order: list[str] = []
        for parent, child in edges:
            order += [parent, child]
        order += list(nodes)
        return cls(tuple(order), tuple(edges))

    def children_of(self) -> dict[str, list[str]]:
        """Adjacency lists, each sorted by name."""
        adjacency: dict[str, list[str]] = {n: [] for n in self.nodes}
        for parent, child in self.edges:
            adjacency[parent].append(child)
        for kids in adjacency.values():
            kids.sort()
        return adjacency


@dataclass(frozen=True)
class Mapping:
    """Correspondence ``(c, c', n, R)`` between two taxons.

    ``c`` and ``c_prime`` are display labels; the preorder indexes identify
    the records unambiguously.
    """

    c: str
    c_prime: str
    n: float
    relation: str = SIMILARITY
    source_index: int = -1
    target_index: int = -1

    def __post_init__(self):
        if not 0.0 <= self.n <= 1.0:
            raise ValueError(f"confidence must lie in [0, 1], got {self.n}")


WEIGHT_FIELDS = ("w_depth", "w_children", "w_brothers", "w_brothers_left", "w_same_level", "w_name")


@dataclass(frozen=True)
class WeightProfile:
    """Per-attribute weights for record similarity. Defaults are uniform."""

    w_depth: float = 1.0
    w_children: float = 1.0
    w_brothers: float = 1.0
    w_brothers_left: float = 1.0
    w_same_level: float = 1.0
    w_name: float = 1.0

    def __post_init__(self):
        values = self.as_tuple()
        for name, value in zip(WEIGHT_FIELDS, values):
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be a finite non-negative number, got {value}")
        if not any(v > 0 for v in values):
            raise ValueError("at least one weight must be positive")

    @classmethod
    def parse(cls, text: str) -> "WeightProfile":
        """Build a profile from six comma-separated numbers."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != len(WEIGHT_FIELDS):
            raise ValueError(f"expected {len(WEIGHT_FIELDS)} comma-separated weights, got {len(parts)}")
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise ValueError(f"weights must be numbers: {text!r}") from None
        return cls(*values)

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(float(getattr(self, f.name)) for f in fields(self))

    def normalized(self) -> "WeightProfile":
        total = math.fsum(self.as_tuple())
        return WeightProfile(*(v / total for v in self.as_tuple()))
