"""Reading taxonomies and graphs, and unfolding graphs into taxonomies."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import (
    FirstLineIndented,
    IndentJump,
    MalformedLine,
    MixedIndent,
    NoRootInComponent,
    UnknownNode,
)
from .model import KnowledgeGraph, Taxonomy, TaxonRecord, new_record

IndentUnit = Union[str, int]

TAB = "tab"


@dataclass
class ParseDiagnostics:
    warnings: list[tuple[int, str]] = field(default_factory=list)
    rootNames: list[str] = field(default_factory=list)


def _indent_width(unit: IndentUnit) -> int:
    if unit == TAB or unit == "\t":
        return 0
    if isinstance(unit, bool) or not isinstance(unit, int) or unit < 1:
        raise ValueError(f"indent unit must be 'tab' or a positive space count, got {unit!r}")
    return unit


def parse_indented(text: str, indent: IndentUnit = TAB) -> Taxonomy:
    """Parse one-taxon-per-line text where leading indentation gives depth.

    ``indent`` is ``"tab"`` (one tab per level) or a number of spaces per
    level. Blank lines and trailing whitespace are ignored.
    """
    spaces = _indent_width(indent)
    other_char = "\t" if spaces else " "

    records: list[TaxonRecord] = []
    previous = -1
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip()
        if not line:
            continue
        name = line.lstrip(" \t")
        lead = line[: len(line) - len(name)]
        if other_char in lead:
            raise MixedIndent(
                lineno, f"indentation mixes tabs and spaces (unit is {'%d spaces' % spaces if spaces else 'one tab'})"
            )
        if spaces:
            if len(lead) % spaces:
                raise MixedIndent(lineno, f"indent of {len(lead)} spaces is not a multiple of {spaces}")
            depth = len(lead) // spaces
        else:
            depth = len(lead)

        if previous < 0 and depth > 0:
            raise FirstLineIndented(lineno, f"first taxon {name!r} is indented (depth {depth})")
        if depth > previous + 1:
            raise IndentJump(lineno, f"{name!r} jumps from depth {previous} to {depth}")
        records.append(new_record(depth, name))
        previous = depth
    return Taxonomy(tuple(records))


def parse_edge_list(text: str) -> KnowledgeGraph:
    """Parse ``parent<TAB>child`` lines; a lone token declares an isolated node.

    Lines starting with ``#`` are comments.
    """
    order: list[str] = []
    edges: list[tuple[str, str]] = []
    lines: dict[tuple[str, str], int] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip(" \r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = [p.strip() for p in line.split("\t")]
        if len(parts) > 2:
            raise MalformedLine(lineno, f"expected 'parent<TAB>child', found {len(parts)} fields")
        if not all(parts):
            raise MalformedLine(lineno, "empty node name")
        order.extend(parts)
        if len(parts) == 2:
            edge = (parts[0], parts[1])
            edges.append(edge)
            lines.setdefault(edge, lineno)
    return KnowledgeGraph(tuple(order), tuple(edges), lines)


def _components(g: KnowledgeGraph) -> dict[str, str]:
    parent = {n: n for n in g.nodes}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    return {n: find(n) for n in g.nodes}


def _rootless_components(g: KnowledgeGraph, roots: Sequence[str]) -> list[str]:
    """One representative (first in node order) per component lacking any of ``roots``."""
    component = _components(g)
    covered = {component[r] for r in roots}
    missing: dict[str, str] = {}
    for node in g.nodes:
        c = component[node]
        if c not in covered:
            missing.setdefault(c, node)
    return list(missing.values())


def find_roots(g: KnowledgeGraph) -> list[str]:
    """Nodes without incoming edges, in first-appearance order.

    Raises :class:`NoRootInComponent` if some weakly connected component is
    made only of nodes that all have a parent.
    """
    has_parent = {child for _, child in g.edges}
    roots = [n for n in g.nodes if n not in has_parent]
    rootless = _rootless_components(g, roots)
    if rootless:
        raise NoRootInComponent(rootless[0])
    return roots


def graph_to_taxonomy(
    g: KnowledgeGraph, root_overrides: Sequence[str] | None = None
) -> tuple[Taxonomy, ParseDiagnostics]:
    """Unfold a graph into a preorder taxonomy by depth-first traversal.

    Each root is walked in turn, children in name order. A node reached
    along several acyclic paths appears once per path; an edge leading back
    to a node already on the current path is cut and reported as a warning.

    With ``root_overrides`` the named nodes are walked first, in the given
    order, followed by the natural roots that are not already listed; every
    component must still end up with a starting node.
    """
    diagnostics = ParseDiagnostics()
    if root_overrides:
        known = set(g.nodes)
        for name in root_overrides:
            if name not in known:
                raise UnknownNode(name)
        has_parent = {child for _, child in g.edges}
        chosen = list(dict.fromkeys(root_overrides))
        chosen += [n for n in g.nodes if n not in has_parent and n not in chosen]
        rootless = _rootless_components(g, chosen)
        if rootless:
            raise NoRootInComponent(rootless[0])
        roots = chosen
    else:
        roots = find_roots(g)
    diagnostics.rootNames = list(roots)

    adjacency = g.children_of()
    records: list[TaxonRecord] = []
    for root in roots:
        _unfold(root, adjacency, records, diagnostics, g.edge_lines)
    return Taxonomy(tuple(records)), diagnostics


def _unfold(root, adjacency, records, diagnostics, edge_lines) -> None:
    # Explicit stack so long chains do not hit the recursion limit.
    # Each frame is (node, iterator over its children); ``on_path`` is the
    # set of nodes currently being expanded.
    records.append(new_record(0, root))
    on_path = {root}
    stack = [(root, iter(adjacency[root]))]
    while stack:
        node, pending = stack[-1]
        child = next(pending, None)
        if child is None:
            stack.pop()
            on_path.discard(node)
            continue
        if child in on_path:
            line = edge_lines.get((node, child), 0)
            diagnostics.warnings.append((line, f"cycle cut: edge {node} -> {child}"))
            continue
        records.append(new_record(len(stack), child))
        on_path.add(child)
        stack.append((child, iter(adjacency[child])))
