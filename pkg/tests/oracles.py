"""Brute-force reference implementations used only by the tests.

None of these share code with the package: annotation is recomputed from an
explicit parent/child tree, edit distance from its recursive definition, and
graph unfolding by enumerating simple paths.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache


@dataclass
class Node:
    name: str
    depth: int
    children: list["Node"] = field(default_factory=list)
    parent: "Node | None" = None


def build_tree(pairs):
    """Forest from (depth, name) preorder pairs, hung under a virtual root."""
    top = Node("<top>", -1)
    stack = [top]
    nodes = []
    for depth, name in pairs:
        while stack[-1].depth >= depth:
            stack.pop()
        assert stack[-1].depth == depth - 1, "not a valid preorder depth sequence"
        node = Node(name, depth, parent=stack[-1])
        stack[-1].children.append(node)
        stack.append(node)
        nodes.append(node)
    return top, nodes


def flatten(top):
    out = []

    def walk(node):
        for child in node.children:
            out.append((child.depth, child.name))
            walk(child)

    walk(top)
    return out


def oracle_annotate(pairs):
    """(depth, children, brothers, brothersLeft, sameLevel, name) per record."""
    top, nodes = build_tree(pairs)
    rows = []
    for node in nodes:
        siblings = node.parent.children
        position = next(i for i, s in enumerate(siblings) if s is node)
        same_level = sum(1 for other in nodes if other.depth == node.depth) - 1
        rows.append((node.depth, len(node.children), len(siblings) - 1, position, same_level, node.name))
    return rows


def oracle_deepest(pairs):
    if not pairs:
        return 0
    deepest = max(d for d, _ in pairs)
    return [d for d, _ in pairs].count(deepest)


def oracle_terminal(pairs):
    _, nodes = build_tree(pairs)
    return sum(1 for n in nodes if not n.children)


def oracle_index(pairs):
    return sum(sum(row[:5]) for row in oracle_annotate(pairs))


def random_pairs(rng: random.Random, max_nodes=200, max_depth=8, min_nodes=1):
    n = rng.randint(min_nodes, max_nodes)
    pairs = []
    depth = -1
    for i in range(n):
        depth = rng.randint(0, min(depth + 1, max_depth))
        pairs.append((depth, f"n{i}"))
    return pairs


def permute_siblings(pairs, rng: random.Random):
    top, _ = build_tree(pairs)

    def shuffle(node):
        rng.shuffle(node.children)
        for child in node.children:
            shuffle(child)

    shuffle(top)
    return flatten(top)


def oracle_levenshtein(a: str, b: str) -> int:
    @lru_cache(maxsize=None)
    def d(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return min(d(i - 1, j) + 1, d(i, j - 1) + 1, d(i - 1, j - 1) + (a[i - 1] != b[j - 1]))

    return d(len(a), len(b))


def oracle_unfold(edges, roots):
    """Enumerate every simple path from each root, children in name order.

    Returns (records, cut_edges) where records are (depth, name) pairs.
    """
    kids = {}
    for p, c in edges:
        kids.setdefault(p, set()).add(c)
    records, cuts = [], []

    def visit(path):
        node = path[-1]
        records.append((len(path) - 1, node))
        for child in sorted(kids.get(node, ())):
            if child in path:
                cuts.append((node, child))
            else:
                visit(path + (child,))

    for root in roots:
        visit((root,))
    return records, cuts
