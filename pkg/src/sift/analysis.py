"""Structural annotation of a flattened taxonomy and the analyses built on it."""

from __future__ import annotations

from collections import Counter

from .errors import NotAnnotated
from .model import Taxonomy, TaxonRecord


def annotate(t: Taxonomy) -> Taxonomy:
    """Fill in children, brothers, brothersLeft and sameLevel for every record.

    Everything is read off the depth sequence:

    * taxons of equal depth are on the same level, anywhere in the sequence;
    * brothers of a taxon are the same-depth taxons reachable without
      crossing a shallower one (deeper taxons in between do not separate
      them); those earlier in the sequence are on its left;
    * children are the taxons exactly one level deeper that follow it
      before the next taxon at its own depth or shallower.

    Existing counter values are ignored, so annotating twice is harmless.
    Worst case is quadratic in the number of records (a single deep chain).
    """
    depths = t.depths
    n = len(depths)
    per_level = Counter(depths)
    out: list[TaxonRecord] = []
    for i, d in enumerate(depths):
        left = 0
        j = i - 1
        while j >= 0 and depths[j] >= d:
            if depths[j] == d:
                left += 1
            j -= 1

        children = 0
        k = i + 1
        while k < n and depths[k] > d:
            if depths[k] == d + 1:
                children += 1
            k += 1

        right = 0
        while k < n and depths[k] >= d:
            if depths[k] == d:
                right += 1
            k += 1

        out.append(TaxonRecord(d, children, left + right, left, per_level[d] - 1, t.records[i].name))
    return Taxonomy(tuple(out), annotated=True)


def _require_annotated(t: Taxonomy) -> None:
    if not t.annotated:
        raise NotAnnotated()


def deepest_count(t: Taxonomy) -> int:
    """Number of taxons sitting at the maximum depth (0 when empty).

    Note this is not the number of childless taxons in general; see
    :func:`terminal_count`.
    """
    if not t.records:
        return 0
    deepest = max(t.depths)
    return sum(1 for d in t.depths if d == deepest)


def terminal_count(t: Taxonomy) -> int:
    """Number of taxons without children."""
    _require_annotated(t)
    return sum(1 for r in t.records if r.children == 0)


def structural_index(t: Taxonomy) -> int:
    """Sum of depth and all four counters over every record."""
    _require_annotated(t)
    return sum(sum(r.counts()) for r in t.records)


def index_similarity(i1: int, i2: int) -> float:
    if i1 < 0 or i2 < 0:
        raise ValueError("structural indexes are non-negative")
    if i1 == i2:
        return 1.0
    return min(i1, i2) / max(i1, i2)
