"""Rule-based structural matcher combining record counters with name edit distance."""

from __future__ import annotations

import math
from collections import Counter

from .errors import NotAnnotated
from .model import Mapping, Taxonomy, TaxonRecord, WeightProfile

DEFAULT_THRESHOLD = 0.75


def levenshtein(a: str, b: str) -> int:
    """Minimum number of single-character insertions, deletions and substitutions."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (ca != cb),
            ))
        previous = current
    return previous[-1]


def name_similarity(a: str, b: str) -> float:
    """Edit distance rescaled to [0, 1] by the longer length."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longest


def attribute_similarity(x: int, y: int) -> float:
    if x == y:
        return 1.0
    return 1.0 - abs(x - y) / max(x, y)


def record_similarity(r1: TaxonRecord, r2: TaxonRecord, w: WeightProfile | None = None) -> float:
    """Weighted mean of the five counter similarities and the name similarity.

    Weights are normalized here, so any positive rescaling of a profile gives
    the same result.
    """
    weights = (w or WeightProfile()).as_tuple()
    scores = [attribute_similarity(x, y) for x, y in zip(r1.counts(), r2.counts())]
    scores.append(name_similarity(r1.name, r2.name))
    # fsum on both sides keeps identical records at exactly 1.0.
    value = math.fsum(wt * s for wt, s in zip(weights, scores)) / math.fsum(weights)
    return min(1.0, max(0.0, value))


def labels(t: Taxonomy) -> list[str]:
    """Display label per record; names occurring more than once get ``#index``."""
    seen = Counter(t.names)
    return [f"{name}#{i}" if seen[name] > 1 else name for i, name in enumerate(t.names)]


def align(
    t1: Taxonomy,
    t2: Taxonomy,
    w: WeightProfile | None = None,
    threshold: float = DEFAULT_THRESHOLD,
) -> list[Mapping]:
    """Map each taxon of ``t1`` to its most similar taxon of ``t2``.

    Ties go to an identically named candidate first, then to the earliest
    one. Pairs scoring below ``threshold`` are dropped. The result follows
    the preorder of ``t1``.
    """
    if not t1.annotated:
        raise NotAnnotated("first taxonomy")
    if not t2.annotated:
        raise NotAnnotated("second taxonomy")
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must lie in [0, 1], got {threshold}")
    w = w or WeightProfile()

    left, right = labels(t1), labels(t2)
    mappings: list[Mapping] = []
    for i, r1 in enumerate(t1.records):
        best_key = None
        best_j = -1
        for j, r2 in enumerate(t2.records):
            key = (record_similarity(r1, r2, w), r1.name == r2.name, -j)
            if best_key is None or key > best_key:
                best_key, best_j = key, j
        if best_key is None:
            continue
        score = best_key[0]
        if score >= threshold:
            mappings.append(Mapping(left[i], right[best_j], score, source_index=i, target_index=best_j))
    return mappings
