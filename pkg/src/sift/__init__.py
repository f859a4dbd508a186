"""Structural information extraction from taxonomies.

Typical use::

    from sift import parse_indented, annotate, structural_index

    t = annotate(parse_indented(open("tree.txt").read()))
    print(structural_index(t))
"""

__version__ = "0.1.0"

from .align import align, attribute_similarity, levenshtein, name_similarity, record_similarity
from .analysis import annotate, deepest_count, index_similarity, structural_index, terminal_count
from .errors import (
    FirstLineIndented,
    IndentJump,
    InvalidTaxonomy,
    MalformedLine,
    MixedIndent,
    NoRootInComponent,
    NotAnnotated,
    ParseError,
    SiftError,
    UnknownNode,
)
from .ingest import ParseDiagnostics, find_roots, graph_to_taxonomy, parse_edge_list, parse_indented
from .model import KnowledgeGraph, Mapping, Taxonomy, TaxonRecord, WeightProfile, new_record

__all__ = [
    "KnowledgeGraph", "Mapping", "ParseDiagnostics", "Taxonomy", "TaxonRecord", "WeightProfile",
    "new_record", "parse_indented", "parse_edge_list", "find_roots", "graph_to_taxonomy",
    "annotate", "deepest_count", "terminal_count", "structural_index", "index_similarity",
    "levenshtein", "name_similarity", "attribute_similarity", "record_similarity", "align",
    "SiftError", "InvalidTaxonomy", "ParseError", "IndentJump", "MixedIndent", "FirstLineIndented",
    "MalformedLine", "NoRootInComponent", "UnknownNode", "NotAnnotated",
]
