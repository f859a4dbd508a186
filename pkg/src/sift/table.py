"""TSV and JSON forms of an annotated record table, plus mapping rows."""

from __future__ import annotations

import json
from typing import Iterable

from .errors import ParseError
from .model import RECORD_FIELDS, Mapping, Taxonomy, TaxonRecord

TABLE_HEADER = "\t".join(RECORD_FIELDS)
MAPPING_HEADER = "c\tc_prime\tn\tR"


def _lines(rows: Iterable[str], header: str | None) -> str:
    rows = ([header] if header else []) + list(rows)
    return "".join(row + "\n" for row in rows)


def to_tsv(t: Taxonomy, header: bool = False) -> str:
    rows = ("\t".join(str(v) for v in (*r.counts(), r.name)) for r in t.records)
    return _lines(rows, TABLE_HEADER if header else None)


def from_tsv(text: str) -> Taxonomy:
    """Read a table written by :func:`to_tsv` (header optional)."""
    records = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line or line == TABLE_HEADER:
            continue
        # Name is the last column and may itself contain tabs.
        parts = line.split("\t", 5)
        if len(parts) != 6:
            raise ParseError(lineno, f"expected 6 tab-separated columns, got {len(parts)}")
        try:
            counts = [int(p) for p in parts[:5]]
        except ValueError:
            raise ParseError(lineno, "counter columns must be integers") from None
        records.append(TaxonRecord(*counts, parts[5]))
    return Taxonomy(tuple(records), annotated=True)


def to_json(t: Taxonomy) -> str:
    return json.dumps([r.as_dict() for r in t.records], indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> Taxonomy:
    rows = json.loads(text)
    records = tuple(TaxonRecord(**{k: row[k] for k in RECORD_FIELDS}) for row in rows)
    return Taxonomy(records, annotated=True)


def mappings_to_tsv(mappings: Iterable[Mapping], header: bool = False) -> str:
    rows = (f"{m.c}\t{m.c_prime}\t{m.n:.4f}\t{m.relation}" for m in mappings)
    return _lines(rows, MAPPING_HEADER if header else None)
