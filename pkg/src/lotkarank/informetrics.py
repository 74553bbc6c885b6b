"""Entity-frequency distributions over result sets and power-law fitting.

Counts how many retrieved documents share a metadata entity (journal ISSN
or author name), turns the counts into a rank-frequency series, and fits
f(x) = c * x**-alpha by least squares in log-log space.
"""
import csv
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import stats

from .corpus import DocumentRecord
from .index import InvertedIndex, ResultSet


class EntityField(Enum):
    JOURNAL = "journal"  # single-valued: journal_issn
    AUTHOR = "author"  # multi-valued: authors


@dataclass
class EntityFrequencyTable:
    """Entity value -> number of result-set documents carrying it."""

    field: EntityField
    counts: dict[str, int]
    covered_docs: int  # result-set documents with at least one value
    result_size: int  # N of the originating ResultSet


@dataclass
class PowerLawFit:
    c: float
    alpha: float
    r_squared: float
    points_used: int


def entity_values(record: DocumentRecord, field: EntityField) -> list[str]:
    """The record's values for an entity field (empty if missing)."""
    if field is EntityField.JOURNAL:
        return [record.journal_issn] if record.journal_issn else []
    return list(record.authors)


def entity_frequencies(rs: ResultSet, field: EntityField, index: InvertedIndex) -> EntityFrequencyTable:
    """Count entity occurrences across the result set.

    A document increments one count per distinct value it carries (one for
    its journal, one per author); documents without the field contribute
    nothing.
    """
    counts: dict[str, int] = {}
    covered = 0
    for doc_id, _, _ in rs.entries:
        values = entity_values(index.doc_table[doc_id], field)
        if not values:
            continue
        covered += 1
        for value in values:
            counts[value] = counts.get(value, 0) + 1
    return EntityFrequencyTable(field=field, counts=counts, covered_docs=covered, result_size=rs.set_size)


def doc_entity_frequency(doc_id: str, table: EntityFrequencyTable, index: InvertedIndex):
    """Entity frequency of one document, or None when the field is missing.

    Multi-valued fields take the maximum count over the document's values,
    so a document counts as strongly as its most frequent entity.
    """
    if doc_id not in index.doc_table:
        raise KeyError(f"unknown doc_id {doc_id!r}")
    values = entity_values(index.doc_table[doc_id], table.field)
    known = [table.counts[v] for v in values if v in table.counts]
    return max(known) if known else None


def _ranked_entities(table: EntityFrequencyTable) -> list[tuple[str, int]]:
    return sorted(table.counts.items(), key=lambda item: (-item[1], item[0]))


def rank_frequency_series(table: EntityFrequencyTable) -> list[tuple[int, int]]:
    """(rank, frequency) pairs, frequencies descending, 1-based ranks."""
    return [(rank, count) for rank, (_, count) in enumerate(_ranked_entities(table), start=1)]


def fit_power_law(series) -> PowerLawFit:
    """Fit f(x) = c * x**-alpha to a rank-frequency series.

    Ordinary least squares on (ln rank, ln frequency): the slope is -alpha,
    the intercept ln c, and r_squared the coefficient of determination.
    Needs at least 2 points with positive frequencies.
    """
    if len(series) < 2:
        raise ValueError("power-law fit needs at least 2 points")
    ranks = [rank for rank, _ in series]
    freqs = [freq for _, freq in series]
    if any(freq <= 0 for freq in freqs):
        raise ValueError("power-law fit needs positive frequencies")
    result = stats.linregress(np.log(ranks), np.log(freqs))
    return PowerLawFit(
        c=math.exp(result.intercept),
        alpha=-result.slope,
        r_squared=result.rvalue**2,
        points_used=len(series),
    )


def export_series_csv(table: EntityFrequencyTable, out_prefix) -> tuple[str, str]:
    """Write <prefix>.csv (rank,frequency,entity) and <prefix>.loglog.csv.

    The log-log companion uses natural logs and is ready for straight-line
    plotting. Returns both paths.
    """
    linear_path = f"{out_prefix}.csv"
    loglog_path = f"{out_prefix}.loglog.csv"
    ranked = _ranked_entities(table)
    with open(linear_path, "w", encoding="utf-8", newline="") as fout:
        writer = csv.writer(fout, lineterminator="\n")
        writer.writerow(["rank", "frequency", "entity"])
        for rank, (entity, count) in enumerate(ranked, start=1):
            writer.writerow([rank, count, entity])
    with open(loglog_path, "w", encoding="utf-8", newline="") as fout:
        writer = csv.writer(fout, lineterminator="\n")
        writer.writerow(["log_rank", "log_frequency"])
        for rank, (_, count) in enumerate(ranked, start=1):
            writer.writerow([math.log(rank), math.log(count)])
    return linear_path, loglog_path
