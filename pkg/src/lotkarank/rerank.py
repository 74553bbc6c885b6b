"""Re-rank tf-idf result sets by entity frequency.

Three strategies: pure frequency ordering by journal (brad) or author
(lotka), and the combined score tfidf * (ef / N)**k. Positive k favors
mainstream entities, negative k the long tail; k = 0 collapses to the
tf-idf order.
"""
import math
from dataclasses import dataclass, field as dc_field
from enum import Enum

from .index import InvertedIndex, ResultSet
from .informetrics import EntityField, doc_entity_frequency, entity_frequencies


class Mode(Enum):
    TFIDF = "tfidf"
    BRADFORD = "brad"
    LOTKA = "lotka"
    COMBINED = "combined"


class MissingPolicy(Enum):
    DROP = "drop"
    PASSTHROUGH = "passthrough"


_IMPLIED_FIELD = {Mode.BRADFORD: EntityField.JOURNAL, Mode.LOTKA: EntityField.AUTHOR}


@dataclass
class RankingConfig:
    """Mode plus the entity field, exponent, and missing-field policy it needs."""

    mode: Mode
    field: EntityField | None = None
    k: float = 1.0
    missing_policy: MissingPolicy = MissingPolicy.DROP

    def __post_init__(self):
        self.k = float(self.k)
        if not math.isfinite(self.k):
            raise ValueError("k must be finite")
        implied = _IMPLIED_FIELD.get(self.mode)
        if implied is not None:
            if self.field is None:
                self.field = implied
            elif self.field is not implied:
                raise ValueError(f"mode {self.mode.value} requires field {implied.value}")
        if self.mode is Mode.COMBINED and self.field is None:
            raise ValueError("combined mode requires an entity field")

    @property
    def run_tag(self) -> str:
        if self.mode is Mode.COMBINED:
            return f"combined_k{self.k}"
        return self.mode.value


@dataclass
class RankedList:
    """Re-ranked documents: (doc_id, final_score, rank), plus drop accounting."""

    query_id: str
    entries: list[tuple[str, float, int]] = dc_field(default_factory=list)
    tag: str = "tfidf"
    dropped: int = 0

    def doc_ids(self) -> list[str]:
        return [doc_id for doc_id, _, _ in self.entries]


def combined_score(tfidf: float, ef: int, n: int, k: float) -> float:
    """tfidf * (ef / n)**k for a document with entity frequency ef in a result set of n."""
    if n < 1:
        raise ValueError("result set size must be >= 1")
    if ef < 1 or ef > n:
        raise ValueError(f"entity frequency must be in 1..{n}, got {ef} "
                         "(apply the missing policy before scoring)")
    return tfidf * (ef / n) ** k


def _finalize(scored, query_id, tag, dropped) -> RankedList:
    entries = [(doc_id, score, rank) for rank, (doc_id, score) in enumerate(scored, start=1)]
    return RankedList(query_id=query_id, entries=entries, tag=tag, dropped=dropped)


def pure_frequency_rerank(rs: ResultSet, field: EntityField, index: InvertedIndex) -> RankedList:
    """Order by entity frequency alone; tf-idf is the inner (secondary) ranking.

    Documents without the field are dropped and counted. The final score is
    the frequency itself.
    """
    table = entity_frequencies(rs, field, index)
    keyed = []
    dropped = 0
    for doc_id, tfidf, _ in rs.entries:
        ef = doc_entity_frequency(doc_id, table, index)
        if ef is None:
            dropped += 1
            continue
        keyed.append((doc_id, tfidf, ef))
    keyed.sort(key=lambda item: (-item[2], -item[1], item[0]))
    tag = Mode.BRADFORD.value if field is EntityField.JOURNAL else Mode.LOTKA.value
    return _finalize([(doc_id, float(ef)) for doc_id, _, ef in keyed], rs.query_id, tag, dropped)


def rerank(rs: ResultSet, config: RankingConfig, index: InvertedIndex) -> RankedList:
    """Apply one ranking strategy to a tf-idf result set.

    TFIDF passes the set through unchanged. BRADFORD/LOTKA use the pure
    frequency order (field-missing documents always dropped). COMBINED
    scores retained documents with tfidf * (ef / N)**k where N is the full
    result-set size; the missing policy decides whether field-missing
    documents are dropped or kept at their tf-idf score.
    """
    if config.mode is Mode.TFIDF:
        return RankedList(query_id=rs.query_id, entries=list(rs.entries), tag=config.run_tag, dropped=0)
    if config.mode in (Mode.BRADFORD, Mode.LOTKA):
        return pure_frequency_rerank(rs, config.field, index)

    table = entity_frequencies(rs, config.field, index)
    n = rs.set_size
    scored = []
    dropped = 0
    for doc_id, tfidf, _ in rs.entries:
        ef = doc_entity_frequency(doc_id, table, index)
        if ef is None:
            if config.missing_policy is MissingPolicy.DROP:
                dropped += 1
                continue
            scored.append((doc_id, tfidf))  # passthrough: factor treated as 1
        else:
            scored.append((doc_id, combined_score(tfidf, ef, n, config.k)))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return _finalize(scored, rs.query_id, config.run_tag, dropped)


def format_run_lines(ranked: RankedList) -> list[str]:
    """Standard 6-column run lines: query_id Q0 doc_id rank score tag."""
    return [
        f"{ranked.query_id} Q0 {doc_id} {rank} {score:.6f} {ranked.tag}"
        for doc_id, score, rank in ranked.entries
    ]


def write_run_file(ranked_lists, path):
    """Write one run file covering any number of ranked lists (one per topic)."""
    with open(path, "w", encoding="utf-8") as fout:
        for ranked in ranked_lists:
            for line in format_run_lines(ranked):
                fout.write(line + "\n")
