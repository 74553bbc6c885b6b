"""tf-idf retrieval with informetric (power-law entity-frequency) re-ranking."""

from . import _kernel
from .corpus import CorpusError, DocumentRecord, load_corpus, parse_corpus, save_corpus, serialize_corpus, tokenize
from .evaluation import (
    EvalReport,
    QrelSet,
    Topic,
    load_qrels,
    load_topics,
    overlap_at_k,
    parse_qrels,
    parse_topics,
    precision_at_k,
    run_evaluation,
)
from .index import InvertedIndex, ResultSet, build_index, search, tfidf_score
from .informetrics import (
    EntityField,
    EntityFrequencyTable,
    PowerLawFit,
    doc_entity_frequency,
    entity_frequencies,
    fit_power_law,
    rank_frequency_series,
)
from .rerank import (
    MissingPolicy,
    Mode,
    RankedList,
    RankingConfig,
    combined_score,
    pure_frequency_rerank,
    rerank,
)

__version__ = "0.1.0"


def scoring_backend() -> str:
    """Active scoring kernel: 'cython' (compiled) or 'python' (fallback)."""
    return _kernel.backend_name()
