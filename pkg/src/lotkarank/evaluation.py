"""Retrieval evaluation: topics, qrels, precision@k, overlap, and reports.

Precision uses a fixed denominator k (short result lists are penalized).
Relevance is binary: qrel grade > 0. Macro-averages are arithmetic means
over topics, with empty result sets contributing zero.
"""
import csv
import io
from dataclasses import dataclass, field

from .index import InvertedIndex, search
from .rerank import RankedList, RankingConfig, rerank

PRECISION_CUTOFFS = (5, 10, 20, 30, 100)
OVERLAP_K = 10


@dataclass
class Topic:
    topic_id: str
    query_text: str


class QrelSet:
    """Relevance judgments keyed by (topic_id, doc_id); relevant iff grade > 0."""

    def __init__(self, judgments: dict[tuple[str, str], int] | None = None):
        self.judgments = dict(judgments or {})
        for (topic_id, doc_id), grade in self.judgments.items():
            if grade < 0:
                raise ValueError(f"negative grade for ({topic_id}, {doc_id})")

    def is_relevant(self, topic_id: str, doc_id: str) -> bool:
        return self.judgments.get((topic_id, doc_id), 0) > 0

    def topic_ids(self) -> set[str]:
        return {topic_id for topic_id, _ in self.judgments}


def parse_topics(lines) -> list[Topic]:
    """Parse 'topic_id<TAB>query_text' lines; blank lines are skipped."""
    topics = []
    seen = set()
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line.strip():
            continue
        if "\t" not in line:
            raise ValueError(f"topics line {lineno}: expected 'topic_id<TAB>query'")
        topic_id, query_text = line.split("\t", 1)
        topic_id = topic_id.strip()
        if not topic_id:
            raise ValueError(f"topics line {lineno}: empty topic_id")
        if topic_id in seen:
            raise ValueError(f"topics line {lineno}: duplicate topic_id {topic_id!r}")
        seen.add(topic_id)
        topics.append(Topic(topic_id=topic_id, query_text=query_text.strip()))
    return topics


def load_topics(path) -> list[Topic]:
    with open(path, encoding="utf-8") as fin:
        return parse_topics(fin)


def parse_qrels(lines) -> QrelSet:
    """Parse 4-column judgment lines: topic_id 0 doc_id grade."""
    judgments: dict[tuple[str, str], int] = {}
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"qrels line {lineno}: expected 4 columns, got {len(parts)}")
        topic_id, _, doc_id, grade_text = parts
        try:
            grade = int(grade_text)
        except ValueError:
            raise ValueError(f"qrels line {lineno}: grade {grade_text!r} is not an integer") from None
        if grade < 0:
            raise ValueError(f"qrels line {lineno}: negative grade")
        if (topic_id, doc_id) in judgments:
            raise ValueError(f"qrels line {lineno}: duplicate judgment for ({topic_id}, {doc_id})")
        judgments[(topic_id, doc_id)] = grade
    return QrelSet(judgments)


def load_qrels(path) -> QrelSet:
    with open(path, encoding="utf-8") as fin:
        return parse_qrels(fin)


def precision_at_k(ranked: RankedList, qrels: QrelSet, k: int) -> float:
    """Relevant documents among the top min(k, len) entries, divided by k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    relevant = sum(
        1 for doc_id, _, rank in ranked.entries[:k] if qrels.is_relevant(ranked.query_id, doc_id)
    )
    return relevant / k


def overlap_at_k(a: RankedList, b: RankedList, k: int) -> int:
    """Size of the intersection of the two top-k doc_id sets."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return len(set(a.doc_ids()[:k]) & set(b.doc_ids()[:k]))


@dataclass
class TopicMetrics:
    retrieved: int
    relevant_retrieved: int
    dropped: int
    precision: dict[int, float]


@dataclass
class RunResult:
    """Per-topic and aggregate metrics for one ranking configuration."""

    tag: str
    per_topic: dict[str, TopicMetrics] = field(default_factory=dict)
    macro_precision: dict[int, float] = field(default_factory=dict)
    retrieved: int = 0
    relevant_retrieved: int = 0
    dropped: int = 0


@dataclass
class EvalReport:
    topic_ids: list[str]
    runs: list[RunResult]
    mean_overlap: list[tuple[str, str, float]]  # pairwise mean top-10 overlap
    unknown_qrel_topics: int = 0


def run_evaluation(index: InvertedIndex, topics, qrels: QrelSet, configs) -> EvalReport:
    """Search + rerank every topic under every config and collect metrics.

    Qrel topics that do not appear in the topic list are ignored; their
    count is reported. Deterministic: identical inputs give identical
    reports.
    """
    if not configs:
        raise ValueError("at least one ranking config is required")
    topic_ids = [topic.topic_id for topic in topics]
    unknown = qrels.topic_ids() - set(topic_ids)

    ranked_by_config: list[dict[str, RankedList]] = []
    runs = []
    for config in configs:
        run = RunResult(tag=config.run_tag)
        ranked_lists = {}
        for topic in topics:
            rs = search(topic.query_text, index, query_id=topic.topic_id)
            ranked = rerank(rs, config, index)
            ranked_lists[topic.topic_id] = ranked
            relevant = sum(
                1 for doc_id, _, _ in ranked.entries if qrels.is_relevant(topic.topic_id, doc_id)
            )
            run.per_topic[topic.topic_id] = TopicMetrics(
                retrieved=len(ranked.entries),
                relevant_retrieved=relevant,
                dropped=ranked.dropped,
                precision={k: precision_at_k(ranked, qrels, k) for k in PRECISION_CUTOFFS},
            )
        n_topics = len(topics)
        run.macro_precision = {
            k: (sum(m.precision[k] for m in run.per_topic.values()) / n_topics if n_topics else 0.0)
            for k in PRECISION_CUTOFFS
        }
        run.retrieved = sum(m.retrieved for m in run.per_topic.values())
        run.relevant_retrieved = sum(m.relevant_retrieved for m in run.per_topic.values())
        run.dropped = sum(m.dropped for m in run.per_topic.values())
        runs.append(run)
        ranked_by_config.append(ranked_lists)

    overlaps = []
    for i in range(len(configs)):
        for j in range(i + 1, len(configs)):
            if topic_ids:
                mean = sum(
                    overlap_at_k(ranked_by_config[i][t], ranked_by_config[j][t], OVERLAP_K)
                    for t in topic_ids
                ) / len(topic_ids)
            else:
                mean = 0.0
            overlaps.append((runs[i].tag, runs[j].tag, mean))

    return EvalReport(
        topic_ids=topic_ids,
        runs=runs,
        mean_overlap=overlaps,
        unknown_qrel_topics=len(unknown),
    )


def report_csv(report: EvalReport) -> str:
    """One row per (topic, run) plus an ALL summary row per run.

    Columns: topic_id, run, retrieved, relevant_retrieved, dropped,
    p5, p10, p20, p30, p100. Precisions carry 6 decimals.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["topic_id", "run", "retrieved", "relevant_retrieved", "dropped"]
        + [f"p{k}" for k in PRECISION_CUTOFFS]
    )
    for topic_id in report.topic_ids:
        for run in report.runs:
            m = run.per_topic[topic_id]
            writer.writerow(
                [topic_id, run.tag, m.retrieved, m.relevant_retrieved, m.dropped]
                + [f"{m.precision[k]:.6f}" for k in PRECISION_CUTOFFS]
            )
    for run in report.runs:
        writer.writerow(
            ["ALL", run.tag, run.retrieved, run.relevant_retrieved, run.dropped]
            + [f"{run.macro_precision[k]:.6f}" for k in PRECISION_CUTOFFS]
        )
    return buf.getvalue()


def report_table(report: EvalReport) -> str:
    """Plain-text p@k grid plus the pairwise mean top-10 overlap."""
    lines = ["macro precision"]
    header = f"{'run':<18}" + "".join(f"{'p@' + str(k):>8}" for k in PRECISION_CUTOFFS)
    lines.append(header)
    for run in report.runs:
        lines.append(
            f"{run.tag:<18}" + "".join(f"{run.macro_precision[k]:>8.4f}" for k in PRECISION_CUTOFFS)
        )
    lines.append("")
    lines.append(f"{'run':<18}{'retrieved':>10}{'relevant':>10}{'dropped':>10}")
    for run in report.runs:
        lines.append(f"{run.tag:<18}{run.retrieved:>10}{run.relevant_retrieved:>10}{run.dropped:>10}")
    if report.mean_overlap:
        lines.append("")
        lines.append(f"mean top-{OVERLAP_K} overlap")
        for tag_a, tag_b, mean in report.mean_overlap:
            lines.append(f"{tag_a + ' vs ' + tag_b:<30}{mean:>8.2f}")
    lines.append("")
    lines.append(
        f"topics evaluated: {len(report.topic_ids)}"
        f" (qrel topics without a topic entry: {report.unknown_qrel_topics})"
    )
    return "\n".join(lines) + "\n"


def write_report(report: EvalReport, csv_path, table_path):
    with open(csv_path, "w", encoding="utf-8") as fout:
        fout.write(report_csv(report))
    with open(table_path, "w", encoding="utf-8") as fout:
        fout.write(report_table(report))
