"""Bibliographic corpus parsing and tokenization.

A corpus file is UTF-8 JSON-lines: one flat object per line with keys
id, title, body, authors plus optional issn, journal, publisher, year.
"""
import json
import re
from dataclasses import dataclass, field

REQUIRED_KEYS = ("id", "title", "body", "authors")
OPTIONAL_KEYS = ("issn", "journal", "publisher", "year")

# alphanumeric runs (unicode-aware, underscore excluded)
_TOKEN_RE = re.compile(r"[^\W_]+")
_WS_RE = re.compile(r"\s+")


class CorpusError(ValueError):
    """Raised for malformed corpus input (message names the offending line or id)."""


def tokenize(text: str) -> list[str]:
    """Lowercase and split on any non-alphanumeric character.

    No stemming, no stopword removal; empty fragments are dropped.
    """
    return _TOKEN_RE.findall(text.lower())


def _clean_optional(value):
    if value is None:
        return None
    value = value.strip()
    return value or None


@dataclass
class DocumentRecord:
    """One bibliographic metadata entry."""

    doc_id: str
    title: str
    body: str = ""
    authors: list[str] = field(default_factory=list)
    journal_issn: str | None = None
    journal_title: str | None = None
    publisher: str | None = None
    year: int | None = None

    def __post_init__(self):
        if not isinstance(self.doc_id, str) or not self.doc_id:
            raise CorpusError("doc_id must be a non-empty string")
        normalized = []
        for name in self.authors:
            if not isinstance(name, str):
                raise CorpusError(f"doc_id {self.doc_id!r}: author names must be strings")
            name = _WS_RE.sub(" ", name.strip())
            if not name:
                raise CorpusError(f"doc_id {self.doc_id!r}: empty author name")
            if name in normalized:
                raise CorpusError(f"doc_id {self.doc_id!r}: duplicate author {name!r}")
            normalized.append(name)
        self.authors = normalized
        issn = _clean_optional(self.journal_issn)
        self.journal_issn = issn.upper() if issn else None
        self.journal_title = _clean_optional(self.journal_title)
        self.publisher = _clean_optional(self.publisher)
        if self.year is not None and (isinstance(self.year, bool) or not isinstance(self.year, int)):
            raise CorpusError(f"doc_id {self.doc_id!r}: year must be an integer")


def _record_from_obj(obj: dict) -> DocumentRecord:
    unknown = set(obj) - set(REQUIRED_KEYS) - set(OPTIONAL_KEYS)
    if unknown:
        raise CorpusError(f"unknown keys: {', '.join(sorted(unknown))}")
    missing = [k for k in REQUIRED_KEYS if k not in obj]
    if missing:
        raise CorpusError(f"missing keys: {', '.join(missing)}")
    if not isinstance(obj["title"], str) or not isinstance(obj["body"], str):
        raise CorpusError("title and body must be strings")
    if not isinstance(obj["authors"], list):
        raise CorpusError("authors must be a list of strings")
    return DocumentRecord(
        doc_id=obj["id"],
        title=obj["title"],
        body=obj["body"],
        authors=obj["authors"],
        journal_issn=obj.get("issn"),
        journal_title=obj.get("journal"),
        publisher=obj.get("publisher"),
        year=obj.get("year"),
    )


def parse_corpus(lines) -> list[DocumentRecord]:
    """Parse a line-delimited record stream into DocumentRecords.

    Records come back in input order. Raises CorpusError naming the line
    number for malformed lines and the id for duplicate doc_ids.
    """
    records = []
    seen = set()
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
        if not isinstance(obj, dict):
            raise CorpusError(f"line {lineno}: record must be an object")
        try:
            record = _record_from_obj(obj)
        except CorpusError as exc:
            raise CorpusError(f"line {lineno}: {exc}") from exc
        if record.doc_id in seen:
            raise CorpusError(f"duplicate doc_id {record.doc_id!r} (line {lineno})")
        seen.add(record.doc_id)
        records.append(record)
    return records


def load_corpus(path) -> list[DocumentRecord]:
    with open(path, encoding="utf-8") as fin:
        return parse_corpus(fin)


def serialize_corpus(records) -> str:
    """Render records back to the corpus line format (round-trips with parse_corpus)."""
    lines = []
    for rec in records:
        obj = {"id": rec.doc_id, "title": rec.title, "body": rec.body, "authors": rec.authors}
        if rec.journal_issn is not None:
            obj["issn"] = rec.journal_issn
        if rec.journal_title is not None:
            obj["journal"] = rec.journal_title
        if rec.publisher is not None:
            obj["publisher"] = rec.publisher
        if rec.year is not None:
            obj["year"] = rec.year
        lines.append(json.dumps(obj, ensure_ascii=False))
    return "\n".join(lines) + ("\n" if lines else "")


def save_corpus(records, path):
    with open(path, "w", encoding="utf-8") as fout:
        fout.write(serialize_corpus(records))
