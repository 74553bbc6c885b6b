import random

import pytest

from lotkarank.corpus import (
    CorpusError,
    DocumentRecord,
    parse_corpus,
    serialize_corpus,
    tokenize,
)


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_lowercases_and_splits_on_spaces():
    assert tokenize("Violence AND family") == ["violence", "and", "family"]


def test_tokenize_splits_on_punctuation():
    assert tokenize("tf-idf, ranking!") == ["tf", "idf", "ranking"]


def test_tokenize_drops_underscore_and_keeps_digits():
    assert tokenize("a_b 2021 x9") == ["a", "b", "2021", "x9"]


def test_tokenize_handles_unicode():
    assert tokenize("Müller-Straße") == ["müller", "straße"]


def test_tokenize_idempotent_on_joined_output():
    rng = random.Random(7)
    alphabet = "abcXYZ 123-_,.!?/äÖü\t\n"
    for _ in range(200):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 60)))
        tokens = tokenize(text)
        assert tokenize(" ".join(tokens)) == tokens
        for token in tokens:
            assert token and token == token.lower()
            assert not any(ch.isspace() for ch in token)


def test_parse_empty_input():
    assert parse_corpus([]) == []
    assert parse_corpus(["", "   "]) == []


def test_parse_single_record():
    records = parse_corpus(['{"id": "d1", "title": "A title", "body": "", "authors": []}'])
    assert len(records) == 1
    assert records[0].doc_id == "d1"
    assert records[0].title == "A title"


def test_parse_duplicate_id_names_the_id():
    lines = [
        '{"id": "d1", "title": "x", "body": "", "authors": []}',
        '{"id": "d1", "title": "y", "body": "", "authors": []}',
    ]
    with pytest.raises(CorpusError, match="d1"):
        parse_corpus(lines)


def test_parse_malformed_json_names_the_line():
    lines = ['{"id": "d1", "title": "x", "body": "", "authors": []}', "{not json"]
    with pytest.raises(CorpusError, match="line 2"):
        parse_corpus(lines)


def test_parse_rejects_unknown_keys():
    with pytest.raises(CorpusError, match="surprise"):
        parse_corpus(['{"id": "d1", "title": "x", "body": "", "authors": [], "surprise": 1}'])


def test_parse_rejects_missing_required_keys():
    with pytest.raises(CorpusError, match="authors"):
        parse_corpus(['{"id": "d1", "title": "x", "body": ""}'])


def test_parse_rejects_non_list_authors():
    with pytest.raises(CorpusError, match="line 1"):
        parse_corpus(['{"id": "d1", "title": "x", "body": "", "authors": "A"}'])


def test_parse_rejects_non_integer_year():
    with pytest.raises(CorpusError, match="year"):
        parse_corpus(['{"id": "d1", "title": "x", "body": "", "authors": [], "year": "2001"}'])


def test_author_names_are_trimmed_and_collapsed():
    rec = DocumentRecord(doc_id="d1", title="t", authors=["  Ada   B.  Lovelace "])
    assert rec.authors == ["Ada B. Lovelace"]


def test_empty_author_rejected():
    with pytest.raises(CorpusError, match="empty author"):
        DocumentRecord(doc_id="d1", title="t", authors=["   "])


def test_duplicate_author_rejected_after_normalization():
    with pytest.raises(CorpusError, match="duplicate author"):
        DocumentRecord(doc_id="d1", title="t", authors=["A  B", "A B"])


def test_issn_uppercased_hyphens_kept():
    rec = DocumentRecord(doc_id="d1", title="t", journal_issn=" 1234-567x ")
    assert rec.journal_issn == "1234-567X"


def test_blank_optional_strings_become_none():
    rec = DocumentRecord(doc_id="d1", title="t", journal_issn="  ", journal_title="", publisher=" ")
    assert rec.journal_issn is None
    assert rec.journal_title is None
    assert rec.publisher is None


def test_empty_doc_id_rejected():
    with pytest.raises(CorpusError):
        DocumentRecord(doc_id="", title="t")


def test_round_trip():
    records = [
        DocumentRecord(
            doc_id="d1",
            title="Gewalt in der Familie",
            body="eine Studie",
            authors=["A. Müller", "B. Schmidt"],
            journal_issn="0012-1207",
            journal_title="Soziale Welt",
            publisher="Verlag X",
            year=1999,
        ),
        DocumentRecord(doc_id="d2", title="untitled?", body="", authors=[]),
    ]
    assert parse_corpus(serialize_corpus(records).splitlines()) == records


def test_round_trip_randomized():
    rng = random.Random(11)
    names = ["A One", "B Two", "C Three", "D Vier", "E Fünf"]
    records = []
    for i in range(40):
        authors = rng.sample(names, rng.randrange(0, 4))
        records.append(
            DocumentRecord(
                doc_id=f"doc{i:03d}",
                title=" ".join(rng.choice("abc defg hij".split()) for _ in range(3)),
                body="word " * rng.randrange(0, 5),
                authors=authors,
                journal_issn=rng.choice([None, "1111-2222", "3333-444X"]),
                year=rng.choice([None, 1990 + i]),
            )
        )
    assert parse_corpus(serialize_corpus(records).splitlines()) == records
