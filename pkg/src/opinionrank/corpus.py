"""Data model for annotated news articles and polar-word lexicons.

Articles arrive as JSONL, one document per line::

    {"id": "doc-1",
     "sentences": [{"text": "...",
                    "tokens": [{"surface": "Good", "lemma": "good"}, ...],
                    "arcs": [{"rel": "root", "head": -1, "dep": 1}, ...],
                    "label": "opinion" | "fact" | null}]}

Token ``lemma`` is optional and defaults to the lowercased surface form.
``head`` is a token index, or -1 for the root arc. The loader validates
all structural invariants up front; everything it returns is immutable
and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

ROOT_HEAD = -1
ROOT_RELATION = "root"


class CorpusError(ValueError):
    """Base class for corpus and lexicon loading failures."""


class ParseError(CorpusError):
    """A line is not valid JSON or does not have the expected shape."""


class ValidationError(CorpusError):
    """A structural invariant of the data model does not hold."""


class GoldLabel(Enum):
    OPINION = "opinion"
    FACT = "fact"
    UNLABELED = "unlabeled"


class Split(Enum):
    TRAIN = "train"
    TEST = "test"
    UNSPLIT = "unsplit"


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    index: int


@dataclass(frozen=True)
class DependencyArc:
    relation: str  # stored lowercase; matching is case-insensitive
    head: int  # token index, or ROOT_HEAD for the root arc
    dependent: int


@dataclass(frozen=True)
class Sentence:
    text: str
    tokens: tuple[Token, ...]
    arcs: tuple[DependencyArc, ...]
    gold_label: GoldLabel
    position: int

    def root_arc(self) -> DependencyArc | None:
        for arc in self.arcs:
            if arc.relation == ROOT_RELATION:
                return arc
        return None


@dataclass(frozen=True)
class AnnotatedDocument:
    id: str
    sentences: tuple[Sentence, ...]

    @property
    def n(self) -> int:
        return len(self.sentences)


@dataclass(frozen=True)
class Corpus:
    documents: tuple[AnnotatedDocument, ...]
    split: Split = Split.UNSPLIT


@dataclass(frozen=True)
class Lexicon:
    positive: frozenset[str]
    negative: frozenset[str]


_LABELS = {"opinion": GoldLabel.OPINION, "fact": GoldLabel.FACT, None: GoldLabel.UNLABELED}


def _parse_token(raw: object, index: int, where: str) -> Token:
    if not isinstance(raw, dict) or not isinstance(raw.get("surface"), str):
        raise ParseError(f"{where}: token {index} must be an object with a string 'surface'")
    surface = raw["surface"]
    lemma = raw.get("lemma")
    if lemma is not None and not isinstance(lemma, str):
        raise ParseError(f"{where}: token {index} has a non-string 'lemma'")
    if not lemma:
        lemma = surface.lower()
    return Token(surface=surface, lemma=lemma, index=index)


def _parse_arc(raw: object, where: str) -> DependencyArc:
    if (
        not isinstance(raw, dict)
        or not isinstance(raw.get("rel"), str)
        or not isinstance(raw.get("head"), int)
        or isinstance(raw.get("head"), bool)
        or not isinstance(raw.get("dep"), int)
        or isinstance(raw.get("dep"), bool)
    ):
        raise ParseError(f"{where}: arcs must be objects with string 'rel' and integer 'head'/'dep'")
    return DependencyArc(relation=raw["rel"].lower(), head=raw["head"], dependent=raw["dep"])


def _parse_sentence(raw: object, position: int, where: str) -> Sentence:
    if not isinstance(raw, dict) or not isinstance(raw.get("text"), str):
        raise ParseError(f"{where}: sentence {position} must be an object with a string 'text'")
    raw_tokens = raw.get("tokens", [])
    raw_arcs = raw.get("arcs", [])
    if not isinstance(raw_tokens, list) or not isinstance(raw_arcs, list):
        raise ParseError(f"{where}: sentence {position} 'tokens' and 'arcs' must be lists")
    label_value = raw.get("label")
    if label_value not in _LABELS:
        raise ParseError(f"{where}: sentence {position} has unknown label {label_value!r}")
    tokens = tuple(_parse_token(t, i, where) for i, t in enumerate(raw_tokens))
    arcs = tuple(_parse_arc(a, where) for a in raw_arcs)
    return Sentence(
        text=raw["text"],
        tokens=tokens,
        arcs=arcs,
        gold_label=_LABELS[label_value],
        position=position,
    )


def _validate_sentence(sentence: Sentence, doc_id: str) -> None:
    where = f"document {doc_id!r} sentence {sentence.position}"
    for token in sentence.tokens:
        if not token.surface:
            raise ValidationError(f"{where}: token {token.index} has an empty surface form")
    n_tokens = len(sentence.tokens)
    root_count = 0
    for arc in sentence.arcs:
        if not 0 <= arc.dependent < n_tokens:
            raise ValidationError(f"{where}: arc dependent {arc.dependent} is out of range")
        if arc.relation == ROOT_RELATION:
            root_count += 1
            if arc.head != ROOT_HEAD:
                raise ValidationError(f"{where}: root arc must use head {ROOT_HEAD}")
        elif not 0 <= arc.head < n_tokens:
            raise ValidationError(f"{where}: arc head {arc.head} is out of range")
    # An empty arc list marks a sentence the parser could not handle; any
    # parsed sentence must carry exactly one root arc.
    if sentence.arcs and root_count != 1:
        raise ValidationError(f"{where}: expected exactly one root arc, found {root_count}")


def parse_document(raw: object, where: str) -> AnnotatedDocument:
    """Convert one decoded JSONL object into a validated document."""
    if not isinstance(raw, dict) or not isinstance(raw.get("id"), str):
        raise ParseError(f"{where}: document must be an object with a string 'id'")
    raw_sentences = raw.get("sentences")
    if not isinstance(raw_sentences, list):
        raise ParseError(f"{where}: 'sentences' must be a list")
    doc_id = raw["id"]
    sentences = tuple(_parse_sentence(s, i, where) for i, s in enumerate(raw_sentences))
    if not sentences:
        raise ValidationError(f"document {doc_id!r}: must contain at least one sentence")
    for sentence in sentences:
        _validate_sentence(sentence, doc_id)
    return AnnotatedDocument(id=doc_id, sentences=sentences)


def load_corpus(path: str | Path, split: Split = Split.UNSPLIT) -> Corpus:
    """Load and validate a JSONL corpus file.

    Blank lines are skipped. Raises :class:`ParseError` with the offending
    line number for malformed JSON, and :class:`ValidationError` naming the
    document and sentence for invariant violations.
    """
    documents: list[AnnotatedDocument] = []
    seen_ids: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
            doc = parse_document(raw, where=f"line {lineno}")
            if doc.id in seen_ids:
                raise ValidationError(f"line {lineno}: duplicate document id {doc.id!r}")
            seen_ids.add(doc.id)
            documents.append(doc)
    return Corpus(documents=tuple(documents), split=split)


def document_to_dict(doc: AnnotatedDocument) -> dict:
    """Inverse of :func:`parse_document`, for JSONL round-trips."""
    return {
        "id": doc.id,
        "sentences": [
            {
                "text": s.text,
                "tokens": [{"surface": t.surface, "lemma": t.lemma} for t in s.tokens],
                "arcs": [
                    {"rel": a.relation, "head": a.head, "dep": a.dependent} for a in s.arcs
                ],
                "label": None if s.gold_label is GoldLabel.UNLABELED else s.gold_label.value,
            }
            for s in doc.sentences
        ],
    }


def dumps_corpus(corpus: Corpus) -> str:
    """Serialize a corpus back to its JSONL form (deterministic bytes)."""
    lines = [
        json.dumps(document_to_dict(doc), ensure_ascii=False, sort_keys=True)
        for doc in corpus.documents
    ]
    return "".join(line + "\n" for line in lines)


def dump_corpus(corpus: Corpus, path: str | Path) -> None:
    Path(path).write_text(dumps_corpus(corpus), encoding="utf-8")


def _read_wordlist(path: str | Path) -> frozenset[str]:
    words: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            word = line.strip()
            if not word or word.startswith("#"):
                continue
            words.add(word.lower())
    return frozenset(words)


def load_lexicon(path_pos: str | Path, path_neg: str | Path) -> Lexicon:
    """Load positive/negative word lists (one word per line, ``#`` comments).

    Words are lowercased and deduplicated. A word present in both lists is
    rejected: the two polarity sets must be disjoint.
    """
    positive = _read_wordlist(path_pos)
    negative = _read_wordlist(path_neg)
    overlap = positive & negative
    if overlap:
        listed = ", ".join(sorted(overlap))
        raise ValidationError(f"lexicon lists overlap: {listed}")
    return Lexicon(positive=positive, negative=negative)
