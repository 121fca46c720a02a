"""Per-article TF-IDF sentence vectors, cosine similarity, and distance.

The vector space is built per article, treating each sentence as a tiny
document: ``tf`` is the raw term count inside the sentence and
``idf = ln((1 + n) / (1 + df)) + 1`` where ``df`` counts the article's
sentences containing the term. The smoothed form keeps every stored
weight strictly positive, so similarity between sentences of the same
article never degenerates just because a term is ubiquitous.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .corpus import AnnotatedDocument, Sentence

# A sentence vector is a sparse term -> weight map; zero entries are absent.
SentenceVector = dict[str, float]


@dataclass(frozen=True)
class ArticleVectorSpace:
    vectors: tuple[SentenceVector, ...]  # aligned to sentence positions
    vocabulary: frozenset[str]


def _terms(sentence: Sentence) -> list[str]:
    # Lowercased surface forms; tokens with no alphanumeric character
    # (pure punctuation) are dropped. No stemming, no stopword removal.
    out = []
    for token in sentence.tokens:
        if any(ch.isalnum() for ch in token.surface):
            out.append(token.surface.lower())
    return out


def vectorize(doc: AnnotatedDocument) -> ArticleVectorSpace:
    """Build one TF-IDF vector per sentence of the article."""
    n = doc.n
    term_lists = [_terms(s) for s in doc.sentences]
    df: Counter[str] = Counter()
    for terms in term_lists:
        df.update(set(terms))
    idf = {term: math.log((1 + n) / (1 + count)) + 1.0 for term, count in df.items()}
    vectors = tuple(
        {term: tf * idf[term] for term, tf in Counter(terms).items()} for terms in term_lists
    )
    return ArticleVectorSpace(vectors=vectors, vocabulary=frozenset(df))


def cosine_sim(a: SentenceVector, b: SentenceVector) -> float:
    """Cosine of two sparse vectors; 0.0 if either is empty.

    The dot product is accumulated over sorted shared terms so the result
    is exactly symmetric in its arguments.
    """
    if not a or not b:
        return 0.0
    shared = sorted(a.keys() & b.keys())
    if not shared:
        return 0.0
    dot = 0.0
    for term in shared:
        dot += a[term] * b[term]
    norm_a = math.sqrt(sum(w * w for w in a.values()))
    norm_b = math.sqrt(sum(w * w for w in b.values()))
    value = dot / (norm_a * norm_b)
    # Weights are non-negative, so the true value lies in [0, 1]; clamp
    # away last-ulp rounding excursions.
    return min(1.0, max(0.0, value))


def sentence_distance(i: int, j: int) -> int:
    """Positional distance |i - j|; adjacent sentences are at distance 1."""
    if i == j:
        raise ValueError("sentence distance is undefined for i == j")
    return abs(i - j)
