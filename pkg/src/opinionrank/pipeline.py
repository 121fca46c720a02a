"""Glue running the two stages end to end for a single article."""

from __future__ import annotations

from .classifier import NBModel, predict
from .corpus import AnnotatedDocument, Lexicon
from .features import extract
from .hits import (
    DEFAULT_EPSILON,
    DEFAULT_MAX_ITER,
    HitsState,
    RankedSentences,
    SentenceGraph,
    WeightParams,
    build_graph,
    rank,
    run_hits,
)
from .textmodel import vectorize


def sentence_priors(doc: AnnotatedDocument, model: NBModel, lexicon: Lexicon) -> list[float]:
    """Per-sentence opinion probabilities from the first stage."""
    return [predict(model, extract(sentence, lexicon)) for sentence in doc.sentences]


def rank_document(
    doc: AnnotatedDocument,
    model: NBModel,
    lexicon: Lexicon,
    params: WeightParams = WeightParams(),
    epsilon: float = DEFAULT_EPSILON,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[RankedSentences, HitsState, SentenceGraph, list[float]]:
    """Run classifier priors + graph ranking for one article."""
    priors = sentence_priors(doc, model, lexicon)
    space = vectorize(doc)
    graph = build_graph(doc, priors, space, params)
    state = run_hits(graph, priors, epsilon=epsilon, max_iter=max_iter)
    return rank(state), state, graph, priors


def rank_by_prior(priors: list[float]) -> tuple[int, ...]:
    """Classifier-only baseline ranking: descending prior, earlier
    sentence first on ties (same tie rule as the graph ranking)."""
    return tuple(sorted(range(len(priors)), key=lambda i: (-priors[i], i)))
