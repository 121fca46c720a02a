"""Ranking metrics and the two-system evaluation protocol.

For each labeled article two rankings are scored: the classifier-only
baseline (sentences by descending opinion prior) and the graph ranking.
``P@k`` is the fraction of gold-opinionated sentences in the top k;
``M@k`` normalizes it by the article's overall opinionated fraction, so
values above 1 beat random picking regardless of how opinion-rich the
article is.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence

from .classifier import NBModel
from .corpus import AnnotatedDocument, Corpus, GoldLabel, Lexicon
from .hits import (
    DEFAULT_EPSILON,
    DEFAULT_MAX_ITER,
    WeightParams,
    build_graph,
    rank,
    run_hits,
)
from .pipeline import rank_by_prior, rank_document, sentence_priors
from .textmodel import vectorize

logger = logging.getLogger(__name__)

EVAL_KS = (3, 5)


def precision_at_k(judgment: Sequence[bool], k: int) -> float:
    """Fraction of the first k ranked items that are relevant."""
    if not 1 <= k <= len(judgment):
        raise ValueError(f"k must be in [1, {len(judgment)}], got {k}")
    return sum(1 for hit in judgment[:k] if hit) / k


def ratio_op(doc: AnnotatedDocument) -> float:
    """Fraction of gold-opinionated sentences in the article.

    Requires a fully labeled article with at least one opinionated
    sentence; the normalized metric is undefined otherwise.
    """
    opinionated = 0
    for sentence in doc.sentences:
        if sentence.gold_label is GoldLabel.UNLABELED:
            raise ValueError(
                f"document {doc.id!r} sentence {sentence.position} is unlabeled"
            )
        if sentence.gold_label is GoldLabel.OPINION:
            opinionated += 1
    if opinionated == 0:
        raise ValueError(f"document {doc.id!r} has no opinionated sentences")
    return opinionated / doc.n


def m_at_k(p_at_k: float, ratio: float) -> float:
    """Precision normalized by the article's opinionated fraction."""
    if ratio <= 0:
        raise ValueError("ratio must be positive")
    return p_at_k / ratio


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float | None:
    """Sample Pearson correlation; None when either side has zero variance."""
    if len(xs) != len(ys):
        raise ValueError("series must have equal length")
    if len(xs) < 2:
        raise ValueError("need at least two points")
    n = len(xs)
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    dx = [x - mean_x for x in xs]
    dy = [y - mean_y for y in ys]
    var_x = sum(d * d for d in dx)
    var_y = sum(d * d for d in dy)
    if var_x == 0.0 or var_y == 0.0:
        return None
    return sum(a * b for a, b in zip(dx, dy)) / math.sqrt(var_x * var_y)


def judge(doc: AnnotatedDocument, order: Sequence[int]) -> list[bool]:
    """True at rank r when the sentence returned at r is gold-opinionated."""
    return [doc.sentences[pos].gold_label is GoldLabel.OPINION for pos in order]


@dataclass(frozen=True)
class SystemScores:
    p: dict[int, float]  # k -> P@k
    m: dict[int, float | None]  # k -> M@k, None when undefined


@dataclass(frozen=True)
class ArticleResult:
    doc_id: str
    ratio: float | None  # None when the article has no opinionated sentence
    baseline: SystemScores
    graph: SystemScores


@dataclass(frozen=True)
class EvalReport:
    per_article: tuple[ArticleResult, ...]
    aggregate: dict[str, dict[str, float | None]]
    improvement_pct: dict[str, float | None]
    pearson: dict[str, float | None]

    def to_dict(self) -> dict:
        return {
            "per_article": [
                {
                    "id": result.doc_id,
                    "ratio_op": result.ratio,
                    "baseline": _scores_to_dict(result.baseline),
                    "graph": _scores_to_dict(result.graph),
                }
                for result in self.per_article
            ],
            "aggregate": self.aggregate,
            "improvement_pct": self.improvement_pct,
            "pearson": self.pearson,
        }


def _scores_to_dict(scores: SystemScores) -> dict[str, float | None]:
    out: dict[str, float | None] = {}
    for k, value in sorted(scores.p.items()):
        out[f"p@{k}"] = value
    for k, value in sorted(scores.m.items()):
        out[f"m@{k}"] = value
    return out


def _score_ranking(doc: AnnotatedDocument, order: Sequence[int], ratio: float | None,
                   ks: Sequence[int]) -> SystemScores:
    judgment = judge(doc, order)
    p: dict[int, float] = {}
    m: dict[int, float | None] = {}
    for k in ks:
        # Short articles are scored over the ranks they actually have.
        p_k = precision_at_k(judgment, min(k, doc.n))
        p[k] = p_k
        m[k] = m_at_k(p_k, ratio) if ratio else None
    return SystemScores(p=p, m=m)


def _article_ratio(doc: AnnotatedDocument) -> float | None:
    opinionated = 0
    for sentence in doc.sentences:
        if sentence.gold_label is GoldLabel.UNLABELED:
            raise ValueError(
                f"document {doc.id!r} sentence {sentence.position} is unlabeled"
            )
        if sentence.gold_label is GoldLabel.OPINION:
            opinionated += 1
    if opinionated == 0:
        logger.warning(
            "document %r has no opinionated sentences; excluded from the "
            "normalized metric",
            doc.id,
        )
        return None
    return opinionated / doc.n


def _mean(values: list[float]) -> float | None:
    return sum(values) / len(values) if values else None


def evaluate_corpus(
    corpus: Corpus,
    lexicon: Lexicon,
    model: NBModel,
    params: WeightParams = WeightParams(),
    epsilon: float = DEFAULT_EPSILON,
    max_iter: int = DEFAULT_MAX_ITER,
    ks: Sequence[int] = EVAL_KS,
) -> EvalReport:
    """Score the baseline and graph rankings on a labeled corpus."""
    results = []
    for doc in corpus.documents:
        ratio = _article_ratio(doc)
        ranked, _, _, priors = rank_document(
            doc, model, lexicon, params=params, epsilon=epsilon, max_iter=max_iter
        )
        results.append(
            ArticleResult(
                doc_id=doc.id,
                ratio=ratio,
                baseline=_score_ranking(doc, rank_by_prior(priors), ratio, ks),
                graph=_score_ranking(doc, ranked.order, ratio, ks),
            )
        )

    aggregate: dict[str, dict[str, float | None]] = {"baseline": {}, "graph": {}}
    for system in ("baseline", "graph"):
        for k in ks:
            scores = [getattr(r, system).p[k] for r in results]
            aggregate[system][f"p@{k}"] = _mean(scores)
            m_scores = [
                getattr(r, system).m[k] for r in results if getattr(r, system).m[k] is not None
            ]
            aggregate[system][f"m@{k}"] = _mean(m_scores)

    improvement: dict[str, float | None] = {}
    for metric, base_value in aggregate["baseline"].items():
        graph_value = aggregate["graph"][metric]
        if base_value and graph_value is not None:
            improvement[metric] = 100.0 * (graph_value - base_value) / base_value
        else:
            improvement[metric] = None

    correlations: dict[str, float | None] = {"p@5": None, "m@5": None}
    if 5 in ks and len(results) >= 2:
        correlations["p@5"] = pearson(
            [r.baseline.p[5] for r in results], [r.graph.p[5] for r in results]
        )
        with_m = [r for r in results if r.baseline.m[5] is not None]
        if len(with_m) >= 2:
            correlations["m@5"] = pearson(
                [r.baseline.m[5] for r in with_m], [r.graph.m[5] for r in with_m]
            )

    return EvalReport(
        per_article=tuple(results),
        aggregate=aggregate,
        improvement_pct=improvement,
        pearson=correlations,
    )


def sweep(
    corpus: Corpus,
    lexicon: Lexicon,
    model: NBModel,
    grid: Sequence[WeightParams],
    epsilon: float = DEFAULT_EPSILON,
    max_iter: int = DEFAULT_MAX_ITER,
    names: Sequence[str] | None = None,
) -> list[dict]:
    """Mean P@5 / M@5 of the graph ranking for every weight setting.

    Rows come back in grid order; priors and vector spaces are computed
    once per article and shared across settings.
    """
    if names is not None and len(names) != len(grid):
        raise ValueError("names must align with the grid")

    prepared = []
    for doc in corpus.documents:
        prepared.append(
            (doc, sentence_priors(doc, model, lexicon), vectorize(doc), _article_ratio(doc))
        )

    rows = []
    for idx, params in enumerate(grid):
        p_values = []
        m_values = []
        for doc, priors, space, ratio in prepared:
            graph = build_graph(doc, priors, space, params)
            state = run_hits(graph, priors, epsilon=epsilon, max_iter=max_iter)
            judgment = judge(doc, rank(state).order)
            p_k = precision_at_k(judgment, min(5, doc.n))
            p_values.append(p_k)
            if ratio:
                m_values.append(m_at_k(p_k, ratio))
        rows.append(
            {
                "name": names[idx] if names else describe_params(params),
                "params": {
                    "hub_exp": params.hub_exp,
                    "sim_exp": params.sim_exp,
                    "alpha": params.alpha,
                    "dist_exp": params.dist_exp,
                    "scale": params.scale,
                },
                "p@5": _mean(p_values),
                "m@5": _mean(m_values),
            }
        )
    return rows


def describe_params(params: WeightParams) -> str:
    pieces = []
    if params.scale != 1.0:
        pieces.append(f"{params.scale:g}")
    if params.hub_exp:
        pieces.append(f"prior^{params.hub_exp:g}")
    if params.sim_exp:
        pieces.append(f"sim^{params.sim_exp:g}")
    if params.dist_exp:
        factor = f"({params.alpha:g} + 1/d)" if params.alpha else "(1/d)"
        pieces.append(factor if params.dist_exp == 1.0 else f"{factor}^{params.dist_exp:g}")
    return " * ".join(pieces) if pieces else "1"
