"""Two-stage opinionated-sentence extraction.

Stage one scores every sentence with a Naive Bayes classifier over local
features (polar-word counts, root polarity, marker dependencies). Stage
two treats the article as a complete weighted graph and runs an
iterative hub-authority computation seeded with those scores: sentences
ranked as strong hubs are the article's opinions, and their
highest-weight authorities are the facts supporting them.
"""

from .classifier import NBModel, load_model, predict, save_model, train
from .corpus import (
    AnnotatedDocument,
    Corpus,
    GoldLabel,
    Lexicon,
    load_corpus,
    load_lexicon,
)
from .evaluation import evaluate_corpus, m_at_k, pearson, precision_at_k, ratio_op, sweep
from .features import FeatureVector, extract
from .hits import (
    HitsState,
    RankedSentences,
    SentenceGraph,
    WeightParams,
    build_graph,
    hub_authority_report,
    rank,
    run_hits,
)
from .pipeline import rank_document, sentence_priors
from .textmodel import ArticleVectorSpace, cosine_sim, sentence_distance, vectorize

__version__ = "0.1.0"

__all__ = [
    "AnnotatedDocument",
    "ArticleVectorSpace",
    "Corpus",
    "FeatureVector",
    "GoldLabel",
    "HitsState",
    "Lexicon",
    "NBModel",
    "RankedSentences",
    "SentenceGraph",
    "WeightParams",
    "build_graph",
    "cosine_sim",
    "evaluate_corpus",
    "extract",
    "hub_authority_report",
    "load_corpus",
    "load_lexicon",
    "load_model",
    "m_at_k",
    "pearson",
    "precision_at_k",
    "predict",
    "rank",
    "rank_document",
    "ratio_op",
    "run_hits",
    "save_model",
    "sentence_distance",
    "sentence_priors",
    "sweep",
    "train",
    "vectorize",
]
