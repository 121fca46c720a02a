"""Naive Bayes opinion classifier over the local sentence features.

The two count features use per-class Gaussian likelihoods (mean and
variance with a fixed variance floor); root polarity uses a Laplace
smoothed 3-way categorical; the dependency flags use Laplace-smoothed
Bernoullis. Posteriors are computed in log space and clamped strictly
inside (0, 1), so every sentence keeps a usable non-degenerate prior for
the graph stage.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .corpus import Corpus, GoldLabel, Lexicon
from .features import FeatureVector, extract

MODEL_FORMAT = "nbmodel-v1"

# Keeps Gaussian densities bounded when a class has (near-)constant counts.
VARIANCE_FLOOR = 1e-3

# Posteriors are clamped to [PROB_FLOOR, 1 - PROB_FLOOR]: extreme feature
# values would otherwise saturate to exactly 0.0 or 1.0 in float64.
PROB_FLOOR = 1e-15

_POLARITY_VALUES = ("positive", "negative", "neutral")
_FLAG_NAMES = ("has_acomp", "has_xcomp", "has_advmod")


class TrainingError(ValueError):
    """Raised when the training corpus cannot support both classes."""


@dataclass(frozen=True)
class Gaussian:
    mean: float
    variance: float  # >= VARIANCE_FLOOR

    def log_density(self, x: float) -> float:
        return -0.5 * math.log(2.0 * math.pi * self.variance) - (x - self.mean) ** 2 / (
            2.0 * self.variance
        )


@dataclass(frozen=True)
class ClassParams:
    prior: float
    pos_count: Gaussian
    neg_count: Gaussian
    root_polarity: dict[str, float]  # value -> probability, strictly in (0, 1)
    flags: dict[str, float]  # flag name -> P(flag is true | class)


@dataclass(frozen=True)
class NBModel:
    opinion: ClassParams
    fact: ClassParams


def _fit_gaussian(values: list[int]) -> Gaussian:
    m = len(values)
    mean = sum(values) / m
    variance = sum((v - mean) ** 2 for v in values) / m
    return Gaussian(mean=mean, variance=max(variance, VARIANCE_FLOOR))


def _fit_class(fvs: list[FeatureVector], prior: float) -> ClassParams:
    m = len(fvs)
    polarity_counts = {value: 0 for value in _POLARITY_VALUES}
    for fv in fvs:
        polarity_counts[fv.root_polarity.value] += 1
    root_polarity = {
        value: (count + 1) / (m + len(_POLARITY_VALUES))
        for value, count in polarity_counts.items()
    }
    flags = {
        name: (sum(1 for fv in fvs if getattr(fv, name)) + 1) / (m + 2)
        for name in _FLAG_NAMES
    }
    return ClassParams(
        prior=prior,
        pos_count=_fit_gaussian([fv.pos_count for fv in fvs]),
        neg_count=_fit_gaussian([fv.neg_count for fv in fvs]),
        root_polarity=root_polarity,
        flags=flags,
    )


def train(corpus: Corpus, lexicon: Lexicon) -> NBModel:
    """Fit the classifier on every labeled sentence of the corpus.

    Unlabeled sentences are ignored. Raises :class:`TrainingError` when
    either class has no labeled sentence at all.
    """
    by_class: dict[GoldLabel, list[FeatureVector]] = {
        GoldLabel.OPINION: [],
        GoldLabel.FACT: [],
    }
    for doc in corpus.documents:
        for sentence in doc.sentences:
            if sentence.gold_label in by_class:
                by_class[sentence.gold_label].append(extract(sentence, lexicon))

    for label, fvs in by_class.items():
        if not fvs:
            raise TrainingError(f"no labeled sentences for class {label.value!r}")

    n_opinion = len(by_class[GoldLabel.OPINION])
    n_fact = len(by_class[GoldLabel.FACT])
    total = n_opinion + n_fact
    return NBModel(
        opinion=_fit_class(by_class[GoldLabel.OPINION], (n_opinion + 1) / (total + 2)),
        fact=_fit_class(by_class[GoldLabel.FACT], (n_fact + 1) / (total + 2)),
    )


def _log_score(params: ClassParams, fv: FeatureVector) -> float:
    score = math.log(params.prior)
    score += params.pos_count.log_density(fv.pos_count)
    score += params.neg_count.log_density(fv.neg_count)
    score += math.log(params.root_polarity[fv.root_polarity.value])
    for name in _FLAG_NAMES:
        p_true = params.flags[name]
        score += math.log(p_true if getattr(fv, name) else 1.0 - p_true)
    return score


def predict(model: NBModel, fv: FeatureVector) -> float:
    """Posterior probability that the sentence is opinionated, in (0, 1)."""
    score_op = _log_score(model.opinion, fv)
    score_fact = _log_score(model.fact, fv)
    # log-sum-exp normalization over the two classes
    top = max(score_op, score_fact)
    log_norm = top + math.log(math.exp(score_op - top) + math.exp(score_fact - top))
    p_opinion = math.exp(score_op - log_norm)
    return min(max(p_opinion, PROB_FLOOR), 1.0 - PROB_FLOOR)


def _class_to_dict(params: ClassParams) -> dict:
    return {
        "prior": params.prior,
        "pos_count": {"mean": params.pos_count.mean, "variance": params.pos_count.variance},
        "neg_count": {"mean": params.neg_count.mean, "variance": params.neg_count.variance},
        "root_polarity": dict(params.root_polarity),
        "flags": dict(params.flags),
    }


def _class_from_dict(raw: dict) -> ClassParams:
    return ClassParams(
        prior=raw["prior"],
        pos_count=Gaussian(raw["pos_count"]["mean"], raw["pos_count"]["variance"]),
        neg_count=Gaussian(raw["neg_count"]["mean"], raw["neg_count"]["variance"]),
        root_polarity=dict(raw["root_polarity"]),
        flags=dict(raw["flags"]),
    )


def model_to_dict(model: NBModel) -> dict:
    return {
        "version": MODEL_FORMAT,
        "opinion": _class_to_dict(model.opinion),
        "fact": _class_to_dict(model.fact),
    }


def model_from_dict(raw: dict) -> NBModel:
    if raw.get("version") != MODEL_FORMAT:
        raise ValueError(f"unsupported model version: {raw.get('version')!r}")
    return NBModel(opinion=_class_from_dict(raw["opinion"]), fact=_class_from_dict(raw["fact"]))


def save_model(model: NBModel, path: str | Path) -> None:
    """Write the model as JSON with full float precision (repr round-trip)."""
    text = json.dumps(model_to_dict(model), indent=2, sort_keys=True)
    Path(path).write_text(text + "\n", encoding="utf-8")


def load_model(path: str | Path) -> NBModel:
    with open(path, encoding="utf-8") as handle:
        return model_from_dict(json.load(handle))
