"""Local per-sentence features feeding the opinion classifier.

Four signals per sentence: positive polar-word count, negative polar-word
count, the polarity of the root arc's dependent token, and presence flags
for the acomp / xcomp / advmod dependency relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .corpus import Lexicon, Sentence, Token


class RootPolarity(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class FeatureVector:
    pos_count: int
    neg_count: int
    root_polarity: RootPolarity
    has_acomp: bool
    has_xcomp: bool
    has_advmod: bool


def match_key(token: Token) -> str:
    # Lexicon entries are lowercase; lemmas from parsers may keep casing
    # (proper nouns), so fold here rather than at load time.
    return token.lemma.lower()


def _polarity(key: str, lexicon: Lexicon) -> RootPolarity:
    if key in lexicon.positive:
        return RootPolarity.POSITIVE
    if key in lexicon.negative:
        return RootPolarity.NEGATIVE
    return RootPolarity.NEUTRAL


def extract(sentence: Sentence, lexicon: Lexicon) -> FeatureVector:
    """Extract the feature vector for one sentence.

    Polar words are counted with multiplicity. The root polarity comes
    from the dependent of the root arc and is NEUTRAL when the sentence
    has no root arc or the word is in neither lexicon set.
    """
    pos_count = 0
    neg_count = 0
    for token in sentence.tokens:
        key = match_key(token)
        if key in lexicon.positive:
            pos_count += 1
        elif key in lexicon.negative:
            neg_count += 1

    root = sentence.root_arc()
    if root is None:
        root_polarity = RootPolarity.NEUTRAL
    else:
        root_polarity = _polarity(match_key(sentence.tokens[root.dependent]), lexicon)

    relations = {arc.relation for arc in sentence.arcs}
    return FeatureVector(
        pos_count=pos_count,
        neg_count=neg_count,
        root_polarity=root_polarity,
        has_acomp="acomp" in relations,
        has_xcomp="xcomp" in relations,
        has_advmod="advmod" in relations,
    )
