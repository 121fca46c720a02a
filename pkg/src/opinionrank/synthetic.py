"""Deterministic synthetic corpus for end-to-end mechanism tests.

Each generated article mirrors the structure the graph stage exploits:

* hub sentences: opinions of graded local-feature strength, each wrapped
  in factual support sentences that reuse the hub's topic words. Every
  hub also borrows one topic word from the next cluster, so the article
  hangs together as one story instead of falling apart into disconnected
  islands. All hub templates share one length and slot structure (grades
  swap polar words for neutral ones), so TF-IDF norms stay comparable
  and the ranking is controlled by the classifier prior and the number
  of supports, not by token-count dilution;
* traps: factual sentences that read like strong opinions to the
  classifier (polar root verb, extra polar word, advmod arc) but share
  almost no vocabulary with the story, so the graph stage demotes them.
  The first trap borrows one topic word from the strongest cluster, the
  second stays fully isolated; inside an article all trap content words
  are disjoint from each other and from the hub pools, or the traps
  would bootstrap their own hub-authority cluster;
* distractors: plain facts with one borrowed topic word each, keeping
  their scores small but structurally distinct.

Everything is driven by one seeded RNG: the same seed always yields the
same corpus, byte for byte.
"""

from __future__ import annotations

import random
from pathlib import Path

from .corpus import (
    ROOT_HEAD,
    AnnotatedDocument,
    Corpus,
    DependencyArc,
    GoldLabel,
    Sentence,
    Token,
)

DEFAULT_SEED = 41
DEFAULT_ARTICLES = 20

POSITIVE_WORDS = (
    "admirable",
    "applauds",
    "beneficial",
    "bold",
    "commendable",
    "excellent",
    "hails",
    "praises",
    "prudent",
    "sensible",
    "visionary",
    "wise",
)

NEGATIVE_WORDS = (
    "absurd",
    "blasts",
    "chaotic",
    "deplores",
    "dismal",
    "foolish",
    "harmful",
    "reckless",
    "ridiculous",
    "shameful",
    "slams",
    "wasteful",
)

_TOPIC_POOL = (
    "budget", "senate", "tariff", "pipeline", "election", "treaty", "inflation",
    "border", "healthcare", "housing", "transit", "schools", "drought", "audit",
    "taxes", "energy", "water", "crime", "wages", "pension", "debt", "council",
    "mayor", "governor", "ballot", "census", "charter", "courts", "customs",
    "defense", "exports", "farmers", "ferry", "forestry", "fraud", "grants",
)

_TRAP_POOL = (
    "gala", "anniversary", "luncheon", "parade", "trophy", "mascot", "lottery",
    "raffle", "picnic", "banquet", "fireworks", "pageant", "carnival", "bazaar",
)

_TRAP_SUBJECTS = ("organizers", "promoters", "caterers", "vendors")
_TRAP_NOUNS = ("event", "evening", "ceremony", "reception")
_TRAP_NEUTRAL_ADJ = ("annual", "customary")

_DISTRACTOR_POOL = (
    "weather", "calendar", "archive", "bulletin", "catalog", "corridor",
    "deadline", "directory", "inventory", "ledger", "manifest", "roster",
)

_OPINION_SUBJECTS = ("critics", "analysts", "observers", "residents", "editors")
_FACT_SUBJECTS = ("officials", "records", "auditors", "clerks", "inspectors")
_OPINION_VERBS = ("argues", "insists", "warns", "contends", "maintains")
_FACT_VERBS = ("show", "confirm", "state", "list", "report")
_FACT_NOUNS = ("figures", "totals", "filings", "minutes", "tallies")

_HUB_ADVERBS = ("sharply", "openly", "repeatedly", "bluntly")
_MILD_ADVERBS = ("overall", "broadly", "largely", "plainly")
_TRAP_ADVERBS = ("privately", "briefly", "quietly", "earlier")

_POSITIVE_ADJ = ("excellent", "wise", "sensible", "admirable", "prudent", "bold")
_NEGATIVE_ADJ = ("reckless", "foolish", "harmful", "dismal", "wasteful", "absurd")
_HUB_POS_ROOT = ("praises", "applauds")
_HUB_NEG_ROOT = ("slams", "deplores")
_TRAP_POS_ROOT = ("hails",)
_TRAP_NEG_ROOT = ("blasts",)

# hub grade -> (topic words shared with the supports, number of supports);
# the descending ladder keeps the graph scores of the grades separated
HUB_GRADES = {
    "strong": (3, 2),
    "medium": (3, 3),
    "weak": (3, 4),
}


def _sentence(
    tokens: list[str],
    arcs: list[DependencyArc],
    label: GoldLabel,
    position: int,
) -> Sentence:
    text = " ".join(tokens)
    text = text[0].upper() + text[1:] + "."
    return Sentence(
        text=text,
        tokens=tuple(Token(surface=t, lemma=t, index=i) for i, t in enumerate(tokens)),
        arcs=tuple(arcs),
        gold_label=label,
        position=position,
    )


def _root(dep: int) -> DependencyArc:
    return DependencyArc(relation="root", head=ROOT_HEAD, dependent=dep)


class _Draft:
    """A sentence before its final position in the article is known."""

    def __init__(self, tokens: list[str], arcs: list[DependencyArc], label: GoldLabel):
        self.tokens = tokens
        self.arcs = arcs
        self.label = label

    def build(self, position: int) -> Sentence:
        return _sentence(self.tokens, self.arcs, self.label, position)


class _ArticleVocab:
    """Article-local word pools; reuse within an article keeps sentences
    of the same story lexically close without global word collisions."""

    def __init__(self, rng: random.Random):
        self.opinion_subjects = rng.sample(_OPINION_SUBJECTS, 4)
        self.fact_subjects = rng.sample(_FACT_SUBJECTS, 2)
        self.opinion_verbs = rng.sample(_OPINION_VERBS, 2)
        self.fact_verbs = rng.sample(_FACT_VERBS, 2)
        self.fact_nouns = rng.sample(_FACT_NOUNS, 2)
        pos_adj = rng.sample(_POSITIVE_ADJ, len(_POSITIVE_ADJ))
        neg_adj = rng.sample(_NEGATIVE_ADJ, len(_NEGATIVE_ADJ))
        self.hub_pos_adj, self.trap_pos_adj = pos_adj[:4], pos_adj[4:]
        self.hub_neg_adj, self.trap_neg_adj = neg_adj[:4], neg_adj[4:]
        self.trap_adverbs = rng.sample(_TRAP_ADVERBS, len(_TRAP_ADVERBS))
        self.mild_adverbs = rng.sample(_MILD_ADVERBS, len(_MILD_ADVERBS))

    def hub_adj_slice(self, cluster: int, negative: bool) -> list[str]:
        pool = self.hub_neg_adj if negative else self.hub_pos_adj
        start = 2 * (cluster // 2)
        return pool[start : start + 2]


def _hub(rng: random.Random, vocab: _ArticleVocab, grade: str, cluster: int,
         topic: list[str], bridge: str) -> _Draft:
    # All grades share one 13-token template: subject, verb, "the", three
    # topic words, the bridge word, "plan", a linker, two adjective slots,
    # "and", a trailing adverb slot. Grades differ in how many slots hold
    # polar words and in the marker arcs, so the classifier evidence
    # varies while the TF-IDF geometry does not.
    negative = cluster % 2 == 0
    adj = vocab.hub_adj_slice(cluster, negative)
    subject = vocab.opinion_subjects[cluster]
    verb = vocab.opinion_verbs[cluster % 2]
    base = ["the", topic[0], topic[1], topic[2], bridge, "plan"]
    mild = vocab.mild_adverbs[cluster]

    if grade == "strong":
        # polar root verb, two polar adjectives, advmod marker
        root_verb = rng.choice(_HUB_NEG_ROOT if negative else _HUB_POS_ROOT)
        adverb = rng.choice(_HUB_ADVERBS)
        tokens = [subject, root_verb] + base + ["as", adj[0], "and", adj[1], adverb]
        arcs = [
            _root(1),
            DependencyArc(relation="advmod", head=1, dependent=len(tokens) - 1),
        ]
    elif grade == "medium":
        # two polar adjectives behind a neutral verb, acomp marker
        tokens = [subject, verb] + base + ["is", adj[0], "and", adj[1], mild]
        arcs = [
            _root(1),
            DependencyArc(relation="acomp", head=1, dependent=len(tokens) - 4),
        ]
    else:
        # weak: two polar adjectives, neutral root, advmod marker only:
        # the classifier sees trap-like evidence minus the polar root
        adverb = rng.choice(_HUB_ADVERBS)
        tokens = [subject, verb] + base + ["looks", adj[0], "and", adj[1], adverb]
        arcs = [
            _root(1),
            DependencyArc(relation="advmod", head=1, dependent=len(tokens) - 1),
        ]

    return _Draft(tokens, arcs, GoldLabel.OPINION)


def _support(rng: random.Random, vocab: _ArticleVocab, topic: list[str]) -> _Draft:
    subject = rng.choice(vocab.fact_subjects)
    verb = rng.choice(vocab.fact_verbs)
    noun = rng.choice(vocab.fact_nouns)
    tokens = [subject, verb, "the", topic[0], topic[1], topic[2], noun]
    return _Draft(tokens, [_root(1)], GoldLabel.FACT)


def _trap(rng: random.Random, vocab: _ArticleVocab, used: set[str], slot: int,
          bridge: str | None, extra_polar: int) -> _Draft:
    words = [w for w in _TRAP_POOL if w not in used]
    picked = rng.sample(words, 2)
    used.update(picked)
    negative = slot % 2 == 0
    root_verb = (_TRAP_NEG_ROOT + _TRAP_POS_ROOT)[slot % 2]
    adj_pool = vocab.trap_neg_adj if negative else vocab.trap_pos_adj
    adverb = vocab.trap_adverbs[slot % len(vocab.trap_adverbs)]
    subject = _TRAP_SUBJECTS[slot % len(_TRAP_SUBJECTS)]
    noun = _TRAP_NOUNS[slot % len(_TRAP_NOUNS)]
    # polar density varies: the root verb always counts, plus 0-2 polar
    # adjectives, so the classifier prior differs from article to article
    if extra_polar == 0:
        tail = [_TRAP_NEUTRAL_ADJ[slot % len(_TRAP_NEUTRAL_ADJ)], adverb]
    elif extra_polar == 1:
        tail = [adj_pool[0], adverb]
    else:
        tail = [adj_pool[0], adj_pool[1], adverb]
    middle = [picked[0], bridge, picked[1]] if bridge else [picked[0], picked[1]]
    tokens = [subject, root_verb, "the"] + middle + [noun] + tail
    arcs = [
        _root(1),
        DependencyArc(relation="advmod", head=1, dependent=len(tokens) - 1),
    ]
    return _Draft(tokens, arcs, GoldLabel.FACT)


def _distractor(rng: random.Random, vocab: _ArticleVocab, used: set[str],
                borrowed: str) -> _Draft:
    words = [w for w in _DISTRACTOR_POOL if w not in used]
    picked = rng.sample(words, 2)
    used.update(picked)
    verb = rng.choice(vocab.fact_verbs)
    tokens = ["the", picked[0], "office", verb, "the", borrowed, picked[1], "today"]
    return _Draft(tokens, [_root(3)], GoldLabel.FACT)


def _make_article(rng: random.Random, doc_id: str) -> AnnotatedDocument:
    vocab = _ArticleVocab(rng)
    grades = ["strong", "medium", "weak"]
    rng.shuffle(grades)
    n_clusters = len(grades)
    topics = rng.sample(_TOPIC_POOL, 3 * n_clusters)

    blocks: list[list[_Draft]] = []
    for c, grade in enumerate(grades):
        topic = topics[3 * c : 3 * (c + 1)]
        bridge = topics[(3 * ((c + 1) % n_clusters))]  # ties clusters together
        hub = _hub(rng, vocab, grade, c, topic, bridge)
        supports = [_support(rng, vocab, topic) for _ in range(HUB_GRADES[grade][1])]
        half = (len(supports) + 1) // 2
        blocks.append(supports[:half] + [hub] + supports[half:])

    # the bridged trap borrows from the middle cluster: enough authority
    # there to separate it from the isolated trap, and the middle hub's
    # rank margins absorb the perturbation
    anchor_cluster = grades.index("medium")
    used_trap: set[str] = set()
    used_distractor: set[str] = set()
    fillers: list[_Draft] = [
        _trap(rng, vocab, used_trap, slot=0, bridge=topics[3 * anchor_cluster],
              extra_polar=1),
        _trap(rng, vocab, used_trap, slot=1, bridge=None, extra_polar=0),
    ]
    for d in range(rng.choice((1, 2))):
        borrowed = topics[(3 * d + 1) % len(topics)]
        fillers.append(_distractor(rng, vocab, used_distractor, borrowed))
    rng.shuffle(fillers)

    drafts: list[_Draft] = []
    for i, block in enumerate(blocks):
        drafts.extend(block)
        if i < len(fillers):
            drafts.append(fillers[i])
    drafts.extend(fillers[len(blocks):])

    sentences = tuple(draft.build(position) for position, draft in enumerate(drafts))
    return AnnotatedDocument(id=doc_id, sentences=sentences)


def generate_fixture_corpus(
    seed: int = DEFAULT_SEED, n_articles: int = DEFAULT_ARTICLES
) -> Corpus:
    """Build the synthetic labeled corpus (deterministic for a given seed)."""
    rng = random.Random(seed)
    documents = tuple(_make_article(rng, f"art-{i:02d}") for i in range(n_articles))
    return Corpus(documents=documents)


def write_lexicon_files(pos_path: str | Path, neg_path: str | Path) -> None:
    """Write the polar word lists the synthetic corpus draws from."""
    Path(pos_path).write_text(
        "# positive polar words\n" + "\n".join(POSITIVE_WORDS) + "\n", encoding="utf-8"
    )
    Path(neg_path).write_text(
        "# negative polar words\n" + "\n".join(NEGATIVE_WORDS) + "\n", encoding="utf-8"
    )
