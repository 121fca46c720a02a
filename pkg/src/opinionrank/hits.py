"""Weighted hub-authority ranking over an article's sentence graph.

Every article becomes a complete directed graph: sentences are nodes and
each ordered pair (i, j), i != j, carries the weight

    W[i][j] = scale * prior_i^hub_exp * sim(i, j)^sim_exp
              * (alpha + 1 / |i - j|)^dist_exp

where ``prior_i`` is the classifier's opinion probability for sentence i
and ``sim`` is the TF-IDF cosine between the two sentences. Hub scores
start at the priors, authority scores at their complements, and the two
are then mutually reinforced:

    H_i(k) = sum_j W[i][j] * A_j(k-1)
    A_i(k) = sum_j W[j][i] * H_j(k-1)

with an L2 normalization of each vector after every pass. Normalization
does not change the final ordering (weights are non-negative, so ranking
is scale-invariant) but keeps the iteration numerically bounded. The
loop stops when the mean squared change of both vectors drops below
``epsilon``. Opinionated sentences surface as strong hubs; the facts
around them accumulate authority mass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import AnnotatedDocument, GoldLabel
from .textmodel import ArticleVectorSpace, cosine_sim, sentence_distance

DEFAULT_EPSILON = 0.01
DEFAULT_MAX_ITER = 1000
DEFAULT_TOP_K = 5
DEFAULT_TOP_AUTHS = 4


@dataclass(frozen=True)
class WeightParams:
    """Knobs of the edge-weight function; the defaults are the tuned
    operating point (cubed prior, squared similarity, alpha 1)."""

    hub_exp: float = 3.0
    sim_exp: float = 2.0
    alpha: float = 1.0
    dist_exp: float = 1.0  # 0 disables the distance factor entirely
    scale: float = 1.0  # overall multiplier; never changes the ranking

    def __post_init__(self) -> None:
        for name in ("hub_exp", "sim_exp", "alpha", "dist_exp"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.scale <= 0:
            raise ValueError("scale must be positive")


@dataclass(frozen=True)
class SentenceGraph:
    n: int
    weights: tuple[tuple[float, ...], ...]  # weights[i][j] = edge i -> j

    def __post_init__(self) -> None:
        if len(self.weights) != self.n or any(len(row) != self.n for row in self.weights):
            raise ValueError("weight matrix must be n x n")
        for i, row in enumerate(self.weights):
            if row[i] != 0.0:
                raise ValueError(f"self-edge weight at {i} must be zero")
            if any(w < 0 for w in row):
                raise ValueError(f"negative edge weight in row {i}")

    def scaled(self, factor: float) -> "SentenceGraph":
        return SentenceGraph(
            n=self.n,
            weights=tuple(tuple(w * factor for w in row) for row in self.weights),
        )


@dataclass(frozen=True)
class HitsState:
    hub: tuple[float, ...]
    auth: tuple[float, ...]
    iteration: int
    epsilon: float
    trace: tuple[float, ...]  # mean squared change per iteration
    converged: bool


@dataclass(frozen=True)
class RankedSentences:
    order: tuple[int, ...]  # positions sorted by hub score, best first
    scores: tuple[float, ...]  # hub scores aligned with ``order``


def build_graph(
    doc: AnnotatedDocument,
    priors: list[float] | tuple[float, ...],
    space: ArticleVectorSpace,
    params: WeightParams = WeightParams(),
) -> SentenceGraph:
    """Assemble the complete weighted sentence graph for one article."""
    n = doc.n
    if len(priors) != n or len(space.vectors) != n:
        raise ValueError(
            f"expected {n} priors and vectors, got {len(priors)} priors "
            f"and {len(space.vectors)} vectors"
        )
    for i, p in enumerate(priors):
        if not 0.0 < p < 1.0:
            raise ValueError(f"prior for sentence {i} must be strictly inside (0, 1)")

    hub_factor = [p**params.hub_exp for p in priors]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(0.0)
                continue
            sim = cosine_sim(space.vectors[i], space.vectors[j])
            proximity = params.alpha + 1.0 / sentence_distance(i, j)
            row.append(
                params.scale
                * hub_factor[i]
                * sim**params.sim_exp
                * proximity**params.dist_exp
            )
        rows.append(tuple(row))
    return SentenceGraph(n=n, weights=tuple(rows))


def _l2_normalized(vector: list[float]) -> list[float]:
    norm = math.sqrt(sum(v * v for v in vector))
    if norm == 0.0:
        return vector
    return [v / norm for v in vector]


def run_hits(
    graph: SentenceGraph,
    priors: list[float] | tuple[float, ...],
    epsilon: float = DEFAULT_EPSILON,
    max_iter: int = DEFAULT_MAX_ITER,
) -> HitsState:
    """Iterate the weighted hub/authority updates until the mean squared
    change falls below ``epsilon`` or ``max_iter`` passes have run.

    Hub scores are seeded with the opinion priors, authority scores with
    their complements. Reaching ``max_iter`` is reported through the
    ``converged`` flag, not as an error.
    """
    n = graph.n
    if len(priors) != n:
        raise ValueError(f"expected {n} priors, got {len(priors)}")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")

    weights = graph.weights
    hub = [float(p) for p in priors]
    auth = [1.0 - float(p) for p in priors]
    trace: list[float] = []
    converged = False
    iteration = 0

    for iteration in range(1, max_iter + 1):
        new_hub = [
            sum(weights[i][j] * auth[j] for j in range(n) if weights[i][j]) for i in range(n)
        ]
        new_auth = [
            sum(weights[j][i] * hub[j] for j in range(n) if weights[j][i]) for i in range(n)
        ]
        new_hub = _l2_normalized(new_hub)
        new_auth = _l2_normalized(new_auth)

        mse = (
            sum((a - b) ** 2 for a, b in zip(new_hub, hub))
            + sum((a - b) ** 2 for a, b in zip(new_auth, auth))
        ) / (2 * n)
        trace.append(mse)
        hub, auth = new_hub, new_auth

        if mse < epsilon:
            converged = True
            break
        if not any(hub) and not any(auth):
            # the zero state is absorbing; no further pass can change it
            converged = True
            break

    return HitsState(
        hub=tuple(hub),
        auth=tuple(auth),
        iteration=iteration,
        epsilon=epsilon,
        trace=tuple(trace),
        converged=converged,
    )


def rank(state: HitsState) -> RankedSentences:
    """Full permutation of sentence positions by descending hub score.

    Ties break toward the earlier sentence position.
    """
    order = sorted(range(len(state.hub)), key=lambda i: (-state.hub[i], i))
    return RankedSentences(
        order=tuple(order), scores=tuple(state.hub[i] for i in order)
    )


def _label_value(label: GoldLabel) -> str | None:
    return None if label is GoldLabel.UNLABELED else label.value


def hub_authority_report(
    state: HitsState,
    graph: SentenceGraph,
    doc: AnnotatedDocument,
    top_hubs: int = DEFAULT_TOP_K,
    top_auths: int = DEFAULT_TOP_AUTHS,
) -> list[dict]:
    """Describe the strongest hubs with their best supporting sentences.

    For each of the ``top_hubs`` highest-scoring hub sentences, the
    ``top_auths`` sentences j maximizing ``W[hub][j] * A_j`` are listed
    with text, gold label (when present), and scores. The structure is
    JSON-ready; see :func:`report_to_dot` for the Graphviz rendering.
    """
    ranking = rank(state)
    report = []
    for hub_pos in ranking.order[:top_hubs]:
        candidates = [j for j in range(doc.n) if j != hub_pos]
        candidates.sort(key=lambda j: (-graph.weights[hub_pos][j] * state.auth[j], j))
        hub_sentence = doc.sentences[hub_pos]
        authorities = []
        for j in candidates[:top_auths]:
            sentence = doc.sentences[j]
            authorities.append(
                {
                    "position": j,
                    "text": sentence.text,
                    "label": _label_value(sentence.gold_label),
                    "auth_score": state.auth[j],
                    "edge_weight": graph.weights[hub_pos][j],
                }
            )
        report.append(
            {
                "hub": {
                    "position": hub_pos,
                    "text": hub_sentence.text,
                    "label": _label_value(hub_sentence.gold_label),
                    "hub_score": state.hub[hub_pos],
                },
                "authorities": authorities,
            }
        )
    return report


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", " ")


def report_to_dot(report: list[dict], graph_name: str = "hub_authority") -> str:
    """Render a hub-authority report as a Graphviz digraph."""
    lines = [f"digraph {graph_name} {{", "  rankdir=LR;"]
    seen: set[int] = set()

    def node_id(position: int) -> str:
        return f"s{position}"

    def declare(entry: dict, shape: str) -> None:
        pos = entry["position"]
        if pos in seen:
            return
        seen.add(pos)
        label_note = f" ({entry['label']})" if entry.get("label") else ""
        text = entry["text"]
        snippet = text if len(text) <= 60 else text[:57] + "..."
        lines.append(
            f'  {node_id(pos)} [shape={shape}, label="{_dot_escape(f"{pos}: {snippet}{label_note}")}"];'
        )

    for group in report:
        declare(group["hub"], shape="box")
    for group in report:
        hub_pos = group["hub"]["position"]
        for authority in group["authorities"]:
            declare(authority, shape="ellipse")
            lines.append(
                f'  {node_id(hub_pos)} -> {node_id(authority["position"])} '
                f'[label="{authority["edge_weight"]:.4g}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
