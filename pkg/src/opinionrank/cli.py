"""Command-line pipeline: ``train``, ``rank``, ``eval``, and ``sweep``.

Everything is deterministic: the same inputs and flags always produce
byte-identical outputs. Exit codes: 0 success, 2 input or validation
problem, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import classifier, corpus, evaluation, hits, pipeline

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_SYSTEM_LABELS = {"baseline": "NB baseline", "graph": "HITS"}


def _add_lexicon_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pos-lexicon", required=True, help="positive polar word list")
    parser.add_argument("--neg-lexicon", required=True, help="negative polar word list")


def _add_weight_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--hub-exp", type=float, default=hits.WeightParams.hub_exp)
    parser.add_argument("--sim-exp", type=float, default=hits.WeightParams.sim_exp)
    parser.add_argument("--alpha", type=float, default=hits.WeightParams.alpha)
    parser.add_argument("--dist-exp", type=float, default=hits.WeightParams.dist_exp)
    parser.add_argument("--scale", type=float, default=hits.WeightParams.scale)
    parser.add_argument("--epsilon", type=float, default=hits.DEFAULT_EPSILON)
    parser.add_argument("--max-iter", type=int, default=hits.DEFAULT_MAX_ITER)


def _weight_params(args: argparse.Namespace) -> hits.WeightParams:
    return hits.WeightParams(
        hub_exp=args.hub_exp,
        sim_exp=args.sim_exp,
        alpha=args.alpha,
        dist_exp=args.dist_exp,
        scale=args.scale,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opinionrank",
        description="Extract and rank opinionated sentences from annotated articles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="fit the sentence classifier")
    p_train.add_argument("--corpus", required=True, help="labeled training corpus (JSONL)")
    _add_lexicon_flags(p_train)
    p_train.add_argument("--model", required=True, help="output model path (JSON)")
    p_train.set_defaults(func=cmd_train)

    p_rank = sub.add_parser("rank", help="rank sentences of the given articles")
    p_rank.add_argument("--corpus", required=True, help="articles to rank (JSONL)")
    _add_lexicon_flags(p_rank)
    p_rank.add_argument("--model", required=True, help="trained model path")
    p_rank.add_argument("--top-k", type=int, default=hits.DEFAULT_TOP_K)
    p_rank.add_argument("--top-auths", type=int, default=hits.DEFAULT_TOP_AUTHS)
    _add_weight_flags(p_rank)
    p_rank.add_argument("--emit-json", help="write hub-authority reports as JSON")
    p_rank.add_argument("--emit-dot", help="write hub-authority graphs as Graphviz DOT")
    p_rank.set_defaults(func=cmd_rank)

    p_eval = sub.add_parser("eval", help="compare classifier and graph rankings")
    p_eval.add_argument("--corpus", required=True, help="labeled test corpus (JSONL)")
    _add_lexicon_flags(p_eval)
    p_eval.add_argument("--model", required=True, help="trained model path")
    _add_weight_flags(p_eval)
    p_eval.add_argument("--emit-json", help="write the full report as JSON")
    p_eval.add_argument("--emit-csv", help="write per-article scores as CSV")
    p_eval.set_defaults(func=cmd_eval)

    p_sweep = sub.add_parser("sweep", help="evaluate a grid of weight settings")
    p_sweep.add_argument("--corpus", required=True, help="labeled corpus (JSONL)")
    _add_lexicon_flags(p_sweep)
    p_sweep.add_argument("--model", required=True, help="trained model path")
    p_sweep.add_argument("--grid", help="JSON grid file (default: bundled grid)")
    p_sweep.add_argument("--epsilon", type=float, default=hits.DEFAULT_EPSILON)
    p_sweep.add_argument("--max-iter", type=int, default=hits.DEFAULT_MAX_ITER)
    p_sweep.add_argument("--emit-json", help="write the sweep table as JSON")
    p_sweep.add_argument("--emit-csv", help="write the sweep table as CSV")
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def _load_inputs(args: argparse.Namespace) -> tuple[corpus.Corpus, corpus.Lexicon]:
    loaded = corpus.load_corpus(args.corpus)
    lexicon = corpus.load_lexicon(args.pos_lexicon, args.neg_lexicon)
    return loaded, lexicon


def cmd_train(args: argparse.Namespace) -> int:
    train_corpus, lexicon = _load_inputs(args)
    model = classifier.train(train_corpus, lexicon)
    classifier.save_model(model, args.model)
    print(f"model written to {args.model}")
    for name, params in (("opinion", model.opinion), ("fact", model.fact)):
        print(f"class {name}: prior={params.prior:.6f}")
        print(
            f"  pos_count mean={params.pos_count.mean:.4f} var={params.pos_count.variance:.4f}"
            f" | neg_count mean={params.neg_count.mean:.4f} var={params.neg_count.variance:.4f}"
        )
        polarity = " ".join(
            f"{k}={v:.4f}" for k, v in sorted(params.root_polarity.items())
        )
        flags = " ".join(f"{k}={v:.4f}" for k, v in sorted(params.flags.items()))
        print(f"  root_polarity: {polarity}")
        print(f"  flags: {flags}")
    return EXIT_OK


def _dot_path(base: str, doc_id: str, multiple: bool) -> Path:
    path = Path(base)
    if not multiple:
        return path
    return path.with_name(f"{path.stem}.{doc_id}{path.suffix or '.dot'}")


def cmd_rank(args: argparse.Namespace) -> int:
    articles, lexicon = _load_inputs(args)
    model = classifier.load_model(args.model)
    params = _weight_params(args)
    if args.top_k < 1 or args.top_auths < 0:
        raise ValueError("--top-k must be >= 1 and --top-auths >= 0")

    reports: dict[str, list[dict]] = {}
    for doc in articles.documents:
        ranked, state, graph, priors = pipeline.rank_document(
            doc, model, lexicon, params=params, epsilon=args.epsilon, max_iter=args.max_iter
        )
        print(f"# {doc.id} ({doc.n} sentences, {state.iteration} iterations)")
        for position, score in zip(ranked.order[: args.top_k], ranked.scores[: args.top_k]):
            sentence = doc.sentences[position]
            print(
                f"{position:>4}  hub={score:.6f}  prior={priors[position]:.6f}  {sentence.text}"
            )
        if args.emit_json or args.emit_dot:
            reports[doc.id] = hits.hub_authority_report(
                state, graph, doc, top_hubs=args.top_k, top_auths=args.top_auths
            )

    if args.emit_json:
        Path(args.emit_json).write_text(
            json.dumps(reports, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    if args.emit_dot:
        multiple = len(articles.documents) > 1
        for doc_id, report in reports.items():
            path = _dot_path(args.emit_dot, doc_id, multiple)
            path.write_text(hits.report_to_dot(report), encoding="utf-8")
    return EXIT_OK


def _format_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(headers[col]), *(len(row[col]) for row in rows)) if rows else len(headers[col])
        for col in range(len(headers))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _fmt(value: float | None, pattern: str = "{:.4f}") -> str:
    return "-" if value is None else pattern.format(value)


def cmd_eval(args: argparse.Namespace) -> int:
    test_corpus, lexicon = _load_inputs(args)
    model = classifier.load_model(args.model)
    report = evaluation.evaluate_corpus(
        test_corpus,
        lexicon,
        model,
        params=_weight_params(args),
        epsilon=args.epsilon,
        max_iter=args.max_iter,
    )

    metrics = ["p@5", "m@5", "p@3", "m@3"]
    rows = []
    for system in ("baseline", "graph"):
        rows.append(
            [_SYSTEM_LABELS[system]]
            + [_fmt(report.aggregate[system][m]) for m in metrics]
        )
    rows.append(
        ["improvement %"]
        + [_fmt(report.improvement_pct[m], "{:+.1f}") for m in metrics]
    )
    print(_format_table(["system"] + [m.upper() for m in metrics], rows))
    print(
        f"pearson P@5={_fmt(report.pearson['p@5'])} "
        f"M@5={_fmt(report.pearson['m@5'])}"
    )

    if args.emit_json:
        Path(args.emit_json).write_text(
            json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    if args.emit_csv:
        lines = ["id,ratio_op,system," + ",".join(metrics)]
        for result in report.per_article:
            for system_key, scores in (("baseline", result.baseline), ("graph", result.graph)):
                cells = [result.doc_id, _fmt(result.ratio, "{:.6f}"), system_key]
                for m in metrics:
                    k = int(m[2:])
                    value = scores.p[k] if m.startswith("p") else scores.m[k]
                    cells.append(_fmt(value, "{:.6f}"))
                lines.append(",".join(cells))
        Path(args.emit_csv).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return EXIT_OK


def _load_grid(path: str | None) -> tuple[list[hits.WeightParams], list[str]]:
    if path is None:
        text = (
            resources.files("opinionrank").joinpath("data/weight_grid.json").read_text("utf-8")
        )
        source = "<bundled grid>"
    else:
        text = Path(path).read_text(encoding="utf-8")
        source = path
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{source}: invalid JSON ({exc.msg})") from exc
    if not isinstance(raw, list):
        raise ValueError(f"{source}: grid must be a JSON array")

    grid: list[hits.WeightParams] = []
    names: list[str] = []
    allowed = {"name", "hub_exp", "sim_exp", "alpha", "dist_exp", "scale"}
    for index, row in enumerate(raw):
        if not isinstance(row, dict) or not set(row) <= allowed:
            raise ValueError(f"{source}: row {index} has unknown or invalid fields")
        try:
            params = hits.WeightParams(
                **{k: float(v) for k, v in row.items() if k != "name"}
            )
        except (TypeError, ValueError) as exc:
            raise ValueError(f"{source}: row {index}: {exc}") from exc
        grid.append(params)
        names.append(str(row.get("name", "")) or evaluation.describe_params(params))
    return grid, names


def cmd_sweep(args: argparse.Namespace) -> int:
    labeled_corpus, lexicon = _load_inputs(args)
    model = classifier.load_model(args.model)
    grid, names = _load_grid(args.grid)
    rows = evaluation.sweep(
        labeled_corpus,
        lexicon,
        model,
        grid,
        epsilon=args.epsilon,
        max_iter=args.max_iter,
        names=names,
    )

    table = [[row["name"], _fmt(row["p@5"]), _fmt(row["m@5"])] for row in rows]
    print(_format_table(["function", "P@5", "M@5"], table))

    if args.emit_json:
        Path(args.emit_json).write_text(
            json.dumps(rows, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    if args.emit_csv:
        lines = ["function,p@5,m@5"]
        for row in rows:
            lines.append(f"{row['name']},{_fmt(row['p@5'], '{:.6f}')},{_fmt(row['m@5'], '{:.6f}')}")
        Path(args.emit_csv).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (corpus.CorpusError, classifier.TrainingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
