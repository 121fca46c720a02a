import json
import re

import pytest

from opinionrank import cli

pytestmark = pytest.mark.usefixtures("data_dir")


@pytest.fixture()
def paths(data_dir):
    return {
        "corpus": str(data_dir / "fixture_corpus.jsonl"),
        "pos": str(data_dir / "positive.txt"),
        "neg": str(data_dir / "negative.txt"),
    }


@pytest.fixture()
def trained_model(paths, tmp_path):
    model_path = tmp_path / "model.json"
    code = cli.main(
        ["train", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
         "--neg-lexicon", paths["neg"], "--model", str(model_path)]
    )
    assert code == 0
    return model_path


def check_dot_grammar(text):
    """Minimal structural check of a DOT digraph document."""
    stripped = text.strip()
    assert stripped.startswith("digraph") and stripped.endswith("}")
    body = stripped[stripped.index("{") + 1 : -1]
    attrs = r'(\[\w+=(?:"(?:[^"\\]|\\.)*"|[\w.+-]+)(?:,\s*\w+=(?:"(?:[^"\\]|\\.)*"|[\w.+-]+))*\])'
    node_stmt = re.compile(r"^\s*\w+\s*" + attrs + r"?;$")
    edge_stmt = re.compile(r"^\s*\w+\s*->\s*\w+\s*" + attrs + r"?;$")
    attr_stmt = re.compile(r"^\s*\w+\s*=\s*\w+;$")
    for line in body.splitlines():
        if not line.strip():
            continue
        assert (
            node_stmt.match(line) or edge_stmt.match(line) or attr_stmt.match(line)
        ), f"unparseable DOT statement: {line!r}"


class TestTrain:
    def test_writes_model_with_unit_prior_sum(self, trained_model):
        raw = json.loads(trained_model.read_text())
        assert raw["version"] == "nbmodel-v1"
        total = raw["opinion"]["prior"] + raw["fact"]["prior"]
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_retrain_byte_identical(self, paths, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for target in (a, b):
            assert cli.main(
                ["train", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
                 "--neg-lexicon", paths["neg"], "--model", str(target)]
            ) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_single_class_corpus_exits_two(self, paths, tmp_path):
        bad = tmp_path / "one_class.jsonl"
        bad.write_text(json.dumps({
            "id": "x",
            "sentences": [{
                "text": "Great.",
                "tokens": [{"surface": "Great"}],
                "arcs": [{"rel": "root", "head": -1, "dep": 0}],
                "label": "opinion",
            }],
        }) + "\n", encoding="utf-8")
        code = cli.main(
            ["train", "--corpus", str(bad), "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(tmp_path / "m.json")]
        )
        assert code == 2

    def test_missing_corpus_exits_two(self, paths, tmp_path):
        code = cli.main(
            ["train", "--corpus", str(tmp_path / "nope.jsonl"), "--pos-lexicon",
             paths["pos"], "--neg-lexicon", paths["neg"],
             "--model", str(tmp_path / "m.json")]
        )
        assert code == 2


class TestRank:
    def test_prints_top_k_lines_per_article(self, paths, trained_model, capsys):
        code = cli.main(
            ["rank", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model),
             "--top-k", "5"]
        )
        assert code == 0
        out = capsys.readouterr().out
        headers = [line for line in out.splitlines() if line.startswith("# art-")]
        ranked = [line for line in out.splitlines() if line.lstrip()[:1].isdigit()]
        assert len(headers) == 20
        assert len(ranked) == 20 * 5

    def test_short_article_prints_all_its_sentences(self, paths, trained_model,
                                                    tmp_path, capsys):
        short = tmp_path / "short.jsonl"
        sentences = [
            {"text": f"S{i}.", "tokens": [{"surface": f"s{i}"}],
             "arcs": [{"rel": "root", "head": -1, "dep": 0}], "label": None}
            for i in range(3)
        ]
        short.write_text(json.dumps({"id": "tiny", "sentences": sentences}) + "\n",
                         encoding="utf-8")
        code = cli.main(
            ["rank", "--corpus", str(short), "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model),
             "--top-k", "5"]
        )
        assert code == 0
        out = capsys.readouterr().out
        ranked = [line for line in out.splitlines() if line.lstrip()[:1].isdigit()]
        assert len(ranked) == 3

    def test_scores_non_increasing(self, paths, trained_model, capsys):
        cli.main(
            ["rank", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model)]
        )
        out = capsys.readouterr().out
        current: list[float] = []
        for line in out.splitlines():
            if line.startswith("# "):
                current = []
            elif "hub=" in line:
                score = float(line.split("hub=")[1].split()[0])
                if current:
                    assert score <= current[-1] + 1e-15
                current.append(score)

    def test_emit_dot_produces_parseable_files(self, paths, trained_model, tmp_path,
                                               capsys):
        dot_path = tmp_path / "out.dot"
        code = cli.main(
            ["rank", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model),
             "--emit-dot", str(dot_path)]
        )
        assert code == 0
        capsys.readouterr()
        produced = sorted(tmp_path.glob("out.*.dot"))
        assert len(produced) == 20
        for path in produced:
            check_dot_grammar(path.read_text(encoding="utf-8"))

    def test_emit_json_report_schema(self, paths, trained_model, tmp_path, capsys):
        json_path = tmp_path / "report.json"
        code = cli.main(
            ["rank", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model),
             "--emit-json", str(json_path), "--top-auths", "4"]
        )
        assert code == 0
        capsys.readouterr()
        payload = json.loads(json_path.read_text())
        assert len(payload) == 20
        for report in payload.values():
            for group in report:
                assert set(group) == {"hub", "authorities"}
                assert set(group["hub"]) == {"position", "text", "label", "hub_score"}
                for auth in group["authorities"]:
                    assert set(auth) == {
                        "position", "text", "label", "auth_score", "edge_weight"
                    }


class TestEval:
    def test_report_layout_and_files(self, paths, trained_model, tmp_path, capsys):
        json_path = tmp_path / "eval.json"
        csv_path = tmp_path / "eval.csv"
        code = cli.main(
            ["eval", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model),
             "--emit-json", str(json_path), "--emit-csv", str(csv_path)]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "NB baseline" in out and "HITS" in out and "improvement %" in out
        assert "pearson" in out
        payload = json.loads(json_path.read_text())
        assert len(payload["per_article"]) == 20
        lines = csv_path.read_text().strip().splitlines()
        assert len(lines) == 1 + 20 * 2  # header + two systems per article

    def test_single_article_pearson_is_no_value(self, paths, trained_model, tmp_path,
                                                capsys):
        single = tmp_path / "single.jsonl"
        with open(paths["corpus"], encoding="utf-8") as fh:
            single.write_text(fh.readline(), encoding="utf-8")
        json_path = tmp_path / "eval.json"
        code = cli.main(
            ["eval", "--corpus", str(single), "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model),
             "--emit-json", str(json_path)]
        )
        assert code == 0
        capsys.readouterr()
        payload = json.loads(json_path.read_text())
        assert payload["pearson"]["p@5"] is None
        assert payload["pearson"]["m@5"] is None

    def test_unlabeled_corpus_exits_two(self, paths, trained_model, tmp_path, capsys):
        unlabeled = tmp_path / "unlabeled.jsonl"
        unlabeled.write_text(json.dumps({
            "id": "u",
            "sentences": [{
                "text": "X.",
                "tokens": [{"surface": "x"}],
                "arcs": [{"rel": "root", "head": -1, "dep": 0}],
                "label": None,
            }],
        }) + "\n", encoding="utf-8")
        code = cli.main(
            ["eval", "--corpus", str(unlabeled), "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model)]
        )
        assert code == 2

    def test_repeat_runs_identical(self, paths, trained_model, tmp_path, capsys):
        outputs = []
        for name in ("r1.json", "r2.json"):
            path = tmp_path / name
            assert cli.main(
                ["eval", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
                 "--neg-lexicon", paths["neg"], "--model", str(trained_model),
                 "--emit-json", str(path)]
            ) == 0
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]


class TestSweep:
    def test_bundled_grid_emits_fifteen_rows(self, paths, trained_model, tmp_path,
                                             capsys):
        json_path = tmp_path / "sweep.json"
        code = cli.main(
            ["sweep", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model),
             "--emit-json", str(json_path)]
        )
        assert code == 0
        payload = json.loads(json_path.read_text())
        assert len(payload) == 15

    def test_empty_grid_is_fine(self, paths, trained_model, tmp_path, capsys):
        grid = tmp_path / "empty.json"
        grid.write_text("[]", encoding="utf-8")
        code = cli.main(
            ["sweep", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model),
             "--grid", str(grid)]
        )
        assert code == 0

    def test_malformed_grid_row_named(self, paths, trained_model, tmp_path, capsys):
        grid = tmp_path / "bad.json"
        grid.write_text('[{"hub_exp": 1}, {"bogus": true}]', encoding="utf-8")
        code = cli.main(
            ["sweep", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model),
             "--grid", str(grid)]
        )
        assert code == 2
        err = capsys.readouterr().err
        assert "row 1" in err

    def test_duplicate_rows_emitted_twice(self, paths, trained_model, tmp_path, capsys):
        grid = tmp_path / "dup.json"
        grid.write_text(json.dumps([{"hub_exp": 3, "sim_exp": 2, "alpha": 1.0}] * 2),
                        encoding="utf-8")
        json_path = tmp_path / "sweep.json"
        code = cli.main(
            ["sweep", "--corpus", paths["corpus"], "--pos-lexicon", paths["pos"],
             "--neg-lexicon", paths["neg"], "--model", str(trained_model),
             "--grid", str(grid), "--emit-json", str(json_path)]
        )
        assert code == 0
        payload = json.loads(json_path.read_text())
        assert len(payload) == 2
        assert payload[0]["p@5"] == payload[1]["p@5"]


class TestDefaults:
    def test_flags_default_to_operating_point(self):
        parser = cli.build_parser()
        args = parser.parse_args(
            ["rank", "--corpus", "c", "--pos-lexicon", "p", "--neg-lexicon", "n",
             "--model", "m"]
        )
        assert args.epsilon == 0.01
        assert args.max_iter == 1000
        assert args.top_k == 5
        assert args.top_auths == 4
        assert (args.hub_exp, args.sim_exp, args.alpha) == (3.0, 2.0, 1.0)
        assert (args.dist_exp, args.scale) == (1.0, 1.0)
