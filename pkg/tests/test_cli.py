import io
import json

import pytest

from sensesim.cli import main
from sensesim.evaluation import generate_two_topic_corpus


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    data = generate_two_topic_corpus(seed=3, topic_vocab=10, contexts_per_topic=15, background_per_topic=10)
    corpus = root / "corpus.txt"
    corpus.write_text(data["corpus_text"], encoding="utf-8")
    inventory = root / "inventory.json"
    inventory.write_text(
        json.dumps(
            {
                "target": "gavel",
                "senses": [
                    {"id": "court", "definition_words": data["definitions"]["gavel"][:2]},
                    {"id": "tool", "definition_words": data["definitions"]["gavel"][2:]},
                ],
            }
        ),
        encoding="utf-8",
    )
    return root


def _train(workdir, extra=()):
    model = workdir / "model.json"
    trace = workdir / "trace.csv"
    rc = main(
        [
            "train",
            "--corpus", str(workdir / "corpus.txt"),
            "--inventory", str(workdir / "inventory.json"),
            "--target", "gavel",
            "--out", str(model),
            "--trace", str(trace),
            *extra,
        ]
    )
    return rc, model, trace


def test_train_writes_model_and_trace(workdir, capsys):
    rc, model, trace = _train(workdir)
    assert rc == 0
    assert "model written" in capsys.readouterr().out
    data = json.loads(model.read_text(encoding="utf-8"))
    assert data["format_version"] == 1
    lines = trace.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "iteration,kind,item_id,max_increase,frozen"
    assert len(lines) > 1


def test_train_target_mismatch(workdir, capsys):
    rc, *_ = _train(workdir, extra=[])
    rc = main(
        [
            "train",
            "--corpus", str(workdir / "corpus.txt"),
            "--inventory", str(workdir / "inventory.json"),
            "--target", "melon",
            "--out", str(workdir / "ignored.json"),
        ]
    )
    assert rc == 1
    assert "does not match" in capsys.readouterr().err


def test_classify_from_file(workdir, capsys):
    _train(workdir)
    capsys.readouterr()  # drop the training message
    inputs = workdir / "inputs.txt"
    inputs.write_text("gavel_N law01_N law02_N\n\ngavel_N law03_N common0_N\n", encoding="utf-8")
    rc = main(["classify", "--model", str(workdir / "model.json"), "--input", str(inputs)])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2  # the blank input line produces no output
    for line in lines:
        decision = json.loads(line)
        assert decision["winner"] in ("court", "tool")
        assert set(decision["scores"]) == {"court", "tool"}


def test_classify_empty_stdin(workdir, capsys, monkeypatch):
    _train(workdir)
    capsys.readouterr()
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    rc = main(["classify", "--model", str(workdir / "model.json")])
    assert rc == 0
    assert capsys.readouterr().out == ""


def test_classify_line_without_target_fails(workdir, capsys, monkeypatch):
    _train(workdir)
    capsys.readouterr()
    monkeypatch.setattr("sys.stdin", io.StringIO("law01_N law02_N\n"))
    rc = main(["classify", "--model", str(workdir / "model.json")])
    assert rc == 1
    assert "error" in capsys.readouterr().err


def test_classify_missing_model(workdir, capsys):
    rc = main(["classify", "--model", str(workdir / "missing.json")])
    assert rc == 1
    assert "error" in capsys.readouterr().err


def test_eval_pseudo_with_explicit_definitions(workdir, capsys):
    report = workdir / "report.txt"
    csv = workdir / "report.csv"
    data = generate_two_topic_corpus(seed=3, topic_vocab=10, contexts_per_topic=15, background_per_topic=10)
    rc = main(
        [
            "eval-pseudo",
            "--corpus", str(workdir / "corpus.txt"),
            "--w1", "gavel",
            "--w2", "melon",
            "--definitions1", ",".join(data["definitions"]["gavel"]),
            "--definitions2", ",".join(data["definitions"]["melon"]),
            "--report", str(report),
            "--csv", str(csv),
        ]
    )
    assert rc == 0
    text = report.read_text(encoding="utf-8")
    assert "gavel" in text and "melon" in text and "total" in text
    csv_lines = csv.read_text(encoding="utf-8").splitlines()
    assert csv_lines[0] == "sense,sample_size,feedback_size,percent_correct"


def test_eval_pseudo_derives_definitions(workdir, capsys):
    rc = main(
        [
            "eval-pseudo",
            "--corpus", str(workdir / "corpus.txt"),
            "--w1", "gavel",
            "--w2", "melon",
        ]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "total" in out


def test_thesaurus_all_senses(workdir, capsys):
    _train(workdir)
    capsys.readouterr()
    rc = main(["thesaurus", "--model", str(workdir / "model.json"), "--k", "2"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("court\t")
    assert lines[1].startswith("tool\t")


def test_thesaurus_single_sense(workdir, capsys):
    _train(workdir)
    capsys.readouterr()
    rc = main(["thesaurus", "--model", str(workdir / "model.json"), "--k", "1", "--sense", "court"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("court\t")
    rc = main(["thesaurus", "--model", str(workdir / "model.json"), "--k", "1", "--sense", "nope"])
    assert rc == 1


def test_config_file_and_flag_override(workdir, capsys, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"epsilon": 0.05, "max_iterations": 4}), encoding="utf-8")
    model = tmp_path / "model.json"
    rc = main(
        [
            "train",
            "--corpus", str(workdir / "corpus.txt"),
            "--inventory", str(workdir / "inventory.json"),
            "--out", str(model),
            "--config", str(config),
            "--epsilon", "0.2",
        ]
    )
    assert rc == 0
    saved = json.loads(model.read_text(encoding="utf-8"))
    assert saved["config"]["epsilon"] == 0.2
    assert saved["config"]["max_iterations"] == 4
