import json

import pytest

from scfgkit.cli import main
from scfgkit.grammar import parse_grammar_text

from .conftest import FIG1_TEXT


def jsonl(path):
    return [json.loads(l) for l in path.read_text("utf-8").splitlines() if l.strip()]


@pytest.fixture()
def fig1_path(tmp_path):
    path = tmp_path / "fig1.scfg"
    path.write_text(FIG1_TEXT, "utf-8")
    return path


def test_gen_writes_grammar_and_manifest(tmp_path):
    out = tmp_path / "g.scfg"
    assert main([
        "gen", "--size", "57", "--tgt-order", "OVS", "--seed", "3",
        "--out", str(out),
    ]) == 0
    grammar = parse_grammar_text(out.read_text("utf-8"))
    assert len(grammar.rules) == 57
    manifest = json.loads((tmp_path / "g.scfg.manifest.json").read_text("utf-8"))
    assert manifest["size"] == 57
    assert manifest["spec"]["word_order_tgt"] == "OVS"


def test_gen_from_spec_file(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"size": 77, "seed": 1, "script_tgt": "Cyrillic"}), "utf-8")
    out = tmp_path / "g.scfg"
    assert main(["gen", "--spec", str(spec), "--out", str(out)]) == 0
    assert len(parse_grammar_text(out.read_text("utf-8")).rules) == 77


def test_gen_rejects_bad_size(tmp_path, capsys):
    assert main(["gen", "--size", "58", "--out", str(tmp_path / "g.scfg")]) == 2
    err = capsys.readouterr().err
    assert "error:" in err and "achievable sizes" in err


def test_sample_writes_pairs(tmp_path, fig1_path):
    out = tmp_path / "pairs.jsonl"
    assert main([
        "sample", "--grammar", str(fig1_path), "--len", "4", "--n", "3",
        "--seed", "5", "--out", str(out),
    ]) == 0
    records = jsonl(out)
    assert len(records) == 3
    for r in records:
        assert r["source"] == "I open the box"
        assert r["target"] == "watashi wa hako wo akemasu"
        assert r["len_src"] == 4 and r["len_tgt"] == 5
        assert isinstance(r["tree"], list)


def test_sample_unreachable_length_fails(tmp_path, fig1_path, capsys):
    assert main(["sample", "--grammar", str(fig1_path), "--len", "9",
                 "--out", str(tmp_path / "x.jsonl")]) == 2
    assert "nearest achievable" in capsys.readouterr().err


def test_translate_stdout(fig1_path, capsys):
    assert main(["translate", "--grammar", str(fig1_path),
                 "--sentence", "I open the box"]) == 0
    assert capsys.readouterr().out.splitlines() == ["watashi wa hako wo akemasu"]


def test_translate_json_flag(fig1_path, capsys):
    assert main(["translate", "--grammar", str(fig1_path),
                 "--sentence", "I open", "--json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body == {"targets": ["watashi wa akemasu"], "overflowed": False}


def test_translate_rejects_non_sentence(fig1_path, capsys):
    assert main(["translate", "--grammar", str(fig1_path),
                 "--sentence", "box I"]) == 1
    assert "box I" in capsys.readouterr().err


def test_score_pipeline(tmp_path, fig1_path):
    pairs = tmp_path / "pairs.jsonl"
    cands = tmp_path / "cands.jsonl"
    out = tmp_path / "scores.jsonl"
    main(["sample", "--grammar", str(fig1_path), "--len", "4", "--n", "2",
          "--out", str(pairs)])
    records = jsonl(pairs)
    cands.write_text(
        json.dumps({"cand": records[0]["target"]}) + "\n"
        + json.dumps({"cand": "wo hako watashi wa akemasu"}) + "\n",
        "utf-8",
    )
    assert main(["score", "--pairs", str(pairs), "--cands", str(cands),
                 "--grammar", str(fig1_path), "--out", str(out)]) == 0
    scored = jsonl(out)
    assert scored[0]["exact"] == 1.0
    assert scored[1]["exact"] == 0.0
    assert scored[1]["bag_of_words"] == 1.0
    assert set(scored[0]) == {
        "exact", "bag_of_words", "bleu", "chrfpp", "labels", "cand", "source"
    }


def test_score_accepts_plain_text_candidates(tmp_path, fig1_path):
    # raw model output, one sentence per line, needs no JSON quoting
    pairs = tmp_path / "pairs.jsonl"
    cands = tmp_path / "cands.txt"
    out = tmp_path / "scores.jsonl"
    main(["sample", "--grammar", str(fig1_path), "--len", "4", "--n", "2",
          "--out", str(pairs)])
    records = jsonl(pairs)
    cands.write_text(records[0]["target"] + "\nwo hako watashi wa akemasu\n", "utf-8")
    assert main(["score", "--pairs", str(pairs), "--cands", str(cands),
                 "--grammar", str(fig1_path), "--out", str(out)]) == 0
    scored = jsonl(out)
    assert scored[0]["exact"] == 1.0
    assert scored[1]["exact"] == 0.0


def test_score_length_mismatch(tmp_path, fig1_path, capsys):
    pairs = tmp_path / "pairs.jsonl"
    cands = tmp_path / "cands.jsonl"
    pairs.write_text(json.dumps({"source": "I open", "target": "watashi wa akemasu"}) + "\n", "utf-8")
    cands.write_text("", "utf-8")
    assert main(["score", "--pairs", str(pairs), "--cands", str(cands),
                 "--out", str(tmp_path / "o.jsonl")]) == 1


def test_classify_pipeline(tmp_path, fig1_path):
    pairs = tmp_path / "pairs.jsonl"
    cands = tmp_path / "cands.jsonl"
    out = tmp_path / "labels.jsonl"
    pairs.write_text(
        json.dumps({"source": "I open the box", "target": "watashi wa hako wo akemasu"}) + "\n"
        + json.dumps({"source": "I open", "target": "watashi wa akemasu"}) + "\n"
        + json.dumps({"source": "I open", "target": "watashi wa akemasu"}) + "\n",
        "utf-8",
    )
    cands.write_text(
        json.dumps({"cand": "watashi wa hako wo akemasu"}) + "\n"
        + json.dumps({"cand": "akemasu watashi wa"}) + "\n"
        + json.dumps({"cand": "watashi wa open"}) + "\n",
        "utf-8",
    )
    assert main(["classify", "--pairs", str(pairs), "--cands", str(cands),
                 "--grammar", str(fig1_path), "--out", str(out)]) == 0
    labeled = jsonl(out)
    assert labeled[0]["labels"] == []
    assert labeled[1]["labels"] == ["word_order"]
    assert "source_vocab" in labeled[2]["labels"]
    assert "omission" in labeled[2]["labels"]


def test_run_and_report(tmp_path, capsys):
    config = tmp_path / "config.json"
    run_dir = tmp_path / "run"
    config.write_text(json.dumps({
        "conditions": [{"size": 57, "seed": 0}],
        "lengths": [3, 4],
        "n_per_cell": 2,
        "endpoint": {"url": "mock://oracle"},
        "model_name": "oracle",
        "out_dir": str(run_dir),
    }), "utf-8")
    assert main(["run", "--config", str(config)]) == 0
    out = capsys.readouterr().out
    assert "4 trials (4 ok)" in out
    log = run_dir / "runs.jsonl"
    assert len(jsonl(log)) == 4

    report_dir = tmp_path / "report"
    assert main(["report", "--log", str(log), "--out", str(report_dir),
                 "--resamples", "200"]) == 0
    shown = capsys.readouterr().out
    assert "Mean results by grammar size" in shown
    assert (report_dir / "by_size.csv").exists() or list(report_dir.glob("*.csv"))


def test_run_resume_via_cli(tmp_path, capsys):
    config = tmp_path / "config.json"
    run_dir = tmp_path / "run"
    config.write_text(json.dumps({
        "conditions": [{"size": 57, "seed": 0}],
        "lengths": [3],
        "n_per_cell": 2,
        "endpoint": {"url": "mock://oracle"},
        "model_name": "oracle",
        "out_dir": str(run_dir),
    }), "utf-8")
    main(["run", "--config", str(config)])
    capsys.readouterr()
    main(["run", "--config", str(config)])
    assert "2 trials" in capsys.readouterr().out
    assert len(jsonl(run_dir / "runs.jsonl")) == 2
