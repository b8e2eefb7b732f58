"""Command-line interface.

Subcommands mirror the library's pipeline: ``gen`` a grammar, ``sample``
gold pairs, ``translate`` a sentence, ``score`` and ``classify`` candidate
translations, ``run`` an experiment against an endpoint, and ``report``
aggregate a run log.  File formats are plain text grammars and JSONL
records throughout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import classify as classify_labels
from .errors import sorted_labels
from .grammar import parse_grammar_text, serialize_grammar, word_vocab
from .harness import ExperimentConfig, run_experiment
from .lexicon import english_words
from .metagrammar import WORD_ORDERS, GrammarSpec, generate_with_manifest
from .metrics import score_candidate
from .parsing import SourceParseError, translate
from .report import write_report
from .sampling import sample_pair
from .scripts import SCRIPT_NAMES, load_script_tables, script_of
from .seeds import derive_seed


def _read_grammar(path: str):
    return parse_grammar_text(Path(path).read_text("utf-8"))


def _read_jsonl(path: str) -> list:
    records = []
    for line in Path(path).read_text("utf-8").splitlines():
        line = line.strip()
        if line:
            records.append(json.loads(line))
    return records


def _write_jsonl(path: str, records) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")


def _candidate_text(record) -> str:
    if isinstance(record, str):
        return record
    for key in ("cand", "candidate", "text", "extracted"):
        if key in record:
            value = record[key]
            return " ".join(value) if isinstance(value, list) else value
    raise ValueError(f"candidate record has no cand/candidate/text field: {record!r}")


def _read_candidates(path: str) -> list[str]:
    """One candidate per non-blank line: a JSON string, a JSON object with a
    cand/candidate/text/extracted field (run logs work as-is), or plain text."""
    cands = []
    for line in Path(path).read_text("utf-8").splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError:
            record = line
        if not isinstance(record, (str, dict)):
            record = line
        cands.append(_candidate_text(record))
    return cands


def _gold_sets(pairs, grammar, cap: int) -> list[list[str]]:
    golds = []
    for pair in pairs:
        base = {pair["target"]}
        if grammar is not None:
            base |= translate(grammar, pair["source"], cap=cap)
        golds.append(sorted(base))
    return golds


def _cmd_gen(args) -> int:
    if args.spec:
        spec = GrammarSpec.from_dict(json.loads(Path(args.spec).read_text("utf-8")))
    else:
        spec = GrammarSpec(
            size=args.size,
            word_order_src=args.src_order,
            word_order_tgt=args.tgt_order,
            agreement_src=args.src_agr,
            agreement_tgt=args.tgt_agr,
            script_src=args.src_script,
            script_tgt=args.tgt_script,
            seed=args.seed,
        )
    tables = load_script_tables(args.script_table) if args.script_table else None
    grammar, manifest = generate_with_manifest(spec, tables=tables)
    text = serialize_grammar(grammar)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        manifest_path = args.manifest or f"{args.out}.manifest.json"
    else:
        sys.stdout.write(text)
        manifest_path = args.manifest
    if manifest_path:
        Path(manifest_path).write_text(
            json.dumps(manifest, ensure_ascii=False, indent=1) + "\n",
            encoding="utf-8",
        )
    return 0


def _cmd_sample(args) -> int:
    grammar = _read_grammar(args.grammar)
    records = []
    for i in range(args.n):
        seed = derive_seed(args.seed, "sample", i)
        pair = sample_pair(grammar, args.len, rng_seed=seed)
        records.append(
            {
                "source": " ".join(pair.source),
                "target": " ".join(pair.target),
                "len_src": pair.len_src,
                "len_tgt": pair.len_tgt,
                "seed": seed,
                "tree": list(pair.tree.preorder()),
            }
        )
    if args.out:
        _write_jsonl(args.out, records)
    else:
        for record in records:
            print(json.dumps(record, ensure_ascii=False))
    return 0


def _cmd_translate(args) -> int:
    grammar = _read_grammar(args.grammar)
    sentence = args.sentence if args.sentence else sys.stdin.read()
    try:
        targets = translate(grammar, sentence, cap=args.cap)
    except SourceParseError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if args.json:
        print(
            json.dumps(
                {"targets": sorted(targets), "overflowed": targets.overflowed},
                ensure_ascii=False,
            )
        )
    else:
        for target in sorted(targets):
            print(target)
        if targets.overflowed:
            print("(translation set truncated)", file=sys.stderr)
    return 0


def _cmd_score(args) -> int:
    pairs = _read_jsonl(args.pairs)
    cands = _read_candidates(args.cands)
    if len(pairs) != len(cands):
        print("pairs and candidates differ in length", file=sys.stderr)
        return 1
    grammar = _read_grammar(args.grammar) if args.grammar else None
    records = []
    for pair, cand, golds in zip(pairs, cands, _gold_sets(pairs, grammar, args.cap)):
        record = score_candidate(cand, golds).as_dict()
        record["cand"] = cand
        record["source"] = pair["source"]
        records.append(record)
    _write_jsonl(args.out, records)
    return 0


def _cmd_classify(args) -> int:
    pairs = _read_jsonl(args.pairs)
    cands = _read_candidates(args.cands)
    if len(pairs) != len(cands):
        print("pairs and candidates differ in length", file=sys.stderr)
        return 1
    grammar = _read_grammar(args.grammar)
    src_vocab = word_vocab(grammar, "src")
    tgt_vocab = word_vocab(grammar, "tgt")
    script = _target_script(args.script, tgt_vocab)
    english = english_words()
    records = []
    for pair, cand, golds in zip(pairs, cands, _gold_sets(pairs, grammar, args.cap)):
        if cand.split() in [g.split() for g in golds]:
            labels = []
        else:
            labels = sorted_labels(
                classify_labels(cand, golds, src_vocab, tgt_vocab, script, english)
            )
        records.append({"cand": cand, "source": pair["source"], "labels": labels})
    _write_jsonl(args.out, records)
    return 0


def _target_script(name: str | None, tgt_vocab):
    from .scripts import get_script

    if name:
        return get_script(name)
    consistent = None
    for word in tgt_vocab:
        found = script_of(word)
        consistent = found if consistent is None else consistent & found
    if consistent and len(consistent) == 1:
        return get_script(next(iter(consistent)))
    return None


def _cmd_run(args) -> int:
    cfg = ExperimentConfig.from_json_file(args.config)
    records = run_experiment(cfg, resume=not args.no_resume)
    ok = sum(r["status"] == "ok" for r in records)
    print(f"{len(records)} trials ({ok} ok) -> {Path(cfg.out_dir) / 'runs.jsonl'}")
    return 0


def _cmd_report(args) -> int:
    records = _read_jsonl(args.log)
    paths = write_report(
        records, args.out, n_resamples=args.resamples, seed=args.seed
    )
    print(paths["text"].read_text("utf-8"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scfgkit",
        description="Synchronous grammars: generate, sample, translate, score.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a grammar from a parameter spec")
    p.add_argument("--spec", help="JSON spec file (overrides the flags below)")
    p.add_argument("--size", type=int, default=57)
    p.add_argument("--src-order", default="SVO", choices=WORD_ORDERS)
    p.add_argument("--tgt-order", default="SOV", choices=WORD_ORDERS)
    p.add_argument("--src-agr", action="store_true")
    p.add_argument("--tgt-agr", action="store_true")
    p.add_argument("--src-script", default="Latin", choices=SCRIPT_NAMES)
    p.add_argument("--tgt-script", default="Latin", choices=SCRIPT_NAMES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--script-table", help="alternative script table JSON file")
    p.add_argument("--out", help="grammar output path (default stdout)")
    p.add_argument("--manifest", help="manifest output path")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("sample", help="sample gold pairs at a fixed source length")
    p.add_argument("--grammar", required=True)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="pairs JSONL path (default stdout)")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("translate", help="enumerate target translations")
    p.add_argument("--grammar", required=True)
    p.add_argument("--sentence", help="source sentence (default: read stdin)")
    p.add_argument("--cap", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_translate)

    p = sub.add_parser("score", help="score candidates against gold pairs")
    p.add_argument("--pairs", required=True)
    p.add_argument("--cands", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--grammar", help="credit all grammar translations as gold")
    p.add_argument("--cap", type=int, default=10_000)
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("classify", help="label translation errors")
    p.add_argument("--pairs", required=True)
    p.add_argument("--cands", required=True)
    p.add_argument("--grammar", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--script", choices=SCRIPT_NAMES, help="target script (default: detect)")
    p.add_argument("--cap", type=int, default=10_000)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("run", help="run an experiment from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--no-resume", action="store_true")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("report", help="aggregate a run log into tables")
    p.add_argument("--log", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--resamples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        # covers bad specs, unreachable lengths, malformed grammars and
        # missing files; unexpected bugs still get a traceback
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
