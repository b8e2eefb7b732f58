"""Batch evaluation harness: prompt, query, extract, score, log.

An experiment is a grid of (grammar condition, source length) cells with a
fixed number of replicates per cell.  Each trial deterministically derives
its seed from the master seed and its cell coordinates, samples one gold
pair, renders the prompt, queries the endpoint, extracts and scores the
answer, and appends one JSON line to the run log.  Logs are append-only and
resumable: a rerun skips trial ids already present.

Endpoints speak a minimal JSON POST ``{model, prompt} -> {text}``; a
"chat" profile adapts that to chat-completion shaped payloads.  Two
in-process mocks need no network: ``mock://oracle`` answers with the gold
target, ``mock://echo-source`` parrots the source sentence back.

Trial results never raise: endpoint failures after retries and responses
with no ``Final answer:`` marker are recorded as failed trials with zero
scores.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .errors import UNPARSEABLE, classify, sorted_labels
from .grammar import SyncGrammar, word_vocab
from .lexicon import english_words
from .metagrammar import GrammarSpec, generate
from .metrics import ScoreRecord, score_candidate
from .parsing import translate
from .prompts import extract_answer, render_prompt
from .sampling import sample_pair
from .scripts import get_script
from .seeds import derive_seed

SCHEMA_VERSION = 1

MOCK_ORACLE = "mock://oracle"
MOCK_ECHO_SOURCE = "mock://echo-source"


@dataclass(frozen=True)
class RetryPolicy:
    max_attempts: int = 3
    backoff_s: float = 0.5  # sleep backoff_s * 2**attempt between tries

    def __post_init__(self):
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")


@dataclass(frozen=True)
class EndpointProfile:
    """Where and how to send prompts.

    ``kind`` "plain" posts {model, prompt} and reads {text}; "chat" posts a
    chat-completions payload and reads choices[0].message.content.
    ``auth_env`` names an environment variable holding a bearer token; only
    the name is ever logged.  ``params`` are decoding parameters forwarded
    verbatim (the harness sets no defaults of its own).
    """

    url: str
    kind: str = "plain"
    auth_env: str | None = None
    timeout_s: float = 60.0
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("plain", "chat"):
            raise ValueError(f"unknown endpoint kind: {self.kind!r}")

    @property
    def mock(self) -> bool:
        return self.url.startswith("mock://")

    def metadata(self) -> dict:
        return {
            "url": self.url,
            "kind": self.kind,
            "auth_env": self.auth_env,
            "params": dict(self.params),
        }


@dataclass(frozen=True)
class ExperimentConfig:
    conditions: tuple[GrammarSpec, ...]
    lengths: tuple[int, ...]
    n_per_cell: int
    endpoint: EndpointProfile
    model_name: str
    out_dir: Path
    master_seed: int = 0
    max_parallel: int = 4
    retry: RetryPolicy = RetryPolicy()
    translate_cap: int = 10_000

    def __post_init__(self):
        if not self.conditions:
            raise ValueError("need at least one grammar condition")
        if self.n_per_cell < 1:
            raise ValueError("n_per_cell must be >= 1")
        if self.max_parallel < 1:
            raise ValueError("max_parallel must be >= 1")
        if any(not 3 <= n <= 50 for n in self.lengths):
            raise ValueError("lengths must lie in [3, 50]")

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        endpoint = raw["endpoint"]
        if isinstance(endpoint, dict):
            endpoint = EndpointProfile(**endpoint)
        retry = raw.get("retry", RetryPolicy())
        if isinstance(retry, dict):
            retry = RetryPolicy(**retry)
        return cls(
            conditions=tuple(
                s if isinstance(s, GrammarSpec) else GrammarSpec.from_dict(s)
                for s in raw["conditions"]
            ),
            lengths=tuple(raw["lengths"]),
            n_per_cell=raw["n_per_cell"],
            endpoint=endpoint,
            model_name=raw["model_name"],
            out_dir=Path(raw["out_dir"]),
            master_seed=raw.get("master_seed", 0),
            max_parallel=raw.get("max_parallel", 4),
            retry=retry,
            translate_cap=raw.get("translate_cap", 10_000),
        )

    @classmethod
    def from_json_file(cls, path: str | Path) -> "ExperimentConfig":
        return cls.from_dict(json.loads(Path(path).read_text("utf-8")))


def trial_id(condition_index: int, length: int, replicate: int) -> str:
    return f"c{condition_index}_len{length}_r{replicate}"


def _zero_scores() -> ScoreRecord:
    return ScoreRecord(exact=0, bag_of_words=0, bleu=0.0, chrfpp=0.0)


class _Client:
    """Sends one prompt per call; mocks answer locally."""

    def __init__(self, cfg: ExperimentConfig):
        self.cfg = cfg

    def __call__(self, prompt: str, gold: str, source: str) -> str:
        url = self.cfg.endpoint.url
        if url == MOCK_ORACLE:
            return f"Final answer: {gold}"
        if url == MOCK_ECHO_SOURCE:
            return f"Final answer: {source}"
        if self.cfg.endpoint.mock:
            raise ValueError(f"unknown mock endpoint: {url!r}")
        return self._http(prompt)

    def _http(self, prompt: str) -> str:
        import requests

        endpoint = self.cfg.endpoint
        headers = {"Content-Type": "application/json"}
        if endpoint.auth_env:
            token = os.environ.get(endpoint.auth_env)
            if token:
                headers["Authorization"] = f"Bearer {token}"
        if endpoint.kind == "chat":
            payload = {
                "model": self.cfg.model_name,
                "messages": [{"role": "user", "content": prompt}],
                **endpoint.params,
            }
        else:
            payload = {
                "model": self.cfg.model_name,
                "prompt": prompt,
                **endpoint.params,
            }
        last_error = None
        for attempt in range(self.cfg.retry.max_attempts):
            if attempt:
                time.sleep(self.cfg.retry.backoff_s * 2 ** (attempt - 1))
            try:
                resp = requests.post(
                    endpoint.url,
                    json=payload,
                    headers=headers,
                    timeout=endpoint.timeout_s,
                )
                resp.raise_for_status()
                body = resp.json()
                if endpoint.kind == "chat":
                    return body["choices"][0]["message"]["content"]
                return body["text"]
            except Exception as exc:  # noqa: BLE001 - every failure is retryable
                last_error = exc
        raise RuntimeError(f"endpoint failed after {self.cfg.retry.max_attempts} attempts: {last_error}")


def run_trial(
    cfg: ExperimentConfig,
    grammar: SyncGrammar,
    condition_index: int,
    length: int,
    replicate: int,
    client: _Client,
) -> dict:
    """Execute one trial end to end; always returns a record, never raises."""
    spec = cfg.conditions[condition_index]
    seed = derive_seed(cfg.master_seed, condition_index, length, replicate)
    pair = sample_pair(grammar, length, rng_seed=seed)
    source = " ".join(pair.source)
    gold = " ".join(pair.target)
    golds = translate(grammar, pair.source, cap=cfg.translate_cap)
    gold_set = sorted(set(golds) | {gold})
    prompt = render_prompt(grammar, pair.source)

    started = datetime.now(timezone.utc).isoformat()
    t0 = time.perf_counter()
    status = "ok"
    error = None
    response = None
    extracted = None
    try:
        response = client(prompt, gold, source)
    except Exception as exc:  # noqa: BLE001 - failures become failed trials
        status = "transport_failed"
        error = str(exc)
    elapsed = time.perf_counter() - t0

    labels: list[str] = []
    if status == "ok":
        extracted = extract_answer(response)
        if extracted is None:
            status = "extraction_failed"
            scores = _zero_scores()
            labels = [UNPARSEABLE]
        else:
            candidate = " ".join(extracted)
            scores = score_candidate(candidate, gold_set)
            if not scores.exact:
                labels = sorted_labels(
                    classify(
                        candidate,
                        gold_set,
                        src_vocab=word_vocab(grammar, "src"),
                        tgt_vocab=word_vocab(grammar, "tgt"),
                        script=get_script(spec.script_tgt),
                        english=english_words(),
                    )
                )
    else:
        scores = _zero_scores()

    return {
        "schema_version": SCHEMA_VERSION,
        "trial_id": trial_id(condition_index, length, replicate),
        "condition_index": condition_index,
        "spec": spec.to_dict(),
        "grammar_size": spec.size,
        "length": length,
        "replicate": replicate,
        "seed": seed,
        "source": source,
        "gold": gold,
        "gold_set_size": len(gold_set),
        "golds_overflowed": golds.overflowed,
        "prompt": prompt,
        "response": response,
        "extracted": list(extracted) if extracted is not None else None,
        "status": status,
        "error": error,
        "scores": scores.as_dict(),
        "labels": labels,
        "endpoint": cfg.endpoint.metadata(),
        "model": cfg.model_name,
        "timing": {"started_at": started, "elapsed_s": elapsed},
    }


def read_log(path: str | Path) -> list[dict]:
    """Records from a run log, skipping any torn trailing line."""
    records = []
    log = Path(path)
    if not log.exists():
        return records
    with log.open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError:
                continue
    return records


def run_experiment(cfg: ExperimentConfig, resume: bool = True) -> list[dict]:
    """Run (or resume) the full grid; returns all records including prior ones.

    Each finished trial is appended to ``<out_dir>/runs.jsonl`` immediately.
    Records are written in grid order (conditions x lengths x replicates) so
    identical configs yield identical logs up to timing fields.
    """
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    log_path = out_dir / "runs.jsonl"
    prior = read_log(log_path) if resume else []
    if not resume and log_path.exists():
        log_path.unlink()
    done = {r["trial_id"] for r in prior}

    grammars = {ci: generate(spec) for ci, spec in enumerate(cfg.conditions)}
    client = _Client(cfg)
    todo = [
        (ci, length, rep)
        for ci in range(len(cfg.conditions))
        for length in cfg.lengths
        for rep in range(cfg.n_per_cell)
        if trial_id(ci, length, rep) not in done
    ]

    fresh: list[dict] = []
    with ThreadPoolExecutor(max_workers=cfg.max_parallel) as pool:
        futures = [
            pool.submit(run_trial, cfg, grammars[ci], ci, length, rep, client)
            for ci, length, rep in todo
        ]
        with log_path.open("a", encoding="utf-8") as fh:
            for future in futures:
                record = future.result()
                fh.write(json.dumps(record, ensure_ascii=False) + "\n")
                fh.flush()
                fresh.append(record)
    return prior + fresh
