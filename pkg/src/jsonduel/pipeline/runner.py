"""The full loop: corpus -> summarize -> generate -> execute -> diff -> report.

Reproducibility contract: with a fixed config, corpus, replay scenario
and RNG seed, two runs produce identical reports (verdicts.jsonl,
report.txt, and bugs.jsonl up to the run timestamp, which is isolated
to one header field). Per-record provenance files carry their own
timestamps and are otherwise identical too.
"""

from __future__ import annotations

import hashlib
import logging
import random
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from ..backends import resolve_backend
from ..backends.executor import execute
from ..backends.outcomes import Error, Fail, Pass, TestOutcome
from ..corpus import Corpus, SeedTest, load_corpus, mine_seeds
from ..diffcore import BugReport, DiffVerdict, VerdictStatus, dedup, make_verdict
from ..llm.client import GenerationError, HttpChatClient, LlmClient, TransportError
from ..llm.generation import GenerationRecord, generate, pick_rule, summarize
from ..llm.mock import ReplayClient
from ..llm.prompts import build_context
from ..llm.rules import MutationRule
from ..tdsl import Script, print_script
from ..tdsl.extract import CONTEXT_OVERFLOW, ExtractionFailure
from .config import PipelineConfig

log = logging.getLogger(__name__)

PLAIN = "plain"
MUTATE = "mutate"


@dataclass
class OutcomeCounts:
    passed: int = 0
    failed: int = 0
    errored: int = 0

    def executed(self) -> int:
        return self.passed + self.failed + self.errored

    def add(self, outcome: TestOutcome) -> None:
        if isinstance(outcome, Pass):
            self.passed += 1
        elif isinstance(outcome, Fail):
            self.failed += 1
        elif isinstance(outcome, Error):
            self.errored += 1


@dataclass
class ModeCounts:
    generated: int = 0
    extraction_failures: int = 0
    per_backend: dict[str, OutcomeCounts] = field(default_factory=dict)

    def executed(self) -> int:
        return self.generated - self.extraction_failures


@dataclass
class RunReport:
    config_echo: dict
    manifest_hash: str
    started_at: str
    counts: dict[str, ModeCounts]
    records: list[tuple[str, GenerationRecord]]  # (script_id, record), in order
    record_paths: dict[str, str]
    verdicts: list[DiffVerdict]
    bug_reports: list[BugReport]
    suppressed_signatures: list[str]
    op_counts: dict[str, dict[str, int]]
    seed_load_errors: list[str]
    complete: bool


@dataclass(frozen=True)
class _Task:
    script_id: str
    seed: SeedTest
    rule: MutationRule | None


def _sanitize(seed_id: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "_", seed_id)


def _load(config: PipelineConfig):
    if config.corpus.manifest is not None:
        return load_corpus(config.corpus.manifest)
    return mine_seeds(config.corpus.root, config.corpus.keyword)


def _build_client(config: PipelineConfig) -> LlmClient:
    if config.mock_scenario is not None:
        return ReplayClient.from_file(config.mock_scenario)
    return HttpChatClient(
        endpoint=config.endpoint, verbose=log.isEnabledFor(logging.DEBUG)
    )


def _overflow_record(task: _Task, summary: str, limit: int) -> GenerationRecord:
    prompt = tuple(build_context(task.seed.script_text, summary, task.rule))
    return GenerationRecord(
        seed_id=task.seed.id,
        rule=task.rule,
        messages=prompt,
        raw_response="",
        extraction=ExtractionFailure(
            CONTEXT_OVERFLOW,
            f"prompt of {sum(len(m.content) for m in prompt)} chars exceeds "
            f"the {limit}-char context limit",
        ),
    )


def run(config: PipelineConfig, client: LlmClient | None = None) -> RunReport:
    """Execute the whole pipeline and write artifacts under out_dir.

    A transport failure aborts generation; the partial report is still
    written, flagged incomplete.
    """
    config.validate()
    client = client if client is not None else _build_client(config)
    backends = [resolve_backend(name) for name in config.backends]
    started_at = datetime.now(timezone.utc).isoformat()

    corpus, load_errors = _load(config)
    log.info("corpus: %d seeds (%d load errors)", len(corpus.seeds), len(load_errors))

    # Rules are pre-drawn in one deterministic sweep so that parallel
    # generation cannot perturb the sequence.
    rng = random.Random(config.params.seed)
    per_seed_index: dict[str, int] = {}
    tasks: list[_Task] = []
    for _ in range(config.rounds):
        for seed in corpus.seeds:
            for _ in range(config.params.n_per_seed):
                k = per_seed_index.get(seed.id, 0)
                per_seed_index[seed.id] = k + 1
                tasks.append(
                    _Task(f"{_sanitize(seed.id)}-g{k}", seed, pick_rule(rng, config.mutation))
                )

    complete = True
    records: list[tuple[str, GenerationRecord]] = []
    try:
        summaries = _summarize_seeds(corpus, client, config)
        records = _generate_all(tasks, summaries, client, config)
    except (TransportError, GenerationError) as exc:
        log.error("aborting run, generation failed: %s", exc)
        complete = False

    counts: dict[str, ModeCounts] = {}
    verdicts: list[DiffVerdict] = []
    op_counts: dict[str, dict[str, int]] = {b.name: {} for b in backends}
    for script_id, record in records:
        mode = MUTATE if record.rule is not None else PLAIN
        mode_counts = counts.setdefault(mode, ModeCounts())
        mode_counts.generated += 1
        script = record.extracted_script
        if script is None:
            mode_counts.extraction_failures += 1
            continue
        outcomes: dict[str, TestOutcome] = {}
        for backend in backends:
            hits = op_counts[backend.name]

            def count_op(op: str, hits=hits) -> None:
                hits[op] = hits.get(op, 0) + 1

            outcome = execute(script, backend, config.limits, on_op=count_op)
            outcomes[backend.name] = outcome
            mode_counts.per_backend.setdefault(backend.name, OutcomeCounts()).add(outcome)
        verdicts.append(make_verdict(script_id, script, outcomes))

    inconsistent = [v for v in verdicts if v.status is VerdictStatus.INCONSISTENT]
    suppressed = sorted(
        {v.signature for v in inconsistent if v.signature in config.suppress}
    )
    bug_reports = dedup([v for v in inconsistent if v.signature not in config.suppress])

    report = RunReport(
        config_echo=config.echo(),
        manifest_hash=corpus.manifest_hash,
        started_at=started_at,
        counts=counts,
        records=records,
        record_paths={},
        verdicts=verdicts,
        bug_reports=bug_reports,
        suppressed_signatures=suppressed,
        op_counts=op_counts,
        seed_load_errors=[f"{e.path}: {e.error}" for e in load_errors],
        complete=complete,
    )
    _write_artifacts(report, config.out_dir)
    return report


def _summarize_seeds(
    corpus: Corpus, client: LlmClient, config: PipelineConfig
) -> dict[str, str]:
    """One summary per seed, cached by content hash within the run."""
    cache: dict[str, str] = {}
    summaries: dict[str, str] = {}
    for seed in corpus.seeds:
        key = hashlib.sha256(seed.script_text.encode("utf-8")).hexdigest()
        if key not in cache:
            cache[key] = summarize(seed.script_text, client, config.params)
        summaries[seed.id] = cache[key]
    return summaries


def _generate_all(
    tasks: list[_Task],
    summaries: dict[str, str],
    client: LlmClient,
    config: PipelineConfig,
) -> list[tuple[str, GenerationRecord]]:
    limit = config.context_limit_chars

    def one(task: _Task) -> GenerationRecord:
        summary = summaries[task.seed.id]
        if limit:
            prompt_chars = sum(
                len(m.content)
                for m in build_context(task.seed.script_text, summary, task.rule)
            )
            if prompt_chars > limit:
                return _overflow_record(task, summary, limit)
        return generate(
            task.seed.id, task.seed.script_text, summary, task.rule, config.params, client
        )

    if config.in_flight == 1 or len(tasks) <= 1:
        results = [one(task) for task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=config.in_flight) as pool:
            results = list(pool.map(one, tasks))
    return [(task.script_id, record) for task, record in zip(tasks, results)]


def _record_to_dict(script_id: str, record: GenerationRecord) -> dict:
    if isinstance(record.extraction, Script):
        extraction = {"ok": True, "script": print_script(record.extraction)}
    else:
        extraction = {
            "ok": False,
            "category": record.extraction.category,
            "error": record.extraction.error,
        }
    return {
        "script_id": script_id,
        "seed_id": record.seed_id,
        "rule": record.rule.value if record.rule else None,
        "messages": [[m.role.value, m.content] for m in record.messages],
        "raw_response": record.raw_response,
        "extraction": extraction,
        "timestamp": record.timestamp,
    }


def _write_artifacts(report: RunReport, out_dir: Path) -> None:
    import json

    from .report import report_render

    records_dir = out_dir / "records"
    scripts_dir = out_dir / "scripts"
    records_dir.mkdir(parents=True, exist_ok=True)
    scripts_dir.mkdir(parents=True, exist_ok=True)

    for script_id, record in report.records:
        record_path = records_dir / f"{script_id}.json"
        record_path.write_text(
            json.dumps(_record_to_dict(script_id, record), ensure_ascii=False, indent=2)
            + "\n",
            encoding="utf-8",
        )
        report.record_paths[script_id] = str(record_path)
        if isinstance(record.extraction, Script):
            (scripts_dir / f"{script_id}.t").write_text(
                print_script(record.extraction), encoding="utf-8"
            )

    from ..backends.outcomes import outcome_to_dict

    with (out_dir / "verdicts.jsonl").open("w", encoding="utf-8") as fh:
        for verdict in report.verdicts:
            fh.write(
                json.dumps(
                    {
                        "script_id": verdict.script_id,
                        "status": verdict.status.value,
                        "signature": verdict.signature,
                        "outcomes": {
                            name: outcome_to_dict(outcome)
                            for name, outcome in sorted(verdict.outcomes.items())
                        },
                    },
                    ensure_ascii=False,
                    sort_keys=True,
                )
                + "\n"
            )

    (out_dir / "bugs.jsonl").write_bytes(report_render(report, "jsonl"))
    (out_dir / "report.txt").write_bytes(report_render(report, "text"))
