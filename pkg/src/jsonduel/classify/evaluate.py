"""Labeled failing cases and per-category triage accuracy.

The labeled-case file is JSONL, one case per line:
{"script_path": ..., "outcome": {...}, "category": "E_bad", "backend": ...}
with script paths relative to the file. Accuracy is reported per
category and as the case-weighted average.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path

from ..backends.outcomes import Pass, TestOutcome, outcome_from_dict
from ..llm.client import LlmClient
from ..llm.generation import GenParams
from ..tdsl import Script, parse_script
from .prompts import ClassifyMode
from .voting import ClassificationResult, Verdict, classify


class Category(enum.Enum):
    E_BAD = "E_bad"    # bad test that triggered an exception
    E_GOOD = "E_good"  # good test that triggered an exception
    F_BAD = "F_bad"    # bad test that failed at an assertion
    F_GOOD = "F_good"  # good test that failed at an assertion
    UNKNOWN = "unknown"

    @property
    def expected_verdict(self) -> Verdict:
        if self in (Category.E_GOOD, Category.F_GOOD):
            return Verdict.GOOD
        if self in (Category.E_BAD, Category.F_BAD):
            return Verdict.BAD
        raise ValueError("unknown category has no expected verdict")


LABELED_CATEGORIES = (Category.E_BAD, Category.E_GOOD, Category.F_BAD, Category.F_GOOD)


@dataclass(frozen=True)
class FailedCase:
    script: Script
    script_text: str
    outcome: TestOutcome
    backend: str = "reference"
    category: Category = Category.UNKNOWN

    def __post_init__(self):
        if isinstance(self.outcome, Pass):
            raise ValueError("a failed case cannot carry a Pass outcome")


def load_cases(path: Path | str) -> list[FailedCase]:
    """Load a labeled-case JSONL file."""
    path = Path(path)
    cases: list[FailedCase] = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}:{lineno}: malformed JSON: {exc.msg}") from None
        script_path = path.parent / data["script_path"]
        text = script_path.read_text(encoding="utf-8")
        cases.append(
            FailedCase(
                script=parse_script(text),
                script_text=text,
                outcome=outcome_from_dict(data["outcome"]),
                backend=data.get("backend", "reference"),
                category=Category(data.get("category", "unknown")),
            )
        )
    return cases


@dataclass(frozen=True)
class CaseResult:
    category: Category
    expected: Verdict
    result: ClassificationResult

    @property
    def correct(self) -> bool:
        return self.result.final is self.expected


@dataclass(frozen=True)
class AccuracyReport:
    mode: ClassifyMode
    case_results: tuple[CaseResult, ...]

    def counts(self, category: Category) -> tuple[int, int]:
        members = [r for r in self.case_results if r.category is category]
        return sum(1 for r in members if r.correct), len(members)

    def accuracy(self, category: Category) -> float:
        correct, total = self.counts(category)
        if total == 0:
            raise ValueError(f"no cases in category {category.value}")
        return 100.0 * correct / total

    def average(self) -> float:
        correct = sum(1 for r in self.case_results if r.correct)
        return 100.0 * correct / len(self.case_results)


def evaluate_accuracy(
    cases: list[FailedCase],
    mode: ClassifyMode,
    client: LlmClient,
    params: GenParams = GenParams(),
) -> AccuracyReport:
    """Classify every labeled case and tabulate per-category accuracy."""
    if not cases:
        raise ValueError("nothing to evaluate: empty case list")
    for case in cases:
        if case.category is Category.UNKNOWN:
            raise ValueError("evaluation requires ground-truth categories")
    results = tuple(
        CaseResult(
            category=case.category,
            expected=case.category.expected_verdict,
            result=classify(case, mode, client, params),
        )
        for case in cases
    )
    return AccuracyReport(mode=mode, case_results=results)


def render_accuracy_text(report: AccuracyReport) -> str:
    """Aligned one-row table: per-category accuracies plus the average."""
    headers = [c.value for c in LABELED_CATEGORIES if report.counts(c)[1]] + ["avg."]
    values = [
        f"{report.accuracy(c):.1f}" for c in LABELED_CATEGORIES if report.counts(c)[1]
    ] + [f"{report.average():.1f}"]
    label = report.mode.value.upper().replace("-COT", "-CoT")
    width = max(len(h) for h in headers + values) + 2
    head = "mode".ljust(8) + "".join(h.rjust(width) for h in headers)
    row = label.ljust(8) + "".join(v.rjust(width) for v in values)
    return f"{head}\n{row}\n"


def render_accuracy_json(report: AccuracyReport) -> str:
    per_category = {}
    for category in LABELED_CATEGORIES:
        correct, total = report.counts(category)
        if total:
            per_category[category.value] = {
                "correct": correct,
                "total": total,
                "accuracy": round(report.accuracy(category), 1),
            }
    payload = {
        "mode": report.mode.value,
        "per_category": per_category,
        "cases": len(report.case_results),
        "average": round(report.average(), 1),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
