"""Cross-engine comparison, candidate-bug verdicts and deduplication.

Outcomes are projected to comparison keys — PASS, FAIL(assertion index)
or ERR(kind) — and a script is inconsistent iff at least two engines
disagree on the key. Message text and value reprs never participate:
the oracle compares final outcomes only, not intermediate output.
"""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass, replace
from typing import Mapping

from .backends.outcomes import Error, Fail, Pass, TestOutcome
from .tdsl import ast
from .tdsl.printer import print_script


class DiffConfigError(ValueError):
    pass


class VerdictStatus(enum.Enum):
    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"


def outcome_key(outcome: TestOutcome) -> tuple:
    if isinstance(outcome, Pass):
        return ("PASS",)
    if isinstance(outcome, Fail):
        return ("FAIL", outcome.assertion_index)
    if isinstance(outcome, Error):
        return ("ERR", outcome.kind.value)
    raise TypeError(f"not an outcome: {outcome!r}")


def compare(outcomes: Mapping[str, TestOutcome]) -> VerdictStatus:
    """Consistent iff every engine's outcome projects to the same key."""
    if len(outcomes) < 2:
        raise DiffConfigError("differential comparison needs at least 2 backends")
    keys = {outcome_key(outcome) for outcome in outcomes.values()}
    return VerdictStatus.CONSISTENT if len(keys) == 1 else VerdictStatus.INCONSISTENT


@dataclass(frozen=True)
class DiffVerdict:
    script_id: str
    script: ast.Script
    outcomes: dict[str, TestOutcome]
    status: VerdictStatus
    signature: str | None  # present iff inconsistent


@dataclass(frozen=True)
class BugReport:
    signature: str
    representative_id: str
    representative_script: ast.Script
    script_ids: tuple[str, ...]
    outcomes: dict[str, TestOutcome]  # of the representative


def divergence_locus(outcomes: Mapping[str, TestOutcome]) -> str:
    """Stable description of where the engines first part ways.

    The smallest failing assertion index wins; with no assertion
    failures, the lexicographically smallest error kind.
    """
    fail_indexes = [
        o.assertion_index for o in outcomes.values() if isinstance(o, Fail)
    ]
    if fail_indexes:
        return f"assert:{min(fail_indexes)}"
    kinds = sorted(o.kind.value for o in outcomes.values() if isinstance(o, Error))
    if kinds:
        return f"error:{kinds[0]}"
    return "pass"


def _mask_expr(expr: ast.Expr) -> ast.Expr:
    if isinstance(expr, ast.Lit):
        return ast.Lit(None)
    if isinstance(expr, ast.Str):
        return ast.Str("")
    if isinstance(expr, ast.Var):
        return expr
    if isinstance(expr, ast.ParseValue):
        return replace(expr, text=_mask_expr(expr.text))
    if isinstance(expr, ast.ParseTyped):
        return replace(expr, text=_mask_expr(expr.text))
    if isinstance(expr, ast.Serialize):
        return replace(expr, value=_mask_expr(expr.value))
    if isinstance(expr, ast.Get):
        return replace(expr, target=_mask_expr(expr.target))
    if isinstance(expr, ast.PathEval):
        return ast.PathEval(_mask_expr(expr.target), "")
    if isinstance(expr, ast.IsValid):
        return ast.IsValid(_mask_expr(expr.text))
    if isinstance(expr, ast.Size):
        return ast.Size(_mask_expr(expr.target))
    if isinstance(expr, ast.StripZeros):
        return ast.StripZeros(_mask_expr(expr.value))
    if isinstance(expr, ast.MakeBean):
        return ast.MakeBean(
            expr.bean,
            tuple((name, _mask_expr(value)) for name, value in expr.assignments),
        )
    raise TypeError(f"unknown expression node {type(expr).__name__}")


def _mask_statement(stmt: ast.Statement) -> ast.Statement:
    if isinstance(stmt, ast.Let):
        return ast.Let(stmt.name, _mask_expr(stmt.expr))
    if isinstance(stmt, ast.AssertEq):
        return ast.AssertEq(_mask_expr(stmt.expected), _mask_expr(stmt.actual))
    if isinstance(stmt, ast.AssertNull):
        return ast.AssertNull(_mask_expr(stmt.expr))
    if isinstance(stmt, ast.AssertNotNull):
        return ast.AssertNotNull(_mask_expr(stmt.expr))
    if isinstance(stmt, ast.AssertThrows):
        return ast.AssertThrows(_mask_expr(stmt.expr))
    raise TypeError(f"unknown statement node {type(stmt).__name__}")


def skeleton_hash(script: ast.Script) -> str:
    """Hash the script's shape with every literal stripped.

    Groups literal-variant duplicates of one underlying bug under a
    single signature.
    """
    masked = ast.Script(
        script.beans, tuple(_mask_statement(s) for s in script.statements)
    )
    return hashlib.sha256(print_script(masked).encode("utf-8")).hexdigest()


def signature(script: ast.Script, outcomes: Mapping[str, TestOutcome]) -> str:
    payload = {
        "outcomes": sorted(
            (name, list(outcome_key(outcome))) for name, outcome in outcomes.items()
        ),
        "locus": divergence_locus(outcomes),
        "skeleton": skeleton_hash(script),
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def make_verdict(
    script_id: str, script: ast.Script, outcomes: Mapping[str, TestOutcome]
) -> DiffVerdict:
    status = compare(outcomes)
    sig = signature(script, outcomes) if status is VerdictStatus.INCONSISTENT else None
    return DiffVerdict(script_id, script, dict(outcomes), status, sig)


def dedup(verdicts: list[DiffVerdict]) -> list[BugReport]:
    """Group inconsistent verdicts by signature into one report each."""
    groups: dict[str, list[DiffVerdict]] = {}
    for verdict in verdicts:
        if verdict.status is VerdictStatus.INCONSISTENT:
            groups.setdefault(verdict.signature, []).append(verdict)
    reports = []
    for sig in sorted(groups):
        members = groups[sig]
        representative = min(members, key=lambda v: v.script_id)
        reports.append(
            BugReport(
                signature=sig,
                representative_id=representative.script_id,
                representative_script=representative.script,
                script_ids=tuple(sorted(v.script_id for v in members)),
                outcomes=dict(representative.outcomes),
            )
        )
    return reports
