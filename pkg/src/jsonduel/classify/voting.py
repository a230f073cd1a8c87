"""Verdict parsing and majority voting over repeated generations."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Sequence

from ..llm.client import LlmClient, TransportError
from ..llm.generation import GenParams
from ..llm.messages import ChatMessage, assistant
from .prompts import ClassifyMode, build_classify_prompt

VOTE_COUNT = 6

_SENTENCE_SPLIT = re.compile(r"(?<=[.!?])\s+")


class Verdict(enum.Enum):
    GOOD = "Good"
    BAD = "Bad"
    UNPARSEABLE = "Unparseable"


def parse_verdict(response: str) -> Verdict:
    """Read the verdict from the final sentence of a response.

    If the final sentence mentions both "good test" and "bad test", or
    neither, the vote is unparseable.
    """
    sentences = [s for s in _SENTENCE_SPLIT.split(response.strip()) if s]
    final = sentences[-1].lower() if sentences else ""
    good = "good test" in final
    bad = "bad test" in final
    if good and not bad:
        return Verdict.GOOD
    if bad and not good:
        return Verdict.BAD
    return Verdict.UNPARSEABLE


def tally_votes(votes: Sequence[Verdict]) -> Verdict:
    """Final label: strict majority among Good/Bad.

    Unparseable votes count toward neither side; a tie (or no parseable
    vote at all) resolves to Bad so that ambiguous evidence never
    surfaces as a bug.
    """
    good = sum(1 for v in votes if v is Verdict.GOOD)
    bad = sum(1 for v in votes if v is Verdict.BAD)
    return Verdict.GOOD if good > bad else Verdict.BAD


@dataclass(frozen=True)
class ClassificationResult:
    votes: tuple[Verdict, ...]
    final: Verdict
    mode: ClassifyMode
    transcripts: tuple[tuple[ChatMessage, ...], ...]


class ClassificationAborted(Exception):
    """Transport gave out mid-vote; carries the votes gathered so far."""

    def __init__(self, cause: Exception, votes: tuple[Verdict, ...]):
        super().__init__(f"classification aborted after {len(votes)} votes: {cause}")
        self.votes = votes


def classify(
    case,
    mode: ClassifyMode,
    client: LlmClient,
    params: GenParams = GenParams(),
    vote_count: int = VOTE_COUNT,
) -> ClassificationResult:
    """Issue `vote_count` independent generations and majority-vote them."""
    prompt = tuple(build_classify_prompt(case, mode))
    votes: list[Verdict] = []
    transcripts: list[tuple[ChatMessage, ...]] = []
    for _ in range(vote_count):
        try:
            response = client.complete(prompt, params)
        except TransportError as exc:
            raise ClassificationAborted(exc, tuple(votes)) from exc
        votes.append(parse_verdict(response))
        transcripts.append(prompt + (assistant(response),))
    return ClassificationResult(
        votes=tuple(votes),
        final=tally_votes(votes),
        mode=mode,
        transcripts=tuple(transcripts),
    )
