"""Chat-completion transport.

The wire protocol is the ubiquitous JSON-over-HTTP chat format with
model/messages/temperature/top_p fields. Transport failures and 5xx
responses are retried with exponential backoff; anything else fails
fast. The API token comes from the environment, never from config
files.
"""

from __future__ import annotations

import logging
import os
import time
from typing import Protocol, Sequence

import requests

from .messages import ChatMessage, to_wire

log = logging.getLogger(__name__)

API_KEY_ENV = "JSONDUEL_API_KEY"
ENDPOINT_ENV = "JSONDUEL_ENDPOINT"
DEFAULT_ENDPOINT = "https://api.openai.com/v1/chat/completions"

MAX_ATTEMPTS = 3
BACKOFF_START_S = 0.5


class TransportError(Exception):
    """The request could not be completed (after retries, if retryable)."""


class GenerationError(Exception):
    """The service answered, but with an unusable (e.g. empty) response."""


class LlmClient(Protocol):
    def complete(self, messages: Sequence[ChatMessage], params) -> str: ...


class HttpChatClient:
    """Real transport. `session` and `sleep` are injectable for tests."""

    def __init__(
        self,
        endpoint: str | None = None,
        api_key: str | None = None,
        session=None,
        sleep=None,
        timeout_s: float = 120.0,
        verbose: bool = False,
    ):
        self.endpoint = endpoint or os.environ.get(ENDPOINT_ENV) or DEFAULT_ENDPOINT
        self.api_key = api_key if api_key is not None else os.environ.get(API_KEY_ENV)
        self.session = session or requests.Session()
        self.sleep = sleep if sleep is not None else time.sleep
        self.timeout_s = timeout_s
        self.verbose = verbose

    def complete(self, messages: Sequence[ChatMessage], params) -> str:
        body = {
            "model": params.model,
            "messages": to_wire(messages),
            "temperature": params.temperature,
            "top_p": params.top_p,
        }
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        if self.verbose:
            log.debug("request to %s: %s", self.endpoint, body)

        last_error: Exception | None = None
        for attempt in range(MAX_ATTEMPTS):
            if attempt:
                delay = BACKOFF_START_S * (2 ** (attempt - 1))
                log.warning(
                    "retrying request (attempt %d/%d) after %s: %s",
                    attempt + 1, MAX_ATTEMPTS, delay, last_error,
                )
                self.sleep(delay)
            try:
                response = self.session.post(
                    self.endpoint, json=body, headers=headers, timeout=self.timeout_s
                )
            except requests.RequestException as exc:
                last_error = exc
                continue
            if response.status_code >= 500:
                last_error = TransportError(f"server error {response.status_code}")
                continue
            if response.status_code >= 400:
                raise TransportError(
                    f"request rejected with status {response.status_code}: {response.text[:200]}"
                )
            return self._extract_content(response)
        raise TransportError(f"request failed after {MAX_ATTEMPTS} attempts: {last_error}")

    def _extract_content(self, response) -> str:
        try:
            payload = response.json()
            content = payload["choices"][0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            raise GenerationError(f"malformed completion response: {exc}") from None
        if self.verbose:
            log.debug("response: %s", content)
        if not content:
            raise GenerationError("empty completion response")
        return content
