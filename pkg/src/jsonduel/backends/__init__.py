"""Pluggable JSON engines behind one capability surface, plus the executor.

Engines are addressed by name in pipeline configuration:

  reference          the corrected in-repo engine
  reference-copy     an independent instance of the same engine
  planted:<bugs>     reference plus planted bugs, e.g. "planted:L2" or
                     "planted:L1+L2+L3"; "planted:" plants nothing
"""

from __future__ import annotations

from typing import Iterable, Mapping, Protocol, Union

from ..tdsl import ast
from .executor import DEFAULT_LIMITS, ExecutionLimits, execute
from .outcomes import (
    PASS,
    BackendError,
    Error,
    ErrorKind,
    Fail,
    Pass,
    TestOutcome,
    describe,
    outcome_from_dict,
    outcome_to_dict,
)
from .planted import BugId, planted_backend
from .reference import Quirks, ReferenceBackend


class Backend(Protocol):
    """Capability surface every engine adapter provides."""

    name: str

    def validate(self, text: str) -> bool: ...

    def parse(self, text: str, features: Iterable[ast.ReaderFeature] = ()): ...

    def parse_typed(
        self,
        text: str,
        bean: ast.BeanDef,
        beans: Mapping[str, ast.BeanDef],
        features: Iterable[ast.ReaderFeature] = (),
    ) -> dict: ...

    def serialize(self, value, features: Iterable[ast.WriterFeature] = ()) -> str: ...

    def get(self, value, accessor: Union[str, int], as_type: ast.AsType): ...

    def path_eval(self, target, path: str): ...


class BackendConfigError(ValueError):
    """An engine name that cannot be resolved to an implementation."""


_BUG_CODES = {bug.value: bug for bug in BugId}


def resolve_backend(name: str) -> Backend:
    """Build the engine a configuration name refers to."""
    if name == "reference":
        return ReferenceBackend()
    if name == "reference-copy":
        return ReferenceBackend(name="reference-copy")
    if name.startswith("planted:"):
        spec = name[len("planted:"):]
        bugs = []
        for code in filter(None, spec.split("+")):
            if code not in _BUG_CODES:
                raise BackendConfigError(f"unknown planted bug code '{code}' in '{name}'")
            bugs.append(_BUG_CODES[code])
        return planted_backend(bugs, name=name)
    raise BackendConfigError(f"unknown backend '{name}'")


__all__ = [
    "Backend", "BackendConfigError", "resolve_backend",
    "ReferenceBackend", "Quirks", "BugId", "planted_backend",
    "execute", "ExecutionLimits", "DEFAULT_LIMITS",
    "TestOutcome", "Pass", "Fail", "Error", "PASS", "ErrorKind",
    "BackendError", "describe", "outcome_to_dict", "outcome_from_dict",
]
