"""Engines with deliberately planted bugs.

Each bug is a documented, minimal deviation from the reference engine,
reproducing a known defect class so the differential oracle's detection
power stays testable in CI:

  L1  path evaluation disagrees between string and object input: with an
      object target, an index step applied to a scalar returns the scalar
      itself, while the (correct) string-input path returns null.
  L2  WriteNonStringValueAsString quotes numbers but leaves booleans
      unquoted.
  L3  typed parsing into a decimal bean field wraps integers that exceed
      the signed 64-bit range instead of keeping them exact.
"""

from __future__ import annotations

import enum
from typing import Iterable

from .reference import Quirks, ReferenceBackend


class BugId(enum.Enum):
    L1_PATH_STRING_VS_OBJECT = "L1"
    L2_BOOL_NOT_QUOTED = "L2"
    L3_DECIMAL_OVERFLOW = "L3"


def planted_backend(bug_set: Iterable[BugId], name: str | None = None) -> ReferenceBackend:
    """Build a reference engine deviating exactly as `bug_set` prescribes."""
    bugs = set(bug_set)
    for bug in bugs:
        if not isinstance(bug, BugId):
            raise ValueError(f"unknown planted bug: {bug!r}")
    if name is None:
        codes = "+".join(sorted(bug.value for bug in bugs))
        name = f"planted:{codes}"
    quirks = Quirks(
        unquoted_bools=BugId.L2_BOOL_NOT_QUOTED in bugs,
        scalar_index_identity=BugId.L1_PATH_STRING_VS_OBJECT in bugs,
        wrap_decimal_overflow=BugId.L3_DECIMAL_OVERFLOW in bugs,
    )
    return ReferenceBackend(name=name, quirks=quirks)
