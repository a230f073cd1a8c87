"""The five JSON-domain mutation rules and their prompt sentences.

Each rule carries one fixed sentence that is inserted into the
generation prompt as "Write a new test that <sentence>." The sentences
are normative constants; golden tests pin them byte-for-byte.
"""

from __future__ import annotations

import enum


class MutationRule(enum.Enum):
    EXTRA_DATA_VALIDATION = "extra-data-validation"
    EXTRA_PARSING = "extra-parsing"
    PARSING_CONFIGURATIONS = "parsing-configurations"
    SERIALIZATION_CONFIGURATIONS = "serialization-configurations"
    MODIFYING_BEANS = "modifying-beans"

    @property
    def sentence(self) -> str:
        return _SENTENCES[self]


_SENTENCES = {
    MutationRule.EXTRA_DATA_VALIDATION: (
        "adds extra getter invocations and asserts the returned values to "
        "validate data integrity and consistency"
    ),
    MutationRule.EXTRA_PARSING: (
        "adds extra parsing methods to cover more scenarios"
    ),
    MutationRule.PARSING_CONFIGURATIONS: (
        "modifies the parsing configuration options from the list of "
        "candidate options to test various parsing configurations"
    ),
    MutationRule.SERIALIZATION_CONFIGURATIONS: (
        "alters the serialization settings from a collection of possible choices"
    ),
    MutationRule.MODIFYING_BEANS: (
        "modifies the bean definitions by changing field names, data types, "
        "and adding or removing fields to test diverse scenarios"
    ),
}

ALL_RULES: tuple[MutationRule, ...] = tuple(MutationRule)
