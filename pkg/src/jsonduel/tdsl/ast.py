"""AST node types for the JSON-test DSL.

A script is the neutral form of a unit test: optional bean definitions
(record schemas for typed (de)serialization) followed by straight-line
statements. There are no loops, conditionals or user-defined functions.
All nodes are immutable; structural equality is dataclass equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union


class ReaderFeature(enum.Enum):
    """Parse-time behavior switches (a closed set)."""

    TRIM_STRING = "TrimString"
    USE_NATIVE_OBJECT = "UseNativeObject"
    USE_BIG_DECIMAL_FOR_FLOATS = "UseBigDecimalForFloats"
    ALLOW_SINGLE_QUOTES = "AllowSingleQuotes"


class WriterFeature(enum.Enum):
    """Serialize-time behavior switches (a closed set)."""

    WRITE_NON_STRING_VALUE_AS_STRING = "WriteNonStringValueAsString"
    WRITE_BOOLEAN_AS_NUMBER = "WriteBooleanAsNumber"
    WRITE_NULLS = "WriteNulls"
    PRETTY_FORMAT = "PrettyFormat"


class AsType(enum.Enum):
    """Requested result type of a getter access."""

    VALUE = "value"
    STRING = "string"
    INTEGER = "integer"
    DECIMAL = "decimal"
    BOOLEAN = "boolean"
    OBJECT = "object"
    ARRAY = "array"


# --- bean field types ---

@dataclass(frozen=True)
class Prim:
    """Primitive field type: string, integer, decimal or boolean."""

    name: str


@dataclass(frozen=True)
class BeanRef:
    """Field typed as another bean (nested object)."""

    name: str


@dataclass(frozen=True)
class ListOf:
    """Field typed as a homogeneous list."""

    element: "FieldType"


FieldType = Union[Prim, BeanRef, ListOf]

PRIMITIVE_TYPES = ("string", "integer", "decimal", "boolean")


@dataclass(frozen=True)
class BeanField:
    name: str
    type: FieldType


@dataclass(frozen=True)
class BeanDef:
    name: str
    fields: tuple[BeanField, ...]


# --- expressions ---

@dataclass(frozen=True)
class Lit:
    """A JSON literal: null, boolean, number, array or object."""

    value: object


@dataclass(frozen=True)
class Str:
    """A string literal."""

    value: str


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class ParseValue:
    text: "Expr"
    features: tuple[ReaderFeature, ...] = ()


@dataclass(frozen=True)
class ParseTyped:
    text: "Expr"
    bean: str
    features: tuple[ReaderFeature, ...] = ()


@dataclass(frozen=True)
class Serialize:
    value: "Expr"
    features: tuple[WriterFeature, ...] = ()


@dataclass(frozen=True)
class Get:
    target: "Expr"
    accessor: Union[str, int]
    as_type: AsType = AsType.VALUE


@dataclass(frozen=True)
class PathEval:
    target: "Expr"
    path: str


@dataclass(frozen=True)
class IsValid:
    text: "Expr"


@dataclass(frozen=True)
class Size:
    target: "Expr"


@dataclass(frozen=True)
class MakeBean:
    bean: str
    assignments: tuple[tuple[str, "Expr"], ...] = ()


@dataclass(frozen=True)
class StripZeros:
    value: "Expr"


Expr = Union[
    Lit, Str, Var, ParseValue, ParseTyped, Serialize, Get, PathEval,
    IsValid, Size, MakeBean, StripZeros,
]


# --- statements ---

@dataclass(frozen=True)
class Let:
    name: str
    expr: Expr


@dataclass(frozen=True)
class AssertEq:
    expected: Expr
    actual: Expr


@dataclass(frozen=True)
class AssertNull:
    expr: Expr


@dataclass(frozen=True)
class AssertNotNull:
    expr: Expr


@dataclass(frozen=True)
class AssertThrows:
    expr: Expr


Statement = Union[Let, AssertEq, AssertNull, AssertNotNull, AssertThrows]

ASSERTION_TYPES = (AssertEq, AssertNull, AssertNotNull, AssertThrows)


@dataclass(frozen=True)
class Script:
    """A complete test script: bean definitions plus ordered statements."""

    beans: tuple[BeanDef, ...] = ()
    statements: tuple[Statement, ...] = ()

    def bean_map(self) -> dict[str, BeanDef]:
        return {bean.name: bean for bean in self.beans}

    def assertion_count(self) -> int:
        return sum(1 for s in self.statements if isinstance(s, ASSERTION_TYPES))


# Words that cannot be used as variable or bean names.
RESERVED_WORDS = frozenset(
    {
        "bean", "let",
        "assert_eq", "assert_null", "assert_not_null", "assert_throws",
        "parse", "parse_typed", "serialize", "get", "path_eval",
        "is_valid", "size", "make_bean", "strip_zeros",
        "true", "false", "null", "list",
    }
)
