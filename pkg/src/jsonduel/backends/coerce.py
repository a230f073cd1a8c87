"""The getter coercion table and typed bean binding.

Every (actual kind, requested type) pair either yields a value or a
TypeCastError; nothing panics. The same table backs typed getters,
bean construction and typed parsing so the semantics cannot drift
apart between engines.
"""

from __future__ import annotations

import re
from decimal import Decimal
from typing import Mapping

from ..tdsl import ast
from ..values import INT64_MAX, INT64_MIN, canonical, kind
from .outcomes import BackendError, ErrorKind

_INT_RE = re.compile(r"-?[0-9]+\Z")
_NUMBER_RE = re.compile(r"-?(?:0|[1-9][0-9]*)(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?\Z")


def _cast_error(value, target: str) -> BackendError:
    return BackendError(
        ErrorKind.TYPE_CAST_ERROR, f"cannot read {kind(value)} as {target}"
    )


def coerce_value(value, as_type: ast.AsType):
    """Coerce a non-null value to the requested type (may raise)."""
    if as_type is ast.AsType.VALUE:
        return value
    if value is None:
        raise BackendError(ErrorKind.NULL_ACCESS, f"null read as {as_type.value}")
    k = kind(value)
    if as_type is ast.AsType.STRING:
        if k == "str":
            return value
        if k == "bool":
            return "true" if value else "false"
        if k in ("int", "dec", "arr", "obj"):
            return canonical(value)
        raise _cast_error(value, "string")
    if as_type is ast.AsType.INTEGER:
        if k == "int":
            return value
        if k == "dec":
            if value == value.to_integral_value() and INT64_MIN <= value <= INT64_MAX:
                return int(value)
            raise _cast_error(value, "integer")
        if k == "str":
            if _INT_RE.match(value):
                n = int(value)
                if INT64_MIN <= n <= INT64_MAX:
                    return n
            raise _cast_error(value, "integer")
        raise _cast_error(value, "integer")
    if as_type is ast.AsType.DECIMAL:
        if k == "dec":
            return value
        if k == "int":
            return Decimal(value)
        if k == "str":
            if _NUMBER_RE.match(value):
                return Decimal(value)
            raise _cast_error(value, "decimal")
        raise _cast_error(value, "decimal")
    if as_type is ast.AsType.BOOLEAN:
        if k == "bool":
            return value
        if k == "str" and value in ("true", "false"):
            return value == "true"
        raise _cast_error(value, "boolean")
    if as_type is ast.AsType.OBJECT:
        if k == "obj":
            return value
        raise _cast_error(value, "object")
    if as_type is ast.AsType.ARRAY:
        if k == "arr":
            return value
        raise _cast_error(value, "array")
    raise AssertionError(as_type)


_PRIM_AS_TYPE = {
    "string": ast.AsType.STRING,
    "integer": ast.AsType.INTEGER,
    "decimal": ast.AsType.DECIMAL,
    "boolean": ast.AsType.BOOLEAN,
}


def _wrap_int64(d: Decimal) -> Decimal:
    """Two's-complement wrap of an integral decimal into 64-bit range.

    Works on the coefficient tuple with modular arithmetic so extreme
    exponents never materialize astronomically large integers.
    """
    sign, digits, exponent = d.as_tuple()
    digits = list(digits)
    while exponent < 0 and digits and digits[-1] == 0:
        digits.pop()
        exponent += 1
    # the caller guarantees integrality, so the exponent is now >= 0
    coefficient = int("".join(map(str, digits)) or "0")
    n = coefficient * pow(10, exponent, 1 << 64) % (1 << 64)
    if sign:
        n = -n % (1 << 64)
    return Decimal(((n + 2**63) % 2**64) - 2**63)


def bind_field(
    value,
    ftype: ast.FieldType,
    beans: Mapping[str, ast.BeanDef],
    *,
    wrap_decimal_overflow: bool = False,
):
    """Coerce one incoming value to a bean field type. Null stays null."""
    if value is None:
        return None
    if isinstance(ftype, ast.Prim):
        if (
            wrap_decimal_overflow
            and ftype.name == "decimal"
            and isinstance(value, Decimal)
            and value == value.to_integral_value()
            and not (INT64_MIN <= value <= INT64_MAX)
        ):
            return _wrap_int64(value)
        return coerce_value(value, _PRIM_AS_TYPE[ftype.name])
    if isinstance(ftype, ast.BeanRef):
        if kind(value) != "obj":
            raise _cast_error(value, f"bean {ftype.name}")
        return bind_bean(
            value, beans[ftype.name], beans, wrap_decimal_overflow=wrap_decimal_overflow
        )
    if isinstance(ftype, ast.ListOf):
        if kind(value) != "arr":
            raise _cast_error(value, "list")
        return [
            bind_field(item, ftype.element, beans, wrap_decimal_overflow=wrap_decimal_overflow)
            for item in value
        ]
    raise AssertionError(ftype)


def bind_bean(
    obj: dict,
    bean: ast.BeanDef,
    beans: Mapping[str, ast.BeanDef],
    *,
    wrap_decimal_overflow: bool = False,
) -> dict:
    """Shape a parsed object to a bean: declared fields, declared order.

    Missing fields become null; undeclared incoming keys are dropped.
    """
    return {
        field.name: bind_field(
            obj.get(field.name),
            field.type,
            beans,
            wrap_decimal_overflow=wrap_decimal_overflow,
        )
        for field in bean.fields
    }
