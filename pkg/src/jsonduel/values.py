"""Shared JSON value model.

All engines and the script executor exchange JSON data as plain Python
values: ``None``, ``bool``, ``int`` (signed 64-bit), ``decimal.Decimal``
(arbitrary-precision, exact digits), ``str``, ``list`` and ``dict``
(insertion-ordered). Integers outside the signed 64-bit range are always
represented as ``Decimal`` so that exactness never silently degrades.
"""

from __future__ import annotations

import json
from decimal import Decimal

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def kind(value) -> str:
    """Return the value's kind name: null/bool/int/dec/str/arr/obj."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "bool"
    if isinstance(value, int):
        return "int"
    if isinstance(value, Decimal):
        return "dec"
    if isinstance(value, str):
        return "str"
    if isinstance(value, list):
        return "arr"
    if isinstance(value, dict):
        return "obj"
    raise TypeError(f"not a JSON value: {type(value).__name__}")


def is_value(value) -> bool:
    """Check recursively that `value` is a well-formed JSON value."""
    try:
        k = kind(value)
    except TypeError:
        return False
    if k == "int":
        return INT64_MIN <= value <= INT64_MAX
    if k == "arr":
        return all(is_value(item) for item in value)
    if k == "obj":
        return all(isinstance(key, str) and is_value(item) for key, item in value.items())
    return True


def make_int(n: int):
    """Wrap an integer, promoting to Decimal when it exceeds 64-bit range."""
    if INT64_MIN <= n <= INT64_MAX:
        return n
    return Decimal(n)


def values_equal(a, b) -> bool:
    """Structural equality over JSON values.

    Type-strict across kinds (Int 1 != Dec 1, mirroring typed-language
    number classes). Decimals compare by exact digits and scale, so
    Dec 1.0 != Dec 1. Objects compare as maps: same keys and values,
    insertion order not significant.
    """
    ka, kb = kind(a), kind(b)
    if ka != kb:
        return False
    if ka == "dec":
        return a.as_tuple() == b.as_tuple()
    if ka == "arr":
        return len(a) == len(b) and all(values_equal(x, y) for x, y in zip(a, b))
    if ka == "obj":
        if a.keys() != b.keys():
            return False
        return all(values_equal(a[key], b[key]) for key in a)
    return a == b


def strip_trailing_zeros(value):
    """Drop trailing zeros from a Decimal's coefficient (scale-adjusting).

    Ints pass through unchanged; Dec 1.10 becomes Dec 1.1 and Dec 100
    becomes Dec 1E+2, matching big-decimal normalization semantics.
    Implemented on the coefficient tuple directly: Decimal.normalize()
    is context-bounded and overflows on extreme exponents.
    """
    if isinstance(value, bool) or not isinstance(value, (int, Decimal)):
        raise TypeError(f"cannot strip zeros from {kind(value)}")
    if isinstance(value, int):
        return value
    sign, digits, exponent = value.as_tuple()
    digits = list(digits)
    while len(digits) > 1 and digits[-1] == 0:
        digits.pop()
        exponent += 1
    if digits == [0]:
        exponent = 0
    return Decimal((sign, tuple(digits), exponent))


def _format_decimal(d: Decimal) -> str:
    if not d.is_finite():
        raise ValueError("non-finite decimals cannot be serialized")
    return str(d)


def _scalar_text(value) -> str:
    """Unquoted canonical text of a scalar (used for quoting features)."""
    k = kind(value)
    if k == "null":
        return "null"
    if k == "bool":
        return "true" if value else "false"
    if k == "int":
        return str(value)
    if k == "dec":
        return _format_decimal(value)
    raise TypeError(f"not a scalar: {k}")


def dump_value(
    value,
    *,
    write_nulls: bool = False,
    bool_as_number: bool = False,
    nonstring_as_string: bool = False,
    pretty: bool = False,
    quote_bools: bool = True,
) -> str:
    """Serialize a JSON value to text.

    Defaults produce the canonical form: compact separators, insertion
    order preserved, exact decimal digits, null-valued object members
    omitted. `quote_bools` exists so a planted engine can reproduce the
    boolean-quoting defect under `nonstring_as_string`.
    """
    out: list[str] = []
    _dump(value, out, 0, write_nulls, bool_as_number, nonstring_as_string, pretty, quote_bools)
    return "".join(out)


def canonical(value) -> str:
    """Canonical serialization: the stable text used in failure reprs."""
    return dump_value(value)


def _dump(value, out, depth, write_nulls, bool_as_number, nonstring_as_string, pretty, quote_bools):
    k = kind(value)
    if k == "bool" and bool_as_number:
        value, k = (1 if value else 0), "int"
    if k in ("int", "dec", "bool"):
        text = _scalar_text(value)
        if nonstring_as_string and (k != "bool" or quote_bools):
            out.append(json.dumps(text))
        else:
            out.append(text)
        return
    if k == "null":
        out.append("null")
        return
    if k == "str":
        out.append(json.dumps(value, ensure_ascii=False))
        return

    indent = "  " * (depth + 1) if pretty else ""
    closing_indent = "  " * depth if pretty else ""
    sep = ",\n" if pretty else ","
    if k == "arr":
        if not value:
            out.append("[]")
            return
        out.append("[\n" if pretty else "[")
        for i, item in enumerate(value):
            if i:
                out.append(sep)
            out.append(indent)
            _dump(item, out, depth + 1, write_nulls, bool_as_number, nonstring_as_string, pretty, quote_bools)
        out.append(f"\n{closing_indent}]" if pretty else "]")
        return

    entries = [(key, item) for key, item in value.items() if write_nulls or item is not None]
    if not entries:
        out.append("{}")
        return
    out.append("{\n" if pretty else "{")
    for i, (key, item) in enumerate(entries):
        if i:
            out.append(sep)
        out.append(indent)
        out.append(json.dumps(key, ensure_ascii=False))
        out.append(": " if pretty else ":")
        _dump(item, out, depth + 1, write_nulls, bool_as_number, nonstring_as_string, pretty, quote_bools)
    out.append(f"\n{closing_indent}}}" if pretty else "}")
