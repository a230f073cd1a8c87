"""Tests for the text-to-value JSON parser."""

from decimal import Decimal

import pytest

from jsonduel.jsontext import (
    JsonTextError,
    ParseOptions,
    parse_document,
)


class TestBasics:
    def test_scalars(self):
        assert parse_document("null") is None
        assert parse_document("true") is True
        assert parse_document("false") is False
        assert parse_document("42") == 42
        assert parse_document('"hi"') == "hi"

    def test_scalar_root_allowed(self):
        assert parse_document(" 1 ") == 1

    def test_structures(self):
        assert parse_document('{"a": [1, {"b": null}]}') == {"a": [1, {"b": None}]}

    def test_object_preserves_insertion_order(self):
        value = parse_document('{"z": 1, "a": 2, "m": 3}')
        assert list(value) == ["z", "a", "m"]

    def test_empty_containers(self):
        assert parse_document("[]") == []
        assert parse_document("{}") == {}

    @pytest.mark.parametrize(
        "text",
        ["", "tru", "{", "[1,]", '{"a":}', '{"a" 1}', "01", "1.", "+1", "nan",
         '"unterminated', "[1] extra", "'single'"],
    )
    def test_malformed_inputs_rejected(self, text):
        with pytest.raises(JsonTextError):
            parse_document(text)

    def test_duplicate_keys_rejected(self):
        with pytest.raises(JsonTextError, match="duplicate object key"):
            parse_document('{"a": 1, "a": 2}')

    def test_depth_limit(self):
        deep = "[" * 300 + "]" * 300
        with pytest.raises(JsonTextError, match="nesting depth"):
            parse_document(deep)

    def test_raw_control_char_rejected(self):
        with pytest.raises(JsonTextError, match="control character"):
            parse_document('"a\x01b"')


class TestNumbers:
    def test_int64_boundary(self):
        assert parse_document("9223372036854775807") == 2**63 - 1
        assert parse_document("-9223372036854775808") == -(2**63)

    def test_beyond_int64_becomes_exact_decimal(self):
        value = parse_document("9223372036854775808")
        assert isinstance(value, Decimal)
        assert value == Decimal("9223372036854775808")

    def test_fraction_and_exponent_become_decimal(self):
        assert parse_document("1.5") == Decimal("1.5")
        assert parse_document("1e3") == Decimal("1e3")

    def test_exact_digits_preserved(self):
        value = parse_document("0.1000000000000000055511151231257827")
        assert str(value) == "0.1000000000000000055511151231257827"

    def test_negative_zero(self):
        value = parse_document("-0")
        assert value == 0


class TestStringsAndEscapes:
    def test_standard_escapes(self):
        assert parse_document(r'"\n\t\"\\\/"') == '\n\t"\\/'

    def test_unicode_escape(self):
        assert parse_document(r'"é"') == "é"

    def test_surrogate_pair(self):
        assert parse_document(r'"😀"') == "😀"

    def test_invalid_escape(self):
        with pytest.raises(JsonTextError, match="invalid escape"):
            parse_document(r'"\q"')


class TestOptions:
    def test_single_quotes_feature(self):
        options = ParseOptions(single_quotes=True)
        assert parse_document("{'a': 'x'}", options) == {"a": "x"}
        with pytest.raises(JsonTextError):
            parse_document("{'a': 1}")

    def test_trim_strings_applies_to_values_not_keys(self):
        options = ParseOptions(trim_strings=True)
        assert parse_document('{" k ": " x "}', options) == {" k ": "x"}

    def test_trim_strings_root_value(self):
        assert parse_document('" x "', ParseOptions(trim_strings=True)) == "x"

    def test_narrow_integral_floats(self):
        options = ParseOptions(narrow_integral_floats=True)
        assert parse_document("1.0", options) == 1
        assert isinstance(parse_document("1.0", options), int)
        assert parse_document("1e2", options) == 100
        assert parse_document("1.5", options) == Decimal("1.5")

    def test_keep_exact_floats_wins_over_narrowing(self):
        options = ParseOptions(narrow_integral_floats=True, keep_exact_floats=True)
        value = parse_document("1.0", options)
        assert isinstance(value, Decimal)
        assert str(value) == "1.0"

    def test_narrowing_leaves_oversized_integrals_exact(self):
        options = ParseOptions(narrow_integral_floats=True)
        value = parse_document("9.223372036854775808E18", options)
        assert isinstance(value, Decimal)
