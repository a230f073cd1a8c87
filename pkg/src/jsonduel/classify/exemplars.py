"""Worked examples embedded in every triage prompt: 2 good, 2 bad.

Each exemplar models one defect class from this harness's own planted
bugs or from the classic getter-misuse pattern, and carries both a
plain answer and a chain-of-thought answer. The result texts are real:
a test re-executes every exemplar script and checks the recorded
outcome line verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Exemplar:
    verdict: str  # "good" | "bad"
    note: str  # defect class the example models
    script_text: str
    result_text: str
    answer_plain: str
    answer_cot: str


EXEMPLARS: tuple[Exemplar, ...] = (
    Exemplar(
        verdict="bad",
        note="typed getter misuse: asserting a decimal against a string read",
        script_text=(
            'let o = parse("{\\"v\\": -2.0089457919266330204e-15}");\n'
            'assert_eq(-2.0089457919266330204E-15, get(o, "v", decimal));\n'
            'assert_eq(-2.0089457919266330204E-15, get(o, "v", string));\n'
        ),
        result_text=(
            "FAILURE: assertion 1 failed: expected -2.0089457919266330204E-15 "
            'but was "-2.0089457919266330204E-15"'
        ),
        answer_plain="The code logic is incorrect. Therefore, this test is a bad test.",
        answer_cot=(
            "The test reports a failure because the assertion is incorrect, "
            "expecting a decimal but getting a string. The relevant code is "
            'get(o, "v", string), which reads the value of key "v" as a string '
            "while the expected value is a decimal. The code logic is incorrect "
            'and it should read the value with get(o, "v", decimal). '
            "Therefore, this test is a bad test."
        ),
    ),
    Exemplar(
        verdict="good",
        note="serialization feature ignored for booleans",
        script_text=(
            "bean Flag { b: boolean; }\n"
            "let f = make_bean(Flag, b = true);\n"
            "let json = serialize(f, [WriteNonStringValueAsString]);\n"
            'assert_eq("{\\"b\\":\\"true\\"}", json);\n'
        ),
        result_text=(
            'FAILURE: assertion 0 failed: expected "{\\"b\\":\\"true\\"}" '
            'but was "{\\"b\\":true}"'
        ),
        answer_plain=(
            "The library ignores the configured serialization setting for the "
            "boolean value. Therefore, this test is a good test."
        ),
        answer_cot=(
            "The test serializes a bean whose boolean field should be written "
            "as a quoted string because WriteNonStringValueAsString is enabled. "
            'The expected output is {"b":"true"} but the library produced '
            '{"b":true}, leaving the boolean unquoted. The test logic follows '
            "the documented feature, so the failure reveals a defect in the "
            "library's serializer. Therefore, this test is a good test."
        ),
    ),
    Exemplar(
        verdict="bad",
        note="out-of-range path index expectation",
        script_text=(
            'let o = {"items": [10, 20]};\n'
            'assert_eq(30, path_eval(o, "$.items[2]"));\n'
        ),
        result_text="FAILURE: assertion 0 failed: expected 30 but was null",
        answer_plain="The code logic is incorrect. Therefore, this test is a bad test.",
        answer_cot=(
            "The array under key items has only two elements, at indexes 0 "
            "and 1, so the path $.items[2] resolves to nothing and the "
            "evaluation correctly yields null. The assertion expects 30, a "
            "value that was never present. The test's expectation is wrong, "
            "not the library. Therefore, this test is a bad test."
        ),
    ),
    Exemplar(
        verdict="good",
        note="64-bit overflow wrap in typed decimal parsing",
        script_text=(
            "bean Box { v: decimal; }\n"
            'let b = parse_typed("{\\"v\\":9223372036854775808}", Box);\n'
            'assert_eq(9223372036854775808, get(b, "v", decimal));\n'
        ),
        result_text=(
            "FAILURE: assertion 0 failed: expected 9223372036854775808 "
            "but was -9223372036854775808"
        ),
        answer_plain=(
            "The library wraps the value instead of keeping it exact. "
            "Therefore, this test is a good test."
        ),
        answer_cot=(
            "The test parses the integer 9223372036854775808, which is one "
            "past the signed 64-bit maximum, into a decimal field that should "
            "hold it exactly. The library returned -9223372036854775808, the "
            "two's-complement wraparound of the input, so precision was lost "
            "inside the parser. The assertion itself is correct. Therefore, "
            "this test is a good test."
        ),
    ),
)
