"""Tokenizer, recursive-descent parser and validator for the test DSL.

Grammar summary (the full EBNF ships in docs/grammar.ebnf): statements
are terminated by ";"; JSON literals, string escaping and number forms
follow RFC 8259; feature lists are bracketed identifier lists. Parsing
is deterministic: identical bytes always yield the identical AST.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import jsontext
from . import ast
from .errors import (
    DslSyntaxError,
    DslValidationError,
    UnboundVariableError,
    UnknownBeanError,
    UnknownFeatureError,
)

_PUNCT = set("{}()[],;:=<>")

_CALL_NAMES = frozenset(
    {"parse", "parse_typed", "serialize", "get", "path_eval", "is_valid",
     "size", "make_bean", "strip_zeros"}
)

_AS_TYPES = {t.value: t for t in ast.AsType}
_READER_FEATURES = {f.value: f for f in ast.ReaderFeature}
_WRITER_FEATURES = {f.value: f for f in ast.WriterFeature}

_MAX_LITERAL_DEPTH = 256


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT | STRING | NUMBER | PUNCT | EOF
    value: object
    line: int
    col: int


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    line = 1
    line_start = 0

    def here() -> tuple[int, int]:
        return line, pos - line_start + 1

    def locate(offset: int) -> tuple[int, int]:
        ln = text.count("\n", 0, offset) + 1
        start = text.rfind("\n", 0, offset) + 1
        return ln, offset - start + 1

    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line += 1
            pos += 1
            line_start = pos
            continue
        if ch in " \t\r":
            pos += 1
            continue
        ln, col = here()
        if ch == '"':
            try:
                value, end = jsontext.scan_string(text, pos)
            except jsontext.JsonTextError as exc:
                eln, ecol = locate(exc.pos)
                raise DslSyntaxError(exc.reason, eln, ecol) from None
            # strings cannot contain raw newlines, so no line tracking needed
            tokens.append(Token("STRING", value, ln, col))
            pos = end
            continue
        if ch == "-" or ch.isdigit():
            try:
                value, end = jsontext.scan_number(text, pos)
            except jsontext.JsonTextError:
                raise DslSyntaxError("invalid number", ln, col) from None
            tokens.append(Token("NUMBER", value, ln, col))
            pos = end
            continue
        if ch.isalpha() or ch == "_":
            end = pos
            while end < len(text) and (text[end].isalnum() or text[end] == "_"):
                end += 1
            tokens.append(Token("IDENT", text[pos:end], ln, col))
            pos = end
            continue
        if ch in _PUNCT:
            tokens.append(Token("PUNCT", ch, ln, col))
            pos += 1
            continue
        raise DslSyntaxError(f"unexpected character {ch!r}", ln, col)

    eol_line, eol_col = (line, pos - line_start + 1)
    tokens.append(Token("EOF", None, eol_line, eol_col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    # -- token helpers --

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise DslSyntaxError(message, tok.line, tok.col)

    def expect_punct(self, ch: str) -> Token:
        tok = self.peek()
        if tok.kind != "PUNCT" or tok.value != ch:
            self.fail(f"expected '{ch}'")
        return self.advance()

    def expect_ident(self, what: str = "identifier") -> Token:
        tok = self.peek()
        if tok.kind != "IDENT":
            self.fail(f"expected {what}")
        return self.advance()

    def at_punct(self, ch: str) -> bool:
        tok = self.peek()
        return tok.kind == "PUNCT" and tok.value == ch

    def at_ident(self, name: str) -> bool:
        tok = self.peek()
        return tok.kind == "IDENT" and tok.value == name

    # -- grammar --

    def script(self) -> ast.Script:
        beans: list[ast.BeanDef] = []
        statements: list[ast.Statement] = []
        while self.peek().kind != "EOF":
            if self.at_ident("bean"):
                beans.append(self.bean_def())
            else:
                statements.append(self.statement())
        return ast.Script(tuple(beans), tuple(statements))

    def bean_def(self) -> ast.BeanDef:
        self.advance()  # 'bean'
        name = self.expect_ident("bean name")
        self.expect_punct("{")
        fields: list[ast.BeanField] = []
        while not self.at_punct("}"):
            fname = self.expect_ident("field name")
            self.expect_punct(":")
            ftype = self.field_type()
            self.expect_punct(";")
            fields.append(ast.BeanField(fname.value, ftype))
        self.expect_punct("}")
        return ast.BeanDef(name.value, tuple(fields))

    def field_type(self) -> ast.FieldType:
        tok = self.expect_ident("field type")
        if tok.value in ast.PRIMITIVE_TYPES:
            return ast.Prim(tok.value)
        if tok.value == "list":
            self.expect_punct("<")
            element = self.field_type()
            self.expect_punct(">")
            return ast.ListOf(element)
        return ast.BeanRef(tok.value)

    def statement(self) -> ast.Statement:
        tok = self.peek()
        if tok.kind != "IDENT":
            self.fail("expected a statement")
        if tok.value == "let":
            self.advance()
            name = self.expect_ident("variable name")
            if name.value in ast.RESERVED_WORDS:
                self.fail(f"'{name.value}' is a reserved word", name)
            self.expect_punct("=")
            expr = self.expr()
            self.expect_punct(";")
            return ast.Let(name.value, expr)
        if tok.value == "assert_eq":
            self.advance()
            self.expect_punct("(")
            expected = self.expr()
            self.expect_punct(",")
            actual = self.expr()
            self.expect_punct(")")
            self.expect_punct(";")
            return ast.AssertEq(expected, actual)
        if tok.value in ("assert_null", "assert_not_null", "assert_throws"):
            self.advance()
            self.expect_punct("(")
            expr = self.expr()
            self.expect_punct(")")
            self.expect_punct(";")
            klass = {
                "assert_null": ast.AssertNull,
                "assert_not_null": ast.AssertNotNull,
                "assert_throws": ast.AssertThrows,
            }[tok.value]
            return klass(expr)
        self.fail(f"unknown statement '{tok.value}'")

    def expr(self) -> ast.Expr:
        tok = self.peek()
        if tok.kind == "STRING":
            self.advance()
            return ast.Str(tok.value)
        if tok.kind == "NUMBER":
            self.advance()
            return ast.Lit(tok.value)
        if tok.kind == "PUNCT" and tok.value in "{[":
            return ast.Lit(self.json_value(0))
        if tok.kind == "IDENT":
            if tok.value == "true":
                self.advance()
                return ast.Lit(True)
            if tok.value == "false":
                self.advance()
                return ast.Lit(False)
            if tok.value == "null":
                self.advance()
                return ast.Lit(None)
            if tok.value in _CALL_NAMES:
                return self.call(tok.value)
            self.advance()
            return ast.Var(tok.value)
        self.fail("expected an expression")

    def call(self, name: str) -> ast.Expr:
        self.advance()
        self.expect_punct("(")
        if name == "parse":
            text = self.expr()
            features = self.optional_features(_READER_FEATURES, "reader")
            self.expect_punct(")")
            return ast.ParseValue(text, features)
        if name == "parse_typed":
            text = self.expr()
            self.expect_punct(",")
            bean = self.expect_ident("bean name")
            features = self.optional_features(_READER_FEATURES, "reader")
            self.expect_punct(")")
            return ast.ParseTyped(text, bean.value, features)
        if name == "serialize":
            value = self.expr()
            features = self.optional_features(_WRITER_FEATURES, "writer")
            self.expect_punct(")")
            return ast.Serialize(value, features)
        if name == "get":
            target = self.expr()
            self.expect_punct(",")
            accessor = self.accessor()
            self.expect_punct(",")
            as_tok = self.expect_ident("result type")
            if as_tok.value not in _AS_TYPES:
                self.fail(f"unknown result type '{as_tok.value}'", as_tok)
            self.expect_punct(")")
            return ast.Get(target, accessor, _AS_TYPES[as_tok.value])
        if name == "path_eval":
            target = self.expr()
            self.expect_punct(",")
            path = self.peek()
            if path.kind != "STRING":
                self.fail("expected a path string")
            self.advance()
            self.expect_punct(")")
            return ast.PathEval(target, path.value)
        if name in ("is_valid", "size", "strip_zeros"):
            inner = self.expr()
            self.expect_punct(")")
            klass = {"is_valid": ast.IsValid, "size": ast.Size, "strip_zeros": ast.StripZeros}[name]
            return klass(inner)
        if name == "make_bean":
            bean = self.expect_ident("bean name")
            assignments: list[tuple[str, ast.Expr]] = []
            while self.at_punct(","):
                self.advance()
                fname = self.expect_ident("field name")
                self.expect_punct("=")
                assignments.append((fname.value, self.expr()))
            self.expect_punct(")")
            return ast.MakeBean(bean.value, tuple(assignments))
        raise AssertionError(name)

    def accessor(self) -> str | int:
        tok = self.peek()
        if tok.kind == "STRING":
            self.advance()
            return tok.value
        if tok.kind == "NUMBER" and isinstance(tok.value, int):
            self.advance()
            return tok.value
        self.fail("expected a key string or integer index")

    def optional_features(self, table: dict, flavor: str) -> tuple:
        if not self.at_punct(","):
            return ()
        self.advance()
        self.expect_punct("[")
        features: list = []
        if not self.at_punct("]"):
            while True:
                tok = self.expect_ident("feature name")
                if tok.value not in table:
                    raise UnknownFeatureError(tok.value, flavor)
                feature = table[tok.value]
                if feature in features:
                    raise DslValidationError(f"duplicate feature '{tok.value}'")
                features.append(feature)
                if self.at_punct(","):
                    self.advance()
                    continue
                break
        self.expect_punct("]")
        return tuple(features)

    def json_value(self, depth: int):
        if depth > _MAX_LITERAL_DEPTH:
            self.fail("literal nesting too deep")
        tok = self.peek()
        if tok.kind == "NUMBER" or tok.kind == "STRING":
            self.advance()
            return tok.value
        if tok.kind == "IDENT" and tok.value in ("true", "false", "null"):
            self.advance()
            return {"true": True, "false": False, "null": None}[tok.value]
        if self.at_punct("["):
            self.advance()
            arr: list = []
            if not self.at_punct("]"):
                while True:
                    arr.append(self.json_value(depth + 1))
                    if self.at_punct(","):
                        self.advance()
                        continue
                    break
            self.expect_punct("]")
            return arr
        if self.at_punct("{"):
            self.advance()
            obj: dict = {}
            if not self.at_punct("}"):
                while True:
                    key = self.peek()
                    if key.kind != "STRING":
                        self.fail("expected object key")
                    self.advance()
                    if key.value in obj:
                        self.fail(f"duplicate object key {key.value!r}", key)
                    self.expect_punct(":")
                    obj[key.value] = self.json_value(depth + 1)
                    if self.at_punct(","):
                        self.advance()
                        continue
                    break
            self.expect_punct("}")
            return obj
        self.fail("expected a JSON value")


def parse_script(text: str) -> ast.Script:
    """Parse DSL source into a validated Script AST."""
    script = _Parser(_tokenize(text)).script()
    validate_script(script)
    return script


def validate_script(script: ast.Script) -> None:
    """Enforce every structural invariant; raises a DslError subclass."""
    beans: dict[str, ast.BeanDef] = {}
    for bean in script.beans:
        if bean.name in ast.RESERVED_WORDS or bean.name in ast.PRIMITIVE_TYPES:
            raise DslValidationError(f"'{bean.name}' cannot be used as a bean name")
        if bean.name in beans:
            raise DslValidationError(f"duplicate bean '{bean.name}'")
        beans[bean.name] = bean
        seen: set[str] = set()
        for field in bean.fields:
            if field.name in seen:
                raise DslValidationError(
                    f"duplicate field '{field.name}' in bean '{bean.name}'"
                )
            seen.add(field.name)

    for bean in script.beans:
        for field in bean.fields:
            _check_field_type(field.type, beans)
    _check_bean_cycles(beans)

    bound: set[str] = set()
    has_assertion = False
    for stmt in script.statements:
        if isinstance(stmt, ast.Let):
            _check_expr(stmt.expr, bound, beans)
            bound.add(stmt.name)
        elif isinstance(stmt, ast.AssertEq):
            _check_expr(stmt.expected, bound, beans)
            _check_expr(stmt.actual, bound, beans)
            has_assertion = True
        elif isinstance(stmt, (ast.AssertNull, ast.AssertNotNull, ast.AssertThrows)):
            _check_expr(stmt.expr, bound, beans)
            has_assertion = True
        else:
            raise DslValidationError(f"unknown statement node {type(stmt).__name__}")
    if not has_assertion:
        raise DslValidationError("script contains no assertions")


def _check_field_type(ftype: ast.FieldType, beans: dict) -> None:
    if isinstance(ftype, ast.BeanRef):
        if ftype.name not in beans:
            raise UnknownBeanError(ftype.name)
    elif isinstance(ftype, ast.ListOf):
        _check_field_type(ftype.element, beans)


def _check_bean_cycles(beans: dict[str, ast.BeanDef]) -> None:
    def refs(ftype: ast.FieldType):
        if isinstance(ftype, ast.BeanRef):
            yield ftype.name
        elif isinstance(ftype, ast.ListOf):
            yield from refs(ftype.element)

    visiting: set[str] = set()
    done: set[str] = set()

    def visit(name: str) -> None:
        if name in done:
            return
        if name in visiting:
            raise DslValidationError(f"recursive bean cycle through '{name}'")
        visiting.add(name)
        for field in beans[name].fields:
            for ref in refs(field.type):
                visit(ref)
        visiting.discard(name)
        done.add(name)

    for name in beans:
        visit(name)


def _check_expr(expr: ast.Expr, bound: set[str], beans: dict) -> None:
    if isinstance(expr, (ast.Lit, ast.Str)):
        return
    if isinstance(expr, ast.Var):
        if expr.name not in bound:
            raise UnboundVariableError(expr.name)
        return
    if isinstance(expr, ast.ParseValue):
        _check_expr(expr.text, bound, beans)
        return
    if isinstance(expr, ast.ParseTyped):
        _check_expr(expr.text, bound, beans)
        if expr.bean not in beans:
            raise UnknownBeanError(expr.bean)
        return
    if isinstance(expr, ast.Serialize):
        _check_expr(expr.value, bound, beans)
        return
    if isinstance(expr, ast.Get):
        _check_expr(expr.target, bound, beans)
        return
    if isinstance(expr, ast.PathEval):
        _check_expr(expr.target, bound, beans)
        return
    if isinstance(expr, (ast.IsValid, )):
        _check_expr(expr.text, bound, beans)
        return
    if isinstance(expr, ast.Size):
        _check_expr(expr.target, bound, beans)
        return
    if isinstance(expr, ast.StripZeros):
        _check_expr(expr.value, bound, beans)
        return
    if isinstance(expr, ast.MakeBean):
        if expr.bean not in beans:
            raise UnknownBeanError(expr.bean)
        fields = {f.name for f in beans[expr.bean].fields}
        seen: set[str] = set()
        for name, value in expr.assignments:
            if name not in fields:
                raise DslValidationError(
                    f"bean '{expr.bean}' has no field '{name}'"
                )
            if name in seen:
                raise DslValidationError(f"duplicate assignment to '{name}'")
            seen.add(name)
            _check_expr(value, bound, beans)
        return
    raise DslValidationError(f"unknown expression node {type(expr).__name__}")
