"""Seeded random script generator for property tests.

Deterministic: the same Random seed always yields the same scripts.
Generated scripts are always valid (assertions present, variables
bound, beans acyclic) and survive the printer/parser round trip, so
they exercise every expression variant without hand-holding.
"""

from __future__ import annotations

import random
import string
from decimal import Decimal

from jsonduel.tdsl import ast
from jsonduel.values import dump_value

_KEYS = ["a", "b", "data", "items", "name", "value", "x", "y"]
_FEATURES_R = list(ast.ReaderFeature)
_FEATURES_W = list(ast.WriterFeature)
_AS_TYPES = list(ast.AsType)
_PRIMS = ["string", "integer", "decimal", "boolean"]


class ScriptGen:
    def __init__(self, rng: random.Random):
        self.rng = rng

    # -- values --

    def json_value(self, depth: int = 0):
        choices = ["null", "bool", "int", "dec", "str"]
        if depth < 2:
            choices += ["arr", "obj"]
        kind = self.rng.choice(choices)
        if kind == "null":
            return None
        if kind == "bool":
            return self.rng.random() < 0.5
        if kind == "int":
            return self.rng.randint(-10_000, 10_000)
        if kind == "dec":
            return self.decimal()
        if kind == "str":
            return self.text()
        if kind == "arr":
            return [self.json_value(depth + 1) for _ in range(self.rng.randint(0, 3))]
        return {
            key: self.json_value(depth + 1)
            for key in self.rng.sample(_KEYS, self.rng.randint(0, 3))
        }

    def decimal(self) -> Decimal:
        # Never exponent 0: a scale-0 in-range decimal prints as a bare
        # integer token and would re-parse as Int, not Dec.
        whole = self.rng.randint(-999, 999)
        frac = self.rng.randint(0, 9999)
        if self.rng.random() < 0.3:
            d = Decimal(f"{whole}.{frac}E{self.rng.randint(-6, 6)}")
            if d.as_tuple().exponent != 0:
                return d
        return Decimal(f"{whole}.{frac}")

    def text(self) -> str:
        alphabet = string.ascii_letters + string.digits + ' _-\\"\n\t{}[]'
        n = self.rng.randint(0, 10)
        return "".join(self.rng.choice(alphabet) for _ in range(n))

    # -- script parts --

    def features(self, pool) -> tuple:
        n = self.rng.randint(0, 2)
        return tuple(self.rng.sample(pool, n))

    def beans(self) -> tuple[ast.BeanDef, ...]:
        count = self.rng.choice([0, 0, 1, 2])
        beans: list[ast.BeanDef] = []
        for i in range(count):
            fields = []
            for j in range(self.rng.randint(1, 3)):
                ftype: ast.FieldType = ast.Prim(self.rng.choice(_PRIMS))
                if self.rng.random() < 0.2:
                    ftype = ast.ListOf(ftype)
                elif beans and self.rng.random() < 0.2:
                    # only reference earlier beans: acyclic by construction
                    ftype = ast.BeanRef(beans[self.rng.randrange(len(beans))].name)
                fields.append(ast.BeanField(f"f{j}", ftype))
            beans.append(ast.BeanDef(f"B{i}", tuple(fields)))
        return tuple(beans)

    def expr(self, bound: list[str], beans: tuple[ast.BeanDef, ...], depth: int = 0) -> ast.Expr:
        leafs = ["lit", "str"]
        if bound:
            leafs += ["var", "var"]
        if depth >= 3:
            return self._leaf(self.rng.choice(leafs), bound)
        kinds = leafs + [
            "parse", "parse_typed", "serialize", "get", "path_eval",
            "is_valid", "size", "strip_zeros",
        ]
        if beans:
            kinds.append("make_bean")
        kind = self.rng.choice(kinds)
        if kind in ("lit", "str", "var"):
            return self._leaf(kind, bound)
        if kind == "parse":
            return ast.ParseValue(self.text_expr(bound, beans, depth), self.features(_FEATURES_R))
        if kind == "parse_typed":
            if not beans:
                return self._leaf("lit", bound)
            bean = self.rng.choice(beans).name
            return ast.ParseTyped(
                self.text_expr(bound, beans, depth), bean, self.features(_FEATURES_R)
            )
        if kind == "serialize":
            return ast.Serialize(self.expr(bound, beans, depth + 1), self.features(_FEATURES_W))
        if kind == "get":
            accessor = (
                self.rng.choice(_KEYS)
                if self.rng.random() < 0.5
                else self.rng.randint(0, 4)
            )
            return ast.Get(
                self.expr(bound, beans, depth + 1), accessor, self.rng.choice(_AS_TYPES)
            )
        if kind == "path_eval":
            return ast.PathEval(self.expr(bound, beans, depth + 1), self.path())
        if kind == "is_valid":
            return ast.IsValid(self.text_expr(bound, beans, depth))
        if kind == "size":
            return ast.Size(self.expr(bound, beans, depth + 1))
        if kind == "strip_zeros":
            return ast.StripZeros(self.expr(bound, beans, depth + 1))
        if kind == "make_bean":
            bean = self.rng.choice(beans)
            names = [f.name for f in bean.fields]
            chosen = self.rng.sample(names, self.rng.randint(0, len(names)))
            return ast.MakeBean(
                bean.name,
                tuple((name, self.expr(bound, beans, depth + 1)) for name in chosen),
            )
        raise AssertionError(kind)

    def _leaf(self, kind: str, bound: list[str]) -> ast.Expr:
        if kind == "var":
            return ast.Var(self.rng.choice(bound))
        if kind == "str":
            return ast.Str(self.text())
        value = self.json_value()
        if isinstance(value, str):
            return ast.Str(value)
        return ast.Lit(value)

    def text_expr(self, bound, beans, depth) -> ast.Expr:
        roll = self.rng.random()
        if roll < 0.5:
            return ast.Str(dump_value(self.json_value(), write_nulls=True))
        if roll < 0.7:
            return ast.Str(self.text())
        return self.expr(bound, beans, depth + 1)

    def path(self) -> str:
        steps = []
        for _ in range(self.rng.randint(0, 3)):
            if self.rng.random() < 0.5:
                steps.append("." + self.rng.choice(_KEYS))
            else:
                steps.append(f"[{self.rng.randint(0, 4)}]")
        return "$" + "".join(steps)

    def script(self) -> ast.Script:
        beans = self.beans()
        bound: list[str] = []
        statements: list[ast.Statement] = []
        for i in range(self.rng.randint(0, 5)):
            name = f"v{i}"
            statements.append(ast.Let(name, self.expr(bound, beans)))
            bound.append(name)
        for _ in range(self.rng.randint(1, 3)):
            statements.append(self.assertion(bound, beans))
        return ast.Script(beans, tuple(statements))

    def assertion(self, bound, beans) -> ast.Statement:
        kind = self.rng.choice(["eq", "null", "not_null", "throws"])
        if kind == "eq":
            return ast.AssertEq(self.expr(bound, beans), self.expr(bound, beans))
        if kind == "null":
            return ast.AssertNull(self.expr(bound, beans))
        if kind == "not_null":
            return ast.AssertNotNull(self.expr(bound, beans))
        return ast.AssertThrows(self.expr(bound, beans))


def generate_scripts(seed: int, count: int) -> list[ast.Script]:
    gen = ScriptGen(random.Random(seed))
    return [gen.script() for _ in range(count)]
