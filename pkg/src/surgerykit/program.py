"""The surgery-program language: parse and execute scripts.

Statement-oriented, `;`-terminated, `#` comments, no control flow.
Bindings name values (diagrams, framed links, surfaces, manifold
expressions, meshes); `print` queries append to the JSON report;
`emit` writes mesh bytes to declared paths.  Reports are deterministic
byte for byte: same script, same report.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from . import diagrams, levelsets, manifolds, reconnect, surfaces
from .coset import todd_coxeter
from .dehn import FramedLink, h1_of_surgery, surgery_group
from .errors import ScriptError, SurgeryKitError
from .homology import AbelianGroupDecomp
from .presentations import tietze_simplify

SCHEMA_VERSION = 1

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>\#[^\n]*)
      | (?P<string>"[^"\n]*")
      | (?P<float>-?\d+\.\d*)
      | (?P<int>-?\d+)
      | (?P<arrow>->)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_-]*)
      | (?P<sym>[()\[\],;=])
    """,
    re.VERBOSE,
)

_BINDING_KEYWORDS = ("link", "framed", "surface", "manifold", "surgery", "mesh", "mesh-seq")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ScriptError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    return tokens


@dataclass(frozen=True)
class Statement:
    kind: str  # "bind" | "print" | "emit"
    line: int
    col: int
    target: str | None = None
    type_keyword: str | None = None
    expr: tuple | None = None  # ("op", args...)
    query: tuple | None = None
    path: str | None = None


@dataclass
class Program:
    statements: list[Statement]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else Token("", "", 1, 1)
            raise ScriptError("unexpected end of input", last.line, last.col)
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text:
            raise ScriptError(f"expected {text!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def expect_kind(self, kind: str) -> Token:
        tok = self.next()
        if tok.kind != kind:
            raise ScriptError(f"expected {kind}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def parse_int(self) -> int:
        tok = self.expect_kind("int")
        return int(tok.text)

    def parse_int_list(self) -> list[int]:
        self.expect("[")
        values = []
        if self.peek() and self.peek().text != "]":
            values.append(self.parse_int())
            while self.peek() and self.peek().text == ",":
                self.next()
                values.append(self.parse_int())
        self.expect("]")
        return values

    def parse_number(self) -> float | int:
        tok = self.next()
        if tok.kind == "int":
            return int(tok.text)
        if tok.kind == "float":
            return float(tok.text)
        raise ScriptError(f"expected a number, found {tok.text!r}", tok.line, tok.col)

    def parse_kwargs(self) -> dict:
        self.expect("(")
        out = {}
        while True:
            name = self.expect_kind("ident").text
            self.expect("=")
            out[name] = self.parse_number()
            tok = self.next()
            if tok.text == ")":
                return out
            if tok.text != ",":
                raise ScriptError(f"expected ',' or ')', found {tok.text!r}", tok.line, tok.col)

    def parse_site(self):
        tok = self.next()
        if tok.kind == "int":
            return int(tok.text)
        if tok.kind == "ident" and re.fullmatch(r"o\d+", tok.text):
            return tok.text
        raise ScriptError(f"expected an edge label or o<k>, found {tok.text!r}", tok.line, tok.col)

    def parse_call_args(self):
        """Arguments of a query call: names or integers."""
        self.expect("(")
        args = []
        kwargs = {}
        while self.peek() and self.peek().text != ")":
            tok = self.next()
            if tok.kind == "ident" and self.peek() and self.peek().text == "=":
                self.next()
                kwargs[tok.text] = self.parse_number()
            elif tok.kind == "ident":
                args.append(tok.text)
            elif tok.kind == "int":
                args.append(int(tok.text))
            else:
                raise ScriptError(f"bad argument {tok.text!r}", tok.line, tok.col)
            if self.peek() and self.peek().text == ",":
                self.next()
        self.expect(")")
        return args, kwargs

    def parse_expr(self) -> tuple:
        tok = self.next()
        text = tok.text
        if text == "pd":
            s = self.expect_kind("string")
            return ("pd", s.text[1:-1])
        if text == "reconnect":
            self.expect("(")
            name = self.expect_kind("ident").text
            self.expect(",")
            a = self.parse_site()
            self.expect(",")
            b = self.parse_site()
            self.expect(",")
            choice = self.expect_kind("ident").text
            self.expect(")")
            return ("reconnect", name, a, b, choice)
        if text == "mirror":
            self.expect("(")
            name = self.expect_kind("ident").text
            self.expect(")")
            return ("mirror", name)
        if text == "surface":
            return ("surface_literal", self.parse_int_list())
        if text == "[":
            self.pos -= 1
            return ("surface_literal", self.parse_int_list())
        if text == "join":
            args, kwargs = self.parse_call_args()
            return ("join", args, kwargs, tok.line, tok.col)
        if text == "join_self":
            args, kwargs = self.parse_call_args()
            return ("join_self", args, kwargs, tok.line, tok.col)
        if text == "unjoin":
            args, kwargs = self.parse_call_args()
            return ("unjoin", args, kwargs, tok.line, tok.col)
        if text == "cut":
            self.expect("(")
            name = self.expect_kind("ident").text
            self.expect(",")
            comp = self.parse_int()
            self.expect(",")
            kind_tok = self.expect_kind("ident")
            split = None
            if kind_tok.text == "split":
                self.expect("(")
                g1 = self.parse_int()
                self.expect(",")
                g2 = self.parse_int()
                self.expect(")")
                split = (g1, g2)
            self.expect(")")
            return ("cut", name, comp, kind_tok.text, split)
        if text == "dehn":
            self.expect("(")
            name = self.expect_kind("ident").text
            self.expect(")")
            return ("dehn", name)
        if text == "levelset":
            return ("levelset", self.parse_kwargs())
        if text == "handle":
            return ("handle", self.parse_kwargs())
        if text == "S3":
            return ("manifold_literal", "S3", None)
        if text == "S1xS2":
            return ("manifold_literal", "S1xS2", None)
        if text == "Poincare":
            return ("manifold_literal", "Poincare", None)
        if text == "L":
            self.expect("(")
            p = self.parse_int()
            self.expect(",")
            q = self.parse_int()
            self.expect(")")
            return ("manifold_literal", "L", (p, q))
        if tok.kind == "ident":
            nxt = self.peek()
            if nxt is not None and nxt.text == "with":
                self.next()
                self.expect("framing")
                framings = self.parse_int_list()
                return ("framed", text, framings)
            return ("name", text)
        raise ScriptError(f"bad expression start {text!r}", tok.line, tok.col)

    def parse_statement(self) -> Statement:
        tok = self.next()
        line, col = tok.line, tok.col
        if tok.text == "print":
            name = self.expect_kind("ident")
            args, kwargs = self.parse_call_args()
            self.expect(";")
            return Statement("print", line, col, query=(name.text, args, kwargs))
        if tok.text == "emit":
            name = self.expect_kind("ident").text
            self.expect("->")
            path = self.expect_kind("string").text[1:-1]
            self.expect(";")
            return Statement("emit", line, col, target=name, path=path)
        type_keyword = None
        if tok.text in _BINDING_KEYWORDS:
            type_keyword = tok.text
            tok = self.next()
        if tok.kind != "ident":
            raise ScriptError(f"expected a name, found {tok.text!r}", tok.line, tok.col)
        target = tok.text
        self.expect("=")
        expr = self.parse_expr()
        self.expect(";")
        return Statement("bind", line, col, target=target, type_keyword=type_keyword, expr=expr)


def parse_program(text: str) -> Program:
    tokens = _tokenize(text)
    parser = _Parser(tokens)
    statements = []
    while parser.peek() is not None:
        statements.append(parser.parse_statement())
    return Program(statements)


# ---------------------------------------------------------------------------
# execution

_TYPE_NAMES = {
    diagrams.LinkDiagram: "link",
    FramedLink: "framed",
    surfaces.SurfaceDescriptor: "surface",
    manifolds.ManifoldExpr: "manifold",
    levelsets.LevelSetMesh: "mesh",
}


def _type_name(value) -> str:
    if isinstance(value, tuple) and value and isinstance(value[0], levelsets.LevelSetMesh):
        return "mesh-seq"
    return _TYPE_NAMES.get(type(value), type(value).__name__)


def _h1_json(h: AbelianGroupDecomp) -> dict:
    return {"rank": h.free_rank, "torsion": list(h.torsion)}


@dataclass
class Report:
    script: str
    results: dict = field(default_factory=dict)
    emitted: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_json_bytes(self) -> bytes:
        payload = {
            "schema": SCHEMA_VERSION,
            "script": self.script,
            "results": self.results,
            "emitted": self.emitted,
            "errors": self.errors,
        }
        return (json.dumps(payload, indent=2) + "\n").encode()


class Interpreter:
    def __init__(self, out_root: str | Path = ".", max_cosets: int = 100_000):
        self.out_root = Path(out_root)
        self.max_cosets = max_cosets
        self.env: dict[str, object] = {}

    # -- helpers

    def lookup(self, name: str, stmt: Statement):
        if name not in self.env:
            raise ScriptError(f"unbound name {name!r}", stmt.line, stmt.col)
        return self.env[name]

    def lookup_typed(self, name: str, types, stmt: Statement, expected: str):
        value = self.lookup(name, stmt)
        if not isinstance(value, types):
            raise ScriptError(
                f"{name!r} is a {_type_name(value)}, expected {expected}", stmt.line, stmt.col
            )
        return value

    # -- expression evaluation

    def evaluate(self, expr: tuple, stmt: Statement):
        op = expr[0]
        if op == "pd":
            return diagrams.parse_pd(expr[1])
        if op == "name":
            return self.lookup(expr[1], stmt)
        if op == "mirror":
            d = self.lookup_typed(expr[1], diagrams.LinkDiagram, stmt, "link")
            return diagrams.mirror(d)
        if op == "reconnect":
            _, name, a, b, choice = expr
            d = self.lookup_typed(name, diagrams.LinkDiagram, stmt, "link")
            site = reconnect.SurgerySite1D(a, b, choice)
            return reconnect.one_dim_zero_surgery(d, site)
        if op == "framed":
            _, name, framings = expr
            d = self.lookup_typed(name, diagrams.LinkDiagram, stmt, "link")
            return FramedLink(d, tuple(framings))
        if op == "surface_literal":
            return surfaces.SurfaceDescriptor(tuple(expr[1]))
        if op == "cut":
            _, name, comp, kind, split = expr
            s = self.lookup_typed(name, surfaces.SurfaceDescriptor, stmt, "surface")
            return surfaces.two_dim_one_surgery(s, surfaces.CutCurve(comp, kind, split))
        if op == "join":
            return self._eval_join(expr, stmt)
        if op == "join_self":
            _, args, kwargs, _, _ = expr
            m = self.lookup_typed(args[0], manifolds.ManifoldExpr, stmt, "manifold")
            c = int(kwargs.get("c", args[1] if len(args) > 1 else 0))
            return manifolds.zero_surgery_expr(m, c, c)
        if op == "unjoin":
            _, args, kwargs, _, _ = expr
            m = self.lookup_typed(args[0], manifolds.ManifoldExpr, stmt, "manifold")
            c = int(kwargs.get("c", args[1] if len(args) > 1 else 0))
            return manifolds.two_surgery_expr(m, c)
        if op == "dehn":
            fl = self.lookup_typed(expr[1], FramedLink, stmt, "framed")
            return manifolds.from_summands(manifolds.surgered(fl))
        if op == "manifold_literal":
            _, kind, params = expr
            if kind == "S3":
                return manifolds.sphere()
            if kind == "S1xS2":
                return manifolds.from_summands(manifolds.S1XS2)
            if kind == "Poincare":
                return manifolds.from_summands(manifolds.POINCARE)
            return manifolds.from_summands(manifolds.lens(*params))
        if op == "levelset":
            kw = expr[1]
            form = levelsets.MorseForm(int(kw["dim"]), int(kw["index"]), float(kw.get("w", 1.0)))
            return levelsets.sample_level_set(form, float(kw["t"]), int(kw["res"]))
        if op == "handle":
            kw = expr[1]
            form = levelsets.MorseForm(int(kw["dim"]), int(kw["index"]), float(kw.get("w", 1.0)))
            return levelsets.handle_slices(form, int(kw["steps"]), int(kw["res"]))
        raise ScriptError(f"unknown expression {op!r}", stmt.line, stmt.col)

    def _eval_join(self, expr, stmt: Statement):
        _, args, kwargs, line, col = expr
        names = [a for a in args if isinstance(a, str)]
        ints = [a for a in args if isinstance(a, int)]
        first = self.lookup(names[0], stmt)
        if isinstance(first, surfaces.SurfaceDescriptor):
            if len(ints) != 2:
                raise ScriptError("surface join needs two component indices", line, col)
            return surfaces.two_dim_zero_surgery(first, surfaces.JoinPoints(ints[0], ints[1]))
        if isinstance(first, manifolds.ManifoldExpr):
            if len(names) == 2:
                other = self.lookup_typed(names[1], manifolds.ManifoldExpr, stmt, "manifold")
                return manifolds.join_expressions(first, other)
            if len(ints) == 2:
                return manifolds.zero_surgery_expr(first, ints[0], ints[1])
            raise ScriptError("manifold join needs a second manifold or two indices", line, col)
        raise ScriptError(f"join does not apply to a {_type_name(first)}", line, col)

    # -- queries

    def _surgered_link(self, value, stmt: Statement) -> FramedLink:
        if isinstance(value, FramedLink):
            return value
        if isinstance(value, manifolds.ManifoldExpr):
            if len(value.components) == 1 and len(value.components[0]) == 1:
                summand = value.components[0][0]
                if summand.kind == "surgered":
                    return summand.framed
        raise ScriptError(
            "this query needs a dehn(...) surgery result", stmt.line, stmt.col
        )

    def query(self, name: str, args: list, kwargs: dict, stmt: Statement):
        if name == "components":
            value = self.lookup(args[0], stmt)
            if isinstance(value, diagrams.LinkDiagram):
                return diagrams.component_count(value)
            if isinstance(value, surfaces.SurfaceDescriptor):
                return len(value.genera)
            if isinstance(value, manifolds.ManifoldExpr):
                return len(value.components)
            raise ScriptError(f"components of a {_type_name(value)}?", stmt.line, stmt.col)
        if name == "lk":
            d = self.lookup_typed(args[0], diagrams.LinkDiagram, stmt, "link")
            return diagrams.linking_number(d, int(args[1]), int(args[2]))
        if name == "writhe":
            d = self.lookup_typed(args[0], diagrams.LinkDiagram, stmt, "link")
            return diagrams.writhe(d)
        if name == "bracket":
            d = self.lookup_typed(args[0], diagrams.LinkDiagram, stmt, "link")
            return str(diagrams.kauffman_bracket(d))
        if name == "genus":
            s = self.lookup_typed(args[0], surfaces.SurfaceDescriptor, stmt, "surface")
            return list(s.genera)
        if name == "chi":
            s = self.lookup_typed(args[0], surfaces.SurfaceDescriptor, stmt, "surface")
            return surfaces.euler_characteristic(s)
        if name == "h1":
            value = self.lookup(args[0], stmt)
            if isinstance(value, FramedLink):
                return _h1_json(h1_of_surgery(value))
            if isinstance(value, manifolds.ManifoldExpr):
                per_comp = [_h1_json(h) for h in manifolds.h1_expr(value)]
                return per_comp[0] if len(per_comp) == 1 else per_comp
            raise ScriptError(f"h1 of a {_type_name(value)}?", stmt.line, stmt.col)
        if name == "order":
            fl = self._surgered_link(self.lookup(args[0], stmt), stmt)
            bound = int(kwargs.get("max", self.max_cosets))
            result = todd_coxeter(tietze_simplify(surgery_group(fl)), bound)
            return result.order if result.is_finite else "exceeded"
        if name == "presentation":
            fl = self._surgered_link(self.lookup(args[0], stmt), stmt)
            p = tietze_simplify(surgery_group(fl))
            return {
                "generators": p.generator_count,
                "relators": [list(rel) for rel in p.relators],
            }
        if name == "counts":
            value = self.lookup(args[0], stmt)
            if isinstance(value, levelsets.LevelSetMesh):
                return value.component_count
            if _type_name(value) == "mesh-seq":
                return [m.component_count for m in value]
            raise ScriptError(f"counts of a {_type_name(value)}?", stmt.line, stmt.col)
        if name == "pairing":
            value = self.lookup(args[0], stmt)
            if isinstance(value, levelsets.LevelSetMesh):
                if value.boundary_pairing is None:
                    return None
                return [list(group) for group in value.boundary_pairing]
            raise ScriptError(f"pairing of a {_type_name(value)}?", stmt.line, stmt.col)
        raise ScriptError(f"unknown query {name!r}", stmt.line, stmt.col)

    # -- emission

    def emit(self, stmt: Statement, report: Report, index: int):
        value = self.lookup(stmt.target, stmt)
        path = Path(stmt.path)
        if path.is_absolute():
            raise ScriptError("emit paths must be relative", stmt.line, stmt.col)

        def write(rel: Path, data: bytes):
            full = self.out_root / rel
            full.parent.mkdir(parents=True, exist_ok=True)
            full.write_bytes(data)
            report.emitted.append(
                {
                    "stmt": index,
                    "path": rel.as_posix(),
                    "bytes": len(data),
                    "sha256": hashlib.sha256(data).hexdigest(),
                }
            )

        if isinstance(value, levelsets.LevelSetMesh):
            fmt = "JSON" if path.suffix.lower() == ".json" else "OBJ"
            write(path, levelsets.emit_mesh(value, fmt))
        elif _type_name(value) == "mesh-seq":
            for k, mesh in enumerate(value):
                write(path / f"slice_{k:02d}.obj", levelsets.emit_mesh(mesh, "OBJ"))
        else:
            raise ScriptError(f"cannot emit a {_type_name(value)}", stmt.line, stmt.col)


def run_program(
    program: Program,
    script_name: str = "<string>",
    out_root: str | Path = ".",
    max_cosets: int = 100_000,
) -> Report:
    report = Report(script=script_name)
    interp = Interpreter(out_root=out_root, max_cosets=max_cosets)
    for index, stmt in enumerate(program.statements):
        try:
            if stmt.kind == "bind":
                value = interp.evaluate(stmt.expr, stmt)
                if stmt.type_keyword is not None:
                    expected = stmt.type_keyword if stmt.type_keyword != "surgery" else "manifold"
                    if _type_name(value) != expected:
                        raise ScriptError(
                            f"{stmt.target!r} binds a {_type_name(value)}, "
                            f"declared {stmt.type_keyword!r}",
                            stmt.line,
                            stmt.col,
                        )
                interp.env[stmt.target] = value
            elif stmt.kind == "print":
                name, args, kwargs = stmt.query
                value = interp.query(name, args, kwargs, stmt)
                arg_text = ", ".join(str(a) for a in args)
                report.results[str(index)] = {
                    "line": stmt.line,
                    "query": f"{name}({arg_text})",
                    "value": value,
                }
            elif stmt.kind == "emit":
                interp.emit(stmt, report, index)
        except ScriptError as exc:
            report.errors.append(
                {
                    "stmt": index,
                    "line": exc.line or stmt.line,
                    "col": exc.column or stmt.col,
                    "message": exc.message,
                }
            )
            break
        except SurgeryKitError as exc:
            report.errors.append(
                {"stmt": index, "line": stmt.line, "col": stmt.col, "message": str(exc)}
            )
            break
    return report
