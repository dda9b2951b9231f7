"""Syntax tree node types and the deterministic JSON dump used by tooling and tests."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class TypeExpr:
    """A declared type: a builtin name, `char[N]`, or a concept name."""

    base: str                 # "int" | "double" | "bool" | "string" | "void" | "char" | concept name
    size: int | None = None   # only for char arrays, N >= 1
    line: int = 0
    col: int = 0

    def is_char_array(self) -> bool:
        return self.base == "char"

    def __str__(self) -> str:
        if self.is_char_array():
            return f"char[{self.size}]"
        return self.base


@dataclass
class Param:
    type: TypeExpr
    name: str
    line: int = 0
    col: int = 0


# --- expressions ---

@dataclass
class Expr:
    line: int = 0
    col: int = 0


@dataclass
class IntLit(Expr):
    value: int = 0


@dataclass
class FloatLit(Expr):
    value: float = 0.0


@dataclass
class BoolLit(Expr):
    value: bool = False


@dataclass
class StringLit(Expr):
    value: str = ""


@dataclass
class Ident(Expr):
    name: str = ""


@dataclass
class ThisExpr(Expr):
    pass


@dataclass
class SuperExpr(Expr):
    pass


@dataclass
class SubExpr(Expr):
    pass


@dataclass
class ValueExpr(Expr):
    """The implicit `value` argument inside a property setter."""


@dataclass
class MemberAccess(Expr):
    obj: Expr = None  # type: ignore[assignment]
    name: str = ""


@dataclass
class Call(Expr):
    callee: Expr = None  # type: ignore[assignment]  # Ident or MemberAccess
    args: list[Expr] = field(default_factory=list)


@dataclass
class Unary(Expr):
    op: str = ""
    operand: Expr = None  # type: ignore[assignment]


@dataclass
class Binary(Expr):
    op: str = ""
    left: Expr = None  # type: ignore[assignment]
    right: Expr = None  # type: ignore[assignment]


# --- statements ---

@dataclass
class Stmt:
    line: int = 0
    col: int = 0


@dataclass
class Block(Stmt):
    stmts: list[Stmt] = field(default_factory=list)


@dataclass
class VarDecl(Stmt):
    type: TypeExpr = None  # type: ignore[assignment]
    name: str = ""
    init: Expr = None  # type: ignore[assignment]


@dataclass
class Assign(Stmt):
    target: Expr = None  # type: ignore[assignment]  # Ident or MemberAccess
    value: Expr = None  # type: ignore[assignment]


@dataclass
class ExprStmt(Stmt):
    expr: Expr = None  # type: ignore[assignment]


@dataclass
class If(Stmt):
    cond: Expr = None  # type: ignore[assignment]
    then_stmt: Stmt = None  # type: ignore[assignment]
    else_stmt: Stmt | None = None


@dataclass
class While(Stmt):
    cond: Expr = None  # type: ignore[assignment]
    body: Stmt = None  # type: ignore[assignment]


@dataclass
class Return(Stmt):
    expr: Expr | None = None


# --- declarations ---

@dataclass
class FieldDecl:
    """A reference field (direction "none") or a bodiless object field (direction "out").

    Direction "in" is syntactically representable so the resolver can reject it
    with a targeted diagnostic instead of a generic parse error.
    """

    visibility: str
    direction: str  # "none" | "out" | "in"
    type: TypeExpr
    name: str
    line: int = 0
    col: int = 0

    @property
    def kind(self) -> str:
        return "reference-field" if self.direction == "none" else "object-field"


@dataclass
class MethodDecl:
    visibility: str
    direction: str  # "in" | "out"
    return_type: TypeExpr
    name: str
    params: list[Param]
    body: Block
    line: int = 0
    col: int = 0


@dataclass
class PropertyDecl:
    visibility: str
    direction: str  # "out"; anything else is a resolver diagnostic
    type: TypeExpr
    name: str
    getter: Block | None
    setter: Block | None
    line: int = 0
    col: int = 0


MemberDecl = FieldDecl | MethodDecl | PropertyDecl


@dataclass
class ConceptDecl:
    name: str
    parent: str | None
    members: list[MemberDecl]
    line: int = 0
    col: int = 0


@dataclass
class FuncDecl:
    return_type: TypeExpr
    name: str
    params: list[Param]
    body: Block
    line: int = 0
    col: int = 0


@dataclass
class Program:
    concepts: list[ConceptDecl]
    functions: list[FuncDecl]


# --- tree dump ---

def _dump_expr(e: Expr) -> dict:
    loc = {"line": e.line, "col": e.col}
    if isinstance(e, IntLit):
        return {"kind": "int", "value": e.value, **loc}
    if isinstance(e, FloatLit):
        return {"kind": "double", "value": repr(e.value), **loc}
    if isinstance(e, BoolLit):
        return {"kind": "bool", "value": e.value, **loc}
    if isinstance(e, StringLit):
        return {"kind": "string", "value": e.value, **loc}
    if isinstance(e, Ident):
        return {"kind": "ident", "name": e.name, **loc}
    if isinstance(e, ThisExpr):
        return {"kind": "this", **loc}
    if isinstance(e, SuperExpr):
        return {"kind": "super", **loc}
    if isinstance(e, SubExpr):
        return {"kind": "sub", **loc}
    if isinstance(e, ValueExpr):
        return {"kind": "value", **loc}
    if isinstance(e, MemberAccess):
        return {"kind": "member", "name": e.name, "object": _dump_expr(e.obj), **loc}
    if isinstance(e, Call):
        return {"kind": "call", "callee": _dump_expr(e.callee),
                "args": [_dump_expr(a) for a in e.args], **loc}
    if isinstance(e, Unary):
        return {"kind": "unary", "op": e.op, "operand": _dump_expr(e.operand), **loc}
    if isinstance(e, Binary):
        return {"kind": "binary", "op": e.op, "left": _dump_expr(e.left),
                "right": _dump_expr(e.right), **loc}
    raise TypeError(f"unknown expression node {e!r}")


def _dump_stmt(s: Stmt) -> dict:
    loc = {"line": s.line, "col": s.col}
    if isinstance(s, Block):
        return {"kind": "block", "stmts": [_dump_stmt(x) for x in s.stmts], **loc}
    if isinstance(s, VarDecl):
        return {"kind": "var-decl", "name": s.name, "type": str(s.type),
                "init": _dump_expr(s.init), **loc}
    if isinstance(s, Assign):
        return {"kind": "assign", "target": _dump_expr(s.target),
                "value": _dump_expr(s.value), **loc}
    if isinstance(s, ExprStmt):
        return {"kind": "expr-stmt", "expr": _dump_expr(s.expr), **loc}
    if isinstance(s, If):
        node = {"kind": "if", "cond": _dump_expr(s.cond), "then": _dump_stmt(s.then_stmt)}
        node["else"] = _dump_stmt(s.else_stmt) if s.else_stmt is not None else None
        node.update(loc)
        return node
    if isinstance(s, While):
        return {"kind": "while", "cond": _dump_expr(s.cond), "body": _dump_stmt(s.body), **loc}
    if isinstance(s, Return):
        return {"kind": "return",
                "expr": _dump_expr(s.expr) if s.expr is not None else None, **loc}
    raise TypeError(f"unknown statement node {s!r}")


def _dump_params(params: list[Param]) -> list[dict]:
    return [{"name": p.name, "type": str(p.type)} for p in params]


def _dump_member(m: MemberDecl) -> dict:
    if isinstance(m, FieldDecl):
        node = {"kind": m.kind, "name": m.name, "visibility": m.visibility,
                "type": str(m.type)}
        if m.direction != "none":
            node["direction"] = m.direction
        node.update({"line": m.line, "col": m.col})
        return node
    if isinstance(m, MethodDecl):
        return {"kind": "method", "name": m.name, "direction": m.direction,
                "visibility": m.visibility, "returns": str(m.return_type),
                "params": _dump_params(m.params), "body": _dump_stmt(m.body),
                "line": m.line, "col": m.col}
    if isinstance(m, PropertyDecl):
        return {"kind": "property", "name": m.name, "direction": m.direction,
                "visibility": m.visibility, "type": str(m.type),
                "get": _dump_stmt(m.getter) if m.getter is not None else None,
                "set": _dump_stmt(m.setter) if m.setter is not None else None,
                "line": m.line, "col": m.col}
    raise TypeError(f"unknown member node {m!r}")


def dump_tree(program: Program) -> str:
    """Render a parsed program as compact, byte-stable JSON.

    Key order is fixed by construction; identical trees always produce
    identical bytes.
    """
    doc = {
        "concepts": [
            {"kind": "concept", "name": c.name, "parent": c.parent,
             "members": [_dump_member(m) for m in c.members],
             "line": c.line, "col": c.col}
            for c in program.concepts
        ],
        "functions": [
            {"kind": "func", "name": f.name, "returns": str(f.return_type),
             "params": _dump_params(f.params), "body": _dump_stmt(f.body),
             "line": f.line, "col": f.col}
            for f in program.functions
        ],
    }
    return json.dumps(doc, separators=(",", ":"))
