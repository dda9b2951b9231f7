"""Static resolution: the inclusion hierarchy, per-concept dual member tables,
and the body checks that reject ill-formed programs before execution.

Resolution collects diagnostics instead of failing fast, so one run reports
every independent error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import ast_nodes as ast
from .errors import StaticError

BUILTIN_TYPE_NAMES = ("int", "double", "bool", "string", "void", "char")
BUILTIN_FUNCTIONS = {"print": 1, "str": 1}

PUBLIC = "public"
PROTECTED = "protected"
PRIVATE = "private"


@dataclass
class FieldInfo:
    """A reference field: one slot in the concept's reference segment."""

    name: str
    visibility: str
    type: ast.TypeExpr
    concept: str
    line: int
    col: int


@dataclass
class MethodInfo:
    name: str
    direction: str  # "in" | "out"
    visibility: str
    return_type: ast.TypeExpr
    params: list[ast.Param]
    body: ast.Block
    concept: str
    line: int
    col: int


@dataclass
class PropertyInfo:
    """An outgoing property; auto-backed ones are desugared object fields."""

    name: str
    visibility: str
    type: ast.TypeExpr
    getter: ast.Block | None
    setter: ast.Block | None
    auto_backed: bool
    concept: str
    line: int
    col: int

    def has_getter(self) -> bool:
        return self.auto_backed or self.getter is not None

    def has_setter(self) -> bool:
        return self.auto_backed or self.setter is not None


@dataclass
class FuncInfo:
    name: str
    return_type: ast.TypeExpr
    params: list[ast.Param]
    body: ast.Block
    line: int
    col: int


@dataclass
class ConceptInfo:
    name: str
    parent: str | None
    fields: list[FieldInfo] = field(default_factory=list)
    field_index: dict[str, int] = field(default_factory=dict)
    in_methods: dict[str, MethodInfo] = field(default_factory=dict)
    out_methods: dict[str, MethodInfo] = field(default_factory=dict)
    properties: dict[str, PropertyInfo] = field(default_factory=dict)
    line: int = 0
    col: int = 0


class ConceptTable:
    """Resolved concepts, free functions, and the shared member-search rules.

    The find_* helpers implement the visibility-filtered searches used both by
    the static body checker and by runtime dispatch; indices are 0-based
    positions into the given chain (outermost first).
    """

    def __init__(self) -> None:
        self.concepts: dict[str, ConceptInfo] = {}
        self.functions: dict[str, FuncInfo] = {}
        self._chains: dict[str, list[str]] = {}

    def chain_of(self, name: str) -> list[str]:
        """Root-first ancestor chain ending at `name`."""
        cached = self._chains.get(name)
        if cached is not None:
            return cached
        if name not in self.concepts:
            raise KeyError(f"unknown concept {name!r}")
        chain: list[str] = []
        current: str | None = name
        while current is not None:
            if current in chain:
                raise ValueError(f"inclusion cycle through {current!r}")
            chain.append(current)
            current = self.concepts[current].parent
        chain.reverse()
        self._chains[name] = chain
        return chain

    def visible(self, owner: str, visibility: str, from_concept: str | None) -> bool:
        """Lexical visibility: `from_concept` is the concept whose member text
        contains the access, or None for free functions / external callers."""
        if visibility == PUBLIC:
            return True
        if from_concept is None:
            return False
        if visibility == PRIVATE:
            return from_concept == owner
        return owner in self.chain_of(from_concept)  # protected

    def find_incoming(self, chain: list[str], name: str, from_concept: str | None,
                      start: int = 0, parent_rule: bool = False):
        """Smallest index >= start whose concept declares an accessible incoming
        method `name`. With parent_rule (sub dispatch) protected is always
        accessible. Returns ((index, MethodInfo) | None, blocked)."""
        blocked = False
        for i in range(start, len(chain)):
            method = self.concepts[chain[i]].in_methods.get(name)
            if method is None:
                continue
            if parent_rule:
                ok = method.visibility in (PUBLIC, PROTECTED)
            else:
                ok = self.visible(chain[i], method.visibility, from_concept)
            if ok:
                return (i, method), blocked
            blocked = True
        return None, blocked

    def find_outgoing(self, chain: list[str], name: str, from_concept: str | None,
                      upto: int | None = None):
        """Largest index < upto whose concept declares an accessible outgoing
        method or gettable property `name` (innermost wins).
        Returns ((index, MethodInfo | PropertyInfo) | None, blocked)."""
        blocked = False
        end = len(chain) if upto is None else upto
        for i in range(end - 1, -1, -1):
            info = self.concepts[chain[i]]
            member = info.out_methods.get(name)
            if member is None:
                prop = info.properties.get(name)
                if prop is not None and prop.has_getter():
                    member = prop
            if member is None:
                continue
            if self.visible(chain[i], member.visibility, from_concept):
                return (i, member), blocked
            blocked = True
        return None, blocked

    def find_member_read(self, chain: list[str], name: str, from_concept: str | None,
                         upto: int | None = None, start: int = 0):
        """Innermost accessible reference field or property `name` within
        chain[start:upto]. Returns ((index, FieldInfo | PropertyInfo) | None, blocked)."""
        blocked = False
        end = len(chain) if upto is None else upto
        for i in range(end - 1, start - 1, -1):
            info = self.concepts[chain[i]]
            member: FieldInfo | PropertyInfo | None = info.properties.get(name)
            if member is None:
                idx = info.field_index.get(name)
                member = info.fields[idx] if idx is not None else None
            if member is None:
                continue
            if self.visible(chain[i], member.visibility, from_concept):
                return (i, member), blocked
            blocked = True
        return None, blocked


def chain_of(table: ConceptTable, concept: str) -> list[str]:
    """Module-level convenience mirroring ConceptTable.chain_of."""
    return table.chain_of(concept)


# --- table construction ---

def _type_default_void() -> ast.TypeExpr:
    return ast.TypeExpr("void")


def build_table(program: ast.Program) -> tuple[ConceptTable, list[StaticError]]:
    """Build the concept table, collecting every independent structural error."""
    table = ConceptTable()
    errors: list[StaticError] = []

    for decl in program.concepts:
        if decl.name in table.concepts:
            errors.append(StaticError("DuplicateConcept",
                                      f"concept '{decl.name}' is declared more than once",
                                      decl.line, decl.col))
            continue
        table.concepts[decl.name] = ConceptInfo(decl.name, decl.parent,
                                                line=decl.line, col=decl.col)

    for decl in program.concepts:
        info = table.concepts.get(decl.name)
        if info is None or info.line != decl.line or info.col != decl.col:
            continue  # duplicate; only the first declaration populates the table
        if decl.parent is not None and decl.parent not in table.concepts:
            errors.append(StaticError("UnknownParent",
                                      f"concept '{decl.name}' is included in unknown "
                                      f"concept '{decl.parent}'",
                                      decl.line, decl.col))
            info.parent = None
        _collect_members(table, info, decl, errors)

    errors.extend(_find_cycles(table))

    for func in program.functions:
        if func.name in table.functions:
            errors.append(StaticError("DuplicateFunction",
                                      f"function '{func.name}' is declared more than once",
                                      func.line, func.col))
            continue
        table.functions[func.name] = FuncInfo(func.name, func.return_type, func.params,
                                              func.body, func.line, func.col)

    return table, errors


def _collect_members(table: ConceptTable, info: ConceptInfo, decl: ast.ConceptDecl,
                     errors: list[StaticError]) -> None:
    def name_taken_by_property(name: str) -> bool:
        return name in info.properties

    for member in decl.members:
        if isinstance(member, ast.FieldDecl):
            if member.direction == "in":
                errors.append(StaticError("ObjectFieldMustBeOutgoing",
                                          f"field '{member.name}' cannot be incoming; "
                                          "object fields are outgoing",
                                          member.line, member.col))
                continue
            if member.direction == "out":
                _add_property(info, PropertyInfo(member.name, member.visibility, member.type,
                                                 None, None, True, info.name,
                                                 member.line, member.col), errors)
            else:
                if member.name in info.field_index:
                    errors.append(StaticError("DuplicateMember",
                                              f"reference field '{member.name}' is declared "
                                              f"more than once in '{info.name}'",
                                              member.line, member.col))
                    continue
                if name_taken_by_property(member.name):
                    errors.append(StaticError("PropertyNameClash",
                                              f"'{member.name}' is already a property "
                                              f"of '{info.name}'",
                                              member.line, member.col))
                    continue
                info.field_index[member.name] = len(info.fields)
                info.fields.append(FieldInfo(member.name, member.visibility, member.type,
                                             info.name, member.line, member.col))
        elif isinstance(member, ast.MethodDecl):
            bucket = info.in_methods if member.direction == "in" else info.out_methods
            if member.name in bucket:
                errors.append(StaticError("DuplicateMember",
                                          f"{member.direction}coming method '{member.name}' "
                                          f"is declared more than once in '{info.name}'",
                                          member.line, member.col))
                continue
            if name_taken_by_property(member.name):
                errors.append(StaticError("PropertyNameClash",
                                          f"'{member.name}' is already a property of "
                                          f"'{info.name}'",
                                          member.line, member.col))
                continue
            bucket[member.name] = MethodInfo(member.name, member.direction, member.visibility,
                                             member.return_type, member.params, member.body,
                                             info.name, member.line, member.col)
        elif isinstance(member, ast.PropertyDecl):
            if member.direction != "out":
                errors.append(StaticError("ObjectFieldMustBeOutgoing",
                                          f"property '{member.name}' must be outgoing",
                                          member.line, member.col))
                continue
            _add_property(info, PropertyInfo(member.name, member.visibility, member.type,
                                             member.getter, member.setter, False, info.name,
                                             member.line, member.col), errors)


def _add_property(info: ConceptInfo, prop: PropertyInfo, errors: list[StaticError]) -> None:
    if prop.name in info.properties:
        errors.append(StaticError("DuplicateMember",
                                  f"property '{prop.name}' is declared more than once "
                                  f"in '{info.name}'",
                                  prop.line, prop.col))
        return
    if (prop.name in info.field_index or prop.name in info.in_methods
            or prop.name in info.out_methods):
        errors.append(StaticError("PropertyNameClash",
                                  f"property '{prop.name}' collides with another member "
                                  f"of '{info.name}'",
                                  prop.line, prop.col))
        return
    info.properties[prop.name] = prop


def _find_cycles(table: ConceptTable) -> list[StaticError]:
    errors: list[StaticError] = []
    state: dict[str, int] = {}  # 1 = on current walk, 2 = settled
    for name in table.concepts:
        if state.get(name) == 2:
            continue
        walk: list[str] = []
        current: str | None = name
        while current is not None and state.get(current) is None:
            state[current] = 1
            walk.append(current)
            current = table.concepts[current].parent
        if current is not None and state.get(current) == 1 and current in walk:
            cycle = walk[walk.index(current):]
            info = table.concepts[cycle[0]]
            errors.append(StaticError("InclusionCycle",
                                      "inclusion cycle: " + " in ".join(cycle + [cycle[0]]),
                                      info.line, info.col))
            # break the cycle so later chain walks terminate
            table.concepts[cycle[-1]].parent = None
        for walked in walk:
            state[walked] = 2
    return errors


# --- body checking ---

@dataclass
class _BodyCtx:
    concept: ConceptInfo | None
    direction: str | None       # "in" | "out" | None for free functions
    return_type: ast.TypeExpr
    in_setter: bool = False
    member_kind: str = "function"


class _BodyChecker:
    """Verifies names, arity, keyword placement, and return shape for every body."""

    def __init__(self, table: ConceptTable):
        self.table = table
        self.errors: list[StaticError] = []
        self.scopes: list[set[str]] = []

    def run(self, program: ast.Program) -> list[StaticError]:
        for decl in program.concepts:
            info = self.table.concepts.get(decl.name)
            if info is None:
                continue
            for member in decl.members:
                self._check_member_types(member)
            for method in list(info.in_methods.values()) + list(info.out_methods.values()):
                ctx = _BodyCtx(info, method.direction, method.return_type,
                               member_kind="method")
                self._check_callable(method.params, method.body, ctx)
            for prop in info.properties.values():
                if prop.getter is not None:
                    ctx = _BodyCtx(info, "out", prop.type, member_kind="getter")
                    self._check_callable([], prop.getter, ctx)
                if prop.setter is not None:
                    ctx = _BodyCtx(info, "out", _type_default_void(),
                                   in_setter=True, member_kind="setter")
                    self._check_callable([], prop.setter, ctx)

        for func in self.table.functions.values():
            self._check_type(func.return_type, allow_void=True)
            ctx = _BodyCtx(None, None, func.return_type)
            self._check_callable(func.params, func.body, ctx)

        main = self.table.functions.get("main")
        if main is None or main.params or main.return_type.base != "void":
            line = main.line if main is not None else 0
            col = main.col if main is not None else 0
            self.errors.append(StaticError("MissingMain",
                                           "program must declare 'func void main()' "
                                           "with no parameters", line, col))
        return self.errors

    def error(self, code: str, message: str, node) -> None:
        self.errors.append(StaticError(code, message, node.line, node.col))

    # -- types and scopes --

    def _check_type(self, type_expr: ast.TypeExpr, allow_void: bool = False) -> None:
        if type_expr.base in BUILTIN_TYPE_NAMES:
            if type_expr.base == "void" and not allow_void:
                self.error("UnknownType", "'void' is only valid as a return type", type_expr)
            return
        if type_expr.base not in self.table.concepts:
            self.error("UnknownType", f"unknown type '{type_expr.base}'", type_expr)

    def _check_member_types(self, member: ast.MemberDecl) -> None:
        if isinstance(member, ast.FieldDecl):
            self._check_type(member.type)
        elif isinstance(member, ast.MethodDecl):
            self._check_type(member.return_type, allow_void=True)
            for param in member.params:
                self._check_type(param.type)
        elif isinstance(member, ast.PropertyDecl):
            self._check_type(member.type)

    def _check_callable(self, params: list[ast.Param], body: ast.Block, ctx: _BodyCtx) -> None:
        scope: set[str] = set()
        for param in params:
            self._check_type(param.type)
            if param.name in scope:
                self.error("DuplicateParam", f"duplicate parameter '{param.name}'", param)
            scope.add(param.name)
        self.scopes = [scope]
        self._check_block(body, ctx, new_scope=False)
        self.scopes = []

    def _declared(self, name: str) -> bool:
        return any(name in scope for scope in self.scopes)

    # -- statements --

    def _check_block(self, block: ast.Block, ctx: _BodyCtx, new_scope: bool = True) -> None:
        if new_scope:
            self.scopes.append(set())
        for stmt in block.stmts:
            self._check_stmt(stmt, ctx)
        if new_scope:
            self.scopes.pop()

    def _check_body_stmt(self, stmt: ast.Stmt, ctx: _BodyCtx) -> None:
        """An if/while body gets its own scope even when it is a bare statement."""
        if isinstance(stmt, ast.Block):
            self._check_block(stmt, ctx)
        else:
            self.scopes.append(set())
            self._check_stmt(stmt, ctx)
            self.scopes.pop()

    def _check_stmt(self, stmt: ast.Stmt, ctx: _BodyCtx) -> None:
        if isinstance(stmt, ast.Block):
            self._check_block(stmt, ctx)
        elif isinstance(stmt, ast.VarDecl):
            self._check_type(stmt.type)
            self._check_expr(stmt.init, ctx)
            if stmt.name in self.scopes[-1]:
                self.error("DuplicateLocal",
                           f"variable '{stmt.name}' is already declared in this scope", stmt)
            self.scopes[-1].add(stmt.name)
        elif isinstance(stmt, ast.Assign):
            self._check_assign_target(stmt.target, ctx)
            self._check_expr(stmt.value, ctx)
        elif isinstance(stmt, ast.ExprStmt):
            self._check_expr(stmt.expr, ctx)
        elif isinstance(stmt, ast.If):
            self._check_expr(stmt.cond, ctx)
            self._check_body_stmt(stmt.then_stmt, ctx)
            if stmt.else_stmt is not None:
                self._check_body_stmt(stmt.else_stmt, ctx)
        elif isinstance(stmt, ast.While):
            self._check_expr(stmt.cond, ctx)
            self._check_body_stmt(stmt.body, ctx)
        elif isinstance(stmt, ast.Return):
            if ctx.return_type.base == "void":
                if stmt.expr is not None:
                    self.error("ReturnShapeMismatch",
                               "cannot return a value from a void body", stmt)
            else:
                if stmt.expr is None:
                    self.error("ReturnShapeMismatch",
                               f"must return a value of type {ctx.return_type}", stmt)
            if stmt.expr is not None:
                self._check_expr(stmt.expr, ctx)
        else:
            raise TypeError(f"unknown statement {stmt!r}")

    def _check_assign_target(self, target: ast.Expr, ctx: _BodyCtx) -> None:
        if isinstance(target, ast.Ident):
            if self._declared(target.name):
                return
            if ctx.concept is not None:
                chain = self.table.chain_of(ctx.concept.name)
                found, _ = self.table.find_member_read(chain, target.name, ctx.concept.name)
                if found is not None:
                    _, member = found
                    if isinstance(member, FieldInfo):
                        self.error("AssignToReferenceField",
                                   f"cannot assign to reference field '{target.name}' of the "
                                   "executing reference", target)
                    return
            self.error("UnknownName", f"unknown name '{target.name}'", target)
            return
        if isinstance(target, ast.MemberAccess):
            obj = target.obj
            if isinstance(obj, ast.ThisExpr):
                self._check_this(obj, ctx)
                if ctx.concept is not None:
                    chain = self.table.chain_of(ctx.concept.name)
                    found, _ = self.table.find_member_read(chain, target.name, ctx.concept.name)
                    if found is None:
                        self.error("UnknownName",
                                   f"unknown member '{target.name}'", target)
                    elif isinstance(found[1], FieldInfo):
                        self.error("AssignToReferenceField",
                                   f"cannot assign to reference field '{target.name}' of the "
                                   "executing reference", target)
                return
            if isinstance(obj, ast.SuperExpr):
                if not self._check_super(obj, ctx):
                    return
                chain = self.table.chain_of(ctx.concept.name)
                found, _ = self.table.find_member_read(chain, target.name, ctx.concept.name,
                                                       upto=len(chain) - 1)
                if found is None:
                    self.error("UnknownName",
                               f"no ancestor member named '{target.name}'", target)
                elif isinstance(found[1], FieldInfo):
                    self.error("AssignToReferenceField",
                               f"cannot assign to reference field '{target.name}' of the "
                               "executing reference", target)
                return
            # a chained target must be rooted at a local variable; anything else
            # would only mutate a temporary copy
            root = obj
            while isinstance(root, ast.MemberAccess):
                root = root.obj
            if not (isinstance(root, ast.Ident) and self._declared(root.name)):
                self.error("InvalidAssignTarget",
                           "assignment through a reference must start at a local variable",
                           target)
                return
            self._check_expr(obj, ctx)
            return
        self.error("InvalidAssignTarget", "invalid assignment target", target)

    # -- expressions --

    def _check_this(self, node, ctx: _BodyCtx) -> bool:
        if ctx.concept is None:
            self.error("ThisOutsideConcept", "'this' is only valid inside a concept member",
                       node)
            return False
        return True

    def _check_super(self, node, ctx: _BodyCtx) -> bool:
        if ctx.concept is None or ctx.concept.parent is None:
            self.error("SuperWithoutParent",
                       "'super' requires the enclosing concept to have a parent", node)
            return False
        return True

    def _check_expr(self, expr: ast.Expr, ctx: _BodyCtx) -> None:
        if isinstance(expr, (ast.IntLit, ast.FloatLit, ast.BoolLit, ast.StringLit)):
            return
        if isinstance(expr, ast.Ident):
            if self._declared(expr.name):
                return
            if ctx.concept is not None:
                chain = self.table.chain_of(ctx.concept.name)
                found, _ = self.table.find_member_read(chain, expr.name, ctx.concept.name)
                if found is not None:
                    return
            self.error("UnknownName", f"unknown name '{expr.name}'", expr)
            return
        if isinstance(expr, ast.ThisExpr):
            self._check_this(expr, ctx)
            return
        if isinstance(expr, ast.ValueExpr):
            if not ctx.in_setter:
                self.error("ValueOutsideSetter",
                           "'value' is only valid inside a property setter", expr)
            return
        if isinstance(expr, (ast.SuperExpr, ast.SubExpr)):
            # the parser only emits these under a MemberAccess; reaching one here
            # means the member check already handled the base
            return
        if isinstance(expr, ast.MemberAccess):
            self._check_member_read(expr, ctx)
            return
        if isinstance(expr, ast.Call):
            self._check_call(expr, ctx)
            return
        if isinstance(expr, ast.Unary):
            self._check_expr(expr.operand, ctx)
            return
        if isinstance(expr, ast.Binary):
            self._check_expr(expr.left, ctx)
            self._check_expr(expr.right, ctx)
            return
        raise TypeError(f"unknown expression {expr!r}")

    def _check_member_read(self, expr: ast.MemberAccess, ctx: _BodyCtx) -> None:
        obj = expr.obj
        if isinstance(obj, ast.ThisExpr):
            if not self._check_this(obj, ctx):
                return
            chain = self.table.chain_of(ctx.concept.name)
            found, _ = self.table.find_member_read(chain, expr.name, ctx.concept.name)
            if found is None:
                self.error("UnknownName", f"unknown member '{expr.name}'", expr)
            return
        if isinstance(obj, ast.SuperExpr):
            if not self._check_super(obj, ctx):
                return
            chain = self.table.chain_of(ctx.concept.name)
            found, _ = self.table.find_member_read(chain, expr.name, ctx.concept.name,
                                                   upto=len(chain) - 1)
            if found is None:
                self.error("UnknownName", f"no ancestor member named '{expr.name}'", expr)
            return
        # member of an arbitrary reference expression: resolved dynamically
        self._check_expr(obj, ctx)

    def _check_arity(self, what: str, expected: int, call: ast.Call) -> None:
        if len(call.args) != expected:
            self.error("ArityMismatch",
                       f"{what} takes {expected} argument(s), got {len(call.args)}", call)

    def _check_call(self, call: ast.Call, ctx: _BodyCtx) -> None:
        for arg in call.args:
            self._check_expr(arg, ctx)
        callee = call.callee
        if isinstance(callee, ast.Ident):
            name = callee.name
            if name in BUILTIN_FUNCTIONS:
                self._check_arity(f"builtin '{name}'", BUILTIN_FUNCTIONS[name], call)
                return
            concept = self.table.concepts.get(name)
            if concept is not None:
                expected = len(concept.fields) + (1 if concept.parent is not None else 0)
                self._check_arity(f"constructor '{name}'", expected, call)
                return
            if ctx.concept is not None:
                chain = self.table.chain_of(ctx.concept.name)
                found, _ = self.table.find_outgoing(chain, name, ctx.concept.name)
                if found is not None:
                    self._check_outgoing_arity(found[1], call)
                    return
            func = self.table.functions.get(name)
            if func is not None:
                self._check_arity(f"function '{name}'", len(func.params), call)
                return
            self.error("NoSuchMethod", f"cannot resolve call to '{name}'", call)
            return
        if isinstance(callee, ast.MemberAccess):
            obj = callee.obj
            name = callee.name
            if isinstance(obj, ast.ThisExpr):
                if not self._check_this(obj, ctx):
                    return
                chain = self.table.chain_of(ctx.concept.name)
                found, _ = self.table.find_outgoing(chain, name, ctx.concept.name)
                if found is None:
                    self.error("NoSuchMethod", f"cannot resolve call to '{name}'", call)
                else:
                    self._check_outgoing_arity(found[1], call)
                return
            if isinstance(obj, ast.SuperExpr):
                if not self._check_super(obj, ctx):
                    return
                chain = self.table.chain_of(ctx.concept.name)
                found, _ = self.table.find_outgoing(chain, name, ctx.concept.name,
                                                    upto=len(chain) - 1)
                if found is None:
                    self.error("NoSuchMethod",
                               f"no ancestor declares an outgoing '{name}'", call)
                else:
                    self._check_outgoing_arity(found[1], call)
                return
            if isinstance(obj, ast.SubExpr):
                if ctx.direction != "in" or ctx.member_kind != "method":
                    self.error("SubOutsideIncoming",
                               "'sub' is only valid inside an incoming method body", call)
                return
            self._check_expr(obj, ctx)
            return
        self.error("NoSuchMethod", "call target is not callable", call)

    def _check_outgoing_arity(self, member, call: ast.Call) -> None:
        if isinstance(member, MethodInfo):
            self._check_arity(f"method '{member.name}'", len(member.params), call)
        else:
            self._check_arity(f"property getter '{member.name}'", 0, call)


def check_bodies(table: ConceptTable, program: ast.Program) -> list[StaticError]:
    """Check every body against the table; empty result means the program is runnable."""
    return _BodyChecker(table).run(program)


def resolve_program(program: ast.Program) -> tuple[ConceptTable | None, list[StaticError]]:
    """Full static resolution: build the table, then check bodies if it is sound."""
    table, errors = build_table(program)
    if errors:
        return None, errors
    errors = check_bodies(table, program)
    if errors:
        return None, errors
    return table, []
