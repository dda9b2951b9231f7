"""Tree-walking evaluator: complex-reference construction, dual-method dispatch
in both directions, the object store, and optional dispatch tracing.

Dispatch rules, with segments numbered outermost-first:

* external call: the outermost accessible incoming method wins; if no concept
  in the chain declares one, the innermost accessible outgoing method or
  property getter wins.
* sub.m(...): the nearest deeper incoming method runs; an unmatched void call
  is a traced no-op, an unmatched non-void call is an error.
* super.m(...): the nearest strictly-outer outgoing method or getter runs.
* bare m(...) / this.m(...): outgoing search over the prefix ending at the
  executing segment, after builtins and constructors.

Bare-name call resolution order: builtin, constructor, prefix outgoing member,
free function.
"""

from __future__ import annotations

import math
import sys

from . import ast_nodes as ast
from .errors import CopRuntimeError
from .resolver import (BUILTIN_FUNCTIONS, ConceptTable, FieldInfo, FuncInfo,
                       MethodInfo, PropertyInfo)
from .values import (VOID, ConceptValue, Segment, copy_value, render_value,
                     serialize_reference, type_name, values_equal)

_INT_MIN = -(2 ** 63)


def _wrap_int(n: int) -> int:
    """64-bit two's-complement wrap-around."""
    return (n - _INT_MIN) % 2 ** 64 + _INT_MIN


def _trunc_div(a: int, b: int) -> int:
    q = a // b
    if q < 0 and q * b != a:
        q += 1
    return q


class _Return(Exception):
    def __init__(self, value):
        self.value = value


class ObjectStore:
    """Object fields as functions of references: values keyed by the canonical
    serialization of the declaring prefix plus the field name."""

    def __init__(self) -> None:
        self._data: dict[tuple[str, str], object] = {}

    def get(self, key: str, name: str):
        found = self._data.get((key, name), _MISSING)
        return _MISSING if found is _MISSING else copy_value(found)

    def set(self, key: str, name: str, value) -> None:
        self._data[(key, name)] = copy_value(value)

    def clear(self) -> None:
        self._data.clear()


_MISSING = object()


class Frame:
    """One activation: the executing reference, segment index (0-based),
    direction, and local bindings."""

    __slots__ = ("ref", "seg", "direction", "concept", "scopes", "setter_value")

    def __init__(self, ref: ConceptValue | None, seg: int, direction: str | None,
                 concept: str | None, setter_value=None):
        self.ref = ref
        self.seg = seg
        self.direction = direction
        self.concept = concept
        self.scopes: list[dict] = [{}]
        self.setter_value = setter_value

    def lookup(self, name: str):
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return None

    def define(self, name: str, declared: ast.TypeExpr, value) -> None:
        self.scopes[-1][name] = (declared, value)

    def rebind(self, name: str, value) -> bool:
        for scope in reversed(self.scopes):
            if name in scope:
                scope[name] = (scope[name][0], value)
                return True
        return False


class Interpreter:
    """Evaluates a resolved program. One instance runs one program at a time;
    the object store starts empty and is discarded with the instance."""

    def __init__(self, table: ConceptTable, trace=None, stdout=None):
        self.table = table
        self.store = ObjectStore()
        self.trace = trace
        self.stdout = stdout if stdout is not None else sys.stdout

    # --- public entry points ---

    def run_main(self) -> None:
        main = self.table.functions["main"]
        self._call_function(main, [], None)

    def construct(self, concept: str, args: list, node=None) -> ConceptValue:
        info = self.table.concepts.get(concept)
        if info is None:
            raise self._error("UnknownConcept", f"unknown concept '{concept}'", node)
        expected = len(info.fields) + (1 if info.parent is not None else 0)
        if len(args) != expected:
            raise self._error("ArityMismatch",
                              f"constructor '{concept}' takes {expected} argument(s), "
                              f"got {len(args)}", node)
        segments: list[Segment] = []
        rest = args
        if info.parent is not None:
            parent_val = args[0]
            rest = args[1:]
            if not isinstance(parent_val, ConceptValue) or parent_val.innermost != info.parent:
                raise self._error("TypeMismatch",
                                  f"constructor '{concept}' needs a '{info.parent}' reference "
                                  f"as its first argument, got {type_name(parent_val)}", node)
            segments = [seg.copy() for seg in parent_val.segments]
        bound = [self._check_assign(f.type, copy_value(v), node)
                 for f, v in zip(info.fields, rest)]
        segments.append(Segment(concept, bound))
        return ConceptValue(segments)

    def call(self, ref: ConceptValue, method: str, args: list = (), node=None):
        """External dispatch on a reference, as from a free function."""
        return self._dispatch_external(ref, method, list(args), None, node)

    def get_property(self, ref: ConceptValue, name: str, node=None):
        found, blocked = self._find_property(ref, name, None)
        if found is None:
            if blocked:
                raise self._error("VisibilityViolation",
                                  f"property '{name}' is not accessible here", node)
            raise self._error("NoSuchProperty", f"no property named '{name}'", node)
        idx, prop = found
        return self._invoke_getter(ref, idx, prop, node)

    def set_property(self, ref: ConceptValue, name: str, value, node=None) -> None:
        found, blocked = self._find_property(ref, name, None)
        if found is None:
            if blocked:
                raise self._error("VisibilityViolation",
                                  f"property '{name}' is not accessible here", node)
            raise self._error("NoSuchProperty", f"no property named '{name}'", node)
        idx, prop = found
        self._invoke_setter(ref, idx, prop, value, node)

    def read_field(self, ref: ConceptValue, name: str, node=None):
        """Innermost declaration of a reference field, externally visible only."""
        blocked = False
        for i in range(len(ref.segments) - 1, -1, -1):
            info = self.table.concepts[ref.segments[i].concept]
            slot = info.field_index.get(name)
            if slot is None:
                continue
            field = info.fields[slot]
            if self.table.visible(info.name, field.visibility, None):
                return copy_value(ref.segments[i].values[slot])
            blocked = True
        if blocked:
            raise self._error("VisibilityViolation",
                              f"field '{name}' is not accessible here", node)
        raise self._error("NoSuchField", f"no reference field named '{name}'", node)

    # --- helpers ---

    def _error(self, code: str, message: str, node=None) -> CopRuntimeError:
        line = getattr(node, "line", 0) if node is not None else 0
        col = getattr(node, "col", 0) if node is not None else 0
        return CopRuntimeError(code, message, line, col)

    def _emit(self, event: str) -> None:
        if self.trace is not None:
            self.trace(event)

    def _find_property(self, ref: ConceptValue, name: str, from_concept):
        blocked = False
        for i in range(len(ref.segments) - 1, -1, -1):
            info = self.table.concepts[ref.segments[i].concept]
            prop = info.properties.get(name)
            if prop is None:
                continue
            if self.table.visible(info.name, prop.visibility, from_concept):
                return (i, prop), blocked
            blocked = True
        return None, blocked

    def _check_assign(self, declared: ast.TypeExpr, v, node):
        base = declared.base
        if base == "int":
            if isinstance(v, int) and not isinstance(v, bool):
                return v
        elif base == "double":
            if isinstance(v, float):
                return v
        elif base == "bool":
            if isinstance(v, bool):
                return v
        elif base == "string":
            if isinstance(v, str):
                return v
        elif base == "char":
            if isinstance(v, str):
                if len(v) > declared.size:
                    raise self._error("CharArrayOverflow",
                                      f"value of length {len(v)} does not fit char[{declared.size}]",
                                      node)
                return v
        elif base == "void":
            if v is VOID:
                return v
        else:
            if isinstance(v, ConceptValue) and base in v.chain_names:
                return v
        raise self._error("TypeMismatch",
                          f"expected {declared}, got {type_name(v)}", node)

    def _default_for(self, declared: ast.TypeExpr, name: str, node):
        base = declared.base
        if base == "int":
            return 0
        if base == "double":
            return 0.0
        if base == "bool":
            return False
        if base in ("string", "char"):
            return ""
        raise self._error("UnsetObjectField",
                          f"object field '{name}' of type {declared} was read before "
                          "any value was stored", node)

    # --- member invocation ---

    def _invoke_method(self, ref: ConceptValue, seg: int, method: MethodInfo,
                       args: list, node):
        if len(args) != len(method.params):
            raise self._error("ArityMismatch",
                              f"method '{method.name}' takes {len(method.params)} "
                              f"argument(s), got {len(args)}", node)
        tag = "IN" if method.direction == "in" else "OUT"
        self._emit(f"{tag} {method.concept}.{method.name}")
        frame = Frame(ref, seg, method.direction, method.concept)
        for param, arg in zip(method.params, args):
            frame.define(param.name, param.type,
                         self._check_assign(param.type, copy_value(arg), node))
        return self._run_body(method.body, frame, method.return_type, method)

    def _call_function(self, func: FuncInfo, args: list, node):
        if len(args) != len(func.params):
            raise self._error("ArityMismatch",
                              f"function '{func.name}' takes {len(func.params)} "
                              f"argument(s), got {len(args)}", node)
        frame = Frame(None, 0, None, None)
        for param, arg in zip(func.params, args):
            frame.define(param.name, param.type,
                         self._check_assign(param.type, copy_value(arg), node))
        return self._run_body(func.body, frame, func.return_type, func)

    def _run_body(self, body: ast.Block, frame: Frame, return_type: ast.TypeExpr, decl):
        try:
            self._exec_block(body, frame, new_scope=False)
        except _Return as ret:
            return self._check_assign(return_type, ret.value, decl)
        if return_type.base == "void":
            return VOID
        raise self._error("MissingReturnValue",
                          f"'{decl.name}' must return a value of type {return_type}", decl)

    def _invoke_getter(self, ref: ConceptValue, seg: int, prop: PropertyInfo, node):
        if not prop.has_getter():
            raise self._error("NoGetter", f"property '{prop.name}' has no getter", node)
        self._emit(f"GET {prop.concept}.{prop.name}")
        if prop.auto_backed:
            key = serialize_reference(ref.prefix(seg + 1))
            stored = self.store.get(key, prop.name)
            if stored is _MISSING:
                return self._default_for(prop.type, prop.name, node)
            return stored
        frame = Frame(ref, seg, "out", prop.concept)
        try:
            self._exec_block(prop.getter, frame, new_scope=False)
        except _Return as ret:
            return self._check_assign(prop.type, ret.value, node)
        raise self._error("MissingReturnValue",
                          f"getter of '{prop.name}' must return a value", node)

    def _invoke_setter(self, ref: ConceptValue, seg: int, prop: PropertyInfo, v, node) -> None:
        if not prop.has_setter():
            raise self._error("NoSetter", f"property '{prop.name}' has no setter", node)
        v = self._check_assign(prop.type, v, node)
        self._emit(f"SET {prop.concept}.{prop.name}")
        if prop.auto_backed:
            key = serialize_reference(ref.prefix(seg + 1))
            self.store.set(key, prop.name, v)
            return
        frame = Frame(ref, seg, "out", prop.concept, setter_value=copy_value(v))
        try:
            self._exec_block(prop.setter, frame, new_scope=False)
        except _Return:
            pass

    # --- dispatch ---

    def _dispatch_external(self, ref, method: str, args: list, from_concept, node):
        if not isinstance(ref, ConceptValue):
            raise self._error("TypeMismatch",
                              f"cannot call a method on a {type_name(ref)} value", node)
        chain = ref.chain_names
        found_in, blocked_in = self.table.find_incoming(chain, method, from_concept)
        if found_in is not None:
            return self._invoke_method(ref, found_in[0], found_in[1], args, node)
        found_out, blocked_out = self.table.find_outgoing(chain, method, from_concept)
        if found_out is not None:
            return self._invoke_callable(ref, found_out[0], found_out[1], args, node)
        if blocked_in or blocked_out:
            raise self._error("VisibilityViolation",
                              f"method '{method}' is not accessible here", node)
        raise self._error("NoSuchMethod",
                          f"no concept in {'/'.join(chain)} declares a method '{method}'",
                          node)

    def _invoke_callable(self, ref, seg, member, args, node):
        if isinstance(member, MethodInfo):
            return self._invoke_method(ref, seg, member, args, node)
        if args:
            raise self._error("ArityMismatch",
                              f"property getter '{member.name}' takes no arguments", node)
        return self._invoke_getter(ref, seg, member, node)

    def _dispatch_sub(self, frame: Frame, method: str, args: list, node):
        ref = frame.ref
        found, _ = self.table.find_incoming(ref.chain_names, method, frame.concept,
                                            start=frame.seg + 1, parent_rule=True)
        if found is not None:
            return self._invoke_method(ref, found[0], found[1], args, node)
        # leaf delegation: nothing deeper implements the method
        for name in ref.chain_names:
            info = self.table.concepts[name]
            for bucket in (info.in_methods, info.out_methods):
                declared = bucket.get(method)
                if declared is not None and declared.return_type.base != "void":
                    raise self._error("SubNonVoidUnimplemented",
                                      f"'sub.{method}' has no deeper implementation and "
                                      f"'{method}' is declared non-void", node)
        self._emit(f"NOOP {method}")
        return VOID

    def _dispatch_super(self, frame: Frame, method: str, args: list, node):
        found, _ = self.table.find_outgoing(frame.ref.chain_names, method, frame.concept,
                                            upto=frame.seg)
        if found is None:
            raise self._error("NoSuchMethod",
                              f"no ancestor declares an outgoing method '{method}'", node)
        return self._invoke_callable(frame.ref, found[0], found[1], args, node)

    def _dispatch_bare(self, frame: Frame, method: str, args: list, node):
        """Prefix outgoing search; returns _MISSING when nothing in the prefix
        declares the member, so the caller can fall through to free functions."""
        found, _ = self.table.find_outgoing(frame.ref.chain_names, method,
                                            frame.concept, upto=frame.seg + 1)
        if found is None:
            return _MISSING
        return self._invoke_callable(frame.ref, found[0], found[1], args, node)

    # --- statement execution ---

    def _exec_block(self, block: ast.Block, frame: Frame, new_scope: bool = True) -> None:
        if new_scope:
            frame.scopes.append({})
        try:
            for stmt in block.stmts:
                self._exec_stmt(stmt, frame)
        finally:
            if new_scope:
                frame.scopes.pop()

    def _exec_body_stmt(self, stmt: ast.Stmt, frame: Frame) -> None:
        if isinstance(stmt, ast.Block):
            self._exec_block(stmt, frame)
            return
        frame.scopes.append({})
        try:
            self._exec_stmt(stmt, frame)
        finally:
            frame.scopes.pop()

    def _exec_stmt(self, stmt: ast.Stmt, frame: Frame) -> None:
        if isinstance(stmt, ast.ExprStmt):
            self._eval(stmt.expr, frame)
        elif isinstance(stmt, ast.VarDecl):
            v = self._check_assign(stmt.type, copy_value(self._eval(stmt.init, frame)), stmt)
            frame.define(stmt.name, stmt.type, v)
        elif isinstance(stmt, ast.Assign):
            self._exec_assign(stmt, frame)
        elif isinstance(stmt, ast.If):
            cond = self._eval(stmt.cond, frame)
            if not isinstance(cond, bool):
                raise self._error("TypeMismatch", "if condition must be bool", stmt)
            if cond:
                self._exec_body_stmt(stmt.then_stmt, frame)
            elif stmt.else_stmt is not None:
                self._exec_body_stmt(stmt.else_stmt, frame)
        elif isinstance(stmt, ast.While):
            while True:
                cond = self._eval(stmt.cond, frame)
                if not isinstance(cond, bool):
                    raise self._error("TypeMismatch", "while condition must be bool", stmt)
                if not cond:
                    break
                self._exec_body_stmt(stmt.body, frame)
        elif isinstance(stmt, ast.Return):
            value = VOID if stmt.expr is None else self._eval(stmt.expr, frame)
            raise _Return(value)
        elif isinstance(stmt, ast.Block):
            self._exec_block(stmt, frame)
        else:
            raise TypeError(f"unknown statement {stmt!r}")

    def _exec_assign(self, stmt: ast.Assign, frame: Frame) -> None:
        v = self._eval(stmt.value, frame)
        target = stmt.target
        if isinstance(target, ast.Ident):
            slot = frame.lookup(target.name)
            if slot is not None:
                declared, _ = slot
                frame.rebind(target.name,
                             self._check_assign(declared, copy_value(v), stmt))
                return
            self._assign_member_on_self(target.name, v, frame, stmt,
                                        upto=frame.seg + 1)
            return
        assert isinstance(target, ast.MemberAccess)
        obj = target.obj
        if isinstance(obj, ast.ThisExpr):
            self._assign_member_on_self(target.name, v, frame, stmt, upto=frame.seg + 1)
            return
        if isinstance(obj, ast.SuperExpr):
            self._assign_member_on_self(target.name, v, frame, stmt, upto=frame.seg)
            return
        self._assign_through_reference(target, v, frame, stmt)

    def _assign_member_on_self(self, name: str, v, frame: Frame, stmt, upto: int) -> None:
        if frame.ref is None:
            raise self._error("UnknownName", f"unknown name '{name}'", stmt)
        found, blocked = self.table.find_member_read(frame.ref.chain_names, name,
                                                     frame.concept, upto=upto)
        if found is None:
            code = "VisibilityViolation" if blocked else "UnknownName"
            raise self._error(code, f"cannot assign to '{name}'", stmt)
        idx, member = found
        if isinstance(member, FieldInfo):
            raise self._error("InvalidAssignTarget",
                              f"cannot assign to reference field '{name}' of the "
                              "executing reference", stmt)
        self._invoke_setter(frame.ref, idx, member, v, stmt)

    def _assign_through_reference(self, target: ast.MemberAccess, v, frame: Frame,
                                  stmt) -> None:
        """Assignment rooted at a local reference variable: navigates reference
        fields in place so the mutation lands in the local's own copy."""
        accesses: list[ast.MemberAccess] = []
        node: ast.Expr = target
        while isinstance(node, ast.MemberAccess):
            accesses.append(node)
            node = node.obj
        accesses.reverse()
        if not isinstance(node, ast.Ident):
            raise self._error("InvalidAssignTarget",
                              "assignment through a reference must start at a local "
                              "variable", stmt)
        slot = frame.lookup(node.name)
        if slot is None:
            raise self._error("InvalidAssignTarget",
                              f"'{node.name}' is not a local variable", stmt)
        container = slot[1]
        for access in accesses[:-1]:
            container = self._navigate_field(container, access, frame)
        last = accesses[-1]
        if not isinstance(container, ConceptValue):
            raise self._error("TypeMismatch",
                              f"cannot assign through a {type_name(container)} value", last)
        found, blocked = self.table.find_member_read(container.chain_names, last.name,
                                                     frame.concept)
        if found is None:
            code = "VisibilityViolation" if blocked else "NoSuchField"
            raise self._error(code, f"cannot assign to '{last.name}'", last)
        idx, member = found
        if isinstance(member, PropertyInfo):
            self._invoke_setter(container, idx, member, v, last)
            return
        slot = self.table.concepts[member.concept].field_index[last.name]
        container.segments[idx].values[slot] = self._check_assign(member.type,
                                                                  copy_value(v), last)

    def _navigate_field(self, container, access: ast.MemberAccess, frame: Frame):
        if not isinstance(container, ConceptValue):
            raise self._error("TypeMismatch",
                              f"cannot navigate into a {type_name(container)} value", access)
        blocked = False
        for i in range(len(container.segments) - 1, -1, -1):
            info = self.table.concepts[container.segments[i].concept]
            slot = info.field_index.get(access.name)
            if slot is None:
                continue
            field = info.fields[slot]
            if self.table.visible(info.name, field.visibility, frame.concept):
                return container.segments[i].values[slot]
            blocked = True
        if blocked:
            raise self._error("VisibilityViolation",
                              f"field '{access.name}' is not accessible here", access)
        raise self._error("InvalidAssignTarget",
                          f"'{access.name}' is not a reference field, so assigning "
                          "through it would only change a copy", access)

    # --- expression evaluation ---

    def _eval(self, expr: ast.Expr, frame: Frame):
        if isinstance(expr, ast.IntLit):
            return expr.value
        if isinstance(expr, ast.FloatLit):
            return expr.value
        if isinstance(expr, ast.BoolLit):
            return expr.value
        if isinstance(expr, ast.StringLit):
            return expr.value
        if isinstance(expr, ast.Ident):
            slot = frame.lookup(expr.name)
            if slot is not None:
                return slot[1]
            return self._read_member_on_self(expr.name, frame, expr, upto=frame.seg + 1)
        if isinstance(expr, ast.ThisExpr):
            if frame.ref is None:
                raise self._error("UnknownName", "'this' outside a concept member", expr)
            return frame.ref.prefix(frame.seg + 1)
        if isinstance(expr, ast.ValueExpr):
            return frame.setter_value
        if isinstance(expr, ast.MemberAccess):
            return self._eval_member_read(expr, frame)
        if isinstance(expr, ast.Call):
            return self._eval_call(expr, frame)
        if isinstance(expr, ast.Unary):
            return self._eval_unary(expr, frame)
        if isinstance(expr, ast.Binary):
            return self._eval_binary(expr, frame)
        raise TypeError(f"unknown expression {expr!r}")

    def _read_member_on_self(self, name: str, frame: Frame, node, upto: int, start: int = 0):
        if frame.ref is None:
            raise self._error("UnknownName", f"unknown name '{name}'", node)
        found, blocked = self.table.find_member_read(frame.ref.chain_names, name,
                                                     frame.concept, upto=upto, start=start)
        if found is None:
            code = "VisibilityViolation" if blocked else "NoSuchField"
            raise self._error(code, f"cannot read '{name}'", node)
        idx, member = found
        if isinstance(member, PropertyInfo):
            return self._invoke_getter(frame.ref, idx, member, node)
        slot = self.table.concepts[member.concept].field_index[name]
        return copy_value(frame.ref.segments[idx].values[slot])

    def _eval_member_read(self, expr: ast.MemberAccess, frame: Frame):
        obj = expr.obj
        if isinstance(obj, ast.ThisExpr):
            return self._read_member_on_self(expr.name, frame, expr, upto=frame.seg + 1)
        if isinstance(obj, ast.SuperExpr):
            return self._read_member_on_self(expr.name, frame, expr, upto=frame.seg)
        ref = self._eval(obj, frame)
        if not isinstance(ref, ConceptValue):
            raise self._error("TypeMismatch",
                              f"cannot read member '{expr.name}' of a {type_name(ref)} "
                              "value", expr)
        blocked = False
        for i in range(len(ref.segments) - 1, -1, -1):
            info = self.table.concepts[ref.segments[i].concept]
            member = info.properties.get(expr.name)
            if member is None:
                slot = info.field_index.get(expr.name)
                member = info.fields[slot] if slot is not None else None
            if member is None:
                continue
            if not self.table.visible(info.name, member.visibility, frame.concept):
                blocked = True
                continue
            if isinstance(member, PropertyInfo):
                return self._invoke_getter(ref, i, member, expr)
            slot = info.field_index[expr.name]
            return copy_value(ref.segments[i].values[slot])
        if blocked:
            raise self._error("VisibilityViolation",
                              f"member '{expr.name}' is not accessible here", expr)
        raise self._error("NoSuchField",
                          f"no field or property named '{expr.name}'", expr)

    def _eval_call(self, call: ast.Call, frame: Frame):
        callee = call.callee
        if isinstance(callee, ast.Ident):
            name = callee.name
            if name in BUILTIN_FUNCTIONS:
                return self._call_builtin(name, call, frame)
            if name in self.table.concepts:
                args = [self._eval(a, frame) for a in call.args]
                return self.construct(name, args, call)
            args = [self._eval(a, frame) for a in call.args]
            if frame.ref is not None:
                result = self._dispatch_bare(frame, name, args, call)
                if result is not _MISSING:
                    return result
            func = self.table.functions.get(name)
            if func is not None:
                return self._call_function(func, args, call)
            raise self._error("NoSuchMethod", f"cannot resolve call to '{name}'", call)
        assert isinstance(callee, ast.MemberAccess)
        obj = callee.obj
        name = callee.name
        args = [self._eval(a, frame) for a in call.args]
        if isinstance(obj, ast.ThisExpr):
            result = self._dispatch_bare(frame, name, args, call)
            if result is _MISSING:
                raise self._error("NoSuchMethod",
                                  f"no outgoing method '{name}' in the current prefix", call)
            return result
        if isinstance(obj, ast.SuperExpr):
            return self._dispatch_super(frame, name, args, call)
        if isinstance(obj, ast.SubExpr):
            return self._dispatch_sub(frame, name, args, call)
        ref = self._eval(obj, frame)
        return self._dispatch_external(ref, name, args, frame.concept, call)

    def _call_builtin(self, name: str, call: ast.Call, frame: Frame):
        if len(call.args) != BUILTIN_FUNCTIONS[name]:
            raise self._error("ArityMismatch",
                              f"builtin '{name}' takes {BUILTIN_FUNCTIONS[name]} "
                              f"argument(s), got {len(call.args)}", call)
        arg = self._eval(call.args[0], frame)
        if name == "print":
            self.stdout.write(render_value(arg) + "\n")
            return VOID
        return render_value(arg)  # str

    # --- operators ---

    def _eval_unary(self, expr: ast.Unary, frame: Frame):
        v = self._eval(expr.operand, frame)
        if expr.op == "-":
            if isinstance(v, bool):
                pass
            elif isinstance(v, int):
                return _wrap_int(-v)
            elif isinstance(v, float):
                return -v
            raise self._error("TypeMismatch",
                              f"unary '-' needs a number, got {type_name(v)}", expr)
        if expr.op == "!":
            if isinstance(v, bool):
                return not v
            raise self._error("TypeMismatch",
                              f"'!' needs a bool, got {type_name(v)}", expr)
        raise TypeError(f"unknown unary operator {expr.op!r}")

    def _eval_binary(self, expr: ast.Binary, frame: Frame):
        op = expr.op
        if op in ("&&", "||"):
            left = self._eval(expr.left, frame)
            if not isinstance(left, bool):
                raise self._error("TypeMismatch",
                                  f"'{op}' needs bool operands, got {type_name(left)}", expr)
            if op == "&&" and not left:
                return False
            if op == "||" and left:
                return True
            right = self._eval(expr.right, frame)
            if not isinstance(right, bool):
                raise self._error("TypeMismatch",
                                  f"'{op}' needs bool operands, got {type_name(right)}", expr)
            return right
        left = self._eval(expr.left, frame)
        right = self._eval(expr.right, frame)
        if op in ("==", "!="):
            return self._eval_equality(op, left, right, expr)
        if op in ("<", "<=", ">", ">="):
            return self._eval_relational(op, left, right, expr)
        return self._eval_arithmetic(op, left, right, expr)

    def _eval_equality(self, op: str, left, right, node):
        if isinstance(left, bool) != isinstance(right, bool):
            raise self._error("TypeMismatch",
                              f"cannot compare {type_name(left)} with {type_name(right)}",
                              node)
        if isinstance(left, ConceptValue) and isinstance(right, ConceptValue):
            result = left.equals(right)
        elif isinstance(left, float) and isinstance(right, float):
            result = left == right  # IEEE equality: NaN != NaN, -0.0 == 0.0
        elif isinstance(left, bool) and isinstance(right, bool):
            result = left == right
        elif isinstance(left, int) and isinstance(right, int):
            result = left == right
        elif isinstance(left, str) and isinstance(right, str):
            result = left == right
        elif left is VOID and right is VOID:
            result = True
        else:
            raise self._error("TypeMismatch",
                              f"cannot compare {type_name(left)} with {type_name(right)}",
                              node)
        return result if op == "==" else not result

    def _eval_relational(self, op: str, left, right, node):
        ok = (isinstance(left, int) and not isinstance(left, bool)
              and isinstance(right, int) and not isinstance(right, bool)) \
            or (isinstance(left, float) and isinstance(right, float)) \
            or (isinstance(left, str) and isinstance(right, str))
        if not ok:
            raise self._error("TypeMismatch",
                              f"cannot order {type_name(left)} and {type_name(right)}", node)
        if op == "<":
            return left < right
        if op == "<=":
            return left <= right
        if op == ">":
            return left > right
        return left >= right

    def _eval_arithmetic(self, op: str, left, right, node):
        both_int = (isinstance(left, int) and not isinstance(left, bool)
                    and isinstance(right, int) and not isinstance(right, bool))
        both_double = isinstance(left, float) and isinstance(right, float)
        if op == "+" and isinstance(left, str) and isinstance(right, str):
            return left + right
        if not (both_int or both_double):
            raise self._error("TypeMismatch",
                              f"'{op}' cannot combine {type_name(left)} and "
                              f"{type_name(right)}", node)
        if both_int:
            if op == "+":
                return _wrap_int(left + right)
            if op == "-":
                return _wrap_int(left - right)
            if op == "*":
                return _wrap_int(left * right)
            if right == 0:
                raise self._error("DivisionByZero",
                                  "integer division or modulo by zero", node)
            if op == "/":
                return _wrap_int(_trunc_div(left, right))
            return _wrap_int(left - right * _trunc_div(left, right))  # %
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return left * right
        if op == "/":
            if right == 0.0:
                if left == 0.0 or math.isnan(left):
                    return math.nan
                return math.copysign(math.inf, left) * math.copysign(1.0, right)
            return left / right
        try:
            return math.fmod(left, right)  # %
        except ValueError:
            return math.nan


def run(table: ConceptTable, trace: bool = False, stdout=None, stderr=None) -> int:
    """Execute a resolved program's main; returns the process exit status."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    tracer = (lambda line: err.write(line + "\n")) if trace else None
    interpreter = Interpreter(table, trace=tracer, stdout=out)
    try:
        interpreter.run_main()
    except CopRuntimeError as exc:
        err.write(exc.render() + "\n")
        return 1
    except RecursionError:
        err.write(CopRuntimeError("StackOverflow", "call depth exceeded").render() + "\n")
        return 1
    return 0
