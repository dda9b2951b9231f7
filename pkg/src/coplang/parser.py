"""Recursive-descent parser for COP.

Grammar summary (see README for the full EBNF):

    program      = { conceptDecl | funcDecl }
    conceptDecl  = "concept" IDENT [ "in" IDENT ] "{" { member } "}"
    member       = fieldDecl | methodDecl | propertyDecl
    fieldDecl    = [ visibility ] [ "in" | "out" ] type IDENT ";"
    methodDecl   = [ visibility ] ("in" | "out") type IDENT "(" [ params ] ")" block
    propertyDecl = [ visibility ] "out" type IDENT "{" [ "get" block ] [ "set" block ] "}"
    funcDecl     = "func" type IDENT "(" [ params ] ")" block

Errors are fail-fast: the first offending token raises ParseError with an
expected-token message. There is no recovery.
"""

from __future__ import annotations

from . import ast_nodes as ast
from .errors import ParseError
from .lexer import tokenize
from .tokens import Token, TokenKind

_VISIBILITIES = ("public", "protected", "private")
_BUILTIN_TYPES = ("int", "double", "bool", "string", "void", "char")


def _describe(token: Token) -> str:
    if token.kind is TokenKind.EOI:
        return "end of input"
    return f"'{token.lexeme}'"


class Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    # --- token plumbing ---

    def peek(self, offset: int = 0) -> Token:
        i = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[i]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind is not TokenKind.EOI:
            self.pos += 1
        return token

    def error(self, expected: str, token: Token | None = None) -> ParseError:
        token = token or self.peek()
        return ParseError(f"expected {expected} but found {_describe(token)}",
                          token.line, token.col)

    def expect_punct(self, mark: str) -> Token:
        if not self.peek().is_punct(mark):
            raise self.error(f"'{mark}'")
        return self.advance()

    def expect_keyword(self, word: str) -> Token:
        if not self.peek().is_keyword(word):
            raise self.error(f"'{word}'")
        return self.advance()

    def expect_ident(self, what: str = "an identifier") -> Token:
        if self.peek().kind is not TokenKind.IDENT:
            raise self.error(what)
        return self.advance()

    # --- declarations ---

    def parse_program(self) -> ast.Program:
        concepts: list[ast.ConceptDecl] = []
        functions: list[ast.FuncDecl] = []
        while self.peek().kind is not TokenKind.EOI:
            if self.peek().is_keyword("concept"):
                concepts.append(self.parse_concept())
            elif self.peek().is_keyword("func"):
                functions.append(self.parse_func())
            else:
                raise self.error("'concept' or 'func'")
        return ast.Program(concepts, functions)

    def parse_concept(self) -> ast.ConceptDecl:
        kw = self.expect_keyword("concept")
        name = self.expect_ident("a concept name")
        parent = None
        if self.peek().is_keyword("in"):
            self.advance()
            parent = self.expect_ident("a parent concept name").lexeme
        self.expect_punct("{")
        members: list[ast.MemberDecl] = []
        while not self.peek().is_punct("}"):
            if self.peek().kind is TokenKind.EOI:
                raise self.error("'}'")
            members.append(self.parse_member())
        self.expect_punct("}")
        return ast.ConceptDecl(name.lexeme, parent, members, kw.line, kw.col)

    def parse_member(self) -> ast.MemberDecl:
        start = self.peek()
        visibility = "public"
        if start.kind is TokenKind.KEYWORD and start.lexeme in _VISIBILITIES:
            visibility = self.advance().lexeme
        direction = "none"
        if self.peek().is_keyword("in") or self.peek().is_keyword("out"):
            direction = self.advance().lexeme
        decl_type = self.parse_type(allow_void=(direction != "none"))
        name = self.expect_ident("a member name")
        if self.peek().is_punct("("):
            if direction == "none":
                raise self.error("'in' or 'out' before a method declaration", start)
            params = self.parse_param_list()
            body = self.parse_block()
            return ast.MethodDecl(visibility, direction, decl_type, name.lexeme,
                                  params, body, start.line, start.col)
        if self.peek().is_punct(";"):
            if decl_type.base == "void":
                raise self.error("a non-void field type", start)
            self.advance()
            return ast.FieldDecl(visibility, direction, decl_type, name.lexeme,
                                 start.line, start.col)
        if self.peek().is_punct("{"):
            if direction == "none":
                raise self.error("'out' before a property declaration", start)
            if decl_type.base == "void":
                raise self.error("a non-void property type", start)
            self.advance()
            getter = setter = None
            if self.peek().is_keyword("get"):
                self.advance()
                getter = self.parse_block()
            if self.peek().is_keyword("set"):
                self.advance()
                setter = self.parse_block()
            if getter is None and setter is None:
                raise self.error("'get' or 'set'")
            self.expect_punct("}")
            return ast.PropertyDecl(visibility, direction, decl_type, name.lexeme,
                                    getter, setter, start.line, start.col)
        raise self.error("'(', ';' or '{'")

    def parse_func(self) -> ast.FuncDecl:
        kw = self.expect_keyword("func")
        return_type = self.parse_type(allow_void=True)
        name = self.expect_ident("a function name")
        params = self.parse_param_list()
        body = self.parse_block()
        return ast.FuncDecl(return_type, name.lexeme, params, body, kw.line, kw.col)

    def parse_param_list(self) -> list[ast.Param]:
        self.expect_punct("(")
        params: list[ast.Param] = []
        if not self.peek().is_punct(")"):
            while True:
                p_type = self.parse_type(allow_void=False)
                p_name = self.expect_ident("a parameter name")
                params.append(ast.Param(p_type, p_name.lexeme, p_name.line, p_name.col))
                if self.peek().is_punct(","):
                    self.advance()
                    continue
                break
        self.expect_punct(")")
        return params

    def parse_type(self, allow_void: bool) -> ast.TypeExpr:
        token = self.peek()
        if token.kind is TokenKind.KEYWORD and token.lexeme in _BUILTIN_TYPES:
            self.advance()
            if token.lexeme == "void" and not allow_void:
                raise self.error("a non-void type", token)
            if token.lexeme == "char":
                self.expect_punct("[")
                size_token = self.peek()
                if size_token.kind is not TokenKind.INT:
                    raise self.error("an array size")
                self.advance()
                if size_token.value < 1:
                    raise ParseError("char array size must be at least 1",
                                     size_token.line, size_token.col)
                self.expect_punct("]")
                return ast.TypeExpr("char", size_token.value, token.line, token.col)
            return ast.TypeExpr(token.lexeme, None, token.line, token.col)
        if token.kind is TokenKind.IDENT:
            self.advance()
            return ast.TypeExpr(token.lexeme, None, token.line, token.col)
        raise self.error("a type")

    def _at_type_start(self) -> bool:
        token = self.peek()
        return token.kind is TokenKind.KEYWORD and token.lexeme in _BUILTIN_TYPES

    # --- statements ---

    def parse_block(self) -> ast.Block:
        brace = self.expect_punct("{")
        stmts: list[ast.Stmt] = []
        while not self.peek().is_punct("}"):
            if self.peek().kind is TokenKind.EOI:
                raise self.error("'}'")
            stmts.append(self.parse_stmt())
        self.expect_punct("}")
        return ast.Block(brace.line, brace.col, stmts)

    def parse_stmt(self) -> ast.Stmt:
        token = self.peek()
        if token.is_punct("{"):
            return self.parse_block()
        if token.is_keyword("if"):
            return self.parse_if()
        if token.is_keyword("while"):
            return self.parse_while()
        if token.is_keyword("return"):
            self.advance()
            expr = None
            if not self.peek().is_punct(";"):
                expr = self.parse_expr()
            self.expect_punct(";")
            return ast.Return(token.line, token.col, expr)
        if self._at_type_start() and not token.is_keyword("void"):
            return self.parse_var_decl()
        # `Account acc = ...;` — concept-typed declaration needs two identifiers
        if token.kind is TokenKind.IDENT and self.peek(1).kind is TokenKind.IDENT:
            return self.parse_var_decl()
        expr = self.parse_expr()
        if self.peek().is_punct("="):
            if not isinstance(expr, (ast.Ident, ast.MemberAccess)):
                raise self.error("';'")
            self.advance()
            value = self.parse_expr()
            self.expect_punct(";")
            return ast.Assign(expr.line, expr.col, expr, value)
        self.expect_punct(";")
        return ast.ExprStmt(expr.line, expr.col, expr)

    def parse_var_decl(self) -> ast.Stmt:
        start = self.peek()
        var_type = self.parse_type(allow_void=False)
        name = self.expect_ident("a variable name")
        self.expect_punct("=")
        init = self.parse_expr()
        self.expect_punct(";")
        return ast.VarDecl(start.line, start.col, var_type, name.lexeme, init)

    def parse_if(self) -> ast.Stmt:
        kw = self.advance()
        self.expect_punct("(")
        cond = self.parse_expr()
        self.expect_punct(")")
        then_stmt = self.parse_stmt()
        else_stmt = None
        if self.peek().is_keyword("else"):
            self.advance()
            else_stmt = self.parse_stmt()
        return ast.If(kw.line, kw.col, cond, then_stmt, else_stmt)

    def parse_while(self) -> ast.Stmt:
        kw = self.advance()
        self.expect_punct("(")
        cond = self.parse_expr()
        self.expect_punct(")")
        body = self.parse_stmt()
        return ast.While(kw.line, kw.col, cond, body)

    # --- expressions, lowest to highest precedence ---

    def parse_expr(self) -> ast.Expr:
        return self.parse_or()

    def _binary_left(self, ops: tuple[str, ...], sub) -> ast.Expr:
        left = sub()
        while self.peek().kind is TokenKind.PUNCT and self.peek().lexeme in ops:
            op = self.advance()
            left = ast.Binary(op.line, op.col, op.lexeme, left, sub())
        return left

    def parse_or(self) -> ast.Expr:
        return self._binary_left(("||",), self.parse_and)

    def parse_and(self) -> ast.Expr:
        return self._binary_left(("&&",), self.parse_equality)

    def parse_equality(self) -> ast.Expr:
        return self._binary_left(("==", "!="), self.parse_relational)

    def parse_relational(self) -> ast.Expr:
        return self._binary_left(("<", "<=", ">", ">="), self.parse_additive)

    def parse_additive(self) -> ast.Expr:
        return self._binary_left(("+", "-"), self.parse_multiplicative)

    def parse_multiplicative(self) -> ast.Expr:
        return self._binary_left(("*", "/", "%"), self.parse_unary)

    def parse_unary(self) -> ast.Expr:
        token = self.peek()
        if token.is_punct("-") or token.is_punct("!"):
            self.advance()
            return ast.Unary(token.line, token.col, token.lexeme, self.parse_unary())
        return self.parse_postfix()

    def parse_postfix(self) -> ast.Expr:
        expr = self.parse_primary()
        if isinstance(expr, (ast.SuperExpr, ast.SubExpr)) and not self.peek().is_punct("."):
            word = "super" if isinstance(expr, ast.SuperExpr) else "sub"
            raise self.error(f"'.' after '{word}'")
        while self.peek().is_punct("."):
            self.advance()
            name = self.expect_ident("a member name")
            access = ast.MemberAccess(name.line, name.col, expr, name.lexeme)
            if self.peek().is_punct("("):
                expr = ast.Call(name.line, name.col, access, self.parse_args())
            else:
                if isinstance(access.obj, ast.SubExpr):
                    raise self.error("'('")  # sub reaches child incoming methods only
                expr = access
        return expr

    def parse_args(self) -> list[ast.Expr]:
        self.expect_punct("(")
        args: list[ast.Expr] = []
        if not self.peek().is_punct(")"):
            while True:
                args.append(self.parse_expr())
                if self.peek().is_punct(","):
                    self.advance()
                    continue
                break
        self.expect_punct(")")
        return args

    def parse_primary(self) -> ast.Expr:
        token = self.peek()
        if token.kind is TokenKind.INT:
            self.advance()
            return ast.IntLit(token.line, token.col, token.value)
        if token.kind is TokenKind.FLOAT:
            self.advance()
            return ast.FloatLit(token.line, token.col, token.value)
        if token.kind is TokenKind.STRING:
            self.advance()
            return ast.StringLit(token.line, token.col, token.value)
        if token.is_keyword("true") or token.is_keyword("false"):
            self.advance()
            return ast.BoolLit(token.line, token.col, token.lexeme == "true")
        if token.is_keyword("this"):
            self.advance()
            return ast.ThisExpr(token.line, token.col)
        if token.is_keyword("super"):
            self.advance()
            return ast.SuperExpr(token.line, token.col)
        if token.is_keyword("sub"):
            self.advance()
            return ast.SubExpr(token.line, token.col)
        if token.is_keyword("value"):
            self.advance()
            return ast.ValueExpr(token.line, token.col)
        if token.kind is TokenKind.IDENT:
            self.advance()
            ident = ast.Ident(token.line, token.col, token.lexeme)
            if self.peek().is_punct("("):
                return ast.Call(token.line, token.col, ident, self.parse_args())
            return ident
        if token.is_punct("("):
            self.advance()
            expr = self.parse_expr()
            self.expect_punct(")")
            return expr
        raise self.error("an expression")


def parse(tokens: list[Token]) -> ast.Program:
    """Parse a token stream (which must end in end-of-input) into a syntax tree."""
    return Parser(tokens).parse_program()


def parse_source(source: str) -> ast.Program:
    """Tokenize and parse source text in one step."""
    return parse(tokenize(source))
