"""Token kinds and the token record produced by the lexer."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class TokenKind(enum.Enum):
    KEYWORD = "keyword"
    IDENT = "identifier"
    INT = "integer-literal"
    FLOAT = "float-literal"
    STRING = "string-literal"
    PUNCT = "punctuation"
    EOI = "end-of-input"


KEYWORDS = frozenset({
    "concept", "in", "out", "func", "get", "set",
    "if", "else", "while", "return",
    "this", "super", "sub", "value",
    "true", "false",
    "public", "protected", "private",
    "int", "double", "bool", "string", "void", "char",
})

PUNCTUATION = (
    # longest first so the lexer can match greedily
    "==", "!=", "<=", ">=", "&&", "||",
    "{", "}", "(", ")", "[", "]", ";", ",", ".",
    "=", "<", ">", "+", "-", "*", "/", "%", "!",
)


@dataclass
class Token:
    kind: TokenKind
    lexeme: str
    line: int
    col: int
    # decoded payload for literals: int, float, or unescaped string
    value: object = field(default=None)

    def is_keyword(self, word: str) -> bool:
        return self.kind is TokenKind.KEYWORD and self.lexeme == word

    def is_punct(self, mark: str) -> bool:
        return self.kind is TokenKind.PUNCT and self.lexeme == mark

    def __repr__(self) -> str:
        return f"Token({self.kind.value}, {self.lexeme!r}, {self.line}:{self.col})"
