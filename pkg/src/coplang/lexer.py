"""Hand-written lexer for COP source text.

Whitespace and comments (`//` line, `/* */` non-nesting block) are discarded;
the resulting stream always ends in an end-of-input token.
"""

from __future__ import annotations

from .errors import LexError
from .tokens import KEYWORDS, PUNCTUATION, Token, TokenKind

_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t"}


def _is_digit(ch: str) -> bool:
    # ASCII only: str.isdigit admits characters int() rejects
    return "0" <= ch <= "9"


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_"


def _is_ident_part(ch: str) -> bool:
    return ch.isalpha() or _is_digit(ch) or ch == "_"


class _Lexer:
    def __init__(self, source: str):
        self.src = source
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str, line: int | None = None, col: int | None = None) -> LexError:
        return LexError(message, self.line if line is None else line,
                        self.col if col is None else col)

    def peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.src[i] if i < len(self.src) else ""

    def advance(self) -> str:
        ch = self.src[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def skip_trivia(self) -> None:
        while self.pos < len(self.src):
            ch = self.peek()
            if ch in " \t\r\n":
                self.advance()
            elif ch == "/" and self.peek(1) == "/":
                while self.pos < len(self.src) and self.peek() != "\n":
                    self.advance()
            elif ch == "/" and self.peek(1) == "*":
                start_line, start_col = self.line, self.col
                self.advance()
                self.advance()
                while True:
                    if self.pos >= len(self.src):
                        raise self.error("unterminated block comment", start_line, start_col)
                    if self.peek() == "*" and self.peek(1) == "/":
                        self.advance()
                        self.advance()
                        break
                    self.advance()
            else:
                return

    def read_string(self) -> Token:
        start_line, start_col = self.line, self.col
        self.advance()  # opening quote
        raw = ['"']
        decoded: list[str] = []
        while True:
            if self.pos >= len(self.src) or self.peek() == "\n":
                raise self.error("unterminated string literal", start_line, start_col)
            ch = self.advance()
            raw.append(ch)
            if ch == '"':
                break
            if ch == "\\":
                if self.pos >= len(self.src):
                    raise self.error("unterminated string literal", start_line, start_col)
                esc = self.advance()
                raw.append(esc)
                if esc not in _ESCAPES:
                    raise self.error(f"invalid escape sequence '\\{esc}'", start_line, start_col)
                decoded.append(_ESCAPES[esc])
            else:
                decoded.append(ch)
        return Token(TokenKind.STRING, "".join(raw), start_line, start_col, "".join(decoded))

    def read_number(self) -> Token:
        start_line, start_col = self.line, self.col
        digits = [self.advance()]
        while _is_digit(self.peek()):
            digits.append(self.advance())
        # float: DIGITS "." DIGITS [e[+-]DIGITS]
        if self.peek() == "." and _is_digit(self.peek(1)):
            digits.append(self.advance())
            while _is_digit(self.peek()):
                digits.append(self.advance())
            if self.peek() in "eE" and (_is_digit(self.peek(1))
                                        or (self.peek(1) in "+-" and _is_digit(self.peek(2)))):
                digits.append(self.advance())
                if self.peek() in "+-":
                    digits.append(self.advance())
                while _is_digit(self.peek()):
                    digits.append(self.advance())
            text = "".join(digits)
            return Token(TokenKind.FLOAT, text, start_line, start_col, float(text))
        text = "".join(digits)
        return Token(TokenKind.INT, text, start_line, start_col, int(text))

    def read_word(self) -> Token:
        start_line, start_col = self.line, self.col
        chars = [self.advance()]
        while self.pos < len(self.src) and _is_ident_part(self.peek()):
            chars.append(self.advance())
        word = "".join(chars)
        kind = TokenKind.KEYWORD if word in KEYWORDS else TokenKind.IDENT
        return Token(kind, word, start_line, start_col)

    def next_token(self) -> Token:
        self.skip_trivia()
        if self.pos >= len(self.src):
            return Token(TokenKind.EOI, "", self.line, self.col)
        ch = self.peek()
        if _is_ident_start(ch):
            return self.read_word()
        if _is_digit(ch):
            return self.read_number()
        if ch == '"':
            return self.read_string()
        for mark in PUNCTUATION:
            if self.src.startswith(mark, self.pos):
                start_line, start_col = self.line, self.col
                for _ in mark:
                    self.advance()
                return Token(TokenKind.PUNCT, mark, start_line, start_col)
        raise self.error(f"illegal character {ch!r}")


def tokenize(source: str) -> list[Token]:
    """Convert source text into a token list ending in an end-of-input token.

    Raises LexError for an unterminated string, unterminated block comment,
    invalid escape, or an illegal character.
    """
    lexer = _Lexer(source)
    tokens: list[Token] = []
    while True:
        token = lexer.next_token()
        tokens.append(token)
        if token.kind is TokenKind.EOI:
            return tokens
