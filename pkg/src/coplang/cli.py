"""Command-line driver: `cop run|check|parse` over .cop files.

Exit codes: 0 success, 1 runtime error, 2 static (lex/parse/resolve) error,
3 usage error. All diagnostics go to standard error.
"""

from __future__ import annotations

import sys

from .ast_nodes import dump_tree
from .errors import LexError, ParseError
from .interpreter import run
from .lexer import tokenize
from .parser import parse
from .resolver import resolve_program

USAGE = "usage: cop run <file> [--trace] | cop check <file> | cop parse <file> [--dump]"

_FLAGS = {"run": {"--trace"}, "check": set(), "parse": {"--dump"}}


def _usage_error(stderr) -> int:
    stderr.write(USAGE + "\n")
    return 3


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    args = list(sys.argv[1:] if argv is None else argv)

    if not args or args[0] not in _FLAGS:
        return _usage_error(stderr)
    command = args[0]
    flags: set[str] = set()
    path: str | None = None
    for arg in args[1:]:
        if arg.startswith("--"):
            if arg not in _FLAGS[command] or arg in flags:
                return _usage_error(stderr)
            flags.add(arg)
        elif path is None:
            path = arg
        else:
            return _usage_error(stderr)
    if path is None:
        return _usage_error(stderr)

    try:
        with open(path, encoding="utf-8") as handle:
            source = handle.read()
    except OSError as exc:
        stderr.write(f"cop: cannot read '{path}': {exc.strerror or exc}\n")
        return 3

    try:
        tree = parse(tokenize(source))
    except (LexError, ParseError) as exc:
        stderr.write(exc.render() + "\n")
        return 2

    if command == "parse":
        if "--dump" in flags:
            stdout.write(dump_tree(tree) + "\n")
        return 0

    table, errors = resolve_program(tree)
    if errors:
        for error in errors:
            stderr.write(error.render() + "\n")
        return 2
    if command == "check":
        return 0
    return run(table, trace="--trace" in flags, stdout=stdout, stderr=stderr)


if __name__ == "__main__":
    raise SystemExit(main())
