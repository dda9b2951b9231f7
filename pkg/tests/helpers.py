"""Shared test helpers: compile source, run programs, collect traces."""

from __future__ import annotations

import io

from coplang import parse_source, resolve_program
from coplang.interpreter import Interpreter, run


def compile_source(src: str):
    """Parse and resolve, asserting the program is statically clean."""
    table, errors = resolve_program(parse_source(src))
    assert not errors, "\n".join(e.render() for e in errors)
    return table


def static_errors(src: str) -> list:
    _, errors = resolve_program(parse_source(src))
    return errors


def error_codes(src: str) -> list[str]:
    return [e.code for e in static_errors(src)]


def run_source(src: str, trace: bool = False) -> tuple[int, str, str]:
    """Compile and execute; returns (exit status, stdout, stderr/trace)."""
    table = compile_source(src)
    out, err = io.StringIO(), io.StringIO()
    status = run(table, trace=trace, stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def make_interpreter(src: str) -> tuple[Interpreter, list[str]]:
    """An interpreter over the compiled source plus its collected event list."""
    table = compile_source(src)
    events: list[str] = []
    interp = Interpreter(table, trace=events.append, stdout=io.StringIO())
    return interp, events
