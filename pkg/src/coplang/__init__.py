"""coplang: an interpreter for COP, a small concept-oriented programming language.

Concepts generalize classes, inclusion generalizes inheritance, references are
multi-segment values, and every method can have an incoming and an outgoing
implementation dispatched in opposite directions along the inclusion chain.
"""

from .ast_nodes import Program, dump_tree
from .errors import CopError, CopRuntimeError, LexError, ParseError, StaticError
from .interpreter import Interpreter, ObjectStore, run
from .lexer import tokenize
from .parser import parse, parse_source
from .resolver import ConceptTable, build_table, chain_of, check_bodies, resolve_program
from .values import VOID, ConceptValue, Segment, render_value, serialize_reference

__version__ = "0.1.0"

__all__ = [
    "CopError", "CopRuntimeError", "LexError", "ParseError", "StaticError",
    "Program", "dump_tree", "tokenize", "parse", "parse_source",
    "ConceptTable", "build_table", "chain_of", "check_bodies", "resolve_program",
    "Interpreter", "ObjectStore", "run",
    "VOID", "ConceptValue", "Segment", "render_value", "serialize_reference",
    "__version__",
]
