"""Runtime values: complex references, copy semantics, canonical serialization.

Runtime values map onto Python as: int -> int (64-bit wrapped by the evaluator),
double -> float, bool -> bool, string and char arrays -> str (capacity is
checked at every binding site), void -> the VOID singleton, and complex
references -> ConceptValue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class VoidValue:
    """The unit value returned by void methods; a singleton."""

    _instance: "VoidValue | None" = None

    def __new__(cls) -> "VoidValue":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "void"


VOID = VoidValue()


def doubles_equal(a: float, b: float) -> bool:
    """Canonical double equality for reference structure: NaN equals NaN and
    -0.0 differs from 0.0, so structural equality always agrees with
    serialized-form equality."""
    if math.isnan(a) or math.isnan(b):
        return math.isnan(a) and math.isnan(b)
    return a == b and math.copysign(1.0, a) == math.copysign(1.0, b)


def values_equal(a: object, b: object) -> bool:
    """Structural equality across all runtime value variants."""
    if isinstance(a, bool) or isinstance(b, bool):
        return isinstance(a, bool) and isinstance(b, bool) and a == b
    if isinstance(a, float) and isinstance(b, float):
        return doubles_equal(a, b)
    if isinstance(a, int) and isinstance(b, int):
        return a == b
    if isinstance(a, str) and isinstance(b, str):
        return a == b
    if isinstance(a, ConceptValue) and isinstance(b, ConceptValue):
        return a.equals(b)
    if a is VOID and b is VOID:
        return True
    return False


@dataclass
class Segment:
    """One concept's contribution to a complex reference."""

    concept: str
    values: list

    def copy(self) -> "Segment":
        return Segment(self.concept, [copy_value(v) for v in self.values])


class ConceptValue:
    """A complex reference: ordered segments, outermost first.

    Constructed references always mirror the inclusion chain of the innermost
    concept. Copies are deep; mutating one copy's reference fields never
    affects another.
    """

    __slots__ = ("segments",)

    def __init__(self, segments: list[Segment]):
        self.segments = segments

    @property
    def chain_names(self) -> list[str]:
        return [seg.concept for seg in self.segments]

    @property
    def innermost(self) -> str:
        return self.segments[-1].concept

    def copy(self) -> "ConceptValue":
        return ConceptValue([seg.copy() for seg in self.segments])

    def prefix(self, length: int) -> "ConceptValue":
        """A copy of the first `length` segments."""
        return ConceptValue([seg.copy() for seg in self.segments[:length]])

    def equals(self, other: "ConceptValue") -> bool:
        if len(self.segments) != len(other.segments):
            return False
        for mine, theirs in zip(self.segments, other.segments):
            if mine.concept != theirs.concept:
                return False
            if len(mine.values) != len(theirs.values):
                return False
            for a, b in zip(mine.values, theirs.values):
                if not values_equal(a, b):
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConceptValue):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash(serialize_reference(self))

    def __repr__(self) -> str:
        return f"ConceptValue({serialize_reference(self)})"


def copy_value(v):
    """By-copy semantics: references are copied deeply, scalars are immutable."""
    if isinstance(v, ConceptValue):
        return v.copy()
    return v


def format_double(x: float) -> str:
    """Shortest decimal form that round-trips back to the same double."""
    return repr(x)


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _serialize_field(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format_double(v)
    if isinstance(v, str):
        return f'"{_escape(v)}"'
    if isinstance(v, ConceptValue):
        return serialize_reference(v)
    raise TypeError(f"cannot serialize {v!r} inside a reference")


def serialize_reference(ref: ConceptValue) -> str:
    """Canonical text form of a reference; equal references serialize identically
    and unequal ones differently."""
    parts = []
    for seg in ref.segments:
        rendered = ",".join(_serialize_field(v) for v in seg.values)
        parts.append(f"{seg.concept}({rendered})")
    return "/".join(parts)


def render_value(v) -> str:
    """Canonical rendering used by print and str: strings appear raw, references
    serialize, doubles use their shortest round-trip form."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format_double(v)
    if isinstance(v, str):
        return v
    if isinstance(v, ConceptValue):
        return serialize_reference(v)
    if v is VOID:
        return "void"
    raise TypeError(f"cannot render {v!r}")


def type_name(v) -> str:
    """Dynamic type description for diagnostics."""
    if isinstance(v, bool):
        return "bool"
    if isinstance(v, int):
        return "int"
    if isinstance(v, float):
        return "double"
    if isinstance(v, str):
        return "string"
    if isinstance(v, ConceptValue):
        return v.innermost
    if v is VOID:
        return "void"
    return type(v).__name__
