import json

import pytest
from hypothesis import given, strategies as st

from coplang import ast_nodes as ast
from coplang.ast_nodes import dump_tree
from coplang.errors import LexError, ParseError
from coplang.parser import parse_source

DUAL_ACCOUNT = """
concept Account {
    char[10] accNo;
    in double getBalance() { return 1.0; }
    out double getBalance() { return 2.0; }
}
"""


def test_dual_methods_parse_as_two_members():
    tree = parse_source(DUAL_ACCOUNT)
    account = tree.concepts[0]
    methods = [m for m in account.members if isinstance(m, ast.MethodDecl)]
    assert [m.name for m in methods] == ["getBalance", "getBalance"]
    assert {m.direction for m in methods} == {"in", "out"}


def test_inclusion_parent_recorded():
    tree = parse_source(
        "concept Point { int x; int y; } concept Point3D in Point { int z; }")
    assert len(tree.concepts) == 2
    assert tree.concepts[0].parent is None
    assert tree.concepts[1].parent == "Point"


def test_unexpected_end_of_input():
    with pytest.raises(ParseError):
        parse_source("concept A {")


def test_member_order_preserved():
    tree = parse_source("concept P { int x; out int n; int y; }")
    assert [m.name for m in tree.concepts[0].members] == ["x", "n", "y"]
    assert [m.kind for m in tree.concepts[0].members] == [
        "reference-field", "object-field", "reference-field"]


def test_property_with_get_and_set():
    tree = parse_source("""
        concept Account {
            out double balance {
                get { return 0.0; }
                set { }
            }
        }
    """)
    prop = tree.concepts[0].members[0]
    assert isinstance(prop, ast.PropertyDecl)
    assert prop.getter is not None and prop.setter is not None


def test_property_needs_an_accessor():
    with pytest.raises(ParseError):
        parse_source("concept A { out double p { } }")


def test_method_requires_direction():
    with pytest.raises(ParseError):
        parse_source("concept A { double f() { } }")


def test_incoming_field_parses_for_resolver():
    tree = parse_source("concept A { in double bonus; }")
    member = tree.concepts[0].members[0]
    assert isinstance(member, ast.FieldDecl)
    assert member.direction == "in"


def test_char_array_size_must_be_positive():
    with pytest.raises(ParseError):
        parse_source("concept A { char[0] s; }")


def test_visibility_modifiers():
    tree = parse_source(
        "concept A { private int x; protected out double r; public in void m() { } }")
    assert [m.visibility for m in tree.concepts[0].members] == [
        "private", "protected", "public"]


def test_default_visibility_is_public():
    tree = parse_source("concept A { int x; }")
    assert tree.concepts[0].members[0].visibility == "public"


def test_sub_member_must_be_called():
    with pytest.raises(ParseError):
        parse_source("concept A { in void m() { int x = sub.y; } }")


def test_super_requires_member_access():
    with pytest.raises(ParseError):
        parse_source("concept A in B { out void m() { print(super); } }")


def test_void_variable_rejected():
    with pytest.raises(ParseError):
        parse_source("func void main() { void x = 1; }")


def test_parse_error_reports_location():
    with pytest.raises(ParseError) as exc:
        parse_source("concept A {\n  int ;\n}")
    assert exc.value.line == 2


def test_precedence_shape():
    tree = parse_source("func void main() { int x = 1 + 2 * 3; }")
    init = tree.functions[0].body.stmts[0].init
    assert init.op == "+"
    assert init.right.op == "*"


def test_paper_style_listings_parse():
    listings = [
        "concept Account { char[10] accNo; Person owner; }",
        DUAL_ACCOUNT,
        """concept Account {
               char[10] accNo;
               out double balance {
                   get { return 0.0; }
               }
           }""",
        "concept Bank { char[12] bankCode; } concept Account in Bank { char[10] accNo; }",
        """concept Account in Bank {
               out double getInterest() {
                   double rate = super.getInterest();
                   return rate + accRate;
               }
           }""",
        "concept BonusAccount in Account { out double bonus; }",
        """concept Panel { in void draw() { fillBackground(); sub.draw(); } }
           concept Button in Panel { in void draw() { drawButtonText("MyButton"); } }""",
        """concept Panel { out void draw() { fillBackground(); } }
           concept Button in Panel {
               out void draw() { super.fillBackground(); drawButtonText("MyButton"); }
           }""",
        """concept Bank {
               in double getBalance() { return sub.getBalance(); }
           }""",
        """concept Bank {
               protected out double reserves;
               out double getReserves() { return this.reserves; }
           }""",
    ]
    for src in listings:
        parse_source(src)


# --- tree dump ---

def test_dump_concept_and_field_children():
    dump = dump_tree(parse_source("concept Point { int x; int y; }"))
    assert '"kind":"concept","name":"Point"' in dump
    assert dump.count('"kind":"reference-field"') == 2


def test_dump_empty_program():
    assert dump_tree(parse_source("")) == '{"concepts":[],"functions":[]}'


def test_dump_distinguishes_dual_directions():
    dump = dump_tree(parse_source(DUAL_ACCOUNT))
    assert '"direction":"in"' in dump
    assert '"direction":"out"' in dump


def test_dump_is_valid_json_with_locations():
    doc = json.loads(dump_tree(parse_source(DUAL_ACCOUNT)))
    concept = doc["concepts"][0]
    assert concept["line"] >= 1 and concept["col"] >= 1
    for member in concept["members"]:
        assert member["line"] >= 1


def test_dump_round_trip_stable():
    src = DUAL_ACCOUNT + "func void main() { print(1); }"
    first = dump_tree(parse_source(src))
    second = dump_tree(parse_source(src))
    assert first == second


@given(st.text(max_size=200))
def test_parser_total_on_arbitrary_text(src):
    try:
        parse_source(src)
    except (LexError, ParseError) as exc:
        assert exc.line >= 1
