import io
import json

from coplang.cli import USAGE, main


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    status = main(argv, stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_run_corpus_program():
    status, out, err = invoke(["run", "programs/panel_button_inverse.cop"])
    assert status == 0
    assert out == "fillBackground\ndrawButtonText(MyButton)\n"
    assert err == ""


def test_trace_goes_only_to_stderr():
    plain = invoke(["run", "programs/panel_button_inverse.cop"])
    traced = invoke(["run", "programs/panel_button_inverse.cop", "--trace"])
    assert traced[0] == 0
    assert traced[1] == plain[1]  # stdout identical with and without --trace
    assert "IN Panel.draw" in traced[2]
    assert plain[2] == ""


def test_check_reports_cycle_with_exit_2(tmp_path):
    path = write(tmp_path, "cyclic.cop", "concept A in B {} concept B in A {}")
    status, out, err = invoke(["check", path])
    assert status == 2
    assert out == ""
    lines = err.splitlines()
    assert len(lines) == 1
    assert lines[0].startswith("error: InclusionCycle at ")


def test_check_passes_silently(tmp_path):
    path = write(tmp_path, "ok.cop", "func void main() { }")
    assert invoke(["check", path]) == (0, "", "")


def test_check_never_runs_user_code(tmp_path):
    path = write(tmp_path, "noisy.cop", 'func void main() { print("side effect"); }')
    status, out, err = invoke(["check", path])
    assert (status, out, err) == (0, "", "")


def test_parse_dump_prints_json(tmp_path):
    path = write(tmp_path, "p.cop", "concept Point { int x; int y; }")
    status, out, err = invoke(["parse", path, "--dump"])
    assert status == 0
    doc = json.loads(out)
    assert doc["concepts"][0]["name"] == "Point"


def test_parse_without_dump_is_quiet(tmp_path):
    path = write(tmp_path, "p.cop", "concept Point { int x; }")
    assert invoke(["parse", path]) == (0, "", "")


def test_parse_error_exit_2(tmp_path):
    path = write(tmp_path, "bad.cop", "concept A {")
    status, out, err = invoke(["parse", path])
    assert status == 2
    assert err.startswith("error: ParseError at ")


def test_lex_error_exit_2(tmp_path):
    path = write(tmp_path, "bad.cop", '"unterminated')
    status, _, err = invoke(["run", path])
    assert status == 2
    assert err.startswith("error: LexError at ")


def test_runtime_error_exit_1(tmp_path):
    path = write(tmp_path, "boom.cop", "func void main() { print(1 / 0); }")
    status, out, err = invoke(["run", path])
    assert status == 1
    assert err.startswith("runtime error: DivisionByZero:")


def test_unknown_subcommand_is_usage_error():
    status, out, err = invoke(["frobnicate", "x.cop"])
    assert status == 3
    assert err == USAGE + "\n"


def test_unknown_flag_is_usage_error(tmp_path):
    path = write(tmp_path, "ok.cop", "func void main() { }")
    assert invoke(["run", path, "--dump"])[0] == 3
    assert invoke(["check", path, "--trace"])[0] == 3


def test_missing_file_argument_is_usage_error():
    status, _, err = invoke(["run"])
    assert status == 3
    assert err == USAGE + "\n"


def test_extra_positional_is_usage_error(tmp_path):
    path = write(tmp_path, "ok.cop", "func void main() { }")
    assert invoke(["run", path, path])[0] == 3


def test_unreadable_file_exit_3(tmp_path):
    status, _, err = invoke(["run", str(tmp_path / "missing.cop")])
    assert status == 3
    assert err.strip().startswith("cop:")


def test_no_arguments_prints_usage():
    status, _, err = invoke([])
    assert status == 3
    assert err == USAGE + "\n"


def test_multiple_static_errors_reported(tmp_path):
    path = write(tmp_path, "multi.cop", """
        concept A in Ghost { }
        concept B { in double bad; }
    """)
    status, _, err = invoke(["check", path])
    assert status == 2
    assert len(err.splitlines()) == 2
