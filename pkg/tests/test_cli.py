"""Command-line driver: golden outputs, exit codes, and output stability.

The expected stdout for every entry in CASES lives at tests/golden/<name>.out;
regenerate the files with scripts/refresh_golden.py after a deliberate
output change.
"""

import json
import pathlib

import pytest

from graphlinks import parse_document, serialize_document
from graphlinks.cli import run_command

GOLDEN = pathlib.Path(__file__).parent / "golden"

# (name, argv, stdin file or None); paths are relative to tests/golden.
CASES = [
    ("info-knot-text", ["info", "knot3.lg"], None),
    ("info-knot-json", ["info", "--format", "json", "knot3.lg"], None),
    ("info-looped-text", ["info", "loops3.ug"], None),
    ("chi-knot-text", ["chi", "knot3.lg"], None),
    ("chi-knot-json", ["chi", "--format", "json", "knot3.lg"], None),
    ("psi-looped-text", ["psi", "loops3.ug"], None),
    ("roundtrip-knot-json", ["roundtrip", "--format", "json", "knot3.lg"], None),
    ("moves-list-text", ["moves", "list", "knot3.lg"], None),
    ("moves-apply-json", ["moves", "apply", "--format", "json", "pair1.lg", "Og4' a"], None),
    ("realize-knot-json", ["realize", "--format", "json", "knot3.lg"], None),
    ("interlace-diag-text", ["interlace", "diag3.cd"], None),
    ("ddiagram-diag-json", ["ddiagram", "--format", "json", "diag3.cd"], None),
    ("equiv-cert-json", ["equiv", "--format", "json", "one0.lg", "empty.lg"], None),
    ("equiv-dist-json", ["equiv", "--format", "json", "link2.lg", "one0.lg"], None),
    ("info-stdin-text", ["info", "-"], "knot3.lg"),
]


def run_case(argv, stdin_file):
    stdin = (GOLDEN / stdin_file).read_text() if stdin_file else ""
    return run_command(argv, stdin=stdin)


@pytest.fixture(autouse=True)
def _in_golden_dir(monkeypatch):
    monkeypatch.chdir(GOLDEN)


@pytest.mark.parametrize("name,argv,stdin_file", CASES, ids=[c[0] for c in CASES])
def test_golden_output(name, argv, stdin_file):
    out, code = run_case(argv, stdin_file)
    assert code == 0
    assert out == (GOLDEN / f"{name}.out").read_text()


@pytest.mark.parametrize("name,argv,stdin_file", CASES, ids=[c[0] for c in CASES])
def test_golden_output_is_stable(name, argv, stdin_file):
    first = run_case(argv, stdin_file)
    second = run_case(argv, stdin_file)
    assert first == second


@pytest.mark.parametrize(
    "doc", ["knot3.lg", "link2.lg", "one0.lg", "empty.lg", "pair1.lg", "loops3.ug", "diag3.cd"]
)
def test_corpus_documents_are_normalized(doc):
    raw = (GOLDEN / doc).read_text()
    assert serialize_document(parse_document(raw, source=doc)) == raw


def test_json_outputs_parse_and_carry_envelope():
    for name, argv, stdin_file in CASES:
        if "--format" not in argv:
            continue
        out, _ = run_case(argv, stdin_file)
        env = json.loads(out)
        assert set(env) == {"command", "input", "result", "stats"}
        assert env["command"] == argv[0]


def test_usage_errors_exit_2():
    assert run_command(["frobnicate"])[1] == 2
    assert run_command(["info", "--no-such-flag", "knot3.lg"])[1] == 2
    assert run_command(["info", "no-such-file.lg"])[1] == 2
    assert run_command(["moves", "apply", "pair1.lg", "Og9 zap"])[1] == 2


def test_parse_errors_exit_3():
    assert run_command(["info", "-"], stdin="lg 1\nv a 9 +\n")[1] == 3
    assert run_command(["chi", "-"], stdin="not a document\n")[1] == 3


def test_precondition_errors_exit_4():
    assert run_command(["chi", "link2.lg"])[1] == 4
    assert run_command(["psi", "loops3.ug", "--seed-diagonal", "0"])[1] == 4
    assert run_command(["equiv", "knot3.lg", "loops3.ug"])[1] == 4
    assert run_command(["realize", "--max-vertices", "2", "knot3.lg"])[1] == 4
    assert run_command(["moves", "apply", "knot3.lg", "Og4 a c"])[1] == 4
    assert run_command(["chi", "loops3.ug"])[1] == 4


def test_failed_commands_emit_no_stdout():
    out, code = run_command(["chi", "link2.lg"])
    assert code == 4 and out == ""


def test_selftest_runs_green():
    out, code = run_command(["selftest", "--format", "json"])
    assert code == 0
    env = json.loads(out)
    assert env["result"]["ok"] is True
    assert all(c["ok"] for c in env["result"]["checks"])
    assert env["stats"]["seed"] == 0


def test_selftest_seed_changes_nothing_about_success():
    assert run_command(["selftest", "--seed", "7"])[1] == 0
