import json
import subprocess
import sys

import pytest

from complete_numbers.cli import run


def run_module(args, stdin=None):
    cmd = [sys.executable, "-m", "complete_numbers", *args]
    return subprocess.run(cmd, capture_output=True, text=True, input=stdin, encoding="utf-8")


def test_eval_division_example(capsys):
    assert run(["eval", "up(25+25i)/up(4+3i)"]) == 0
    assert capsys.readouterr().out == "up(7+1i)\n"


def test_eval_parse_error_exit_code(capsys):
    assert run(["eval", "(2+"]) == 2
    err = capsys.readouterr().err
    assert "ParseError" in err and "offset 3" in err


def test_eval_lex_error_exit_code(capsys):
    assert run(["eval", "2 @ 3"]) == 2


def test_eval_evaluation_error_exit_code(capsys):
    assert run(["eval", "|1+i|"]) == 3
    assert "IrrationalModulus" in capsys.readouterr().err


def test_eval_mode_flag(capsys):
    run(["eval", "up(0)/up(1)"])
    run(["eval", "up(0)/up(1)", "--mode", "lenient"])
    assert capsys.readouterr().out == "void\nup(0)\n"


@pytest.mark.parametrize(
    "source, expected",
    [
        ("1/0", {"input": "1/0", "status": "ok", "value": "down(1)", "error": None}),
        ("down(1)/down(0)", {"input": "down(1)/down(0)", "status": "void", "value": "void", "error": None}),
    ],
)
def test_eval_json(capsys, source, expected):
    assert run(["eval", source, "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == expected


def test_eval_json_errors(capsys):
    assert run(["eval", "(2+", "--json"]) == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "error" and doc["value"] is None
    assert doc["error"]["kind"] == "ParseError" and doc["error"]["position"] == 3
    assert run(["eval", "up(up(1)+down(1))", "--json"]) == 3
    doc = json.loads(capsys.readouterr().out)
    assert doc["error"]["kind"] == "RetagOfFull" and doc["error"]["position"] is None


def test_batch(tmp_path, capsys):
    f = tmp_path / "exprs.txt"
    f.write_bytes("# paper examples\r\nup(2+3i)+up(5+7i)\r\n(2+\r\n\r\n↓(1)/↓(0)\r\n|1+i|\r\n".encode("utf-8"))
    code = run(["batch", str(f)])
    out, err = capsys.readouterr()
    assert out.split("\n") == ["", "up(7+10i)", "", "", "void", "", ""]
    assert "line 3: ParseError" in err
    assert "line 6: IrrationalModulus" in err
    assert code == 2


def test_batch_all_ok(tmp_path, capsys):
    f = tmp_path / "ok.txt"
    f.write_text("1/0\ndown(0)/down(1)\n", encoding="utf-8")
    assert run(["batch", str(f)]) == 0
    assert capsys.readouterr().out == "down(1)\nup(1)\n"


def test_repl_session():
    result = run_module(["repl"], stdin="up(0)/up(1)\n:mode\nup(0)/up(1)\n(2+\n:quit\n1/0\n")
    assert result.returncode == 0
    assert result.stdout.splitlines() == [
        "void",
        "mode: lenient",
        "up(0)",
        "ParseError: expected a number or 'i' or 'up' or 'down' or '|' or '(' or '-', found end of input at offset 3",
    ]


def test_laws_text_output(capsys):
    assert run(["laws", "--trials", "50", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("prng: MT19937")
    assert "mul_noncomm" in out and "witness_found" in out


def test_laws_json_and_out_file(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    assert run(["laws", "--trials", "50", "--json", "--out", str(out_file)]) == 0
    printed = capsys.readouterr().out
    assert printed == out_file.read_text(encoding="utf-8")
    doc = json.loads(printed)
    assert len(doc) == 10


def test_laws_zero_trials(capsys):
    assert run(["laws", "--trials", "0", "--json"]) == 0
    assert {d["status"] for d in json.loads(capsys.readouterr().out)} == {"vacuous"}


def test_laws_failure_exit_code(monkeypatch, capsys):
    import complete_numbers.laws as laws
    from complete_numbers import CompleteNumber

    monkeypatch.setattr(laws, "cn_add", lambda p, q: CompleteNumber(p.vast, q.calp))
    assert run(["laws", "--trials", "20"]) == 1


def test_table(capsys):
    assert run(["table"]) == 0
    out = capsys.readouterr().out
    assert "↑ x ↓ = ↓    (eqn (2))" in out
    assert "↓ x ↑ = ↑    (eqn (3))" in out
    assert "|↓| = ↓    (property 7)" in out


def test_module_entry_point():
    result = run_module(["eval", "up(3+5i)*up(4+7i)"])
    assert result.returncode == 0
    assert result.stdout == "up(-23+41i)\n"


def test_bad_arguments_exit_nonzero():
    with pytest.raises(SystemExit) as info:
        run(["laws", "--bound", "0"])
    assert info.value.code == 2
