import io
import json
import subprocess
import sys

import pytest

from aiband.cli import EXIT_NO_AI, EXIT_PARSE, EXIT_USAGE, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_equiv():
    assert run("equiv", "--ai", "h", "h(h(a,b),h(a,b))", "h(a,b)")[:2] == (0, "EQUIV\n")
    assert run("equiv", "--ai", "h", "h(a,b)", "h(b,a)")[:2] == (0, "NOT-EQUIV\n")


def test_normalize():
    code, out, _ = run("normalize", "--ai", "h", "h(h(a,b),b,a,b,h(a,b))", "h(a,a)")
    assert code == 0 and out.split() == ["h(a,b,a,b,a,b)", "a"]


def test_sqgen():
    assert run("sqgen", "2")[1] == "h(?x,b,a,b,?x)\n"
    assert run("sqgen", "4", "--word")[1] == "xbabxabaxbxax\n"
    assert run("sqgen", "3", "--word", "--check-squarefree")[1] == "xbabxabax square_free=True\n"
    assert run("sqgen", "0")[0] == EXIT_USAGE


def test_gen_check():
    code, out, _ = run("gen-check", "--ai", "h", "h(?x,b,a,b,?x)", "h(a,b)")
    assert code == 0 and out == "GENERALIZES {?x -> h(a,b)}\n"
    assert run("gen-check", "--ai", "h", "h(a,?x)", "h(b,a)")[1] == "NOT\n"
    code, out, _ = run("gen-check", "--ai", "h", "--output", "json-lines", "?x", "h(a,b)")
    assert json.loads(out) == {"command": "gen-check", "general": "?x", "specific": "h(a,b)",
                               "generalizes": True, "witness": "{?x -> h(a,b)}"}


def test_band_enum():
    code, out, _ = run("band-enum", "--alphabet", "ab")
    lines = out.splitlines()
    assert lines[0] == "0\ta\t1"
    assert lines[-1] == "classes=6 max_min_length=3"
    code, out, _ = run("band-enum", "--output", "json-lines")
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[-1] == {"record": "summary", "classes": 159, "max_min_length": 8}
    assert run("band-enum", "--alphabet", "a,bb")[1].splitlines()[-1] == \
        "classes=6 max_min_length=3"


def test_error_codes():
    codes = {
        "missing_ai": run("equiv", "a", "b")[0],
        "parse": run("equiv", "--ai", "h", "h(a", "b")[0],
        "unknown": run("frobnicate")[0],
    }
    assert codes == {"missing_ai": EXIT_NO_AI, "parse": EXIT_PARSE, "unknown": EXIT_USAGE}
    assert len(set(codes.values())) == 3
    _, _, err = run("equiv", "a", "b")
    assert err.count("\n") == 1


@pytest.mark.parametrize("sub", ["normalize", "equiv", "band-enum", "gen-check", "sqgen", "verify"])
def test_help(sub, capsys):
    assert run(sub, "--help")[0] == 0
    assert "--output" in capsys.readouterr().out


def test_verify_collision():
    code, out, _ = run("verify", "collision", "--limit", "200")
    assert code == 0
    assert out.startswith("collision limit=200: sqGen(2) ~ sqGen(5)")


def test_verify_thm3_structured():
    code, out, _ = run("verify", "thm3", "--limit", "20", "--output", "json-lines")
    rec = json.loads(out)
    assert code == 0 and rec["claim_holds"] is False
    assert rec["g3_size"] < rec["g2_size"]


def test_console_script_module():
    res = subprocess.run([sys.executable, "-m", "aiband.cli", "sqgen", "2"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "h(?x,b,a,b,?x)\n"
