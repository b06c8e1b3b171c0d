import io

import pytest

from gpea.cli import ModelSyntaxError, parse_model, parse_set, run, serialize_model
from gpea.construct import chain, diamond
from gpea.core import InvalidModelError, UsageError
from gpea.corpus import corpus

D4_TEXT = "gpea 4\nlabels 0 a b 1\nsum 1 2 3\nsum 2 1 3\n"
V3_TEXT = "gpea 3\nlabels 0 a b\n"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (("d4", D4_TEXT), ("v3", V3_TEXT), ("bad", "gpea 2\nsum 1 1 0\n"),
                       ("broken", "gpea 2\nsum 1 x 1\n")):
        p = tmp_path / f"{name}.gpea"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_parse_examples():
    assert parse_model("gpea 2\n") == chain(2)
    E = parse_model("gpea 4\nsum 1 2 3\nsum 2 1 3")
    assert E == diamond()
    with pytest.raises(InvalidModelError) as info:
        parse_model("gpea 2\nsum 1 1 0")
    assert ("GPEA4", (1, 1)) in info.value.report.violations


def test_parse_comments_and_duplicates():
    E = parse_model("# D4\ngpea 4  # header\n\nsum 1 2 3\nsum 1 2 3\nsum 2 1 3\n")
    assert E == diamond()


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("sum 1 1 1\n", 1),
    ("gpea 2\nsum 1 1\n", 2),
    ("gpea 2\nsum 1 1 5\n", 2),
    ("gpea 3\nsum 1 1 2\nsum 1 1 1\n", 3),
    ("gpea 3\n\nlabels a b\n", 3),
    ("gpea 2\nfoo\n", 2),
    ("gpea x\n", 1),
])
def test_syntax_errors_have_line_numbers(text, line):
    with pytest.raises(ModelSyntaxError) as info:
        parse_model(text)
    assert info.value.line == line


def test_explicit_zero_sums_must_agree():
    assert parse_model("gpea 2\nsum 0 1 1\n") == chain(2)
    with pytest.raises(UsageError):
        parse_model("gpea 2\nsum 0 1 0\n")


def test_round_trip():
    for _, E in corpus(4):
        text = serialize_model(E)
        F = parse_model(text)
        assert F == E and F.labels == E.labels
        assert serialize_model(F) == text
    assert serialize_model(parse_model(D4_TEXT)) == D4_TEXT


def test_set_specs():
    E = parse_model(D4_TEXT)
    assert parse_set(E, "list:1,2") == {1, 2}
    assert parse_set(E, "list:") == frozenset()
    assert parse_set(E, "labels:a,1") == {1, 3}
    assert parse_set(E, "center") == {0, 1, 2, 3}
    assert parse_set(E, "atoms") == {1, 2}
    assert parse_set(E, "all") == {0, 1, 2, 3}
    assert parse_set(E, "pea-class:commutative") == {0, 1, 2, 3}
    for bad in ("list:9", "labels:z", "nope", "pea-class:boolean", "list:a"):
        with pytest.raises(UsageError):
            parse_set(E, bad)


def test_validate(files):
    assert call("validate", files["d4"])[0] == 0
    code, _, err = call("validate", files["bad"])
    assert code == 2 and "GPEA4" in err
    code, _, err = call("validate", files["broken"])
    assert code == 2 and "line 2" in err
    assert call("validate", "/no/such/file")[0] == 1


def test_usage_errors(files):
    assert call()[0] == 1
    assert call("frobnicate")[0] == 1
    assert call("tdclose", files["d4"], "--Q", "all", "--op", "sideways")[0] == 1
    assert call("enumerate", "--order", "7")[0] == 1
    assert call("enumerate", "--order", "x")[0] == 1
    assert call("laws")[0] == 1
    assert call("laws", files["d4"], "--law", "nope")[0] == 1


def test_tdclose(files):
    code, out, _ = call("tdclose", files["v3"], "--Q", "list:1,2", "--op", "gamma")
    assert code == 0 and "= {0,a,b}" in out
    code, out, _ = call("--format", "machine", "tdclose", files["d4"], "--Q", "list:1", "--op", "prime")
    assert out.strip() == "record=tdclose op=prime Q=a result=0,b td=true"


def test_decompose(files):
    code, out, _ = call("decompose", files["d4"], "--K", "all")
    assert code == 0 and "fundamental triple = (1,0,0)" in out
    code, out, _ = call("decompose", files["v3"], "--K", "all", "--format", "machine")
    assert "record=fundamental triple=0,1,0" in out
    code, _, err = call("decompose", files["d4"], "--K", "atoms")
    assert code == 1 and "--close" in err
    code, out, _ = call("decompose", files["d4"], "--K", "atoms", "--close")
    assert code == 0 and "not a TD set" in out
    assert call("decompose", files["d4"], "--K", "all", "--F", "list:0")[0] == 1
    code, out, _ = call("decompose", files["v3"], "--K", "list:0", "--F", "all", "--format", "machine")
    assert "piI=0 piII=1 piIII=0" in out


def test_info_and_reports(files):
    code, out, _ = call("info", files["d4"])
    assert code == 0 and "top 1" in out and "center: {0,a,b,1}" in out
    code, out, _ = call("exocenter", files["v3"], "--format", "machine")
    assert out.count("record=exomap") == 2
    code, out, _ = call("center", files["v3"])
    assert "center: {0}" in out and "unit: 0" in out
    code, out, _ = call("covers", files["d4"], "--format", "machine")
    assert code == 0 and "record=cogpea ok=true families=4 maximal=2" in out


def test_enumerate():
    code, out, _ = call("enumerate", "--order", "4", "--format", "machine")
    assert code == 0
    assert out.splitlines()[0] == "record=enumerate order=4 classes=5"
    code, out, _ = call("enumerate", "--order", "3")
    assert out.count("gpea 3") == 2


def test_laws_on_file(files):
    code, out, _ = call("laws", files["d4"], "--seedless")
    assert code == 0 and out.splitlines()[-1].startswith("summary: 1 models")
    assert " in " not in out
    code, out, _ = call("laws", files["v3"], "--law", "centr,boolalg.laws", "--format", "machine")
    assert out.count("record=law ") == 2


def test_laws_failure_exit_code(files, monkeypatch):
    import gpea.center
    monkeypatch.setattr(gpea.center, "central_elements", lambda E: frozenset(E.elements()))
    code, out, _ = call("laws", files["v3"], "--law", "centr")
    assert code == 3 and out.startswith("FAIL")


def test_law_timeout(files, monkeypatch):
    import time as _time
    import gpea.center

    def slow(E):
        _time.sleep(2)
        return frozenset({0})

    monkeypatch.setattr(gpea.center, "central_elements", slow)
    code, out, _ = call("laws", files["v3"], "--law", "centr", "--timeout", "0.1", "--format", "machine")
    assert code == 3 and "status=timeout" in out
