import pytest

from truthrel.cli import main
from truthrel.harness.fixtures import MODELS_TEXT


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("U1B", "EX2", "EX3", "U1", "CHILDREN"):
        p = tmp_path / f"{name.lower()}.mdl"
        p.write_text(MODELS_TEXT[name])
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out.splitlines(), cap.err


def test_eval_gap_is_success(capsys, files):
    code, out, _ = run(capsys, "eval", "--model", files["U1B"], "--formula", "(x)~(F(x)&G(x))")
    assert (code, out) == (0, ["GAP"])


def test_eval_true(capsys, files):
    code, out, _ = run(capsys, "eval", "--model", files["EX3"], "--formula", "(Ex)(Ey)(F(x,y)&G(x,y))")
    assert (code, out) == (0, ["TRUE"])


def test_eval_trace_keeps_first_line(capsys, files):
    code, out, _ = run(capsys, "eval", "--model", files["EX3"], "--formula", "(x)(y)(F(x,y)->~G(x,y))", "--trace")
    assert code == 0 and out[0] == "FALSE" and out[1].startswith("verdict ")


def test_eval_not_prenex(capsys, files):
    code, out, err = run(capsys, "eval", "--model", files["U1B"], "--formula", "(x)~(F(x)&G(x)) & P")
    assert code == 2 and out == [] and err


def test_eval_semantics_switch(capsys):
    args = ("eval", "--model", "fixture:U1B_DRAWN", "--formula", "(Ex)(F(x)|G(x))")
    assert run(capsys, *args)[1] == ["TRUE"]
    assert run(capsys, *args, "--semantics", "s2")[1] == ["GAP"]
    code, _, _ = run(capsys, "eval", "--model", "fixture:EX3", "--formula", "(x)(y)(F(x,y)->~G(x,y))",
                     "--semantics", "s2")
    assert code == 3


def test_eval_mode_any(capsys):
    code, out, _ = run(capsys, "eval", "--model", "fixture:CHILDREN", "--formula", "(x)(J(x)->S(x))",
                       "--mode", "any")
    assert (code, out) == (0, ["TRUE"])


@pytest.mark.parametrize(
    "argv, code",
    [
        (("eval", "--model", "fixture:EX3", "--formula", "(x)H(x)"), 3),
        (("eval", "--model", "fixture:EX3", "--formula", "(x)F(x,y)"), 3),
        (("eval", "--model", "fixture:NOPE", "--formula", "(x)F(x)"), 2),
        (("eval", "--model", "/nonexistent.mdl", "--formula", "(x)F(x)"), 2),
        (("eval", "--model", "fixture:EX3", "--formula", "(x)(F(x,y"), 2),
        (("tdsets", "--formula", "(x)P"), 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_empty_universe_is_semantic_error(capsys, tmp_path):
    p = tmp_path / "empty.mdl"
    p.write_text("universe:\npred F/1:\n")
    code = run(capsys, "eval", "--model", str(p), "--formula", "(x)F(x)")[0]
    assert code in (2, 3)


def test_tdsets(capsys):
    assert run(capsys, "tdsets", "--formula", "~P | Q", "--stuck", "P=0")[1] == ["{P}", "redundant: Q", "t-relevant: no"]
    assert run(capsys, "tdsets", "--formula", "P & Q")[1] == ["{P,Q}", "redundant:", "t-relevant: yes"]
    assert run(capsys, "tdsets", "--formula", "P -> (Q -> P)")[1] == ["{}", "redundant: P Q", "t-relevant: no"]


def test_relevant(capsys, files):
    code, out, _ = run(capsys, "relevant", "--model", files["EX2"], "--formula", "(x)(y)(F(x,y)->~G(x,y))")
    assert code == 0 and out[0] == "IRRELEVANT" and any("no witness column" in l for l in out)
    assert run(capsys, "relevant", "--model", files["U1"], "--formula", "(x)(F(x)->~G(x))")[1][0] == "RELEVANT"
    out = run(capsys, "relevant", "--model", files["CHILDREN"], "--formula", "(x)(J(x)->S(x))")[1]
    assert out[0] == "IRRELEVANT" and "{J(x)}" in "\n".join(out)


def test_classical(capsys):
    assert run(capsys, "classical", "--model", "fixture:U1", "--formula", "(x)(F(x)->~G(x))")[1] == ["TRUE"]


def test_census_small(capsys):
    code, out, _ = run(capsys, "census", "--signature", "F/1", "--max-universe", "1", "--catalog", "builtin")
    assert code == 0
    assert out[0] == "# signature F/1 universe 1 models 2"
    assert out[1].split("\t") == ["sentence", "models", "true", "false", "gap", "divergences"]
    assert all(l.split("\t")[1] == "2" for l in out[2:6])


def test_census_cap(capsys):
    assert run(capsys, "census", "--max-universe", "9")[0] == 3


def test_census_catalog_file(capsys, tmp_path):
    p = tmp_path / "cat.txt"
    p.write_text("# comment\n(x)(F(x) -> ~G(x))\n")
    code, out, _ = run(capsys, "census", "--signature", "F/1,G/1", "--max-universe", "1", "--catalog", str(p))
    assert code == 0
    assert out[2].split("\t") == ["(x)(F(x) -> ~G(x))", "4", "0", "1", "3", "0"]


def test_census_with_properties(capsys):
    code, out, _ = run(capsys, "census", "--signature", "F/1,G/1", "--max-universe", "2", "--catalog", "builtin",
                       "--check-properties", "all")
    assert code == 0
    text = "\n".join(out)
    assert "property\tdomain\tresult\tcounterexample" in text
    assert "DIVERGENCE\tmonadic-rule" in text
    assert "\tFAIL\t" not in text


def test_output_is_deterministic(capsys):
    argv = ("census", "--signature", "F/1,G/1", "--max-universe", "2", "--catalog", "builtin")
    assert run(capsys, *argv) == run(capsys, *argv)
