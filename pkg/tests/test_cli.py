import json

import pytest
from hypothesis import given

from bracealg.algebra import Polynomial
from bracealg.cli import main, read_certificate, write_certificate
from bracealg.notation import ParseError, parse, parse_product, parse_word, serialize

from conftest import P, W, polynomials


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_parse_examples():
    assert parse("<a;<b;c>>") == Polynomial({W("<a,b;c>"): 1, W("<b,a;c>"): 1, W("<<a;b>;c>"): 1})
    f = parse("3/2*<x1;x2> - <x2;x1>")
    assert len(f) == 2 and f.lead_word == W("<x1;x2>") and f.lead_coeff == P("3/2*x1").lead_coeff
    assert parse("x1") == Polynomial.word("x1")
    assert parse("0") == Polynomial.zero()
    assert parse(" - 2 * x  +  ⟨x;x⟩ ") == P("<x;x> - 2*x")


@pytest.mark.parametrize(
    "text, pos",
    [("<a;<b;c>", 8), ("a +", 3), ("3", 1), ("<a b>", 3), ("1/0*x", 2), ("a $ b", 2)],
)
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.pos == pos


def test_constrained_alphabet():
    with pytest.raises(ParseError):
        parse("<a;c>", {"a", "b"})
    assert parse("<a;b>", {"a", "b"}) == P("<a;b>")


def test_parse_word_rejects_non_normal():
    with pytest.raises(ParseError):
        parse_word("<a;<b;c>>")


def test_serialize_canonical():
    f = P("x1 - 3/6*<x2;x1> + <x1;x2>")
    assert serialize(f) == "<x1;x2> - 1/2*<x2;x1> + x1"
    assert serialize(-f) == "-<x1;x2> + 1/2*<x2;x1> - x1"
    assert serialize(Polynomial.zero()) == "0"
    assert serialize(P("<a;b>"), unicode=True) == "⟨a;b⟩"


@given(polynomials(letters=("x1", "x2", "x3"), max_degree=4, max_terms=5, nonzero=False))
def test_round_trip(f):
    text = serialize(f)
    assert parse(text) == f
    assert serialize(parse(text)) == text


def test_parse_product():
    assert parse_product("a;<b;c>") == P("<a;<b;c>>")
    assert parse_product("a+b, <c;d>; e") == P("<a,<c;d>;e> + <b,<c;d>;e>")
    with pytest.raises(ParseError):
        parse_product("a,b")


def test_certificate_file_round_trip():
    text = "1/2 * <x;y>\n# comment\n-1/2 * <y;x>\n"
    cert = read_certificate(text)
    assert list(cert) == [(P("1/2*x").lead_coeff, W("<x;y>")), (-P("1/2*x").lead_coeff, W("<y;x>"))]
    assert read_certificate(write_certificate(cert)) == cert
    with pytest.raises(ParseError):
        read_certificate("1/2 * <x;y> + <y;x>")


def test_normalize_command(capsys):
    code, out, _ = run(capsys, "normalize", "<a;<b;c>>")
    assert code == 0
    assert parse(out) == P("<a,b;c> + <b,a;c> + <<a;b>;c>")
    assert out == "<a,b;c> + <b,a;c> + <<a;b>;c>"


def test_member_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "member", "--relator", "<x;x>", "--elem", "x")
    assert (code, out) == (1, "NOT_MEMBER")

    code, out, _ = run(capsys, "member", "--relator", "<x;x>", "--elem", "<x,x;x>", "--certificate")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "MEMBER"
    cert_file = tmp_path / "cert.txt"
    cert_file.write_text("\n".join(lines[1:]) + "\n")
    code, out, _ = run(capsys, "verify", "--relator", "<x;x>", "--elem", "<x,x;x>", "--cert", str(cert_file))
    assert (code, out) == (0, "OK")
    code, out, _ = run(capsys, "verify", "--relator", "<x;x>", "--elem", "<x,x,x;x>", "--cert", str(cert_file))
    assert (code, out) == (1, "FAIL")


def test_enum_command(capsys):
    code, out, _ = run(capsys, "enum", "--letters", "1", "--degree", "4")
    assert code == 0 and out.splitlines()[-1] == "count 5"
    code, out, _ = run(capsys, "enum", "--letters", "1", "--degree", "3", "--mark-y")
    assert out.splitlines()[-1] == "count 6"


def test_compare_and_lead(capsys):
    assert run(capsys, "compare", "<x1;x2>", "<x2;x1>")[:2] == (0, "GT")
    assert run(capsys, "compare", "x2", "<x1;x1>")[1] == "LT"
    code, out, _ = run(capsys, "lead", "3/2*<x1;x2> - <x2;x1>")
    assert out.splitlines() == ["<x1;x2>", "coefficient 3/2"]


def test_mul_command(capsys):
    code, out, _ = run(capsys, "mul", "a,b;<c;d>")
    assert code == 0 and parse(out) == parse("<a,b;<c;d>>") and len(parse(out)) == 6


def test_subalg_and_auto(capsys):
    code, out, _ = run(capsys, "subalg", "<x1;x1>", "<<x1;x1>;<x1;x1>>")
    assert code == 0 and out.splitlines()[:2] == ["FREE_RANK1", "generator <x1;x1>"]
    code, out, _ = run(capsys, "subalg", "x1", "x2+<x1;x1>")
    assert out.splitlines()[0] == "FREE_RANK2" and len(out.splitlines()) == 4
    code, out, _ = run(capsys, "auto", "x2", "x1")
    assert code == 0 and out.splitlines()[0] == "TAME"
    code, out, _ = run(capsys, "auto", "x1", "<x1;x1>")
    assert (code, out) == (1, "NOT_AUTOMORPHISM")


def test_exit_codes(capsys):
    assert run(capsys, "normalize", "<a;<b;c>")[0] == 2
    assert run(capsys, "auto", "x3", "x1")[0] == 2
    assert run(capsys, "member", "--relator", "<y;x>", "--elem", "x")[0] == 2
    assert run(capsys, "--alphabet", "a,b", "normalize", "<a;c>")[0] == 2
    code, out, _ = run(capsys, "--budget", "5", "normalize", "<a,b,c;<d,e;<f;g>>>")
    assert code == 3 and out.startswith("BUDGET_EXCEEDED")
    with pytest.raises(SystemExit) as exc:
        main(["enum", "--degree", "2"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_json_schema(capsys):
    code, out, _ = run(capsys, "--json", "member", "--relator", "<x;x>", "--elem", "<x,x;x>")
    payload = json.loads(out)
    assert set(payload) == {"command", "inputs", "result", "steps", "stats"}
    assert payload["command"] == "member" and payload["result"] == "MEMBER"
    assert set(payload["stats"]) == {"terms", "time_ms"}
    code, out, _ = run(capsys, "normalize", "x1", "--json")
    payload = json.loads(out)
    assert set(payload) == {"command", "inputs", "result", "stats"}
    assert payload["inputs"] == {"expr": "x1"}


def test_sample_tame_is_seeded(capsys):
    a = run(capsys, "--seed", "7", "sample-tame", "--steps", "3")
    b = run(capsys, "sample-tame", "--steps", "3", "--seed", "7")
    assert a == b and a[0] == 0
    f1 = a[1].splitlines()[0].removeprefix("f1 = ")
    f2 = a[1].splitlines()[1].removeprefix("f2 = ")
    assert run(capsys, "auto", f1, f2)[0] == 0
