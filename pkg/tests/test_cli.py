import json

import pytest

from salemtrace.cli import PolyDocument, decode_poly, encode_poly, main
from salemtrace.construct import family, generate_salem_candidate
from salemtrace.errors import ParseError
from salemtrace.poly import IntPolynomial as P, mul

GOLDEN_TOP = ["1", "2", "-2", "-19", "-57", "-123", "-222", "-357", "-527", "-727"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_salem_json(capsys):
    code, out, _ = run(capsys, "gen", "salem", "--trace", "2", "--sieve", "--certify", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree"] == 38 and doc["trace"] == -2 and doc["kind"] == "salem"
    assert doc["coeffs"][::-1][:10] == GOLDEN_TOP
    assert doc["metadata"]["sieve"] == "pass"
    assert doc["metadata"]["certificate"]["verdict"] == "Salem"


def test_gen_text_and_out_file(capsys, tmp_path):
    target = tmp_path / "s.txt"
    code, out, _ = run(capsys, "gen", "salem", "--trace", "0", "--format", "text", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "1 0 -2 -3 -2 0 1\n"


def test_gen_pisot(capsys):
    code, out, _ = run(capsys, "gen", "pisot", "--trace", "1", "--certify")
    doc = json.loads(out)
    assert code == 0 and doc["trace"] == -1
    assert doc["metadata"]["certificate"]["verdict"] == "Pisot"
    assert doc["metadata"]["stripped_factors"] == [[1, 5]]


def test_killer_policy(capsys):
    code, out, _ = run(capsys, "gen", "salem", "--trace", "0", "--policy", "killer")
    doc = json.loads(out)
    assert code == 0 and doc["n"] == 2 and doc["M_floor"] == 1122 and all(doc["checks"].values())


def test_verify_lehmer(capsys, tmp_path):
    f = tmp_path / "lehmer.txt"
    f.write_text(family("lehmer").to_text() + "\n")
    code, out, _ = run(capsys, "verify", str(f), "--kind", "salem")
    doc = json.loads(out)
    assert code == 0 and doc["trace"] == -1
    assert doc["value_decimal"].startswith("1.176280818")
    code, out, _ = run(capsys, "verify", str(f), "--format", "text")
    assert code == 0 and out.startswith("Salem degree=10 trace=-1 value=1.176280818")


def test_verify_failures(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("1 0 1\n")
    assert run(capsys, "verify", str(f), "--kind", "salem")[0] == 1
    f.write_text("-1 -1 1\n# comment\n\n-1 -1 0 1\n")
    code, out, _ = run(capsys, "verify", str(f), "--kind", "pisot")
    assert code == 0 and len(json.loads(out)) == 2


def test_sieve_command(capsys, tmp_path):
    f = tmp_path / "s.txt"
    f.write_text(mul(P([1, 1, 1]), family("quartic", 1)).to_text() + "\n")
    code, out, _ = run(capsys, "sieve", str(f))
    assert code == 1 and json.loads(out)["stripped_factors"] == [[3, 1]]
    f.write_text(family("quartic", 1).to_text() + "\n")
    assert run(capsys, "sieve", str(f))[0] == 0


def test_bounds_commands(capsys):
    code, out, _ = run(capsys, "bounds", "salem", "--trace", "25")
    doc = json.loads(out)
    assert code == 0 and doc["constructed_degree"] == 5540 and doc["chain_holds"]
    code, out, _ = run(capsys, "bounds", "pisot", "--trace", "0")
    assert json.loads(out)["degree_bound"] == 17
    code, out, _ = run(capsys, "bounds", "killer", "--n", "2")
    assert code == 0 and json.loads(out)["log_K_mode"] == "exact"
    assert run(capsys, "bounds", "killer")[0] == 3


def test_family_command(capsys):
    code, out, _ = run(capsys, "family", "quartic", "--n", "3", "--certify")
    doc = json.loads(out)
    assert code == 0 and doc["trace"] == 3
    assert run(capsys, "family", "quartic", "--n", "0")[0] == 3
    code, out, _ = run(capsys, "family", "lehmer", "--format", "text")
    assert out == "1 1 0 -1 -1 -1 -1 -1 0 1 1\n"


def test_table_independent_of_jobs(capsys):
    code, serial, _ = run(capsys, "table", "--kind", "salem", "--max-trace", "4")
    code2, pooled, _ = run(capsys, "table", "--kind", "salem", "--max-trace", "4", "--jobs", "3")
    assert code == code2 == 0
    assert serial == pooled
    lines = serial.splitlines()
    assert lines[0] == "trace,degree,sieve,value"
    assert lines[3].startswith("-2,38,pass,3.414756275874")
    assert len(lines[1].split(",")[3].split(".")[1]) == 12


def test_usage_and_io_errors(capsys, tmp_path):
    assert run(capsys, "nope")[0] == 3
    assert run(capsys, "gen", "salem")[0] == 3
    assert run(capsys, "gen", "salem", "--trace", "-1")[0] == 3
    assert run(capsys, "verify", str(tmp_path / "missing.txt"))[0] == 3
    f = tmp_path / "bad.json"
    f.write_text('{"coeffs":["1","x"]}')
    code, out, err = run(capsys, "verify", str(f))
    assert code == 3 and out == "" and "line 1" in err


def test_determinism_and_timing(capsys):
    _, a, _ = run(capsys, "gen", "salem", "--trace", "3", "--certify")
    _, b, err = run(capsys, "gen", "salem", "--trace", "3", "--certify", "--timing")
    assert a == b and "elapsed" in err


def test_document_encoding():
    doc = PolyDocument.from_poly("pisot", P([-1, -1, 1]))
    raw = encode_poly(doc)
    assert raw == b'{"kind":"pisot","trace":1,"degree":2,"coeffs":["-1","-1","1"]}\n'
    assert encode_poly(decode_poly(raw)) == raw


def test_large_document_round_trip():
    S = generate_salem_candidate(25).reduced
    raw = encode_poly(PolyDocument.from_poly("salem-candidate", S, {"exponents": [2, 3]}))
    back = decode_poly(raw)
    assert encode_poly(back) == raw
    assert back.polynomial == S and back.degree == 5540


@pytest.mark.parametrize(
    "text",
    ['{"coeffs":["1","x"]}', '{"coeffs":[1,2]}', "[1, 2]", '{"coeffs":["1"],"degree":3}', "{bad json", '{"kind":"q","coeffs":["1"]}'],
)
def test_decode_errors(text):
    with pytest.raises(ParseError) as err:
        decode_poly(text.encode())
    assert err.value.line is not None
