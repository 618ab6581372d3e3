import json

import pytest

from shiring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalan_text(capsys):
    code, out, _ = run(capsys, "catalan", "A3")
    assert code == 0
    assert out == "14\n"


def test_catalan_json_and_csv(capsys):
    code, out, _ = run(capsys, "catalan", "F4", "-f", "json")
    assert code == 0
    assert json.loads(out) == {"type": "F4", "catalan_number": 105}
    code, out, _ = run(capsys, "catalan", "B2", "-f", "csv")
    assert out == "type,catalan_number\nB2,6\n"


def test_roots_outputs(capsys):
    code, out, _ = run(capsys, "roots", "A2")
    assert code == 0
    assert "3 positive roots" in out
    code, out, _ = run(capsys, "roots", "A2", "-f", "json")
    doc = json.loads(out)
    assert doc["positive_roots"] == [[0, 1], [1, 0], [1, 1]]
    assert doc["cartan"] == [[2, -1], [-1, 2]]
    code, out, _ = run(capsys, "roots", "A2", "-f", "dot")
    # covering relations only: both simples under the highest root
    assert out.count("->") == 2
    assert "0 -> 2" in out and "1 -> 2" in out


def test_antichains_outputs(capsys):
    code, out, _ = run(capsys, "antichains", "A3", "-f", "json")
    doc = json.loads(out)
    assert doc["count"] == 14
    assert len(doc["antichains"]) == 14
    assert doc["ideal_sizes"] == sorted(doc["ideal_sizes"])
    code, out, _ = run(capsys, "antichains", "A3", "-f", "dot")
    assert out.count("[label=") == 14


def test_qcatalan_formats(capsys):
    code, out, _ = run(capsys, "qcatalan", "A2")
    assert out == "1 + q + 2*q^2 + q^3\n"
    code, out, _ = run(capsys, "qcatalan", "A2", "-f", "csv")
    assert out.splitlines()[0] == "degree,coefficient"
    assert out.splitlines()[1:] == ["0,1", "1,1", "2,2", "3,1"]
    code, out, _ = run(capsys, "qcatalan", "A2", "-f", "json")
    assert json.loads(out)["coefficients"] == [1, 1, 2, 1]


def test_zeta_and_moebius_csv(capsys):
    code, out, _ = run(capsys, "zeta", "A2")
    assert out == "1,1,1,1,1\n0,1,1,1,1\n0,0,1,0,1\n0,0,0,1,1\n0,0,0,0,1\n"
    code, out, _ = run(capsys, "moebius", "A1")
    assert out == "1,-1\n0,1\n"


def test_filtration_outputs(capsys):
    code, out, _ = run(capsys, "filtration", "A2", "-f", "csv")
    assert out == "k,rank\n0,1\n1,4\n2,5\n"
    code, out, _ = run(capsys, "filtration", "A2", "-f", "json")
    assert json.loads(out)["ranks"] == [1, 4, 5]
    code, out, _ = run(capsys, "filtration", "A2", "--spanning", "1")
    rows = out.strip().splitlines()
    assert len(rows) == 4  # unit plus three generators


def test_multable_csv(capsys):
    code, out, _ = run(capsys, "multable", "A1")
    lines = out.strip().splitlines()
    assert lines[0] == "i,j,product"
    assert set(lines[1:]) == {"0,0,0", "0,1,1", "1,0,1", "1,1,1"}


def test_classify_text_and_json(capsys):
    code, out, _ = run(capsys, "classify", "B2", "--point", "1/4,2/5")
    assert code == 0
    assert "antichain: [3]" in out
    code, out, _ = run(
        capsys, "classify", "B2", "--point", "1/4,2/5", "-f", "json"
    )
    doc = json.loads(out)
    assert doc["antichain"] == [3]
    assert doc["roots"] == [[1, 2]]


def test_witness_round_trip_via_cli(capsys):
    code, out, _ = run(capsys, "witness", "B2", "--antichain", "3", "-f", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["antichain"] == [3]
    point = ",".join(doc["point"])
    code, out, _ = run(capsys, "classify", "B2", "--point", point)
    assert "antichain: [3]" in out


def test_witness_empty_antichain(capsys):
    code, out, _ = run(capsys, "witness", "A2", "--antichain", "")
    assert code == 0
    assert out.strip()


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "A2")
    assert code == 0
    assert "13/13" in out
    assert "FAIL" not in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "zeta.csv"
    code, out, _ = run(capsys, "zeta", "A1", "-o", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "1,1\n0,1\n"


def test_deterministic_output(capsys):
    first = run(capsys, "antichains", "B3", "-f", "json")
    second = run(capsys, "antichains", "B3", "-f", "json")
    assert first == second
    w1 = run(capsys, "witness", "B3", "--antichain", "0", "-f", "json")
    w2 = run(capsys, "witness", "B3", "--antichain", "0", "-f", "json")
    assert w1 == w2


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "catalan", "H3")[0] == 1
    assert run(capsys, "catalan", "E9")[0] == 1
    assert run(capsys, "classify", "B2", "--point", "0.5,0.5")[0] == 1
    assert run(capsys, "witness", "B2", "--antichain", "0,2")[0] == 1
    with pytest.raises(SystemExit) as err:
        main(["catalan", "A2", "-f", "dot"])
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(["nonsense", "A2"])
    assert err.value.code == 1


def test_domain_errors_exit_2(capsys):
    code, _, err = run(capsys, "classify", "B2", "--point", "1/2,1/4")
    assert code == 2
    assert "(1, 2)" in err
    code, _, err = run(capsys, "classify", "A2", "--point=-1,1/2")
    assert code == 2
