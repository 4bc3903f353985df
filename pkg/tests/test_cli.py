import json
import subprocess
import sys


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "nilorb.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_enumerate_json():
    code, out, _ = run_cli("enumerate", "--type", "C", "--n", "3", "--format", "json")
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 8
    assert all(d["type"] == "C" and d["n"] == 3 for d in docs)


def test_enumerate_deterministic():
    a = run_cli("enumerate", "--type", "B", "--n", "3", "--format", "json")
    b = run_cli("enumerate", "--type", "B", "--n", "3", "--format", "json")
    assert a == b


def test_hasse_dot():
    code, out, _ = run_cli("hasse", "--type", "B", "--n", "2", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph closure {")
    assert out.count("[label=") == 4
    assert out.count("->") == 3


def test_springer_json():
    code, out, _ = run_cli("springer", "--type", "C", "--n", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4
    assert all("bipartition" in r and "unipotent" in r for r in rows)


def test_pieces_json():
    code, out, _ = run_cli("pieces", "--type", "B", "--n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["agree"] is True
    assert len(doc["pieces"]) == 7


def test_pieces_rejects_d():
    code, _, err = run_cli("pieces", "--type", "D", "--n", "2")
    assert code == 2
    assert "types B and C" in err


def test_oracle_json_and_dump(tmp_path):
    dump = tmp_path / "forms.csv"
    code, out, _ = run_cli(
        "oracle", "--type", "C", "--n", "1", "--format", "json", "--dump", str(dump)
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["nilpotent_total"] == 4
    assert doc["matches_enumeration"] is True
    rows = dump.read_text().strip().splitlines()
    assert rows[0] == "form_bits,symbol"
    assert len(rows) == 5  # header + 4 nilpotent forms


def test_exceptional_mass_text():
    code, out, _ = run_cli("exceptional", "--group", "G2", "--mass", "--format", "text")
    assert code == 0
    assert out.strip() == "mass = q^12 OK"
    code, out, _ = run_cli("exceptional", "--group", "F4", "--mass", "--format", "json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_exceptional_table_listing():
    code, out, _ = run_cli("exceptional", "--group", "F4")
    assert code == 0
    assert len([l for l in out.splitlines() if l.startswith("xi_")]) == 26


def test_exceptional_bfs():
    code, out, _ = run_cli(
        "exceptional", "--group", "G2", "--bfs", "4", "--q", "3", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["size"] == doc["expected"] == 728 and doc["ok"]


def test_exceptional_param_unavailable():
    code, out, _ = run_cli(
        "exceptional", "--group", "G2", "--bfs", "2,2", "--q", "3", "--format", "json"
    )
    assert code == 1
    assert "varpi" in json.loads(out)["error"]


def test_usage_errors_exit_2():
    assert run_cli("enumerate", "--type", "C", "--n", "99")[0] == 2
    assert run_cli("enumerate", "--type", "X", "--n", "1")[0] == 2
    assert run_cli("oracle", "--type", "C", "--n", "5")[0] == 2
    assert run_cli("nonsense")[0] == 2


def test_verify_flag_small():
    code, out, _ = run_cli("enumerate", "--type", "C", "--n", "2", "--verify")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True and doc["suite"] == "enumerate"
