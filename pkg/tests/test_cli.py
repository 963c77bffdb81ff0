import json
import subprocess
import sys

import pytest

from ktwist import orders
from ktwist.cli import InputError, main, parse_range
from ktwist.report import Report


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("3") == [3]
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("1..3,7") == [1, 2, 3, 7]
    for bad in ("", "a", "5..2"):
        with pytest.raises(InputError):
            parse_range(bad)


def test_order_su(capsys):
    code, out, _ = run(capsys, "order", "SU", "2", "--k", "3", "--no-timing")
    data = json.loads(out)
    assert code == 0
    assert data["results"] == [{"k": "3", "order": "3"}]
    assert data["inputs"]["group"] == "SU(3)"
    assert "elapsed_ms" not in data


def test_order_g2_sweep(capsys):
    code, out, _ = run(capsys, "order", "G2", "--k", "1..5", "--csv")
    assert code == 0
    assert out.splitlines() == ["k,order"] + [f"{k},1" for k in range(1, 6)]


def test_order_all_routes(capsys):
    code, out, _ = run(capsys, "order", "SpinEven", "2", "--k", "4", "--all-routes", "--no-timing")
    data = json.loads(out)
    assert code == 0 and data["agree"] is True
    assert data["results"][0]["routes"] == {"closed_form": "2", "spin_images": "2", "su4_closed_form": "2"}


@pytest.mark.parametrize("argv", [
    ["order", "SpinOdd", "1", "--k", "2"],
    ["order", "SU", "2", "--k", "0"],
    ["order", "Foo", "2", "--k", "1"],
    ["order", "E8", "--k", "1"],
    ["order", "SU", "2", "--k", "x"],
    ["tor", "nosuch", "--k", "1"],
    ["tor", "g2"],
    ["tor", "koszul"],
    ["crosscheck", "--k-max", "0"],
])
def test_invalid_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("ktwist")


def test_tor_g2(capsys):
    code, out, _ = run(capsys, "tor", "g2", "--k", "4", "--bound", "6", "--csv")
    assert code == 0
    assert out.splitlines()[1] == "4,Z/2,Z/2,0,0,0,0"


def test_tor_koszul(capsys):
    code, out, _ = run(capsys, "tor", "koszul", "--c", "2,4", "--bound", "3", "--no-timing")
    data = json.loads(out)
    assert code == 0 and data["agree"] is True
    assert data["results"][0]["summary"] == "H0=Z/2, H1=Z/2, H2=0"


def test_tor_f4core(capsys):
    code, out, _ = run(capsys, "tor", "f4core", "--k", "7", "--csv")
    assert out.splitlines()[1] == "7,Z/7,0,0,0,0,0"


def test_tor_spec_file(capsys, tmp_path):
    spec = tmp_path / "custom.yaml"
    spec.write_text("n_ext: 2\nt_images: [2, 4]\nrows: []\nexpected: {order: 2, exterior_rank: 1}\n")
    code, out, _ = run(capsys, "tor", "--spec-file", str(spec), "--bound", "3", "--no-timing")
    data = json.loads(out)
    assert code == 0 and data["results"][0]["matches"] is True
    wrong = tmp_path / "wrong.json"
    wrong.write_text('{"n_ext": 2, "t_images": [2, 4], "expected": {"order": 4}}')
    code, out, _ = run(capsys, "tor", "--spec-file", str(wrong), "--bound", "3")
    assert code == 1


@pytest.mark.parametrize("text", ["n_ext: 2\nt_images: [1]\n", "rows: [[1]]\n", "t_images: [2, 4]\nrows: [[1, 1]]\n", "- 1\n", "{"])
def test_tor_malformed_spec_file(capsys, tmp_path, text):
    spec = tmp_path / "bad.yaml"
    spec.write_text(text)
    code, _, err = run(capsys, "tor", "--spec-file", str(spec))
    assert code == 2 and "spec file" in err


def test_spinc(capsys):
    code, out, _ = run(capsys, "spinc", "--k-range", "1..3", "--csv")
    assert code == 0
    assert out.splitlines() == ["k,cp2,pnu,boundary", "1,25,12,0", "2,49,20,skipped-even", "3,81,28,0"]
    code, out, _ = run(capsys, "spinc", "--k-range", "0..0", "--csv")
    assert out.splitlines()[1] == "0,9,4,skipped-even"


def test_crosscheck(capsys):
    code, out, _ = run(capsys, "crosscheck", "--k-max", "50", "--rank-max", "4", "--no-timing")
    data = json.loads(out)
    assert code == 0 and data["agree"] is True and data["results"]["disagreements"] == []
    code, out, _ = run(capsys, "crosscheck", "--k-max", "1", "--rank-max", "1", "--no-timing")
    assert code == 0


def test_crosscheck_negative_control(capsys, monkeypatch):
    real = orders.gen_binomial
    monkeypatch.setattr(orders, "gen_binomial", lambda m, b: (b + 1) * real(m, b + 1))
    code, out, err = run(capsys, "crosscheck", "--k-max", "5", "--rank-max", "2")
    assert code == 1
    assert "disagreement: Sp(1)" in err


def test_crosscheck_has_no_csv(capsys):
    code, _, err = run(capsys, "crosscheck", "--k-max", "1", "--rank-max", "1", "--csv")
    assert code == 2


def test_output_is_deterministic(capsys):
    argv = ["tor", "spinR3", "--k", "1..4", "--no-timing"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_threads_do_not_change_output(capsys, monkeypatch):
    argv = ["order", "Sp", "3", "--k", "1..30", "--all-routes", "--no-timing"]
    _, serial, _ = run(capsys, *argv)
    monkeypatch.setenv("KTWIST_THREADS", "4")
    _, threaded, _ = run(capsys, *argv)
    assert serial == threaded


def test_report_roundtrip(capsys):
    _, out, _ = run(capsys, "order", "G2", "--k", "1..3", "--all-routes")
    report = Report.from_json(out)
    assert report.to_json() == out.rstrip("\n")
    assert isinstance(report.elapsed_ms, int)


def test_big_integers_are_strings(capsys):
    _, out, _ = run(capsys, "order", "SU", "6", "--k", "720720", "--no-timing")
    assert json.loads(out)["results"][0]["order"] == "12012"  # k / lcm(1..6)
    _, out, _ = run(capsys, "tor", "koszul", "--c", "123456789012345678901234567890", "--bound", "2", "--no-timing")
    assert json.loads(out)["results"][0]["homology"][0]["torsion"] == ["123456789012345678901234567890"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ktwist", "order", "SU", "1", "--k", "6", "--csv"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "k,order\n6,6\n"
