import csv
import io
import json

import pytest

from kgsep.cli import FIGURES, SWEEP_HEADER, main


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_spectrum_csv(capsys):
    code, out, _ = _run(capsys, "spectrum", "--n", "2", "--l", "0", "--alpha", "0.5")
    assert code == 0
    assert out.splitlines()[0] == "n,l,alpha,m,xi,N,M,k,lambda,N1,binding_energy"
    row = _csv(out)[0]
    assert float(row["M"]) == pytest.approx(1.992774, abs=1e-6)
    assert float(row["k"]) == pytest.approx(0.169857, abs=1e-6)
    assert row["N1"] == "3"


def test_spectrum_json_round_trip(capsys):
    code, out, _ = _run(capsys, "spectrum", "--n", "0", "--l", "1", "--alpha", "1.3", "--m", "2", "--format", "json")
    assert code == 0
    rec = json.loads(out)[0]
    code, out, _ = _run(capsys, "spectrum", "--n", "0", "--l", "1", "--alpha", "1.3", "--m", "2")
    row = _csv(out)[0]
    assert float(row["M"]) == rec["M"]
    # 12 significant digits survive the text round trip
    assert len(row["M"].replace(".", "").lstrip("0")) <= 12


def test_critical_coupling_exit_code(capsys):
    code, out, err = _run(capsys, "spectrum", "--n", "0", "--l", "0", "--alpha", "1.0")
    assert code == 2
    assert out == ""
    assert "critical coupling" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--n", "1"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["figure", "3"])
    assert exc.value.code == 1
    code, _, err = _run(capsys, "sweep", "--alpha-steps", "0")
    assert code == 1 and "alpha-steps" in err


def test_moments_both_modes(capsys):
    code, out, _ = _run(capsys, "moments", "--n", "2", "--l", "0", "--alpha", "0.5")
    assert code == 0
    rows = _csv(out)
    assert [r["mode"] for r in rows] == ["paper", "oracle"]
    assert float(rows[0]["r2"]) < 0 < float(rows[1]["r2"])
    for r in rows:
        assert float(r["reduced_a1"]) == pytest.approx(-2.0, abs=1e-9)
    code, out, _ = _run(capsys, "moments", "--n", "2", "--l", "0", "--alpha", "0.5", "--mode", "oracle")
    assert [r["mode"] for r in _csv(out)] == ["oracle"]


def test_verify(capsys):
    code, out, _ = _run(capsys, "verify")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:6])
    assert "1,0,0,0.5,48,168,12,42,DISCREPANT" in lines


def test_verify_json(capsys, tmp_path):
    path = tmp_path / "v.json"
    code, out, _ = _run(capsys, "verify", "--n-max", "1", "--l-max", "0", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    data = json.loads(path.read_text())
    assert data["passed"] is True
    assert {r["status"] for r in data["f0"] if r["n"] == 0} == {"MATCH"}


def test_classify(capsys):
    code, out, _ = _run(capsys, "classify", "--n", "2", "--l", "0", "--alpha", "0.5")
    assert code == 0
    first, second = out.splitlines()
    assert first.startswith("Entangled mode=paper")
    rec = json.loads(second)
    assert rec["verdict"] == "Entangled"
    assert rec["modes"]["oracle"]["verdict"] != "Entangled"
    assert rec["modes"]["paper"]["grid_agrees"] is True


def test_figure_header_bytes(capsys):
    code, out, _ = _run(capsys, "figure", "2", "--a-steps", "3")
    assert code == 0
    assert out.encode().startswith(b"alpha,a,y_lhs,y_rhs,violated\n")
    assert "\r" not in out
    assert len(out.splitlines()) == 1 + 3 * len(FIGURES[2]["alphas"])


def test_figure2_entangled_for_every_alpha(capsys):
    _, out, _ = _run(capsys, "figure", "2", "--a-steps", "201")
    rows = _csv(out)
    alphas = {r["alpha"] for r in rows}
    assert len(alphas) == len(FIGURES[2]["alphas"])
    assert all(r["violated"] == "true" for r in rows)


def test_figure1_window(capsys):
    _, out, _ = _run(capsys, "figure", "1", "--a-steps", "201")
    by_alpha = {}
    for r in _csv(out):
        by_alpha.setdefault(float(r["alpha"]), []).append(r["violated"] == "true")
    assert all(by_alpha[2.25])
    assert not all(by_alpha[1.0])
    assert not all(by_alpha[2.9])


def test_sweep_small_grid(capsys, tmp_path):
    argv = ["sweep", "--n-max", "3", "--l-max", "1", "--alpha-min", "0.5", "--alpha-max", "2.5", "--alpha-steps", "5"]
    code, out, _ = _run(capsys, *argv)
    assert code == 0
    assert out.splitlines()[0] == ",".join(SWEEP_HEADER)
    rows = _csv(out)
    assert len(rows) == 4 * 2 * 5
    skipped = [r for r in rows if r["skipped"] == "true"]
    assert skipped and all(r["l"] == "0" and float(r["alpha"]) >= 1.0 for r in skipped)
    assert all(r["verdict_paper"] == "" for r in skipped)
    hits = {(r["n"], r["l"], r["alpha"]) for r in rows if r["verdict_paper"] == "Entangled"}
    assert ("2", "0", "0.5") in hits and ("3", "0", "0.5") in hits
    assert not any(r["verdict_oracle"] == "Entangled" for r in rows)

    _run(capsys, *argv, "--out", str(tmp_path / "a.csv"))
    _run(capsys, *argv, "--out", str(tmp_path / "b.csv"))
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes() == out.encode()


def test_sweep_empty_grid(capsys):
    code, out, _ = _run(capsys, "sweep", "--n-min", "3", "--n-max", "2")
    assert code == 0
    assert out == ",".join(SWEEP_HEADER) + "\n"


def test_sweep_single_mode_json(capsys):
    code, out, _ = _run(
        capsys, "sweep", "--n-max", "0", "--l-max", "0", "--alpha-min", "0.5", "--alpha-max", "0.5",
        "--alpha-steps", "1", "--mode", "oracle", "--format", "json",
    )
    assert code == 0
    (rec,) = json.loads(out)
    assert rec["verdict_paper"] == "" and rec["verdict_oracle"] in ("Separable", "Indeterminate")


def test_log_alpha_scale_requires_positive(capsys):
    code, _, err = _run(capsys, "sweep", "--alpha-scale", "log", "--alpha-min", "0")
    assert code == 1
