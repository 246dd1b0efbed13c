import csv
import subprocess
import sys

import pytest

from polariton_tst.cli import EXIT_DOMAIN, EXIT_IO, EXIT_USAGE, main, read_config
from polariton_tst.sweep import UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_lines(out):
    return {k: v for k, v in (line.split() for line in out.strip().splitlines())}


def test_single_point_defaults(capsys):
    code, out, _ = run(capsys, "--with-centroid")
    assert code == 0
    vals = parse_lines(out)
    assert float(vals["kappa"]) == pytest.approx(0.9704086341711540, rel=1e-11)
    assert float(vals["lambda_unstable"]) == pytest.approx(0.4921391167460843, rel=1e-11)
    assert float(vals["kappa_centroid"]) == pytest.approx(0.9080869327556214, rel=1e-11)
    assert "lambda_plus_p" not in vals


def test_single_point_flags(capsys):
    code, out, _ = run(capsys, "--omega-b", "1.5", "--omega-c", "1", "--with-perturbative")
    assert code == 0
    vals = parse_lines(out)
    assert float(vals["kappa"]) > 1
    assert vals["lambda_plus_p"] == "nan"
    assert float(vals["S_p"]) == pytest.approx(1 / 260, rel=1e-10)


def test_incoherent_three_mode_output(capsys):
    code, out, _ = run(capsys, "--n", "3")
    assert code == 0
    assert "lambda_b2" in parse_lines(out)


def test_list_presets(capsys):
    code, out, _ = run(capsys, "--list-presets")
    assert code == 0
    assert out.splitlines()[0].startswith("fig1")
    assert len(out.splitlines()) == 15


def test_preset_to_file(capsys, tmp_path):
    dest = tmp_path / "fig1.csv"
    script = tmp_path / "fig1_plot.py"
    code, out, _ = run(capsys, "--preset", "fig1", "--out", str(dest), "--plot-script", str(script))
    assert code == 0 and out == ""
    with open(dest, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 3 * 151
    assert "fig1.csv" in script.read_text()


def test_preset_determinism_across_workers(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "--preset", "fig4a", "--out", str(a))[0] == 0
    assert run(capsys, "--preset", "fig4a", "--out", str(b), "--workers", "4")[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_to_stdout(capsys):
    code, out, _ = run(capsys, "--sweep", "beta:1:10:4", "--columns", "kappa,kappa_zpe")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "param,value,kappa,kappa_zpe,status"
    assert len(lines) == 5


def test_preset_override(capsys):
    code, out, _ = run(capsys, "--preset", "s1b", "--omega-c", "2", "--sweep", "beta:1:2:2")
    assert code == 0
    assert len(out.splitlines()) == 3


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# test point at higher barrier\nomega_b = 1.5\nbeta = 10  # inline\nwith-perturbative = yes\n")
    code, out, _ = run(capsys, "--config", str(cfg))
    assert code == 0
    vals = parse_lines(out)
    assert float(vals["kappa"]) > 1 and "S_p" in vals
    # flags beat the file
    code, out, _ = run(capsys, "--config", str(cfg), "--omega-b", "0.5")
    assert float(parse_lines(out)["kappa"]) == pytest.approx(0.9704086341711540, rel=1e-11)


def test_read_config_errors(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("omega 1\n")
    with pytest.raises(UsageError):
        read_config(bad)
    bad.write_text("colour = red\n")
    with pytest.raises(UsageError):
        read_config(bad)


def test_tie_eta_flag(capsys):
    _, a, _ = run(capsys, "--eta", "0.2")
    _, b, _ = run(capsys, "--eta", "0.2", "--tie-eta")
    assert parse_lines(a)["kappa_gh"] != parse_lines(b)["kappa_gh"]


@pytest.mark.parametrize("argv", [
    ["--preset", "fig9"],
    ["--sweep", "omega_c:1:2"],
    ["--omega", "-1"],
    ["--n", "0"],
    ["--mode", "sideways"],
    ["--columns", "kappa,entropy", "--sweep", "beta:1:2:2"],
    ["--plot-script", "x.py", "--sweep", "beta:1:2:2"],
    ["--plot-script", "x.py", "--preset", "fig1"],
    ["--beta", "warm"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err


def test_bad_config_value(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("n = many\n")
    assert run(capsys, "--config", str(cfg))[0] == EXIT_USAGE


def test_domain_error_single_point(capsys):
    code, _, err = run(capsys, "--with-centroid", "--beta", "20")
    assert code == EXIT_DOMAIN
    assert "crossover" in err


def test_crossover_in_sweep_is_not_an_error(capsys):
    code, out, _ = run(capsys, "--with-centroid", "--sweep", "beta:10:20:3")
    assert code == 0
    assert out.splitlines()[-1].endswith("crossover:omega_b")


def test_io_errors(capsys, tmp_path):
    missing = tmp_path / "nope" / "out.csv"
    assert run(capsys, "--preset", "fig2a", "--out", str(missing))[0] == EXIT_IO
    assert run(capsys, "--config", str(tmp_path / "absent.cfg"))[0] == EXIT_IO


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polariton_tst", "--beta", "10"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("lambda_plus ")
