import json
import subprocess
import sys

import pytest

from periodic_homfly.cli import main
from periodic_homfly.corpus import bundled_corpus


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_braid(capsys):
    code, out, _ = run(capsys, "compute", "2: 1 1 1")
    assert code == 0 and out.strip() == "2*v^2 - v^4 + v^2*z^2"


def test_compute_pd(capsys):
    code, out, _ = run(capsys, "compute", "PD[X[4,1,3,2],X[2,3,1,4]]")
    assert code == 0 and "z^-1" in out


def test_compute_from_file(capsys, tmp_path):
    f = tmp_path / "d.txt"
    f.write_text("3: 1 -2 1 -2\n")
    code, out, _ = run(capsys, "compute", str(f))
    assert code == 0 and out.strip() == "v^-2 - 1 + v^2 - z^2"


def test_coeffs(capsys):
    code, out, _ = run(capsys, "coeffs", "p=3 braid=3: 1 2")
    assert code == 0
    assert out.splitlines()[0] == "P_-3 = v^9 - 3*v^11 + 3*v^13 - v^15"


def test_check_exit_codes(capsys):
    assert run(capsys, "check", "p=3 braid=3: 1 2", "--p", "3")[0] == 0
    code, out, _ = run(capsys, "check", "2: 1 1 1", "--p", "3")
    assert code == 1 and "obstruction present" in out
    code, out, _ = run(capsys, "check", "p=3 r=2 braid=3: 1 2", "--p", "3", "--json")
    assert code == 0 and json.loads(out)["r"] == 2


def test_input_errors(capsys):
    assert run(capsys, "compute", "nonsense")[0] == 2
    assert run(capsys, "compute", "PD[X[1,2,3]]")[0] == 2
    assert run(capsys, "check", "2: 1", "--p", "4")[0] == 2
    assert run(capsys, "generate", "--p", "3", "--braid", "2: 1")[0] == 2
    assert run(capsys, "triple", "--p", "3", "--braid", "3: 1 2", "--mark", "3")[0] == 2


def test_resource_refusal(capsys, monkeypatch):
    assert run(capsys, "--max-crossings", "5", "compute", "p=3 braid=3: 1 2")[0] == 3
    monkeypatch.setenv("PERIODIC_HOMFLY_MAX_CROSSINGS", "8")
    assert run(capsys, "compute", "p=3 braid=3: 1 2")[0] == 3


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--p", "3", "--braid", "3: 1 2", "--r", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "p=3 r=2 braid=3: 1 2"
    assert "components: 5" in lines[1]
    assert lines[-1].startswith("PD[X[")


def test_triple(capsys):
    code, out, _ = run(capsys, "triple", "--p", "3", "--braid", "3: 1 2", "--mark", "1")
    assert code == 0 and out.splitlines()[-1] == "residual mod 3: 0"


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", str(bundled_corpus()), "--p", "3", "--json")
    assert code == 0 and json.loads(out)["passing"] == 14
    code, out, _ = run(capsys, "scan", str(bundled_corpus()), "--p", "3")
    assert code == 0 and "14 pass" in out.splitlines()[0]


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and "FAIL" not in out


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "periodic_homfly.cli", "compute", "1:"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "1"


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
