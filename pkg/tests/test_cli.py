import subprocess
import sys

import pytest

from binomdiv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "thm1.1", "--n-max", "100")
    assert code == 0 and out.startswith("PASS")


def test_verify_conjecture_no_findings(capsys):
    code, out, _ = run(capsys, "verify", "conj1.3i", "--n-max", "50")
    assert code == 0 and "FINDING" not in out


def test_verify_n0_finding(capsys):
    code, out, _ = run(capsys, "verify", "thm1.1-1.3", "--n-max", "50", "--include-n0", "--format", "tsv")
    assert code == 0
    assert out == "thm1.1-1.3\t(0,1)\tFINDING\tratio 1/2\n"


def test_unknown_claim(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm9.9"])
    assert exc.value.code == 2


def test_bad_bound(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm1.1", "--n-max", "0"])
    assert exc.value.code == 2


def test_mutation_is_fatal(capsys):
    code, out, _ = run(capsys, "verify", "wz-II", "--n-max", "4", "--k-max", "4", "--N-max", "4",
                       "--mutate", "wz-G")
    assert code == 1 and "\tFAIL\t" in out


def test_tsv_output_file(tmp_path, capsys):
    path = tmp_path / "r.tsv"
    code, _, _ = run(capsys, "verify", "ineq2.3", "--m-max", "10", "--format", "tsv", "--output", str(path))
    assert code == 0
    assert path.read_bytes() == b"ineq2.3\tm_max=10\tPASS\tchecked=" + path.read_bytes().split(b"checked=")[1]
    assert b"\r" not in path.read_bytes()


def test_compute_stdout(capsys):
    code, out, _ = run(capsys, "compute", "a", "--count", "2")
    assert code == 0 and out.splitlines() == ["1 1", "2 11"]


def test_compute_files(tmp_path, capsys):
    path = tmp_path / "s.txt"
    code, out, _ = run(capsys, "compute", "S", "--count", "8", "--output", str(path))
    assert code == 0 and "first 5" in out and "last 54200780036595" in out
    assert path.read_text().splitlines()[2] == "3 14586"
    code, _, _ = run(capsys, "compute", "T", "--count", "8", "--format", "tsv", "--output", str(path))
    assert path.read_text().splitlines()[-1] == "8\t5722507051008"


def test_compute_io_error(tmp_path, capsys):
    code, _, err = run(capsys, "compute", "S", "--count", "3", "--output", str(tmp_path / "no" / "x"))
    assert code == 3 and "error" in err


@pytest.mark.parametrize("ident", ["const-3sqrt3-8", "pi-bauer", "zeta3-az"])
def test_series(capsys, ident):
    code, out, _ = run(capsys, "series", ident, "--digits", "30")
    assert code == 0 and "PASS" in out


def test_series_sample_point(capsys):
    code, out, _ = run(capsys, "series", "genfun-sin", "--digits", "15", "--x", "1/300")
    assert code == 0 and "genfun-sin@1/300" in out


def test_series_bad_point(capsys):
    code, _, err = run(capsys, "series", "genfun-sin", "--digits", "15", "--x", "1/100")
    assert code == 2


def test_series_low_digits():
    with pytest.raises(SystemExit) as exc:
        main(["series", "pi-bauer", "--digits", "5"])
    assert exc.value.code == 2


def test_all_quick(capsys):
    code, out, _ = run(capsys, "all", "--profile", "quick")
    assert code == 0
    assert "0 fatal" in out


def test_all_quick_mutated(capsys):
    code, out, _ = run(capsys, "all", "--profile", "quick", "--mutate", "wz-G")
    assert code == 1


def test_all_parallel_matches_serial(tmp_path, capsys):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    run(capsys, "all", "--profile", "quick", "--output", str(a))
    run(capsys, "all", "--profile", "quick", "--jobs", "2", "--output", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "binomdiv", "compute", "S", "--count", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1 5\n2 231\n"
