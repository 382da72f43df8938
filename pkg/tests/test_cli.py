import json
import subprocess
import sys

import pytest

from hilbpoly import cli


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out.rstrip("\n"), err


def series_values(text):
    return [int(line.split(": ")[1]) for line in text.splitlines()]


def test_pol_examples(capsys):
    assert run(capsys, "pol", 2, "--format", "fourier")[1] == "1/2 + 1/2*cos(Pi*n)"
    assert run(capsys, "pol", 1, 1)[1] == run(capsys, "pol", 2)[1]
    assert run(capsys, "pol", 1, 2)[1] == run(capsys, "pol", 4)[1]


def test_series_examples(capsys):
    code, out, _ = run(capsys, "series", 2, 3, "--terms", 13)
    assert code == 0
    assert series_values(out) == [1, 0, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9, 12]
    assert out.splitlines()[0] == "0: 1"
    assert series_values(run(capsys, "series", 3, "--terms", 5)[1]) == [1, 0, 0, 0, 1]
    assert series_values(run(capsys, "series", 2, "--terms", 3)[1]) == [1, 0, 1]


def test_series_needs_terms(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["series", "2"])
    assert exc.value.code == 2


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", 2, 3)
    assert code == 0 and out.splitlines()[-1] == "PASS"
    code, out, _ = run(capsys, "verify", 5, "--terms", 100)
    assert code == 0 and "PASS q-binomial formula agrees for 0 <= n <= 100" in out
    code, out, _ = run(capsys, "verify", 1)
    assert code == 0 and out.splitlines()[-1] == "PASS"


def test_verify_reports_mismatch(capsys, monkeypatch):
    real = cli.hilbert_values

    def tampered(d, count):
        v = real(d, count)
        v[17] += 1
        return v

    monkeypatch.setattr(cli, "hilbert_values", tampered)
    code, out, _ = run(capsys, "verify", 2, 3, "--terms", 40)
    assert code == 1
    assert "FAIL quasi-polynomial at n=17" in out
    assert out.splitlines()[-1] == "FAIL"


def test_pipeline_error_exit_code(capsys, monkeypatch):
    def broken(d):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "reconstruct", broken)
    code, out, err = run(capsys, "pol", 2, "--no-cache")
    assert code == 1 and out == "" and "boom" in err


def test_poincare_examples(capsys):
    out = run(capsys, "poincare", 2, 3)[1].splitlines()
    assert out[0] == "numerator:   1 - z + z^2 - z^3 + z^4 - z^5 + z^6"
    assert out[1] == "denominator: 1 - z - z^3 + z^6 + z^7 - z^10 - z^12 + z^13"
    assert out[2] == "denominator = Phi1^4 * Phi2 * Phi3 * Phi4 * Phi5"
    out = run(capsys, "poincare", 2)[1].splitlines()
    assert out[:2] == ["numerator:   1", "denominator: 1 - z^2"]
    out = run(capsys, "poincare", 1)[1].splitlines()
    assert out[:2] == ["numerator:   1", "denominator: 1"]


def test_poincare_json(capsys):
    data = json.loads(run(capsys, "poincare", 2, 3, "--format", "json")[1])
    assert data["factorization"] == {"unit": "1", "factors": [[1, 4], [2, 1], [3, 1], [4, 1], [5, 1]]}
    assert data["rational_function"]["num"] == ["1", "-1", "1", "-1", "1", "-1", "1"]


def test_eval(capsys):
    assert run(capsys, "eval", 2, 3, "--n", 12)[1] == "12"
    code, out, err = run(capsys, "eval", 1, "--n", 0)
    assert code == 0 and out == "0" and "below the validity threshold" in err
    with pytest.raises(SystemExit):
        cli.main(["eval", "2"])


def test_cache_hit_and_key(capsys, tmp_path):
    first = run(capsys, "pol", 2, 3, "--cache-dir", tmp_path)
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    second = run(capsys, "pol", 3, 2, "--cache-dir", tmp_path)
    assert first == second
    assert list(tmp_path.glob("*.json")) == files
    assert cli.cache_key(cli.DegreeVector((2, 3))) == cli.cache_key(cli.DegreeVector((3, 2)))


def test_cache_hit_skips_pipeline(capsys, tmp_path, monkeypatch):
    first = run(capsys, "pol", 4, "--cache-dir", tmp_path)
    monkeypatch.setattr(cli, "run_pipeline", lambda d: pytest.fail("cache was not used"))
    assert run(capsys, "pol", 4, "--cache-dir", tmp_path) == first


def test_cache_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    run(capsys, "pol", 2)
    assert len(list(tmp_path.glob("*.json"))) == 1
    run(capsys, "pol", 3, "--no-cache")
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_corrupted_cache(capsys, tmp_path):
    expected = run(capsys, "pol", 2, 3, "--cache-dir", tmp_path)[1]
    (path,) = tmp_path.glob("*.json")
    path.write_text("{not json")
    code, out, err = run(capsys, "pol", 2, 3, "--cache-dir", tmp_path)
    assert code == 0 and out == expected and "unreadable cache entry" in err
    json.loads(path.read_text())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hilbpoly", "pol", "2"], capture_output=True, text=True, check=True)
    assert proc.stdout == "1/2 + 1/2*cos(Pi*n)\n"
    a = subprocess.run([sys.executable, "-m", "hilbpoly", "pol", "2", "3", "--format", "json"],
                       capture_output=True, text=True, check=True).stdout
    b = subprocess.run([sys.executable, "-m", "hilbpoly", "pol", "2", "3", "--format", "json"],
                       capture_output=True, text=True, check=True).stdout
    assert a == b
