import json
import math
import subprocess
import sys
from dataclasses import replace

import numpy as np
import pytest

from approxdft import QuantizedEntry, build_f32hat, build_stages, normalization
from approxdft.cli import cmd_verify, main
from approxdft.signal_io import dump_report, format_number, parse_signal
from approxdft import DataError

# plain-Python evaluation of the tone file written by tone_file()
TONE_MSE = 22.148458511181467
TONE_REL = 0.8319491141136102
TONE_BIN3_ERR = 26.574229255590733


def write_lines(path, lines):
    path.write_text("".join(f"{l}\n" for l in lines), encoding="utf-8")
    return path


@pytest.fixture
def impulse_file(tmp_path):
    return write_lines(tmp_path / "impulse.txt", ["# unit impulse", "1"] + ["0"] * 31)


@pytest.fixture
def tone_file(tmp_path):
    lines = [f"{math.cos(2 * math.pi * 3 * n / 32)!r},{math.sin(2 * math.pi * 3 * n / 32)!r}"
             for n in range(32)]
    return write_lines(tmp_path / "tone.txt", lines)


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


# -- signal files ---------------------------------------------------------------

def test_parse_signal_formats():
    re, im = parse_signal("# header\n\n1\n2,-3\n  4 , 5 \n")
    assert re.dtype == np.int64
    assert re.tolist() == [1, 2, 4] and im.tolist() == [0, -3, 5]
    re, im = parse_signal("0.5\n1e-3,2\n")
    assert re.dtype == np.float64 and im.tolist() == [0.0, 2.0]


@pytest.mark.parametrize("text, lineno", [("1\nabc\n", 2), ("1\n\n2,3,4\n", 3), ("nan\n", 1),
                                          ("1\n# x\ninf,0\n", 3)])
def test_parse_signal_errors(text, lineno):
    with pytest.raises(DataError, match=f"line {lineno}"):
        parse_signal(text)


def test_format_number():
    assert [format_number(v) for v in (1, 1.0, -0.0, 1e-15, -2.5, 32.00000000000001)] == \
        ["1", "1", "0", "0", "-2.5", "32"]


# -- transform --------------------------------------------------------------------

def test_transform_impulse_fast(tmp_path, impulse_file):
    out = tmp_path / "spec.txt"
    assert main(["transform", "--method", "fast", "--input", str(impulse_file),
                 "--output", str(out)]) == 0
    assert out.read_text() == "1,0\n" * 32


def test_transform_exact_ones(tmp_path):
    inp = write_lines(tmp_path / "ones.txt", ["1"] * 32)
    out = tmp_path / "spec.txt"
    assert main(["transform", "--method", "exact", "--input", str(inp), "--output", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "32,0"
    for l in lines[1:]:
        a, b = map(float, l.split(","))
        assert math.hypot(a, b) < 1e-9


def test_transform_dense_fast_byte_identical(tmp_path):
    rng = np.random.default_rng(42)
    inp = write_lines(tmp_path / "rand.txt", [f"{a},{b}" for a, b in rng.integers(-128, 129, (32, 2))])
    outs = []
    for method in ("dense", "fast"):
        out = tmp_path / f"{method}.txt"
        assert main(["transform", "--method", method, "--input", str(inp), "--output", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_transform_report(capsys, impulse_file):
    code, rep = run_json(capsys, ["transform", "--input", str(impulse_file), "--tally"])
    assert code == 0
    assert rep["method"] == "fast" and rep["output"] == [[1, 0]] * 32
    assert rep["tally"]["real_additions"] == 144
    assert rep["input_digest"].startswith("sha256:")


def test_transform_errors(tmp_path, capsys):
    short = write_lines(tmp_path / "short.txt", ["1"] * 31)
    assert main(["transform", "--method", "fast", "--input", str(short)]) == 2
    assert main(["transform", "--method", "exact", "--input", str(short)]) == 0
    bad = write_lines(tmp_path / "bad.txt", ["1", "x"])
    assert main(["transform", "--input", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["transform", "--input", str(tmp_path / "missing.txt")]) == 2
    assert main(["transform", "--method", "nope", "--input", str(bad)]) == 2


# -- verify -------------------------------------------------------------------------

def test_verify_passes(capsys):
    code, rep = run_json(capsys, ["verify"])
    assert code == 0 and rep["pass"] and rep["failed"] == []
    assert set(rep["checks"]) == {"factorization", "table1_dense", "table1_fast", "table2"}
    assert rep["checks"]["table2"]["per_stage"] == [30, 30, 14, 14, 30, 14, 12, 0]


def test_verify_detects_flipped_sign():
    m = build_f32hat()
    re = m.re.copy()
    re[5, 7] = -re[5, 7] if re[5, 7] else 1
    code, rep = cmd_verify(f32hat=type(m)(re, m.im))
    assert code == 1 and "factorization" in rep["failed"]
    assert rep["checks"]["factorization"]["first_mismatch"]["row"] == 5


def test_verify_detects_extra_nonzero():
    stages = list(build_stages())
    w = stages[2]
    rows = list(w.rows)
    used = {c for c, _ in rows[0]}
    extra = min(set(range(32)) - used)
    rows[0] = tuple(sorted(rows[0] + ((extra, QuantizedEntry(1, 0)),)))
    stages[2] = replace(w, rows=tuple(rows))
    code, rep = cmd_verify(stages=stages)
    assert code == 1 and "table2" in rep["failed"]


# -- design ---------------------------------------------------------------------------

def test_design_default(capsys):
    code, rep = run_json(capsys, ["design", "--alpha-min", "0.8", "--alpha-max", "1.3",
                                  "--steps", "501"])
    assert code == 0 and rep["matches_fixture"] is True
    assert rep["curve"]["grid_points"] == 501


def test_design_empty(capsys):
    code, rep = run_json(capsys, ["design", "--alpha-min", "10", "--alpha-max", "11",
                                  "--steps", "11"])
    assert code == 1 and rep["error"] == "no admissible candidate"


def test_design_usage_error(capsys):
    assert main(["design", "--alpha-min", "1.0", "--alpha-max", "1.0"]) == 2


# -- compare ----------------------------------------------------------------------------

def test_compare_zero(tmp_path, capsys):
    code, rep = run_json(capsys, ["compare", "--input", str(write_lines(tmp_path / "z.txt", ["0"] * 32))])
    assert code == 0 and rep["mse"] == 0


def test_compare_impulse(capsys, impulse_file):
    code, rep = run_json(capsys, ["compare", "--input", str(impulse_file)])
    s = normalization(build_f32hat()).diagonal
    np.testing.assert_allclose(rep["per_bin_error"], np.abs(s - 1), rtol=1e-11)


def test_compare_tone(capsys, tone_file):
    code, rep = run_json(capsys, ["compare", "--input", str(tone_file)])
    assert code == 0
    assert rep["mse"] == pytest.approx(TONE_MSE, rel=1e-11)
    assert rep["relative_error"] == pytest.approx(TONE_REL, rel=1e-11)
    assert rep["per_bin_error"][3] == pytest.approx(TONE_BIN3_ERR, rel=1e-11)


def test_compare_length_error(tmp_path):
    assert main(["compare", "--input", str(write_lines(tmp_path / "s.txt", ["1"] * 8))]) == 2


# -- determinism ---------------------------------------------------------------------------

def test_reports_are_byte_identical(capsys, tone_file):
    outs = []
    for _ in range(2):
        main(["compare", "--input", str(tone_file), "--json"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_dump_report_stable():
    rep = {"b": 1.0 / 3, "a": [float("inf"), -0.0, np.float64(2.5)], "c": complex(1, 2)}
    assert dump_report(rep) == dump_report(dict(reversed(list(rep.items()))))
    assert json.loads(dump_report(rep)) == {"a": [None, 0.0, 2.5], "b": 0.333333333333, "c": [1.0, 2.0]}


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "approxdft", "verify"], capture_output=True, text=True)
    assert r.returncode == 0 and "table2: pass" in r.stdout
