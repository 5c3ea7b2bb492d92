"""Exit criteria for the package.

Run ``pytest tests/test_acceptance.py -s`` (or execute this file directly)
to see one PASS/FAIL line per criterion.
"""
import numpy as np
import pytest

from approxdft import (apply_dense, apply_exact, apply_fast, build_f32hat, build_stages,
                       count_dense, count_fast, exact_dft_matrix, search, verify_factorization)


def factorization_identity():
    rep = verify_factorization()
    return rep.ok, "W8...W1 == F32hat exactly" if rep.ok else f"mismatch {rep.mismatch}"


def table1():
    d = count_dense(build_f32hat())
    f = count_fast(build_stages())
    got = ((d.real_multiplications, d.real_additions), (f.real_multiplications, f.real_additions))
    return got == ((0, 1282), (0, 144)), f"dense {got[0]}, fast {got[1]}"


def table2():
    per = count_fast(build_stages()).per_stage
    return per == (30, 30, 14, 14, 30, 14, 12, 0), f"per stage {list(per)}"


def fast_dense_equivalence():
    rng = np.random.default_rng(4)
    m = build_f32hat()
    xi = rng.integers(-128, 129, size=(1000, 32))
    dr, di = apply_dense(m, xi, lanes=True)
    fr, fi = apply_fast(xi, lanes=True)
    exact = np.array_equal(dr, fr) and np.array_equal(di, fi)
    xf = rng.standard_normal((1000, 32)) + 1j * rng.standard_normal((1000, 32))
    err = float(np.abs(apply_dense(m, xf) - apply_fast(xf)).max())
    return exact and err <= 1e-9, f"1000 integer inputs bit-exact={exact}, float max err {err:.2e}"


def designer_roundtrip():
    best = search(0.8, 1.3, 501).best
    return best.matrix == build_f32hat(), f"best alpha {best.alpha:.4g}, score {best.score:.12g}"


def exact_dft_properties():
    worst = 0.0
    for n in (2, 4, 8, 16, 32):
        f = exact_dft_matrix(n)
        worst = max(worst, float(np.abs(f @ f.conj().T - n * np.eye(n)).max()))
    t = np.arange(32)
    mag = np.abs(apply_exact(np.exp(2j * np.pi * 3 * t / 32)))
    leak = float(np.delete(mag, 3).max())
    peak = abs(float(mag[3]) - 32)
    ok = worst <= 1e-10 and leak <= 1e-9 and peak <= 1e-9
    return ok, f"max |FF^H - NI| {worst:.1e}, tone leak {leak:.1e}, peak err {peak:.1e}"


def structural_invariants():
    stages = build_stages()
    nnz_ok = all(1 <= k <= 3 for w in stages for k in w.nnz_per_row)
    real_ok = all(w.is_real for w in stages[:7]) and not stages[7].is_real
    m = build_f32hat()
    sym_ok = all(m.row(32 - k) == [e.conj() for e in m.row(k)] for k in range(1, 16))
    ones_ok = (np.all(m.re[0] == 1) and np.all(m.im[0] == 0)
               and np.all(m.re[:, 0] == 1) and np.all(m.im[:, 0] == 0))
    ok = nnz_ok and real_ok and sym_ok and bool(ones_ok)
    return ok, f"nnz 1-3 {nnz_ok}, W1-W7 real {real_ok}, conj symmetry {sym_ok}, unit row/col {bool(ones_ok)}"


CRITERIA = [
    ("1 factorization identity", factorization_identity),
    ("2 table 1 operation counts", table1),
    ("3 table 2 per-stage additions", table2),
    ("4 fast/dense equivalence", fast_dense_equivalence),
    ("5 designer round-trip", designer_roundtrip),
    ("6 exact DFT oracle", exact_dft_properties),
    ("7 fixture structure", structural_invariants),
]


@pytest.mark.parametrize("name, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check):
    ok, detail = check()
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for name, check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}")
    raise SystemExit(1 if failed else 0)
