"""Independent oracles shared by the test modules.

These helpers decode the fixture strings with plain Python complex numbers
and evaluate transforms by textbook summation, so they share no code path
with the package internals they check.
"""
import cmath
import math

import pytest

from approxdft import _fixtures

SYMBOL_VALUES = {"0": 0, "1": 1, "-": -1, "j": 1j, "J": -1j,
                 "g": 1 + 1j, "G": -1 - 1j, "c": 1 - 1j, "C": -1 + 1j}


def decode(rows):
    return [[SYMBOL_VALUES[ch] for ch in r] for r in rows]


def matvec(m, x):
    return [sum(m[k][n] * x[n] for n in range(len(x))) for k in range(len(m))]


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)] for i in range(n)]


def naive_dft(x):
    n = len(x)
    return [sum(cmath.exp(-2j * math.pi * k * t / n) * x[t] for t in range(n)) for k in range(n)]


@pytest.fixture(scope="session")
def f32_oracle():
    return decode(_fixtures.F32HAT)


@pytest.fixture(scope="session")
def stages_oracle():
    return [decode(w) for w in _fixtures.STAGES]
