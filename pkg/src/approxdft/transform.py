"""Dense and fast evaluation of the 32-point approximate DFT.

The approximate matrix and its eight sparse factors are static data (see
``_fixtures``). The fast path applies the factors right to left, so W1
touches the input first and W8 produces the output.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _fixtures
from .exceptions import DimensionError, InvalidSizeError
from .numeric import QuantizedEntry, QuantizedMatrix, as_lanes, lanes_to_complex

N = 32

_SYMBOLS = {
    "0": (0, 0), "1": (1, 0), "-": (-1, 0),
    "j": (0, 1), "J": (0, -1),
    "g": (1, 1), "G": (-1, -1),
    "c": (1, -1), "C": (-1, 1),
}


class TransformMethod(enum.Enum):
    EXACT = "exact"
    DENSE = "dense"
    FAST = "fast"


def _decode(rows: Sequence[str]) -> QuantizedMatrix:
    re = [[_SYMBOLS[ch][0] for ch in r] for r in rows]
    im = [[_SYMBOLS[ch][1] for ch in r] for r in rows]
    return QuantizedMatrix(re, im)


@dataclass(frozen=True)
class StageMatrix:
    """One sparse factor W_i of the fast algorithm.

    ``rows[k]`` lists the ``(column, entry)`` pairs of output row ``k`` in
    increasing column order; zero entries are not stored.
    """

    index: int
    rows: tuple[tuple[tuple[int, QuantizedEntry], ...], ...]
    n: int = N
    _packed: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple((int(c), e) for c, e in r) for r in self.rows)
        if len(rows) != self.n:
            raise DimensionError(f"stage W{self.index} has {len(rows)} rows, expected {self.n}")
        for k, r in enumerate(rows):
            cols = [c for c, _ in r]
            if any(not 0 <= c < self.n for c in cols):
                raise DimensionError(f"W{self.index} row {k}: column out of range")
            if any(b <= a for a, b in zip(cols, cols[1:])):
                raise ValueError(f"W{self.index} row {k}: columns not strictly increasing")
            if any(e.is_zero for _, e in r):
                raise ValueError(f"W{self.index} row {k}: explicit zero entry")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_packed", self._pack())

    def _pack(self):
        # pad every row to the same width; padding entries are (col 0, 0+0j)
        width = max((len(r) for r in self.rows), default=0) or 1
        cols = np.zeros((self.n, width), dtype=np.intp)
        re = np.zeros((self.n, width), dtype=np.int64)
        im = np.zeros((self.n, width), dtype=np.int64)
        for k, r in enumerate(self.rows):
            for t, (c, e) in enumerate(r):
                cols[k, t], re[k, t], im[k, t] = c, e.re, e.im
        return cols, re, im

    @classmethod
    def from_dense(cls, index: int, m: QuantizedMatrix) -> "StageMatrix":
        rows = []
        for k in range(m.n):
            rows.append(tuple((c, m[k, c]) for c in range(m.n)
                              if m.re[k, c] or m.im[k, c]))
        return cls(index, tuple(rows), n=m.n)

    def to_dense(self) -> QuantizedMatrix:
        re = np.zeros((self.n, self.n), dtype=np.int8)
        im = np.zeros((self.n, self.n), dtype=np.int8)
        for k, r in enumerate(self.rows):
            for c, e in r:
                re[k, c], im[k, c] = e.re, e.im
        return QuantizedMatrix(re, im)

    @property
    def nnz_per_row(self) -> list[int]:
        return [len(r) for r in self.rows]

    @property
    def is_real(self) -> bool:
        return all(e.im == 0 for r in self.rows for _, e in r)

    def apply_lanes(self, re: np.ndarray, im: np.ndarray):
        """Apply this stage to lane arrays (last axis is the signal axis)."""
        cols, wre, wim = self._packed
        out_re = np.zeros(re.shape, dtype=re.dtype)
        out_im = np.zeros(im.shape, dtype=im.dtype)
        for t in range(cols.shape[1]):
            xr = re[..., cols[:, t]]
            xi = im[..., cols[:, t]]
            a, b = wre[:, t], wim[:, t]
            # a, b in {-1,0,1}: these products are sign selections
            out_re += a * xr - b * xi
            out_im += a * xi + b * xr
        return out_re, out_im


@lru_cache(maxsize=None)
def build_f32hat() -> QuantizedMatrix:
    """The 32x32 approximate DFT matrix (gamma = 1+j entries included)."""
    return _decode(_fixtures.F32HAT)


@lru_cache(maxsize=None)
def build_stages() -> tuple[StageMatrix, ...]:
    """W1..W8 in application order."""
    return tuple(StageMatrix.from_dense(i, _decode(rows))
                 for i, rows in enumerate(_fixtures.STAGES, start=1))


def exact_dft_matrix(n: int) -> np.ndarray:
    """``n x n`` DFT matrix with entry ``exp(-2j*pi*r*c/n)`` at ``(r, c)``."""
    if int(n) != n or n < 1:
        raise InvalidSizeError(f"DFT size must be a positive integer, got {n!r}")
    n = int(n)
    # reduce the exponent mod n before scaling so large r*c keeps full precision
    rc = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(-2j * np.pi * rc / n)


def _dense_lanes(m: QuantizedMatrix, re: np.ndarray, im: np.ndarray):
    out_re = np.zeros(re.shape[:-1] + (m.n,), dtype=re.dtype)
    out_im = np.zeros(im.shape[:-1] + (m.n,), dtype=im.dtype)
    mre = m.re.astype(np.int64)
    mim = m.im.astype(np.int64)
    # ascending column order keeps float results reproducible
    for c in range(m.n):
        xr = re[..., c:c + 1]
        xi = im[..., c:c + 1]
        out_re += mre[:, c] * xr - mim[:, c] * xi
        out_im += mre[:, c] * xi + mim[:, c] * xr
    return out_re, out_im


def apply_dense(m: QuantizedMatrix, x, *, lanes: bool = False):
    """Multiply ``x`` by ``m`` directly.

    Integer-typed input is accumulated in int64 and is therefore exact.
    With ``lanes=True`` the ``(re, im)`` accumulators are returned instead
    of a complex array.
    """
    re, im = as_lanes(x, m.n)
    out = _dense_lanes(m, re, im)
    return out if lanes else lanes_to_complex(*out)


def apply_stages(stages: Sequence[StageMatrix], x, *, lanes: bool = False):
    if not stages:
        raise ValueError("at least one stage is required")
    re, im = as_lanes(x, stages[0].n)
    for w in stages:
        re, im = w.apply_lanes(re, im)
    return (re, im) if lanes else lanes_to_complex(re, im)


def apply_fast(x, *, lanes: bool = False):
    """Evaluate the approximate DFT through the eight sparse factors."""
    return apply_stages(build_stages(), x, lanes=lanes)


def apply_exact(x) -> np.ndarray:
    """Exact DFT by direct O(N^2) summation, for any positive length."""
    re, im = as_lanes(x)
    xc = lanes_to_complex(re, im)
    f = exact_dft_matrix(xc.shape[-1])
    out = np.zeros(xc.shape, dtype=np.complex128)
    for c in range(f.shape[1]):
        out += f[:, c] * xc[..., c:c + 1]
    return out


@dataclass(frozen=True)
class FactorizationReport:
    ok: bool
    mismatch: tuple[int, int, complex, complex] | None = None

    def __bool__(self):
        return self.ok


def stage_product(stages: Sequence[StageMatrix]) -> tuple[np.ndarray, np.ndarray]:
    """Exact Gaussian-integer product ``W_last ... W_first`` as int64 lanes."""
    n = stages[0].n
    # push the identity through the stages column by column
    re = np.eye(n, dtype=np.int64)
    im = np.zeros((n, n), dtype=np.int64)
    for w in stages:
        re, im = w.apply_lanes(re, im)
    return re.T, im.T


def verify_factorization(stages: Sequence[StageMatrix] | None = None,
                         target: QuantizedMatrix | None = None) -> FactorizationReport:
    """Check that the product of the stages equals the approximate matrix."""
    stages = build_stages() if stages is None else stages
    target = build_f32hat() if target is None else target
    re, im = stage_product(stages)
    if re.shape != target.re.shape:
        raise DimensionError("stage product and target differ in size")
    bad = np.argwhere((re != target.re) | (im != target.im))
    if bad.size == 0:
        return FactorizationReport(True)
    k, c = (int(v) for v in bad[0])
    return FactorizationReport(
        False, (k, c, complex(target.re[k, c], target.im[k, c]), complex(re[k, c], im[k, c])))
