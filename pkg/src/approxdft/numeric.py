"""Gaussian-integer entries over the trivial alphabet, plus norm helpers.

Entries of the approximate transform have real and imaginary parts in
{-1, 0, +1}. Multiplying a sample by such an entry is a sign copy, a lane
swap, or a lane duplication, so no general multiplier is involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .exceptions import DataError, DimensionError

_ALPHABET = (-1, 0, 1)


def _sign_copy(s: int, v: float) -> float:
    # s is -1, 0 or +1; no multiplier needed
    if s == 0:
        return 0.0
    return v if s > 0 else -v


@dataclass(frozen=True)
class QuantizedEntry:
    """A matrix element ``re + j*im`` with ``re, im`` in {-1, 0, +1}."""

    re: int = 0
    im: int = 0

    def __post_init__(self):
        if self.re not in _ALPHABET or self.im not in _ALPHABET:
            raise ValueError(
                f"entry ({self.re}, {self.im}) is outside the trivial alphabet")
        # bool and numpy ints would otherwise leak into the fixtures
        object.__setattr__(self, "re", int(self.re))
        object.__setattr__(self, "im", int(self.im))

    def conj(self) -> "QuantizedEntry":
        return QuantizedEntry(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def squared_magnitude(self) -> int:
        return abs(self.re) + abs(self.im)

    @classmethod
    def all_values(cls) -> tuple["QuantizedEntry", ...]:
        return tuple(cls(a, b) for a in _ALPHABET for b in _ALPHABET)


GAMMA = QuantizedEntry(1, 1)
GAMMA_CONJ = QuantizedEntry(1, -1)


def entry_mul(e: QuantizedEntry, v: complex) -> complex:
    """Multiply ``v`` by a trivial multiplicand using sign copies only.

    ``(e.re + j e.im)(v.re + j v.im)`` expands to
    ``e.re*v.re - e.im*v.im + j(e.re*v.im + e.im*v.re)``; every product
    here is a sign copy of a lane or zero.
    """
    v = complex(v)
    re = _sign_copy(e.re, v.real) - _sign_copy(e.im, v.imag)
    im = _sign_copy(e.re, v.imag) + _sign_copy(e.im, v.real)
    return complex(re, im)


@dataclass(frozen=True, eq=False)
class QuantizedMatrix:
    """Dense square matrix of trivial multiplicands, kept as two int8 lanes."""

    re: np.ndarray
    im: np.ndarray

    def __post_init__(self):
        re = np.array(self.re, dtype=np.int8)
        im = np.array(self.im, dtype=np.int8)
        if re.ndim != 2 or re.shape[0] != re.shape[1] or re.shape[0] == 0:
            raise DimensionError(f"expected a non-empty square matrix, got {re.shape}")
        if im.shape != re.shape:
            raise DimensionError("real and imaginary lanes differ in shape")
        if np.abs(re).max() > 1 or np.abs(im).max() > 1:
            raise ValueError("entries must lie in {-1,0,1} x {-1,0,1}")
        re.setflags(write=False)
        im.setflags(write=False)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @property
    def n(self) -> int:
        return self.re.shape[0]

    def __getitem__(self, idx: tuple[int, int]) -> QuantizedEntry:
        k, c = idx
        return QuantizedEntry(int(self.re[k, c]), int(self.im[k, c]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantizedMatrix):
            return NotImplemented
        return (np.array_equal(self.re, other.re)
                and np.array_equal(self.im, other.im))

    def __hash__(self):
        return hash((self.re.tobytes(), self.im.tobytes()))

    def row(self, k: int) -> list[QuantizedEntry]:
        return [self[k, c] for c in range(self.n)]

    def conj(self) -> "QuantizedMatrix":
        return QuantizedMatrix(self.re, -self.im)

    def to_complex(self) -> np.ndarray:
        return self.re.astype(np.float64) + 1j * self.im.astype(np.float64)

    @classmethod
    def from_complex(cls, m) -> "QuantizedMatrix":
        m = np.asarray(m, dtype=np.complex128)
        re, im = m.real, m.imag
        if not (np.array_equal(re, np.round(re)) and np.array_equal(im, np.round(im))):
            raise ValueError("matrix is not Gaussian-integer valued")
        return cls(re.astype(np.int8), im.astype(np.int8))

    @classmethod
    def from_entries(cls, rows: Iterable[Iterable[QuantizedEntry]]) -> "QuantizedMatrix":
        rows = [list(r) for r in rows]
        return cls([[e.re for e in r] for r in rows], [[e.im for e in r] for r in rows])


def as_lanes(x, n: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Validate a signal and split it into real and imaginary lanes.

    Integer-typed input yields int64 lanes so downstream arithmetic stays
    exact; anything else yields float64 lanes. ``x`` may be 1-D (one
    signal) or 2-D (one signal per row). A ``(re, im)`` tuple of arrays is
    accepted as-is.
    """
    if isinstance(x, tuple) and len(x) == 2:
        re, im = (np.asarray(a) for a in x)
        if re.shape != im.shape:
            raise DimensionError("real and imaginary lanes differ in shape")
        if np.issubdtype(re.dtype, np.integer) and np.issubdtype(im.dtype, np.integer):
            re, im = re.astype(np.int64), im.astype(np.int64)
        else:
            re, im = re.astype(np.float64), im.astype(np.float64)
    else:
        arr = np.asarray(x)
        if arr.dtype == object:
            arr = arr.astype(np.complex128)
        if np.issubdtype(arr.dtype, np.integer) or arr.dtype == np.bool_:
            re = arr.astype(np.int64)
            im = np.zeros_like(re)
        elif np.issubdtype(arr.dtype, np.number):
            re = np.real(arr).astype(np.float64)
            im = np.imag(arr).astype(np.float64)
        else:
            raise DataError(f"unsupported sample dtype {arr.dtype}")
    if re.ndim not in (1, 2):
        raise DimensionError(f"expected 1-D or 2-D input, got {re.ndim}-D")
    if re.shape[-1] == 0:
        raise DimensionError("signal length must be positive")
    if n is not None and re.shape[-1] != n:
        raise DimensionError(f"expected length {n}, got {re.shape[-1]}")
    if re.dtype == np.float64 and not (np.isfinite(re).all() and np.isfinite(im).all()):
        raise DataError("signal contains NaN or infinite samples")
    return re, im


def lanes_to_complex(re: np.ndarray, im: np.ndarray) -> np.ndarray:
    return re.astype(np.float64) + 1j * im.astype(np.float64)


def _as_complex_matrix(m) -> np.ndarray:
    if isinstance(m, QuantizedMatrix):
        return m.to_complex()
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or 0 in m.shape:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    return m


def frobenius_distance(a, b) -> float:
    """Frobenius norm of ``a - b``."""
    a = _as_complex_matrix(a)
    b = _as_complex_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
    d = a - b
    return float(np.sqrt(np.sum(d.real ** 2 + d.imag ** 2)))


def row_energy(m, k: int) -> float:
    m = _as_complex_matrix(m)
    if not 0 <= k < m.shape[0]:
        raise IndexError(f"row {k} out of range for {m.shape[0]} rows")
    r = m[k]
    return float(np.sqrt(np.sum(r.real ** 2 + r.imag ** 2)))
