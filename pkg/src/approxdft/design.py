"""Expansion-factor search for a multiplierless DFT approximation.

A candidate is obtained by scaling the exact DFT matrix by ``alpha`` and
rounding each real and imaginary lane to the nearest integer. Only
candidates whose lanes all land in {-1, 0, 1} are admissible. Each
admissible candidate is scored by ``||F - S Fhat||_F`` where ``S`` rescales
every row of ``Fhat`` to unit energy.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateCandidateError, DimensionError, EmptySearchError, ParameterError
from .numeric import QuantizedMatrix, as_lanes, frobenius_distance, lanes_to_complex, row_energy
from .transform import N, _dense_lanes, apply_exact, build_f32hat, exact_dft_matrix


def round_half_away(v: np.ndarray) -> np.ndarray:
    """Round to nearest integer, ties away from zero (np.round ties to even)."""
    return np.sign(v) * np.floor(np.abs(v) + 0.5)


@dataclass(frozen=True)
class NormalizationMatrix:
    diagonal: np.ndarray

    def as_matrix(self) -> np.ndarray:
        return np.diag(self.diagonal)


@dataclass(frozen=True, eq=False)
class DesignCandidate:
    alpha: float
    matrix: QuantizedMatrix | None
    score: float
    normalization: NormalizationMatrix | None = None

    @property
    def accepted(self) -> bool:
        return self.matrix is not None


def normalization(m: QuantizedMatrix) -> NormalizationMatrix:
    diag = np.empty(m.n)
    for k in range(m.n):
        e = row_energy(m, k)
        if e == 0:
            raise DegenerateCandidateError(f"row {k} is all zeros")
        diag[k] = 1.0 / e
    return NormalizationMatrix(diag)


def quantize(f: np.ndarray, alpha: float) -> DesignCandidate:
    """Scale, round and score one candidate."""
    if not alpha > 0 or not math.isfinite(alpha):
        raise ParameterError(f"expansion factor must be positive, got {alpha!r}")
    f = np.asarray(f, dtype=np.complex128)
    re = round_half_away(alpha * f.real)
    im = round_half_away(alpha * f.imag)
    if np.abs(re).max() > 1 or np.abs(im).max() > 1:
        return DesignCandidate(float(alpha), None, math.inf)
    q = QuantizedMatrix(re.astype(np.int8), im.astype(np.int8))
    try:
        s = normalization(q)
    except DegenerateCandidateError:
        return DesignCandidate(float(alpha), None, math.inf)
    score = frobenius_distance(f, s.diagonal[:, None] * q.to_complex())
    return DesignCandidate(float(alpha), q, score, s)


@dataclass(frozen=True, eq=False)
class SearchResult:
    best: DesignCandidate
    alphas: np.ndarray
    scores: np.ndarray

    @property
    def curve(self) -> list[tuple[float, float]]:
        return list(zip(self.alphas.tolist(), self.scores.tolist()))

    def summary(self) -> dict:
        finite = self.scores[np.isfinite(self.scores)]
        return {
            "grid_points": int(self.alphas.size),
            "accepted": int(finite.size),
            "min_score": float(finite.min()),
            "max_score": float(finite.max()),
            "distinct_scores": int(np.unique(finite).size),
        }


def search(alpha_min: float = 0.8, alpha_max: float = 1.3, steps: int = 501,
           f: np.ndarray | None = None) -> SearchResult:
    """Sweep a uniform grid of expansion factors and keep the best candidate.

    Ties go to the smallest alpha. Raises ``EmptySearchError`` when no grid
    point yields an admissible matrix.
    """
    if not (0 < alpha_min < alpha_max) or not math.isfinite(alpha_max):
        raise ParameterError(f"need 0 < alpha_min < alpha_max, got [{alpha_min}, {alpha_max}]")
    if int(steps) != steps or steps < 2:
        raise ParameterError(f"steps must be an integer >= 2, got {steps!r}")
    f = exact_dft_matrix(N) if f is None else f
    alphas = np.linspace(alpha_min, alpha_max, int(steps))
    best = None
    scores = np.empty(alphas.size)
    for i, a in enumerate(alphas):
        cand = quantize(f, float(a))
        scores[i] = cand.score
        if cand.accepted and (best is None or cand.score < best.score):
            best = cand
    if best is None:
        raise EmptySearchError(
            f"no admissible candidate for alpha in [{alpha_min}, {alpha_max}]")
    return SearchResult(best, alphas, scores)


@dataclass(frozen=True, eq=False)
class FidelityReport:
    approx: np.ndarray
    exact: np.ndarray
    per_bin_error: np.ndarray
    mse: float
    relative_error: float

    def as_dict(self) -> dict:
        return {
            "per_bin_error": self.per_bin_error.tolist(),
            "mse": self.mse,
            "relative_error": self.relative_error,
        }


def fidelity_report(x, m: QuantizedMatrix | None = None) -> FidelityReport:
    """Compare ``S Fhat x`` against the exact DFT of ``x``."""
    m = build_f32hat() if m is None else m
    re, im = as_lanes(x, m.n)
    if re.ndim != 1:
        raise DimensionError("fidelity_report expects a single signal")
    s = normalization(m).diagonal
    ar, ai = _dense_lanes(m, re.astype(np.float64), im.astype(np.float64))
    approx = s * lanes_to_complex(ar, ai)
    exact = apply_exact((re, im))
    err = np.abs(approx - exact)
    ref = float(np.linalg.norm(exact))
    diff = float(np.linalg.norm(approx - exact))
    if ref == 0:
        rel = 0.0 if diff == 0 else math.inf
    else:
        rel = diff / ref
    return FidelityReport(approx, exact, err, float(np.mean(err ** 2)), rel)
