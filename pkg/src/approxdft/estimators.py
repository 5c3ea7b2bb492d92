"""scikit-learn compatible wrappers.

``ApproxDFT`` is a stateless transformer mapping each row of ``X`` to its
spectrum. ``ApproxDFTDesigner`` runs the expansion-factor search in
``fit`` and afterwards transforms with the matrix it found.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .complexity import DataKind, OperationTally, count_dense, count_fast
from .design import normalization, search
from .exceptions import ParameterError
from .numeric import as_lanes, lanes_to_complex
from .transform import (N, TransformMethod, _dense_lanes, apply_dense, apply_exact, apply_fast,
                        build_f32hat, build_stages)

_OUTPUTS = ("complex", "realimag")


def _format_output(y: np.ndarray, output: str) -> np.ndarray:
    if output == "complex":
        return y
    # real part of every bin followed by imaginary part of every bin
    return np.concatenate([y.real, y.imag], axis=-1)


def _check_X(X, n=None):
    re, im = as_lanes(X, n)
    if re.ndim == 1:
        re, im = re[None, :], im[None, :]
    return re, im


class ApproxDFT(TransformerMixin, BaseEstimator):
    """Row-wise DFT by the exact, dense approximate or fast approximate method.

    Parameters
    ----------
    method : {"fast", "dense", "exact"}
        ``"exact"`` accepts any row length; the approximate methods need 32.
    normalize : bool
        Scale approximate outputs by the unit-energy row normalization.
    output : {"complex", "realimag"}
        ``"realimag"`` returns a real array of width ``2 * n_features`` so the
        result can feed estimators that reject complex input.
    """

    def __init__(self, method="fast", normalize=False, output="complex"):
        self.method = method
        self.normalize = normalize
        self.output = output

    def _method(self) -> TransformMethod:
        try:
            return TransformMethod(self.method)
        except ValueError:
            raise ParameterError(f"unknown method {self.method!r}") from None

    def fit(self, X, y=None):
        method = self._method()
        if self.output not in _OUTPUTS:
            raise ParameterError(f"output must be one of {_OUTPUTS}")
        re, _ = _check_X(X, None if method is TransformMethod.EXACT else N)
        self.n_features_in_ = re.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        method = self._method()
        re, im = _check_X(X, self.n_features_in_)
        if method is TransformMethod.EXACT:
            y = apply_exact((re, im))
        else:
            if method is TransformMethod.FAST:
                y = apply_fast((re, im))
            else:
                y = apply_dense(build_f32hat(), (re, im))
            if self.normalize:
                y = y * normalization(build_f32hat()).diagonal
        if np.ndim(X) == 1:
            y = y[0]
        return _format_output(y, self.output)

    def complexity(self, kind: DataKind = DataKind.PURELY_REAL) -> OperationTally:
        method = self._method()
        if method is TransformMethod.FAST:
            return count_fast(build_stages(), kind)
        if method is TransformMethod.DENSE:
            return count_dense(build_f32hat(), kind)
        raise ParameterError("operation counts are defined for the approximate methods only")


class ApproxDFTDesigner(TransformerMixin, BaseEstimator):
    """Search expansion factors for the best multiplierless DFT approximation.

    ``fit`` ignores ``X``; it is accepted so the designer can sit inside a
    pipeline. Fitted attributes: ``alpha_``, ``score_``, ``matrix_``,
    ``scaling_`` (the normalization diagonal), ``alphas_`` and ``scores_``.
    """

    def __init__(self, alpha_min=0.8, alpha_max=1.3, steps=501, normalize=True,
                 output="complex"):
        self.alpha_min = alpha_min
        self.alpha_max = alpha_max
        self.steps = steps
        self.normalize = normalize
        self.output = output

    def fit(self, X=None, y=None):
        if X is not None:
            re, _ = _check_X(X, N)
            self.n_features_in_ = re.shape[1]
        result = search(self.alpha_min, self.alpha_max, self.steps)
        self.alpha_ = result.best.alpha
        self.score_ = result.best.score
        self.matrix_ = result.best.matrix
        self.scaling_ = result.best.normalization.diagonal
        self.alphas_ = result.alphas
        self.scores_ = result.scores
        return self

    def matches_fixture(self) -> bool:
        check_is_fitted(self, "matrix_")
        return self.matrix_ == build_f32hat()

    def transform(self, X):
        check_is_fitted(self, "matrix_")
        re, im = _check_X(X, self.matrix_.n)
        ar, ai = _dense_lanes(self.matrix_, re.astype(np.float64), im.astype(np.float64))
        y = lanes_to_complex(ar, ai)
        if self.normalize:
            y = y * self.scaling_
        if np.ndim(X) == 1:
            y = y[0]
        return _format_output(y, self.output)
