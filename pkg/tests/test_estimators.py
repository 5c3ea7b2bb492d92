import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from approxdft import (ApproxDFT, ApproxDFTDesigner, DimensionError, OperationTally,
                       ParameterError, apply_exact, apply_fast, build_f32hat, normalization)


def test_params_roundtrip():
    est = ApproxDFT(method="dense", normalize=True)
    assert est.get_params() == {"method": "dense", "normalize": True, "output": "complex"}
    est2 = clone(est).set_params(method="exact")
    assert est2.method == "exact" and est.method == "dense"


@pytest.mark.parametrize("method", ["fast", "dense"])
def test_transform_matches_functions(method):
    X = np.random.default_rng(0).integers(-10, 11, (6, 32))
    Y = ApproxDFT(method=method).fit_transform(X)
    assert Y.shape == (6, 32)
    np.testing.assert_array_equal(Y, apply_fast(X))


def test_exact_any_length():
    X = np.random.default_rng(1).standard_normal((3, 12))
    np.testing.assert_allclose(ApproxDFT(method="exact").fit_transform(X), apply_exact(X))


def test_normalize_and_realimag():
    X = np.random.default_rng(2).standard_normal((2, 32))
    Y = ApproxDFT(normalize=True, output="realimag").fit_transform(X)
    ref = apply_fast(X) * normalization(build_f32hat()).diagonal
    assert Y.shape == (2, 64)
    np.testing.assert_allclose(Y[:, :32] + 1j * Y[:, 32:], ref)


def test_validation():
    with pytest.raises(NotFittedError):
        ApproxDFT().transform(np.zeros((1, 32)))
    with pytest.raises(DimensionError):
        ApproxDFT().fit(np.zeros((2, 31)))
    with pytest.raises(ParameterError):
        ApproxDFT(method="fft").fit(np.zeros((2, 32)))
    est = ApproxDFT(method="exact").fit(np.zeros((2, 8)))
    with pytest.raises(DimensionError):
        est.transform(np.zeros((2, 9)))


def test_complexity_method():
    assert ApproxDFT(method="fast").complexity() == OperationTally(144, 0, (30, 30, 14, 14, 30, 14, 12, 0))
    assert ApproxDFT(method="dense").complexity() == OperationTally(1282, 0)
    with pytest.raises(ParameterError):
        ApproxDFT(method="exact").complexity()


def test_pipeline():
    pipe = make_pipeline(FunctionTransformer(lambda X: X - X.mean(axis=1, keepdims=True)),
                         ApproxDFT(output="realimag"))
    Y = pipe.fit_transform(np.ones((3, 32)))
    assert np.abs(Y).max() == 0


def test_designer():
    d = ApproxDFTDesigner().fit()
    assert d.matches_fixture()
    assert d.alpha_ == pytest.approx(0.9)
    assert d.scores_.shape == d.alphas_.shape == (501,)
    x = np.random.default_rng(4).standard_normal((2, 32))
    np.testing.assert_allclose(d.transform(x), apply_fast(x) * d.scaling_, atol=1e-12)
    with pytest.raises(NotFittedError):
        ApproxDFTDesigner().transform(x)
