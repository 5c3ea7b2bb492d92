"""Multiplierless 32-point approximate DFT: evaluation, verification and design."""

from .complexity import DataKind, OperationTally, count_dense, count_fast, count_row
from .design import (DesignCandidate, FidelityReport, NormalizationMatrix, SearchResult,
                     fidelity_report, normalization, quantize, search)
from .estimators import ApproxDFT, ApproxDFTDesigner
from .exceptions import (ApproxDFTError, DataError, DegenerateCandidateError, DimensionError,
                         EmptySearchError, InvalidSizeError, ParameterError)
from .numeric import (GAMMA, GAMMA_CONJ, QuantizedEntry, QuantizedMatrix, entry_mul,
                      frobenius_distance, row_energy)
from .transform import (StageMatrix, TransformMethod, apply_dense, apply_exact, apply_fast,
                        build_f32hat, build_stages, exact_dft_matrix, verify_factorization)

__version__ = "0.1.0"
