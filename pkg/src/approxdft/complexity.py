"""Real-operation counts for the dense and factorized transforms.

Counting rule: every output sample keeps a real and an imaginary
accumulator. Feeding the first term into an accumulator is free; each
further nonzero term costs one real addition. Negation, lane swaps
(multiplication by +-j) and lane duplication (+-1+-j on single-lane data)
cost nothing, and no entry of the trivial alphabet needs a multiplier.

Which lanes carry data is tracked per sample: a purely real input has only
its real lanes live, and a stage's output lane is live when at least one
term reaches it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .numeric import QuantizedEntry, QuantizedMatrix
from .transform import StageMatrix


class DataKind(enum.Enum):
    PURELY_REAL = "real"
    COMPLEX = "complex"

    def lanes(self, n: int) -> list[tuple[bool, bool]]:
        return [(True, self is DataKind.COMPLEX)] * n


@dataclass(frozen=True)
class OperationTally:
    real_additions: int = 0
    real_multiplications: int = 0
    per_stage: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.real_additions < 0 or self.real_multiplications < 0:
            raise ValueError("operation counts must be nonnegative")
        if self.per_stage is not None and sum(self.per_stage) != self.real_additions:
            raise ValueError("per-stage additions do not sum to the total")

    def as_dict(self) -> dict:
        d = {"real_additions": self.real_additions,
             "real_multiplications": self.real_multiplications}
        if self.per_stage is not None:
            d["per_stage"] = list(self.per_stage)
        return d


def _contributions(e: QuantizedEntry, live: tuple[bool, bool]) -> tuple[int, int]:
    """Terms a product ``e * x`` adds to the (real, imaginary) accumulators."""
    re_live, im_live = live
    # (a + jb)(xr + j xi) = (a xr - b xi) + j(a xi + b xr)
    to_re = (e.re != 0 and re_live) + (e.im != 0 and im_live)
    to_im = (e.re != 0 and im_live) + (e.im != 0 and re_live)
    return to_re, to_im


def _row(terms: Iterable[tuple[QuantizedEntry, tuple[bool, bool]]]) -> tuple[int, bool, bool]:
    r = i = 0
    for e, live in terms:
        to_re, to_im = _contributions(e, live)
        r += to_re
        i += to_im
    return max(0, r - 1) + max(0, i - 1), r > 0, i > 0


def count_row(terms: Iterable[tuple[QuantizedEntry, tuple[bool, bool]]]) -> int:
    """Additions for one output sample.

    ``terms`` pairs each matrix entry of the row with the ``(re_live,
    im_live)`` flags of the input sample it multiplies.
    """
    return _row(terms)[0]


def _count_matrix_rows(rows, lanes):
    adds = 0
    out = []
    for r in rows:
        a, re_live, im_live = _row((e, lanes[c]) for c, e in r)
        adds += a
        out.append((re_live, im_live))
    return adds, out


def count_dense(m: QuantizedMatrix, kind: DataKind = DataKind.PURELY_REAL) -> OperationTally:
    rows = [[(c, m[k, c]) for c in range(m.n)] for k in range(m.n)]
    adds, _ = _count_matrix_rows(rows, kind.lanes(m.n))
    return OperationTally(adds, 0)


def count_fast(stages: Sequence[StageMatrix],
               kind: DataKind = DataKind.PURELY_REAL) -> OperationTally:
    """Tally the factorized algorithm stage by stage, propagating lane liveness."""
    if not stages:
        return OperationTally(0, 0, ())
    lanes = kind.lanes(stages[0].n)
    per_stage = []
    for w in stages:
        adds, lanes = _count_matrix_rows(w.rows, lanes)
        per_stage.append(adds)
    return OperationTally(sum(per_stage), 0, tuple(per_stage))


def live_lanes(stages: Sequence[StageMatrix],
               kind: DataKind = DataKind.PURELY_REAL) -> list[list[tuple[bool, bool]]]:
    """Lane liveness after each stage (index 0 is the input)."""
    lanes = kind.lanes(stages[0].n)
    history = [lanes]
    for w in stages:
        _, lanes = _count_matrix_rows(w.rows, lanes)
        history.append(lanes)
    return history
