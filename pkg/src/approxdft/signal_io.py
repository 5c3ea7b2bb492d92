"""Plain-text signal files and deterministic report serialization.

A signal file holds one sample per line, ``re`` or ``re,im``. Blank lines
and lines starting with ``#`` are skipped.
"""
from __future__ import annotations

import hashlib
import json
import math
from pathlib import Path

import numpy as np

from .exceptions import DataError


def parse_signal(text: str) -> tuple[np.ndarray, np.ndarray]:
    """Parse signal text into ``(re, im)`` lanes.

    The lanes are int64 when every value is written as an integer, so the
    approximate transforms can run in exact integer arithmetic.
    """
    tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) > 2:
            raise DataError(f"line {lineno}: expected '<re>' or '<re>,<im>', got {raw!r}")
        if len(parts) == 1:
            parts.append("0")
        for p in parts:
            try:
                v = float(p)
            except ValueError:
                raise DataError(f"line {lineno}: cannot parse {p!r} as a number") from None
            if not math.isfinite(v):
                raise DataError(f"line {lineno}: non-finite value {p!r}")
        tokens.append(parts)
    if not tokens:
        raise DataError("signal file contains no samples")
    if all(_is_int_literal(p) for pair in tokens for p in pair):
        re = np.array([int(a) for a, _ in tokens], dtype=np.int64)
        im = np.array([int(b) for _, b in tokens], dtype=np.int64)
    else:
        re = np.array([float(a) for a, _ in tokens])
        im = np.array([float(b) for _, b in tokens])
    return re, im


def _is_int_literal(s: str) -> bool:
    try:
        int(s)
    except ValueError:
        return False
    return True


def read_signal(path) -> tuple[np.ndarray, np.ndarray]:
    return parse_signal(Path(path).read_text(encoding="utf-8"))


def format_number(v) -> str:
    """At most 12 decimals and 12 significant digits; no negative zero."""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    v = round(float(v), 12)
    if v == 0:
        return "0"
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return format(v, ".12g")


def format_signal(y) -> str:
    if isinstance(y, tuple):
        re, im = y
    else:
        y = np.asarray(y)
        re, im = y.real, y.imag
    return "".join(f"{format_number(a)},{format_number(b)}\n" for a, b in zip(re, im))


def write_signal(path, y) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_signal(y))


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _clean(obj):
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, complex):
        return [_clean(obj.real), _clean(obj.imag)]
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if not math.isfinite(v):
            return None
        v = float(format(v, ".12g"))
        return 0.0 if v == 0 else v
    return obj


def dump_report(report: dict) -> str:
    """Serialize with sorted keys and floats cut to 12 significant digits."""
    return json.dumps(_clean(report), sort_keys=True, indent=2, ensure_ascii=True) + "\n"
