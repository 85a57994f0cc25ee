"""Reading and writing isometry element files.

Format: a JSON array of matrices; each matrix is a flat row-major array
of (n+1)^2 entries, every entry a two-element array [re, im].  Matrices
are validated against the J-unitarity invariant on load.
"""

from __future__ import annotations

import json
import math
from typing import List, Optional, Sequence

import numpy as np

from .core import Isometry


def _matrix_from_flat(flat, index) -> np.ndarray:
    if not isinstance(flat, list) or not flat:
        raise ValueError(f"element {index}: expected a flat entry list")
    size = math.isqrt(len(flat))
    if size * size != len(flat) or size < 2:
        raise ValueError(
            f"element {index}: {len(flat)} entries do not form a square "
            f"matrix of size >= 2")
    values = []
    for pos, entry in enumerate(flat):
        if (not isinstance(entry, (list, tuple))) or len(entry) != 2:
            raise ValueError(
                f"element {index}, entry {pos}: expected [re, im]")
        values.append(complex(float(entry[0]), float(entry[1])))
    return np.array(values, dtype=complex).reshape(size, size)


def load_elements(path: str, n: Optional[int] = None) -> List[Isometry]:
    """Load and validate a list of isometries from a JSON element file."""
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, list) or not data:
        raise ValueError("element file must contain a nonempty JSON array")
    out = []
    for index, flat in enumerate(data):
        g = _matrix_from_flat(flat, index)
        if n is not None and g.shape[0] != n + 1:
            raise ValueError(
                f"element {index}: matrix size {g.shape[0]} does not match "
                f"n = {n} (expected {n + 1})")
        try:
            out.append(Isometry(g))
        except ValueError as err:
            raise ValueError(f"element {index}: {err}") from err
    return out


def save_elements(path: str, elements: Sequence[Isometry]) -> None:
    data = []
    for g in elements:
        flat = [[float(v.real), float(v.imag)] for v in g.matrix.reshape(-1)]
        data.append(flat)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(data, handle)
