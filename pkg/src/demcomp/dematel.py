"""DEMATEL: normalisation, total relation matrix and prominence/relation analysis."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InputError, NonConvergent, ZeroMatrix
from .linalg import as_matrix, solve_linear, spectral_radius_estimate

RHO_GUARD = 1.0 - 1e-9
NEUTRAL_TOL = 1e-12


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"F{i + 1}" for i in range(n))


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class DirectRelationMatrix:
    values: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        d = as_matrix(self.values, square=True)
        if np.any(d < 0):
            raise InputError("direct relations must be non-negative")
        if not np.any(d):
            raise ZeroMatrix("direct relation matrix is identically zero")
        object.__setattr__(self, "values", _frozen(d))
        object.__setattr__(self, "labels", tuple(self.labels) or default_labels(d.shape[0]))

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True, eq=False)
class TotalRelationMatrix:
    values: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        t = as_matrix(self.values, square=True)
        if np.any(t < 0):
            raise InputError("total relations must be non-negative")
        object.__setattr__(self, "values", _frozen(t))
        object.__setattr__(self, "labels", tuple(self.labels) or default_labels(t.shape[0]))

    @property
    def n(self) -> int:
        return self.values.shape[0]


class Category(enum.Enum):
    CAUSE = "cause"
    EFFECT = "effect"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class ProminenceRecord:
    factor_index: int
    r: float
    c: float
    prominence: float
    relation: float
    category: Category


def normalize(d) -> np.ndarray:
    """Divide D by the largest of its row and column sums."""
    if not isinstance(d, DirectRelationMatrix):
        d = DirectRelationMatrix(d)
    v = d.values
    s = max(v.sum(axis=1).max(), v.sum(axis=0).max())
    if s <= 0:
        raise ZeroMatrix("direct relation matrix has no positive row or column sum")
    return v / s


def total_relation(n_mat, labels=()) -> TotalRelationMatrix:
    """T = N (I - N)^-1, computed by solving (I - N)^T T^T = N^T.

    Raises NonConvergent when the spectral radius of N is not safely below 1,
    i.e. when the series N + N^2 + ... would diverge.
    """
    n_mat = as_matrix(n_mat, square=True)
    if np.any(n_mat < 0):
        raise InputError("normalised matrix must be non-negative")
    rho = spectral_radius_estimate(n_mat)
    if rho >= RHO_GUARD:
        raise NonConvergent(f"spectral radius {rho:.12f} of the normalised matrix is not below 1")
    eye = np.eye(n_mat.shape[0])
    t = solve_linear((eye - n_mat).T, n_mat.T).T
    # round-off can leave -1e-17 where the exact value is 0
    t[(t < 0) & (t > -1e-12)] = 0.0
    return TotalRelationMatrix(t, labels)


def truncated_series(n_mat, k: int) -> np.ndarray:
    """N + N^2 + ... + N^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n_mat = as_matrix(n_mat, square=True)
    power = n_mat.copy()
    total = n_mat.copy()
    for _ in range(k - 1):
        power = power @ n_mat
        total += power
    return total


def prominence(t) -> list[ProminenceRecord]:
    values = t.values if isinstance(t, TotalRelationMatrix) else as_matrix(t, square=True)
    rows = values.sum(axis=1)
    cols = values.sum(axis=0)
    records = []
    for i, (r, c) in enumerate(zip(rows.tolist(), cols.tolist())):
        rel = r - c
        if abs(rel) <= NEUTRAL_TOL:
            cat = Category.NEUTRAL
        else:
            cat = Category.CAUSE if rel > 0 else Category.EFFECT
        records.append(ProminenceRecord(i, r, c, r + c, rel, cat))
    return records
