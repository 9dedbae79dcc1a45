"""Masked k-nearest-neighbor classification used as the wrapper's error model."""

from __future__ import annotations

import math

import numpy as np

from .dataset import DataView


def masked_distance(a: np.ndarray, b: np.ndarray, mask: np.ndarray) -> float:
    """Euclidean distance restricted to the dimensions selected by ``mask``."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    mask = np.asarray(mask)
    if not (a.shape == b.shape == mask.shape):
        raise ValueError(
            f"length mismatch: a has {a.shape}, b has {b.shape}, mask has {mask.shape}"
        )
    total = 0.0
    # accumulate per selected dimension in ascending order; the matrix paths
    # below add feature planes in the same order so all paths agree bitwise
    for d in np.flatnonzero(mask):
        diff = a[d] - b[d]
        total += diff * diff
    return math.sqrt(total)


def _distance_matrix(train_x: np.ndarray, query_x: np.ndarray, mask: np.ndarray) -> np.ndarray:
    selected = np.flatnonzero(mask)
    if selected.size == 0:
        raise ValueError("mask selects no features")
    total = np.zeros((query_x.shape[0], train_x.shape[0]), dtype=np.float64)
    for d in selected:
        diff = query_x[:, d, None] - train_x[None, :, d]
        total += diff * diff
    return np.sqrt(total, out=total)


def _vote(distances: np.ndarray, train_y: np.ndarray, k: int) -> np.ndarray:
    """Predict one label per distance row.

    Distance ties resolve to the lower training row index (stable sort).
    When classes tie on votes, the winner is the class of the nearest
    neighbor among the tied classes.
    """
    n_queries = distances.shape[0]
    order = np.argsort(distances, axis=1, kind="stable")[:, :k]
    neighbor_labels = train_y[order]
    n_classes = int(train_y.max()) + 1
    counts = (neighbor_labels[:, :, None] == np.arange(n_classes)).sum(axis=1)
    top = counts.max(axis=1)
    rows = np.arange(n_queries)
    in_top_class = counts[rows[:, None], neighbor_labels] == top[:, None]
    first = in_top_class.argmax(axis=1)
    return neighbor_labels[rows, first]


def _check_k(k: int, n_train: int) -> None:
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if k > n_train:
        raise ValueError(f"k={k} exceeds training set size {n_train}")


def knn_classify(train: DataView, query: np.ndarray, mask: np.ndarray, k: int) -> int:
    """Label a single query point by majority vote among its k nearest rows."""
    _check_k(k, train.n_rows)
    query = np.asarray(query, dtype=np.float64)
    distances = _distance_matrix(train.x, query[None, :], mask)
    return int(_vote(distances, train.y, k)[0])


def error_rate(train: DataView, test: DataView, mask: np.ndarray, k: int) -> float:
    """Fraction of test rows misclassified by the masked k-NN."""
    _check_k(k, train.n_rows)
    if test.n_rows == 0:
        raise ValueError("test set is empty")
    distances = _distance_matrix(train.x, test.x, mask)
    predictions = _vote(distances, train.y, k)
    return float(np.mean(predictions != test.y))


class MaskedKnnScorer:
    """Repeated-mask error scoring over a fixed train/test pair.

    Per-feature squared-difference planes are precomputed once; each call
    sums the selected planes in ascending feature order, which keeps the
    floating-point result identical to ``error_rate``.
    """

    def __init__(self, train: DataView, test: DataView, k: int):
        _check_k(k, train.n_rows)
        if test.n_rows == 0:
            raise ValueError("test set is empty")
        diff = test.x[:, None, :] - train.x[None, :, :]
        self._planes = np.ascontiguousarray(np.moveaxis(diff * diff, 2, 0))
        self._train_y = train.y
        self._test_y = test.y
        self._k = k
        self._buffer = np.empty((test.n_rows, train.n_rows), dtype=np.float64)

    @property
    def n_features(self) -> int:
        return self._planes.shape[0]

    def error_rate(self, mask: np.ndarray) -> float:
        selected = np.flatnonzero(mask)
        if selected.size == 0:
            raise ValueError("mask selects no features")
        total = self._buffer
        np.copyto(total, self._planes[selected[0]])
        for d in selected[1:]:
            total += self._planes[d]
        np.sqrt(total, out=total)
        predictions = _vote(total, self._train_y, self._k)
        return float(np.mean(predictions != self._test_y))
