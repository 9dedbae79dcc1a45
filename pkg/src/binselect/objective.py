"""Two-term wrapper fitness: weighted classification error plus feature ratio."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .dataset import DataView
from .knn import MaskedKnnScorer, error_rate


@dataclass(frozen=True)
class FitnessParams:
    """Weights of the error and feature-ratio terms; beta is always 1 - alpha."""

    alpha: float = 0.99
    beta: float = field(init=False)

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")
        object.__setattr__(self, "beta", 1.0 - self.alpha)


@dataclass(frozen=True)
class Evaluation:
    """Outcome of scoring one feature mask."""

    fitness: float
    accuracy: float
    n_selected: int


Objective = Callable[[np.ndarray], Evaluation]


def fitness(error: float, n_selected: int, n_total: int, params: FitnessParams) -> float:
    """alpha * error + (1 - alpha) * n_selected / n_total, to be minimized."""
    if n_selected == 0:
        raise ValueError("empty subset: fitness requires at least one selected feature")
    if not 0 < n_selected <= n_total:
        raise ValueError(f"n_selected={n_selected} out of range for {n_total} features")
    if not 0.0 <= error <= 1.0:
        raise ValueError(f"error must lie in [0, 1], got {error}")
    return params.alpha * error + params.beta * (n_selected / n_total)


def evaluate(
    mask: np.ndarray, train: DataView, test: DataView, k: int, params: FitnessParams
) -> Evaluation:
    """Score one mask with a fresh masked k-NN pass."""
    mask = np.asarray(mask)
    n_selected = int(np.count_nonzero(mask))
    if n_selected == 0:
        raise ValueError("empty subset: cannot evaluate a mask selecting no features")
    err = error_rate(train, test, mask, k)
    return Evaluation(
        fitness=fitness(err, n_selected, mask.size, params),
        accuracy=1.0 - err,
        n_selected=n_selected,
    )


def make_knn_objective(
    train: DataView, test: DataView, k: int, params: FitnessParams
) -> Objective:
    """Build a reusable objective over a fixed split.

    Precomputes the scorer once so population loops avoid per-call setup;
    results are float-identical to ``evaluate``.
    """
    scorer = MaskedKnnScorer(train, test, k)
    n_total = scorer.n_features

    def objective(mask: np.ndarray) -> Evaluation:
        mask = np.asarray(mask)
        n_selected = int(np.count_nonzero(mask))
        if n_selected == 0:
            raise ValueError("empty subset: cannot evaluate a mask selecting no features")
        err = scorer.error_rate(mask)
        return Evaluation(
            fitness=fitness(err, n_selected, n_total, params),
            accuracy=1.0 - err,
            n_selected=n_selected,
        )

    return objective
