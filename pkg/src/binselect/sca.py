"""Continuous sine cosine position updates and the linear amplitude schedule."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ScaConfig:
    """Search-loop shape: amplitude constant, iteration budget, population size."""

    a: float = 2.0
    max_iterations: int = 300
    population_size: int = 20

    def __post_init__(self) -> None:
        if self.a <= 0.0:
            raise ValueError(f"amplitude constant a must be positive, got {self.a}")
        if self.max_iterations < 0:
            raise ValueError(f"max_iterations must be non-negative, got {self.max_iterations}")
        if self.population_size < 2:
            raise ValueError(f"population size must be at least 2, got {self.population_size}")


@dataclass(frozen=True)
class StepRandoms:
    """The three per-dimension draws consumed by one position update."""

    r2: float
    r3: float
    r4: float


def r1_schedule(t: int, max_iterations: int, a: float) -> float:
    """Linearly decaying amplitude: a at t=0, 0 at t=max_iterations."""
    if max_iterations < 1:
        raise ValueError(f"max_iterations must be at least 1, got {max_iterations}")
    if not 0 <= t <= max_iterations:
        raise ValueError(f"iteration {t} outside [0, {max_iterations}]")
    return a - t * (a / max_iterations)


def draw_step_randoms(rng: np.random.Generator) -> StepRandoms:
    """Draw r2 in [0, 2*pi), r3 in [0, 2), r4 in [0, 1)."""
    return StepRandoms(
        r2=float(rng.uniform(0.0, 2.0 * np.pi)),
        r3=float(rng.uniform(0.0, 2.0)),
        r4=float(rng.random()),
    )


def sca_update(x, destination, r1, r2, r3, r4):
    """Move toward or around the destination on a sine or cosine wave.

    The sine branch applies when r4 < 0.5, the cosine branch otherwise.
    Scalars and same-shaped arrays broadcast alike; positions are not clamped.
    """
    wave = np.where(np.asarray(r4) < 0.5, np.sin(r2), np.cos(r2))
    return x + r1 * wave * np.abs(np.asarray(r3) * destination - x)


def sca_update_dim(x: float, destination: float, r1: float, randoms: StepRandoms) -> float:
    """Single-dimension position update; dimensions never interact."""
    return float(sca_update(x, destination, r1, randoms.r2, randoms.r3, randoms.r4))
