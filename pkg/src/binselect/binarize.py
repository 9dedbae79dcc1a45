"""Transfer functions mapping continuous coordinates to bit decisions."""

from __future__ import annotations

from enum import Enum

import numpy as np


class TransferKind(Enum):
    """Which transfer family converts positions to probabilities."""

    S_SHAPED = "s"
    V_SHAPED = "v"

    @classmethod
    def from_label(cls, label: str) -> "TransferKind":
        try:
            return cls(label.strip().lower())
        except ValueError:
            raise ValueError(f"unknown transfer kind {label!r}; expected 's' or 'v'") from None


def s_transfer(x):
    """Logistic sigmoid 1 / (1 + exp(-x)), overflow-safe, output in [0, 1]."""
    scalar_input = np.ndim(x) == 0
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    out = np.empty_like(arr)
    positive = arr >= 0.0
    # evaluate exp on the non-positive side only so huge |x| cannot overflow
    with np.errstate(under="ignore"):
        out[positive] = 1.0 / (1.0 + np.exp(-arr[positive]))
        e = np.exp(arr[~positive])
        out[~positive] = e / (1.0 + e)
    return float(out[0]) if scalar_input else out


def v_transfer(x):
    """|2/pi * arctan(pi/2 * x)|, output in [0, 1]."""
    scalar_input = np.ndim(x) == 0
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    # the pre-scaling may overflow to inf near the float ceiling; arctan of
    # inf is the correct limit, so silence that spurious warning only
    with np.errstate(over="ignore"):
        out = np.abs((2.0 / np.pi) * np.arctan((np.pi / 2.0) * arr))
    out = np.minimum(out, 1.0)
    return float(out[0]) if scalar_input else out


def _check_probability(prob: float, name: str = "probability") -> None:
    if not 0.0 <= prob <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {prob}")


def apply_s_rule(prob: float, rng: np.random.Generator) -> int:
    """Set the bit to 1 with the given probability, ignoring its old value."""
    _check_probability(prob)
    return 1 if rng.random() <= prob else 0


def apply_v_rule(prob: float, current_bit: int, rng: np.random.Generator) -> int:
    """Flip the current bit with the given probability, otherwise keep it."""
    _check_probability(prob)
    if current_bit not in (0, 1):
        raise ValueError(f"current bit must be 0 or 1, got {current_bit}")
    return 1 - current_bit if rng.random() <= prob else current_bit


def sample_s_bits(probs: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Vectorized form of the set-bit rule; one draw per entry."""
    draws = rng.random(probs.shape)
    return (draws <= probs).astype(np.uint8)


def sample_v_bits(probs: np.ndarray, bits: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Vectorized form of the flip-bit rule; one draw per entry."""
    draws = rng.random(probs.shape)
    return np.where(draws <= probs, 1 - bits, bits).astype(np.uint8)
