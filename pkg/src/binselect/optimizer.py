"""Population loop of the binary sine cosine feature-subset search."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .binarize import TransferKind, s_transfer, sample_s_bits, sample_v_bits, v_transfer
from .objective import Evaluation, Objective
from .sca import ScaConfig, r1_schedule, sca_update


@dataclass
class Agent:
    """One search agent: a continuous position and the bit mask derived from it."""

    position: np.ndarray
    mask: np.ndarray
    fitness: float = math.inf
    accuracy: float = 0.0
    evaluated: bool = False


@dataclass(frozen=True)
class Destination:
    """Best solution seen so far; the population is pulled toward it."""

    position: np.ndarray
    mask: np.ndarray
    fitness: float
    accuracy: float
    found_at: int


@dataclass(frozen=True, eq=False)
class RunRecord:
    """Result of one full optimization run."""

    best_mask: np.ndarray
    best_fitness: float
    best_accuracy: float
    n_selected: int
    convergence: np.ndarray
    run_seed: int
    wall_time: float = 0.0


def repair_mask(mask: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Return the mask unchanged unless it is all-zero; then set one random bit."""
    if np.count_nonzero(mask):
        return mask
    repaired = np.zeros_like(mask)
    repaired[int(rng.integers(mask.size))] = 1
    return repaired


def initialize(dim: int, config: ScaConfig, rng: np.random.Generator) -> list[Agent]:
    """Spawn the population: positions uniform in [-1, 1], bits fair coin flips.

    Draw order is fixed: the position block, then the bit block, then any
    zero-mask repairs in agent order.
    """
    if dim < 1:
        raise ValueError(f"dimension must be at least 1, got {dim}")
    positions = rng.uniform(-1.0, 1.0, size=(config.population_size, dim))
    bits = rng.integers(0, 2, size=(config.population_size, dim), dtype=np.uint8)
    return [
        Agent(position=positions[i].copy(), mask=repair_mask(bits[i], rng))
        for i in range(config.population_size)
    ]


def _evaluate_all(agents: list[Agent], objective: Objective) -> None:
    for agent in agents:
        result = objective(agent.mask)
        agent.fitness = result.fitness
        agent.accuracy = result.accuracy
        agent.evaluated = True


def _best_index(agents: list[Agent]) -> int:
    best = 0
    for i in range(1, len(agents)):
        if agents[i].fitness < agents[best].fitness:
            best = i
    return best


def step(
    population: list[Agent],
    destination: Destination,
    t: int,
    config: ScaConfig,
    kind: TransferKind,
    objective: Objective,
    rng: np.random.Generator,
) -> tuple[list[Agent], Destination]:
    """Advance the whole population one iteration, synchronously.

    All agents move relative to the incoming destination; the destination is
    replaced afterwards only by a strictly better agent (first index on ties,
    incumbent kept on exact ties). Draw order per step: the r2, r3, and r4
    blocks, the bit-rule block, then repairs in agent order.
    """
    r1 = r1_schedule(t, config.max_iterations, config.a)
    positions = np.stack([agent.position for agent in population])
    bits = np.stack([agent.mask for agent in population])
    shape = positions.shape
    r2 = rng.uniform(0.0, 2.0 * np.pi, size=shape)
    r3 = rng.uniform(0.0, 2.0, size=shape)
    r4 = rng.random(size=shape)
    moved = sca_update(positions, destination.position, r1, r2, r3, r4)
    if kind is TransferKind.S_SHAPED:
        new_bits = sample_s_bits(s_transfer(moved), rng)
    else:
        new_bits = sample_v_bits(v_transfer(moved), bits, rng)
    new_population = [
        Agent(position=moved[i].copy(), mask=repair_mask(new_bits[i], rng))
        for i in range(len(population))
    ]
    _evaluate_all(new_population, objective)
    best = _best_index(new_population)
    if new_population[best].fitness < destination.fitness:
        champion = new_population[best]
        destination = Destination(
            position=champion.position.copy(),
            mask=champion.mask.copy(),
            fitness=champion.fitness,
            accuracy=champion.accuracy,
            found_at=t,
        )
    return new_population, destination


def optimize(
    dim: int,
    config: ScaConfig,
    kind: TransferKind,
    objective: Objective,
    run_seed: int,
) -> RunRecord:
    """Run one seeded search and return its best mask and convergence curve."""
    start = time.perf_counter()
    rng = np.random.default_rng(run_seed)
    population = initialize(dim, config, rng)
    _evaluate_all(population, objective)
    champion = population[_best_index(population)]
    destination = Destination(
        position=champion.position.copy(),
        mask=champion.mask.copy(),
        fitness=champion.fitness,
        accuracy=champion.accuracy,
        found_at=0,
    )
    convergence = np.empty(config.max_iterations, dtype=np.float64)
    for t in range(1, config.max_iterations + 1):
        population, destination = step(
            population, destination, t, config, kind, objective, rng
        )
        convergence[t - 1] = destination.fitness
    return RunRecord(
        best_mask=destination.mask.copy(),
        best_fitness=destination.fitness,
        best_accuracy=destination.accuracy,
        n_selected=int(np.count_nonzero(destination.mask)),
        convergence=convergence,
        run_seed=run_seed,
        wall_time=time.perf_counter() - start,
    )
