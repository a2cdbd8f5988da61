"""Generic particle swarm machinery for minimizing a real-vector fitness
function.

The update rule is the standard inertia-weight form

    v <- w * v + c1 * r1 * (pbest - x) + c2 * r2 * (gbest - x)
    x <- x + v

with r1, r2 fresh uniform[0, 1] vectors each iteration and every velocity
component clamped to [-vmax, vmax]. Positions are intentionally left
unclamped: the path decoder consumes only the relative order of components,
so drift outside the init range is harmless.

Everything is driven by one numpy Generator owned by the SwarmState, so a
fixed seed reproduces the whole trajectory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

FitnessFn = Callable[[np.ndarray], float]

REPULSION_EPS = 1e-9


@dataclass(frozen=True)
class SwarmConfig:
    """Swarm hyperparameters. ``vmax=None`` derives the conventional
    0.5 * (init_high - init_low) clamp."""

    population: int = 20
    max_iterations: int = 300
    inertia_w: float = 0.729
    cognitive_c1: float = 1.49445
    social_c2: float = 1.49445
    vmax: float | None = None
    init_low: float = 0.0
    init_high: float = 1.0
    seed: int = 0
    repulsion_enabled: bool = False
    repulsion_strength: float = 0.1
    target_fitness: float | None = None

    def __post_init__(self):
        if self.population < 1:
            raise ValueError(f"population must be >= 1, got {self.population}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not (self.init_low < self.init_high):
            raise ValueError(
                f"init range is inverted: [{self.init_low}, {self.init_high}]"
            )
        if self.vmax is None:
            object.__setattr__(self, "vmax", 0.5 * (self.init_high - self.init_low))
        if not (self.vmax > 0):
            raise ValueError(f"vmax must be > 0, got {self.vmax}")
        for name in ("inertia_w", "cognitive_c1", "social_c2"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.repulsion_strength < 0:
            raise ValueError("repulsion_strength must be >= 0")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed!r}")
        if self.target_fitness is not None and math.isnan(self.target_fitness):
            raise ValueError("target_fitness must not be NaN")


@dataclass
class Particle:
    position: np.ndarray
    velocity: np.ndarray
    pbest_position: np.ndarray
    pbest_fitness: float


@dataclass
class SwarmState:
    particles: list[Particle]
    gbest_position: np.ndarray
    gbest_fitness: float
    iteration: int
    rng: np.random.Generator = field(repr=False)


def _checked_fitness(fitness: FitnessFn, position: np.ndarray) -> float:
    value = float(fitness(position))
    if not math.isfinite(value):
        raise ValueError(
            f"fitness function returned non-finite value {value!r}; "
            "invalid solutions must be mapped to a finite penalty"
        )
    return value


def init_swarm(config: SwarmConfig, dimension: int, fitness: FitnessFn) -> SwarmState:
    """Create a seeded swarm: positions uniform in the init range, velocities
    uniform in [-vmax, vmax], pbest at the initial position, gbest at the
    best initial pbest. Per particle the generator draws position first,
    then velocity."""
    if dimension < 1:
        raise ValueError(f"dimension must be >= 1, got {dimension}")
    rng = np.random.default_rng(config.seed)
    particles: list[Particle] = []
    gbest_position: np.ndarray | None = None
    gbest_fitness = math.inf
    for _ in range(config.population):
        position = rng.uniform(config.init_low, config.init_high, size=dimension)
        velocity = rng.uniform(-config.vmax, config.vmax, size=dimension)
        value = _checked_fitness(fitness, position)
        particles.append(Particle(position, velocity, position.copy(), value))
        if value < gbest_fitness:
            gbest_fitness = value
            gbest_position = position.copy()
    assert gbest_position is not None
    return SwarmState(particles, gbest_position, gbest_fitness, 0, rng)


def update_velocity(
    p: Particle, gbest: np.ndarray, config: SwarmConfig, rng: np.random.Generator
) -> np.ndarray:
    """Inertia-weight velocity update, clamped componentwise to vmax.

    Consumes exactly 2 * dimension uniform draws from ``rng``.
    """
    dim = p.position.shape[0]
    if p.velocity.shape[0] != dim or gbest.shape[0] != dim:
        raise ValueError(
            f"dimension mismatch: position {dim}, velocity {p.velocity.shape[0]}, "
            f"gbest {gbest.shape[0]}"
        )
    r1 = rng.random(dim)
    r2 = rng.random(dim)
    v = (
        config.inertia_w * p.velocity
        + config.cognitive_c1 * r1 * (p.pbest_position - p.position)
        + config.social_c2 * r2 * (gbest - p.position)
    )
    return np.clip(v, -config.vmax, config.vmax)


def update_position(p: Particle) -> np.ndarray:
    """x + v, componentwise. No clamping (see module docstring)."""
    return p.position + p.velocity


def apply_repulsion(
    state: SwarmState, config: SwarmConfig, rng: np.random.Generator
) -> None:
    """Push close particle pairs apart, in place.

    Pairs (i < j) closer than 0.1 * sqrt(dim) * (init_high - init_low) get a
    velocity nudge of magnitude repulsion_strength / (distance + eps) along
    their separation axis; coincident pairs separate along a random unit
    vector. Velocities are re-clamped afterward.
    """
    particles = state.particles
    if len(particles) < 2:
        return
    dim = particles[0].position.shape[0]
    threshold = 0.1 * math.sqrt(dim) * (config.init_high - config.init_low)
    for i in range(len(particles)):
        for j in range(i + 1, len(particles)):
            delta = particles[i].position - particles[j].position
            distance = float(np.linalg.norm(delta))
            if distance >= threshold:
                continue
            if distance == 0.0:
                direction = rng.standard_normal(dim)
                norm = float(np.linalg.norm(direction))
                if norm == 0.0:  # essentially impossible, but stay defined
                    direction = np.zeros(dim)
                    direction[0] = 1.0
                else:
                    direction = direction / norm
            else:
                direction = delta / distance
            magnitude = config.repulsion_strength / (distance + REPULSION_EPS)
            particles[i].velocity = particles[i].velocity + magnitude * direction
            particles[j].velocity = particles[j].velocity - magnitude * direction
    for p in particles:
        p.velocity = np.clip(p.velocity, -config.vmax, config.vmax)


def step(state: SwarmState, fitness: FitnessFn, config: SwarmConfig) -> SwarmState:
    """One iteration, in place: evaluate, refresh pbest/gbest on strict
    improvement, optionally repulse, then move. Returns the same state."""
    for p in state.particles:
        value = _checked_fitness(fitness, p.position)
        if value < p.pbest_fitness:
            p.pbest_fitness = value
            p.pbest_position = p.position.copy()
        if value < state.gbest_fitness:
            state.gbest_fitness = value
            state.gbest_position = p.position.copy()
    if config.repulsion_enabled:
        apply_repulsion(state, config, state.rng)
    for p in state.particles:
        p.velocity = update_velocity(p, state.gbest_position, config, state.rng)
        p.position = update_position(p)
    state.iteration += 1
    return state
