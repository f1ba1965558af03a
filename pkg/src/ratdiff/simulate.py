"""Orbit generation with guards, empirical period detection, ball containment.

Orbits are stored as ``samples = [w[-1], w[0], w[1], ...]`` so that
``samples[k+1] = f(samples[k], samples[k-1])`` at every interior index.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .core import (
    DEFAULT_GUARDS,
    EquationForm,
    GuardEvent,
    Guards,
    InsufficientSamplesError,
    step,
)
from .stability import ConditionReport, boundedness_condition


class Termination(Enum):
    COMPLETED = "completed"
    POLE_HIT = "pole_hit"
    OVERFLOW = "overflow"


@dataclass(frozen=True)
class Orbit:
    """A finite trajectory and why it stopped.

    ``guard_step`` is the index (into ``samples``) the failed value would
    have received, or None when the orbit completed.
    """

    form: EquationForm
    samples: tuple[complex, ...]
    termination: Termination
    guard_step: Optional[int] = None


def orbit(
    form: EquationForm,
    w0: complex,
    w_minus1: complex,
    n_steps: int,
    guards: Guards = DEFAULT_GUARDS,
) -> Orbit:
    """Iterate the recurrence from (w[-1], w[0]) for up to n_steps steps."""
    if n_steps < 1:
        raise ValueError("n_steps must be at least 1")
    samples = [complex(w_minus1), complex(w0)]
    prev, cur = samples[0], samples[1]
    for _ in range(n_steps):
        outcome = step(form, cur, prev, guards)
        if not outcome.ok:
            kind = (
                Termination.POLE_HIT
                if outcome.error is GuardEvent.POLE_HIT
                else Termination.OVERFLOW
            )
            return Orbit(form, tuple(samples), kind, len(samples))
        assert outcome.value is not None
        prev, cur = cur, outcome.value
        samples.append(cur)
    return Orbit(form, tuple(samples), Termination.COMPLETED)


#: Fraction of the orbit used as the default analysis tail.
TAIL_FRACTION = 0.4

#: Periods are confirmed over a window of at least this many multiples.
WINDOW_MULTIPLE = 20


def detect_period(
    orb: Orbit, tol: float = 1e-8, max_period: int = 64
) -> Optional[int]:
    """Smallest period t <= max_period visible in the orbit tail, or None.

    A period t qualifies when ``|w[n+t] - w[n]| < tol`` for every n in a
    tail window of at least ``WINDOW_MULTIPLE * t`` comparison pairs (the
    window is the larger of that and the trailing ``TAIL_FRACTION`` of
    the orbit, so transients are skipped).

    Raises
    ------
    InsufficientSamplesError
        If the orbit did not complete, or is too short to test even
        period 1.
    """
    if max_period < 1:
        raise ValueError("max_period must be at least 1")
    if orb.termination is not Termination.COMPLETED:
        raise InsufficientSamplesError("period detection requires a completed orbit")
    samples = orb.samples
    n = len(samples)
    if n < WINDOW_MULTIPLE + 1:
        raise InsufficientSamplesError(
            f"need at least {WINDOW_MULTIPLE + 1} samples, have {n}"
        )
    for t in range(1, max_period + 1):
        window = max(int(TAIL_FRACTION * n), WINDOW_MULTIPLE * t) + t
        if window > n:
            # The orbit cannot support this or any larger period.
            break
        tail = samples[n - window :]
        if all(
            abs(tail[i + t] - tail[i]) < tol for i in range(len(tail) - t)
        ):
            return t
    return None


def sample_ball(rng: random.Random, radius: float) -> complex:
    """One draw, uniform over the closed complex disk of the given radius."""
    r = radius * math.sqrt(rng.random())
    return r * cmath.exp(2j * math.pi * rng.random())


@dataclass(frozen=True)
class ContainmentReport:
    """Empirical containment of sampled orbits in the ball of radius epsilon.

    ``escape_steps[i]`` is the sample index at which orbit i first left
    the ball, or None if it never did; ``condition`` is the sufficient
    condition evaluated for the same epsilon, for comparison.
    """

    epsilon: float
    n_seeds: int
    n_steps: int
    contained_fraction: float
    escape_steps: tuple[Optional[int], ...]
    condition: ConditionReport


def ball_containment(
    form: EquationForm,
    epsilon: float,
    n_seeds: int,
    n_steps: int,
    rng_seed: int = 0,
    guards: Guards = DEFAULT_GUARDS,
) -> ContainmentReport:
    """Sample seed pairs in the ball and report how many orbits stay inside.

    Seeds (w[0], w[-1]) are drawn uniformly from the ball of radius
    epsilon, componentwise, with a deterministic generator.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if n_seeds < 1:
        raise ValueError("n_seeds must be at least 1")
    rng = random.Random(rng_seed)
    escapes: list[Optional[int]] = []
    contained = 0
    for _ in range(n_seeds):
        w0 = sample_ball(rng, epsilon)
        w_minus1 = sample_ball(rng, epsilon)
        orb = orbit(form, w0, w_minus1, n_steps, guards)
        escape: Optional[int] = None
        for idx, value in enumerate(orb.samples):
            if abs(value) >= epsilon:
                escape = idx
                break
        if escape is None and orb.termination is not Termination.COMPLETED:
            # A guard event outside the ball counts as an escape.
            escape = orb.guard_step
        escapes.append(escape)
        if escape is None:
            contained += 1
    return ContainmentReport(
        epsilon=epsilon,
        n_seeds=n_seeds,
        n_steps=n_steps,
        contained_fraction=contained / n_seeds,
        escape_steps=tuple(escapes),
        condition=boundedness_condition(form, epsilon),
    )


def restep(orb: Orbit, guards: Guards = DEFAULT_GUARDS) -> Orbit:
    """Recompute an orbit from its own seeds (used to audit reproducibility)."""
    if len(orb.samples) < 2:
        raise InsufficientSamplesError("orbit must hold both seeds")
    return orbit(
        orb.form,
        orb.samples[1],
        orb.samples[0],
        max(1, len(orb.samples) - 2),
        guards,
    )


def final_distance(samples: Sequence[complex], target: complex) -> float:
    """Distance from the last sample to a target value."""
    return abs(samples[-1] - target)
