"""Largest Lyapunov exponent for the planar map induced by each form.

The recurrence is viewed as the planar map ``T(u, v) = (v, F(u, v))``
with ``F(u, v) = f(v, u)`` (state ``(w[n-1], w[n])``).  A unit tangent
vector in the two-dimensional complex tangent space is propagated by the
exact Jacobian and renormalized every step; the exponent is the mean of
the retained log growth factors.  Complex-linear propagation carries the
dominant exponent of the underlying four-dimensional real system because
the map is holomorphic in each argument.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .core import (
    DEFAULT_GUARDS,
    EquationForm,
    FormKind,
    Guards,
    PoleHitError,
)
from .simulate import sample_ball

Matrix2 = tuple[tuple[complex, complex], tuple[complex, complex]]

#: Tangent norms below this are capped and the tangent reset, so a
#: super-stable step cannot produce log(0).
FLOOR_NORM = 1e-300
LOG_FLOOR = math.log(FLOOR_NORM)

#: Initial tangent direction.  Chosen real so that conjugating all
#: parameters and seeds conjugates the whole computation exactly.
_TANGENT0 = (math.sqrt(0.5) + 0j, math.sqrt(0.5) + 0j)

#: Estimates whose orbit failed before this many retained samples are
#: excluded from scan intervals.
MIN_RETAINED = 100

#: Final running means closer than this decide status CONVERGED.
CONVERGENCE_TOLERANCE = 1e-3


class EstimateStatus(Enum):
    CONVERGED = "converged"
    MAX_ITERATIONS = "max_iterations"
    ORBIT_ESCAPED = "orbit_escaped"
    ORBIT_HIT_POLE = "orbit_hit_pole"


@dataclass(frozen=True)
class LyapunovEstimate:
    """One exponent estimate with its audit trail.

    ``exponent`` equals the final entry of ``convergence_trace`` (the
    running mean of retained log growth factors); ``retained`` counts the
    post-transient samples behind it.
    """

    exponent: float
    n_iterations: int
    transient_discarded: int
    convergence_trace: tuple[float, ...]
    seed_pair: tuple[complex, complex]
    status: EstimateStatus
    retained: int
    floor_hit: bool


def planar_jacobian(
    form: EquationForm,
    u: complex,
    v: complex,
    guards: Guards = DEFAULT_GUARDS,
) -> Matrix2:
    """Jacobian of T(u, v) = (v, F(u, v)) at (u, v).

    Row one is (0, 1); row two holds the partial derivatives of F with
    respect to u and v for the given form.

    Raises
    ------
    PoleHitError
        If the shared denominator is within the pole tolerance of zero.
    """
    p, q = form.p, form.q
    kind = form.kind
    if kind is FormKind.CONSTANT:
        den = 1.0 + p * v + q * u
        if abs(den) < guards.pole_tolerance:
            raise PoleHitError("denominator within pole tolerance")
        den2 = den * den
        return ((0j, 1.0 + 0j), (-q / den2, -p / den2))
    if kind is FormKind.CURRENT:
        den = 1.0 + p * v + q * u
        if abs(den) < guards.pole_tolerance:
            raise PoleHitError("denominator within pole tolerance")
        den2 = den * den
        return ((0j, 1.0 + 0j), (-q * v / den2, (1.0 + q * u) / den2))
    if kind is FormKind.LAGGED:
        den = p + q * v + u
        if abs(den) < guards.pole_tolerance:
            raise PoleHitError("denominator within pole tolerance")
        den2 = den * den
        return ((0j, 1.0 + 0j), ((p + q * v) / den2, -q * u / den2))
    fp = form.full
    assert fp is not None
    den = fp.a + fp.b * v + fp.c * u
    if abs(den) < guards.pole_tolerance:
        raise PoleHitError("denominator within pole tolerance")
    den2 = den * den
    fu = ((fp.gamma * fp.a - fp.c * fp.alpha) + (fp.gamma * fp.b - fp.c * fp.beta) * v) / den2
    fv = ((fp.beta * fp.a - fp.b * fp.alpha) + (fp.beta * fp.c - fp.b * fp.gamma) * u) / den2
    return ((0j, 1.0 + 0j), (fu, fv))


def _advancer(
    form: EquationForm,
    pole_tolerance: float,
) -> Callable[[complex, complex], Optional[tuple[complex, complex, complex]]]:
    """Per-form closure returning (next value, dF/du, dF/dv), or None at a pole.

    Shares one denominator evaluation between the orbit and the tangent
    update; the hot loop of :func:`largest_lyapunov` calls this once per
    step.
    """
    p, q = form.p, form.q
    kind = form.kind
    if kind is FormKind.CONSTANT:

        def advance(u: complex, v: complex):
            den = 1.0 + p * v + q * u
            if abs(den) < pole_tolerance:
                return None
            den2 = den * den
            return 1.0 / den, -q / den2, -p / den2

        return advance
    if kind is FormKind.CURRENT:

        def advance(u: complex, v: complex):
            den = 1.0 + p * v + q * u
            if abs(den) < pole_tolerance:
                return None
            den2 = den * den
            return v / den, -q * v / den2, (1.0 + q * u) / den2

        return advance
    if kind is FormKind.LAGGED:

        def advance(u: complex, v: complex):
            den = p + q * v + u
            if abs(den) < pole_tolerance:
                return None
            den2 = den * den
            return u / den, (p + q * v) / den2, -q * u / den2

        return advance
    fp = form.full
    assert fp is not None
    alpha, beta, gamma = fp.alpha, fp.beta, fp.gamma
    a, b, c = fp.a, fp.b, fp.c
    cu = gamma * a - c * alpha
    cuv = gamma * b - c * beta
    cv = beta * a - b * alpha
    cvu = beta * c - b * gamma

    def advance(u: complex, v: complex):
        den = a + b * v + c * u
        if abs(den) < pole_tolerance:
            return None
        den2 = den * den
        return (
            (alpha + beta * v + gamma * u) / den,
            (cu + cuv * v) / den2,
            (cv + cvu * u) / den2,
        )

    return advance


def largest_lyapunov(
    form: EquationForm,
    w0: complex,
    w_minus1: complex,
    n_steps: int = 20_000,
    transient: int = 2_000,
    guards: Guards = DEFAULT_GUARDS,
    trace_every: int = 100,
) -> LyapunovEstimate:
    """Tangent-renormalization estimate of the largest Lyapunov exponent.

    Iterates the orbit from ``(w[-1], w[0]) = (w_minus1, w0)``,
    propagates a tangent vector through the exact Jacobian with
    renormalization every step (Euclidean norm on the two complex
    components), discards the first ``transient`` log growth factors and
    averages the rest.

    Guard events do not raise; they set ``status`` and the estimate is
    formed from the samples gathered so far.
    """
    if n_steps < 1:
        raise ValueError("n_steps must be at least 1")
    if not 0 <= transient < n_steps:
        raise ValueError("transient must satisfy 0 <= transient < n_steps")
    advance = _advancer(form, guards.pole_tolerance)
    overflow = guards.overflow_threshold
    u, v = complex(w_minus1), complex(w0)
    du, dv = _TANGENT0
    logs: list[float] = []
    trace: list[float] = []
    floor_hit = False
    status: Optional[EstimateStatus] = None

    total = 0.0  # running sum of retained logs
    pre_total = 0.0  # running sum of transient logs
    for k in range(n_steps):
        res = advance(u, v)
        if res is None:
            status = EstimateStatus.ORBIT_HIT_POLE
            break
        value, fu, fv = res
        den_mag = abs(value)
        if den_mag != den_mag or den_mag > overflow:  # NaN or overflow
            status = EstimateStatus.ORBIT_ESCAPED
            break
        du, dv = dv, fu * du + fv * dv
        norm = math.hypot(abs(du), abs(dv))
        if norm < FLOOR_NORM:
            logs.append(LOG_FLOOR)
            du, dv = _TANGENT0
            floor_hit = True
            contrib = LOG_FLOOR
        else:
            contrib = math.log(norm)
            logs.append(contrib)
            du /= norm
            dv /= norm
        if len(logs) <= transient:
            pre_total += contrib
        else:
            total += contrib
        u, v = v, value
        if (k + 1) % trace_every == 0:
            retained_n = len(logs) - transient
            if retained_n > 0:
                trace.append(total / retained_n)
            else:
                trace.append(pre_total / len(logs))
    retained_n = max(0, len(logs) - transient)
    if retained_n > 0:
        exponent = total / retained_n
    elif logs:
        exponent = pre_total / len(logs)
    else:
        exponent = float("nan")
    if not trace or trace[-1] != exponent:
        trace.append(exponent)
    if status is None:
        if len(trace) >= 2 and abs(trace[-1] - trace[-2]) < CONVERGENCE_TOLERANCE:
            status = EstimateStatus.CONVERGED
        else:
            status = EstimateStatus.MAX_ITERATIONS
    return LyapunovEstimate(
        exponent=exponent,
        n_iterations=len(logs),
        transient_discarded=min(transient, len(logs)),
        convergence_trace=tuple(trace),
        seed_pair=(complex(w0), complex(w_minus1)),
        status=status,
        retained=retained_n,
        floor_hit=floor_hit,
    )


@dataclass(frozen=True)
class ScanReport:
    """Per-seed exponents over deterministic random seeds in a ball.

    Interval statistics cover included estimates only (those with at
    least :data:`MIN_RETAINED` retained samples); ``excluded`` counts
    the rest.
    """

    form: EquationForm
    seed_count: int
    n_steps: int
    transient: int
    ball_radius: float
    rng_seed: int
    estimates: tuple[LyapunovEstimate, ...]
    min_exponent: float
    max_exponent: float
    mean_exponent: float
    fraction_positive: float
    excluded: int
    any_floor: bool


def _estimate_for_seed(
    args: tuple[EquationForm, complex, complex, int, int, Guards]
) -> LyapunovEstimate:
    form, w0, w_minus1, n_steps, transient, guards = args
    return largest_lyapunov(form, w0, w_minus1, n_steps, transient, guards)


def lyapunov_scan(
    form: EquationForm,
    seed_count: int = 10,
    n_steps: int = 20_000,
    transient: int = 2_000,
    ball_radius: float = 1.0,
    rng_seed: int = 0,
    guards: Guards = DEFAULT_GUARDS,
    jobs: int = 1,
) -> ScanReport:
    """Exponent estimates over seed_count random seed pairs in a ball.

    Seed pairs (w[0], w[-1]) are drawn with ``random.Random(rng_seed)``
    before any evaluation, so results are reproducible and independent
    of ``jobs``; parallel execution preserves the draw order in the
    report.
    """
    if seed_count < 2:
        raise ValueError("seed_count must be at least 2")
    rng = random.Random(rng_seed)
    seeds = []
    for _ in range(seed_count):
        w0 = sample_ball(rng, ball_radius)
        w_minus1 = sample_ball(rng, ball_radius)
        seeds.append((w0, w_minus1))
    work = [(form, w0, wm1, n_steps, transient, guards) for w0, wm1 in seeds]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            estimates = tuple(pool.map(_estimate_for_seed, work))
    else:
        estimates = tuple(_estimate_for_seed(item) for item in work)
    included = [e for e in estimates if e.retained >= MIN_RETAINED]
    if included:
        values = [e.exponent for e in included]
        lo, hi = min(values), max(values)
        mean = sum(values) / len(values)
        positive = sum(1 for x in values if x > 0.0) / len(values)
    else:
        lo = hi = mean = positive = float("nan")
    return ScanReport(
        form=form,
        seed_count=seed_count,
        n_steps=n_steps,
        transient=transient,
        ball_radius=ball_radius,
        rng_seed=rng_seed,
        estimates=estimates,
        min_exponent=lo,
        max_exponent=hi,
        mean_exponent=mean,
        fraction_positive=positive,
        excluded=len(estimates) - len(included),
        any_floor=any(e.floor_hit for e in estimates),
    )
