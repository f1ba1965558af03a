"""Canonical equation forms and single-step evaluation.

The family under study is the second-order rational recurrence

    z[n+1] = (alpha + beta*z[n] + gamma*z[n-1]) / (a + b*z[n] + c*z[n-1])

over the complex numbers.  When the numerator has a single surviving
coefficient the recurrence collapses, after a linear change of variables,
to one of three two-parameter normal forms:

    constant numerator:  w[n+1] = 1 / (1 + p*w[n] + q*w[n-1])
    current numerator:   w[n+1] = w[n] / (1 + p*w[n] + q*w[n-1])
    lagged numerator:    w[n+1] = w[n-1] / (p + q*w[n] + w[n-1])

This module defines the parameter containers, the reduction to normal
form, and guarded one-step evaluation shared by every other module.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional


ComplexScalar = complex


class RatdiffError(Exception):
    """Base class for all errors raised by this package."""


class NotReducibleError(RatdiffError):
    """The six-parameter equation matches no normal-form pattern unambiguously."""


class DegenerateDivisorError(RatdiffError):
    """A divisor required by the matched reduction pattern is zero."""


class DegenerateFormError(RatdiffError):
    """A closed form divides by zero and no fallback result exists."""


class DegenerateParametersError(RatdiffError):
    """Parameters sit on a variety where the requested closed form is undefined."""


class NoPrimePeriodTwoError(RatdiffError):
    """Every closed-form period-two candidate was filtered as spurious."""


class DegenerateEvaluationError(RatdiffError):
    """A denominator in a derivative formula vanished at the evaluation point."""


class InsufficientSamplesError(RatdiffError):
    """The orbit is too short for the requested analysis window."""


class PoleHitError(RatdiffError):
    """The map denominator fell below the pole tolerance."""


def _require_finite(name: str, z: complex) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must be finite, got {z!r}")


class FormKind(Enum):
    """Which member of the family an :class:`EquationForm` denotes."""

    FULL = "full"
    CONSTANT = "constant"
    CURRENT = "current"
    LAGGED = "lagged"


@dataclass(frozen=True)
class FullParameters:
    """The six coefficients of the unreduced equation.

    Attributes
    ----------
    alpha, beta, gamma:
        Numerator coefficients of 1, z[n] and z[n-1] respectively.
    a, b, c:
        Denominator coefficients of 1, z[n] and z[n-1] respectively.
    """

    alpha: complex
    beta: complex
    gamma: complex
    a: complex
    b: complex
    c: complex

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma", "a", "b", "c"):
            value = complex(getattr(self, name))
            _require_finite(name, value)
            object.__setattr__(self, name, value)
        if self.b == 0 and self.c == 0:
            # A state-independent denominator makes the equation affine,
            # which is outside the scope of every result in this package.
            raise ValueError("denominator coefficients b and c must not both be zero")


@dataclass(frozen=True)
class EquationForm:
    """A concrete member of the family: either a normal form or the full equation.

    For the three normal forms only ``p`` and ``q`` are meaningful; for
    ``FormKind.FULL`` the six coefficients live in ``full``.
    """

    kind: FormKind
    p: complex = 0j
    q: complex = 0j
    full: Optional[FullParameters] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", complex(self.p))
        object.__setattr__(self, "q", complex(self.q))
        if self.kind is FormKind.FULL:
            if self.full is None:
                raise ValueError("FULL form requires FullParameters")
        else:
            _require_finite("p", self.p)
            _require_finite("q", self.q)

    @staticmethod
    def constant(p: complex, q: complex) -> "EquationForm":
        """w[n+1] = 1 / (1 + p*w[n] + q*w[n-1])"""
        return EquationForm(FormKind.CONSTANT, p, q)

    @staticmethod
    def current(p: complex, q: complex) -> "EquationForm":
        """w[n+1] = w[n] / (1 + p*w[n] + q*w[n-1])"""
        return EquationForm(FormKind.CURRENT, p, q)

    @staticmethod
    def lagged(p: complex, q: complex) -> "EquationForm":
        """w[n+1] = w[n-1] / (p + q*w[n] + w[n-1])"""
        return EquationForm(FormKind.LAGGED, p, q)

    @staticmethod
    def full_form(params: FullParameters) -> "EquationForm":
        return EquationForm(FormKind.FULL, full=params)


class GuardEvent(Enum):
    """Why a guarded evaluation refused to produce a value."""

    POLE_HIT = "pole_hit"
    OVERFLOW = "overflow"


@dataclass(frozen=True)
class Guards:
    """Numerical guards applied during iteration.

    ``pole_tolerance`` is an absolute bound on the denominator modulus;
    ``overflow_threshold`` bounds the modulus of produced values.
    """

    pole_tolerance: float = 1e-12
    overflow_threshold: float = 1e12


DEFAULT_GUARDS = Guards()


@dataclass(frozen=True)
class StepOutcome:
    """Result of one guarded map evaluation: a value or a guard event."""

    value: Optional[complex]
    error: Optional[GuardEvent] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def numerator_denominator(
    form: EquationForm, w_n: complex, w_prev: complex
) -> tuple[complex, complex]:
    """Numerator and denominator of the map at (w[n], w[n-1]), unguarded."""
    kind = form.kind
    if kind is FormKind.CONSTANT:
        return 1.0 + 0j, 1.0 + form.p * w_n + form.q * w_prev
    if kind is FormKind.CURRENT:
        return w_n, 1.0 + form.p * w_n + form.q * w_prev
    if kind is FormKind.LAGGED:
        return w_prev, form.p + form.q * w_n + w_prev
    fp = form.full
    assert fp is not None
    return (
        fp.alpha + fp.beta * w_n + fp.gamma * w_prev,
        fp.a + fp.b * w_n + fp.c * w_prev,
    )


def step(
    form: EquationForm,
    w_n: complex,
    w_prev: complex,
    guards: Guards = DEFAULT_GUARDS,
) -> StepOutcome:
    """Evaluate one step of the recurrence with pole and overflow guards.

    Parameters
    ----------
    form:
        The equation to iterate.
    w_n, w_prev:
        Current and previous state values.
    guards:
        Pole and overflow thresholds.

    Returns
    -------
    StepOutcome
        The next value, or the guard event that prevented it.
    """
    num, den = numerator_denominator(form, w_n, w_prev)
    if abs(den) < guards.pole_tolerance:
        return StepOutcome(None, GuardEvent.POLE_HIT)
    value = num / den
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        return StepOutcome(None, GuardEvent.OVERFLOW)
    if abs(value) > guards.overflow_threshold:
        return StepOutcome(None, GuardEvent.OVERFLOW)
    return StepOutcome(value)


@dataclass(frozen=True)
class Reduction:
    """Outcome of reducing a six-parameter equation to a normal form.

    ``scale`` maps normal-form orbits back to the original variable via
    ``z = scale * w``.  ``exact`` records whether that change of variables
    reproduces the original orbit identically; the current-numerator
    pattern admits an exact linear reduction only when ``beta == a`` and
    ``b == c``, and ``exact`` is False otherwise.
    """

    form: EquationForm
    scale: complex
    exact: bool


def reduce(full: FullParameters) -> Reduction:
    """Reduce the six-parameter equation to its matching normal form.

    Exactly one numerator pattern must hold, with structural zeros given
    exactly: (beta = gamma = 0) selects the constant form, (alpha =
    gamma = 0) the current form and (alpha = beta = 0) the lagged form.

    Returns
    -------
    Reduction
        The normal form, the variable scale with ``z = scale * w``, and
        whether the reduction is exact.

    Raises
    ------
    NotReducibleError
        If no pattern matches, or several match (e.g. all three
        numerator coefficients zero).
    DegenerateDivisorError
        If a divisor required by the matched pattern is zero.
    """
    alpha, beta, gamma = full.alpha, full.beta, full.gamma
    a, b, c = full.a, full.b, full.c
    patterns = []
    if beta == 0 and gamma == 0:
        patterns.append(FormKind.CONSTANT)
    if alpha == 0 and gamma == 0:
        patterns.append(FormKind.CURRENT)
    if alpha == 0 and beta == 0:
        patterns.append(FormKind.LAGGED)
    if len(patterns) != 1:
        raise NotReducibleError(
            "expected exactly one numerator pattern, found "
            f"{[k.value for k in patterns] or 'none'}"
        )
    kind = patterns[0]
    if kind is FormKind.CONSTANT:
        if a == 0:
            raise DegenerateDivisorError("constant-numerator reduction requires a != 0")
        return Reduction(
            EquationForm.constant(alpha * b / (a * a), alpha * c / (a * a)),
            alpha / a,
            True,
        )
    if kind is FormKind.CURRENT:
        if a == 0 or c == 0:
            raise DegenerateDivisorError(
                "current-numerator reduction requires a != 0 and c != 0"
            )
        # The linear substitution z = (a/c) w removes the denominator scale
        # but cannot absorb the numerator prefactor beta/a; the mapping
        # below is exact only when beta == a and b == c.
        return Reduction(
            EquationForm.current(beta / a, b / c),
            a / c,
            beta == a and b == c,
        )
    if c == 0:
        raise DegenerateDivisorError("lagged-numerator reduction requires c != 0")
    return Reduction(
        EquationForm.lagged(a / gamma, b / c),
        gamma / c,
        True,
    )


def conjugate_form(form: EquationForm) -> EquationForm:
    """The equation with every parameter conjugated."""
    if form.kind is FormKind.FULL:
        fp = form.full
        assert fp is not None
        return EquationForm.full_form(
            FullParameters(
                fp.alpha.conjugate(),
                fp.beta.conjugate(),
                fp.gamma.conjugate(),
                fp.a.conjugate(),
                fp.b.conjugate(),
                fp.c.conjugate(),
            )
        )
    return EquationForm(form.kind, form.p.conjugate(), form.q.conjugate())


def principal_sqrt(z: complex) -> complex:
    """Principal complex square root (branch cut on the negative real axis)."""
    return cmath.sqrt(z)
