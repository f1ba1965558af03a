"""Linearization, Clark's condition, root classification and boundedness tests.

About an equilibrium ``w`` the recurrence linearizes to

    e[n+1] = a0 * e[n] + a1 * e[n-1]

whose characteristic polynomial is ``x**2 - a0*x - a1``.  Clark's
sufficient condition for local asymptotic stability is
``|a0| + |a1| < 1``; the root moduli give the full classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import (
    DegenerateFormError,
    EquationForm,
    FormKind,
    principal_sqrt,
)
from .equilibria import Branch, Equilibrium

#: Width of the modulus band around 1 treated as non-hyperbolic.
DEFAULT_CLASSIFY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Linearization:
    """Coefficients and roots of the characteristic polynomial x**2 - a0*x - a1."""

    a0: complex
    a1: complex
    roots: tuple[complex, complex]
    clark_sum: float


class StabilityClass(Enum):
    LOCALLY_ASYMPTOTICALLY_STABLE = "locally_asymptotically_stable"
    UNSTABLE = "unstable"
    REPELLER = "repeller"
    NON_HYPERBOLIC = "non_hyperbolic"
    SADDLE = "saddle"

    @property
    def is_unstable(self) -> bool:
        return self in (
            StabilityClass.UNSTABLE,
            StabilityClass.REPELLER,
            StabilityClass.SADDLE,
        )


def characteristic_roots(a0: complex, a1: complex) -> tuple[complex, complex]:
    """Roots of x**2 - a0*x - a1, larger modulus first."""
    disc = principal_sqrt(a0 * a0 + 4.0 * a1)
    r1 = (a0 + disc) / 2.0
    r2 = (a0 - disc) / 2.0
    if abs(r2) > abs(r1):
        r1, r2 = r2, r1
    return r1, r2


def _build(a0: complex, a1: complex) -> Linearization:
    return Linearization(a0, a1, characteristic_roots(a0, a1), abs(a0) + abs(a1))


def linearize(form: EquationForm, eq: Equilibrium) -> Linearization:
    """Characteristic data of the linearization at a computed equilibrium.

    The coefficients are the closed forms attached to each branch:

    * constant form, MINUS/PLUS branches: ``a0 = -4p/(-1 +/- s)**2`` and
      ``a1 = -4q/(-1 +/- s)**2`` with ``s = sqrt(1+4p+4q)``; for the
      UNIQUE branch the equivalent point form ``a0 = -p*w**2``,
      ``a1 = -q*w**2`` with ``w = 1``.
    * current form, zero branch: ``a0 = 1, a1 = 0``.
    * lagged form, zero branch: ``a0 = 1/p, a1 = 0``.
    * lagged form, nonzero branch: ``a0 = (1+p*q)/(1+q)``,
      ``a1 = (p-1)/(1+q)``.  This pair follows the family's closed-form
      convention; it does not coincide with the point derivatives of the
      map there (``lyapunov.planar_jacobian`` supplies tangent-exact
      partials when those are needed).

    Raises
    ------
    DegenerateFormError
        When the closed form divides by zero (e.g. lagged form at the
        origin with ``p = 0``).
    """
    p, q = form.p, form.q
    kind = form.kind
    if kind is FormKind.CONSTANT:
        if eq.branch is Branch.UNIQUE:
            w = eq.value
            return _build(-p * w * w, -q * w * w)
        s = principal_sqrt(1.0 + 4.0 * p + 4.0 * q)
        base = (-1.0 + s) if eq.branch is Branch.MINUS else (1.0 + s)
        d = base * base
        if d == 0:
            raise DegenerateFormError("characteristic denominator vanished")
        return _build(-4.0 * p / d, -4.0 * q / d)
    if kind is FormKind.CURRENT:
        if eq.branch is Branch.ZERO:
            return _build(1.0 + 0j, 0j)
        raise DegenerateFormError(f"current form has no branch {eq.branch}")
    if kind is FormKind.LAGGED:
        if eq.branch is Branch.ZERO:
            if p == 0:
                raise DegenerateFormError("lagged form at 0 requires p != 0")
            return _build(1.0 / p, 0j)
        if eq.branch is Branch.NONZERO:
            if 1.0 + q == 0:
                raise DegenerateFormError("nonzero branch requires q != -1")
            return _build((1.0 + p * q) / (1.0 + q), (p - 1.0) / (1.0 + q))
        raise DegenerateFormError(f"lagged form has no branch {eq.branch}")
    raise ValueError("linearize operates on normal forms")


def clark_test(lin: Linearization) -> bool:
    """Clark's sufficient condition for local asymptotic stability."""
    return lin.clark_sum < 1.0


def classify(
    lin: Linearization, tol: float = DEFAULT_CLASSIFY_TOLERANCE
) -> StabilityClass:
    """Classification by root moduli with a non-hyperbolicity band of width tol.

    Any root with modulus within ``tol`` of 1 makes the equilibrium
    NON_HYPERBOLIC; otherwise both inside the unit circle is stable,
    both outside is a repeller, and one on each side is a saddle.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m1 = abs(lin.roots[0])
    m2 = abs(lin.roots[1])
    if abs(m1 - 1.0) <= tol or abs(m2 - 1.0) <= tol:
        return StabilityClass.NON_HYPERBOLIC
    if m1 < 1.0 and m2 < 1.0:
        return StabilityClass.LOCALLY_ASYMPTOTICALLY_STABLE
    if m1 > 1.0 and m2 > 1.0:
        return StabilityClass.REPELLER
    return StabilityClass.SADDLE


@dataclass(frozen=True)
class ConditionReport:
    """A sufficient boundedness condition evaluated for one form and radius.

    ``margin`` is positive by the amount the inequality holds and
    negative by the amount it fails.
    """

    kind: FormKind
    epsilon: float
    holds: bool
    margin: float
    note: Optional[str] = None


def boundedness_condition(form: EquationForm, epsilon: float) -> ConditionReport:
    """Sufficient condition keeping orbits in the open ball of radius epsilon.

    * constant form: ``|p| >= 1 + |q|`` (independent of epsilon);
    * current form: ``|p| >= |q| + 1/epsilon``;
    * lagged form: ``|p| > 1`` and ``epsilon < (|p| - 1) / (|q| + 1)``.

    The lagged-form condition needs ``|p| > 1`` for a positive bound on
    epsilon; the report notes this strengthened prerequisite.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    ap, aq = abs(form.p), abs(form.q)
    kind = form.kind
    if kind is FormKind.CONSTANT:
        margin = ap - (1.0 + aq)
        return ConditionReport(kind, epsilon, margin >= 0.0, margin)
    if kind is FormKind.CURRENT:
        margin = ap - aq - 1.0 / epsilon
        return ConditionReport(kind, epsilon, margin >= 0.0, margin)
    if kind is FormKind.LAGGED:
        bound = (ap - 1.0) / (aq + 1.0)
        margin = min(ap - 1.0, bound - epsilon)
        return ConditionReport(
            kind,
            epsilon,
            ap > 1.0 and epsilon < bound,
            margin,
            "requires |p| > 1 so the epsilon bound is positive",
        )
    raise ValueError("boundedness conditions are stated for normal forms")


def spectral_radius(lin: Linearization) -> float:
    """Largest root modulus of the linearization."""
    return max(abs(lin.roots[0]), abs(lin.roots[1]))


def root_residual(lin: Linearization) -> float:
    """Largest relative defect |r**2 - a0*r - a1| over both roots."""
    worst = 0.0
    for r in lin.roots:
        scale = max(1.0, abs(r) ** 2)
        worst = max(worst, abs(r * r - lin.a0 * r - lin.a1) / scale)
    return worst
