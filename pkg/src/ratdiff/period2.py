"""Prime period-two cycles, the second-iterate Jacobian, and cycle stability.

A prime period-two solution is an alternating pair phi != psi with
``phi = f(psi, phi)`` and ``psi = f(phi, psi)``.  Writing the recurrence
as the planar map ``T(u, v) = (v, f(v, u))``, the pair is a fixed point
of ``T**2 = (g, h)`` and its local stability is governed by the Jacobian
of ``T**2`` at ``(phi, psi)``.

The Jacobian entries used here are the family's closed-form expressions
for each normal form (see :func:`second_iterate_jacobian`).  From them
two scalars are formed:

* ``chi``: the trace ``dg/du + dh/dv``;
* ``lam``: the determinant, via the per-form closed expression (equal
  to ``dg/du * dh/dv - dg/dv * dh/du`` identically).

Two stability verdicts are reported: the Jury-style inequality
``|chi| < 1 + |lam| < 2`` and the eigenvalue test (both eigenvalues of
the Jacobian inside the unit disk).  The eigenvalue test is canonical;
for complex chi and lam the two are not equivalent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_GUARDS,
    DegenerateEvaluationError,
    DegenerateParametersError,
    EquationForm,
    FormKind,
    Guards,
    NoPrimePeriodTwoError,
    PoleHitError,
    principal_sqrt,
    step,
)
from .equilibria import equilibria
from .stability import characteristic_roots

#: Parameter denominators smaller than this raise DegenerateParametersError.
PARAMETER_TOLERANCE = 1e-12

#: Candidates closer than this to each other or to an equilibrium are spurious.
SPURIOUS_TOLERANCE = 1e-9

Matrix2 = tuple[tuple[complex, complex], tuple[complex, complex]]


@dataclass(frozen=True)
class PeriodTwoCycle:
    """A period-two pair with its second-iterate stability data.

    ``jacobian`` holds the closed-form partials ``((dg/du, dg/dv),
    (dh/du, dh/dv))`` at (phi, psi); ``chi`` and ``lam`` are its trace
    and determinant; ``residual`` is the alternation defect measured by
    :func:`verify_cycle`.
    """

    phi: complex
    psi: complex
    jacobian: Matrix2
    chi: complex
    lam: complex
    eigenvalues: tuple[complex, complex]
    jury_criterion: bool
    eigen_criterion: bool
    residual: float


def period2_solutions(form: EquationForm) -> list[tuple[complex, complex]]:
    """Closed-form prime period-two pairs of a normal form.

    The constant and current forms each yield two candidate pairs (one
    the elementwise swap of the other); the lagged form yields the
    single pair ``(0, 1-p)``.  Candidates whose members coincide with
    each other or which sit on an equilibrium are filtered out.

    Raises
    ------
    DegenerateParametersError
        If a parameter denominator of the closed form vanishes
        (``q`` or ``q - p`` for the constant and current forms).
    NoPrimePeriodTwoError
        If every candidate was filtered.
    """
    p, q = form.p, form.q
    kind = form.kind
    candidates: list[tuple[complex, complex]]
    if kind is FormKind.CONSTANT:
        if abs(q) < PARAMETER_TOLERANCE or abs(q - p) < PARAMETER_TOLERANCE:
            raise DegenerateParametersError(
                "constant-form cycles need q != 0 and q != p"
            )
        disc = principal_sqrt(p * p + p * (-2.0 - 4.0 * q) * q + q * q + 4.0 * q**3)
        den = 2.0 * q * (q - p)
        phi = (p - q + disc) / den
        psi = (p - q - disc) / den
        candidates = [(phi, psi), (psi, phi)]
    elif kind is FormKind.CURRENT:
        if abs(q) < PARAMETER_TOLERANCE or abs(p - q) < PARAMETER_TOLERANCE:
            raise DegenerateParametersError(
                "current-form cycles need q != 0 and p != q"
            )
        disc = principal_sqrt(p * p - q * q)
        phi = 2.0 / (p - q - disc)
        psi = -1.0 / q + disc / (q * (p - q))
        candidates = [(phi, psi), (psi, phi)]
    elif kind is FormKind.LAGGED:
        candidates = [(0j, 1.0 - p)]
    else:
        raise ValueError("period-two closed forms exist for normal forms only")

    fixed = [e.value for e in equilibria(form)]
    kept: list[tuple[complex, complex]] = []
    for phi, psi in candidates:
        if abs(phi - psi) < SPURIOUS_TOLERANCE:
            continue
        on_equilibrium = any(
            abs(phi - w) < SPURIOUS_TOLERANCE and abs(psi - w) < SPURIOUS_TOLERANCE
            for w in fixed
        )
        if on_equilibrium:
            continue
        kept.append((phi, psi))
    if not kept:
        raise NoPrimePeriodTwoError("all period-two candidates were spurious")
    return kept


def second_iterate_jacobian(form: EquationForm, phi: complex, psi: complex) -> Matrix2:
    """Closed-form Jacobian of the second-iterate map at (phi, psi).

    Entries are the per-form expressions for ``d(g,h)/d(u,v)``.  For
    each form the determinant of this matrix collapses to the compact
    expression reported as ``lam`` by :func:`build_cycle`.

    Raises
    ------
    DegenerateEvaluationError
        If a denominator in the entries vanishes at (phi, psi).
    """
    p, q = form.p, form.q
    kind = form.kind
    if kind is FormKind.CONSTANT:
        d1 = 1.0 + q * phi + p * psi
        big = (1.0 + q * phi) * (1.0 + q * psi) + p * (1.0 + psi + q * psi * psi)
        if abs(d1) < PARAMETER_TOLERANCE or abs(big) < PARAMETER_TOLERANCE:
            raise DegenerateEvaluationError("second-iterate denominator vanished")
        d1sq = d1 * d1
        gu = -q / d1sq
        gv = -p / d1sq
        hu = p * q / (big * big)
        # (1 + q psi + p/d1) equals big/d1, so hv = (p**2 - q*d1**2)/big**2.
        hv = (p * p - q * d1sq) / (big * big)
        return ((gu, gv), (hu, hv))
    if kind is FormKind.CURRENT:
        d1 = 1.0 + q * phi + p * psi
        big = 1.0 + psi + p * psi + q * (phi + psi + q * phi * psi + p * psi * psi)
        if abs(d1) < PARAMETER_TOLERANCE or abs(big) < PARAMETER_TOLERANCE:
            raise DegenerateEvaluationError("second-iterate denominator vanished")
        d1sq = d1 * d1
        bigsq = big * big
        gu = -q * psi / d1sq
        gv = (1.0 + q * phi) / d1sq
        hu = -q * psi * (1.0 + q * psi) / bigsq
        hv = (1.0 + q * (phi - p * psi * psi)) / bigsq
        return ((gu, gv), (hu, hv))
    if kind is FormKind.LAGGED:
        d1 = p + phi + q * psi
        big = p + phi + q * phi + (p + q + phi) * psi + q * psi * psi
        if abs(d1) < PARAMETER_TOLERANCE or abs(big) < PARAMETER_TOLERANCE:
            raise DegenerateEvaluationError("second-iterate denominator vanished")
        d1sq = d1 * d1
        bigsq = big * big
        gu = (p + q * psi) / d1sq
        gv = -q * phi / d1sq
        hu = (1.0 + psi) * (p + q * psi) / bigsq
        hv = -phi * (p + q + phi + 2.0 * q * psi) / bigsq
        return ((gu, gv), (hu, hv))
    raise ValueError("second-iterate Jacobian is defined for normal forms only")


def _lambda_closed_form(form: EquationForm, phi: complex, psi: complex) -> complex:
    """The compact per-form determinant expression."""
    p, q = form.p, form.q
    kind = form.kind
    if kind is FormKind.CONSTANT:
        big = (1.0 + q * phi) * (1.0 + q * psi) + p * (1.0 + psi + q * psi * psi)
        return q * q / (big * big)
    if kind is FormKind.CURRENT:
        d1 = 1.0 + q * phi + p * psi
        big = 1.0 + psi + p * psi + q * (phi + psi + q * phi * psi + p * psi * psi)
        return q * q * psi * psi / (d1 * big * big)
    if kind is FormKind.LAGGED:
        d1 = p + phi + q * psi
        big = p + phi + q * phi + (p + q + phi) * psi + q * psi * psi
        return -phi * (p + q * psi) / (d1 * big * big)
    raise ValueError("lambda closed form exists for normal forms only")


def cycle_criteria(chi: complex, lam: complex) -> tuple[bool, bool]:
    """The Jury-style and eigenvalue stability verdicts from trace and determinant.

    Returns
    -------
    (jury_criterion, eigen_criterion)
        ``jury_criterion`` is ``|chi| < 1 + |lam| < 2``;
        ``eigen_criterion`` holds when both eigenvalues of a matrix with
        this trace and determinant lie strictly inside the unit disk.
    """
    jury = abs(chi) < 1.0 + abs(lam) < 2.0
    mu1, mu2 = characteristic_roots(chi, -lam)
    eigen = abs(mu1) < 1.0 and abs(mu2) < 1.0
    return jury, eigen


def verify_cycle(
    form: EquationForm,
    phi: complex,
    psi: complex,
    guards: Guards = DEFAULT_GUARDS,
) -> float:
    """Alternation defect of a candidate pair under the actual recurrence.

    Measures ``max(|f(psi, phi) - phi|, |f(phi, psi) - psi|)`` together
    with the two-step return defect of the planar second iterate started
    at (phi, psi).

    Raises
    ------
    PoleHitError
        If the orbit meets a pole while verifying.
    """
    out1 = step(form, psi, phi, guards)
    out2 = step(form, phi, psi, guards)
    if not (out1.ok and out2.ok):
        raise PoleHitError("cycle verification hit a guard")
    assert out1.value is not None and out2.value is not None
    residual = max(abs(out1.value - phi), abs(out2.value - psi))

    # Second iterate from the planar state (u, v) = (phi, psi):
    # T(phi, psi) = (psi, out1) and T(psi, out1) = (out1, f(out1, psi)).
    again = step(form, out1.value, psi, guards)
    if not again.ok:
        raise PoleHitError("cycle verification hit a guard")
    assert again.value is not None
    residual = max(residual, abs(again.value - psi))
    return residual


def build_cycle(
    form: EquationForm,
    phi: complex,
    psi: complex,
    guards: Guards = DEFAULT_GUARDS,
) -> PeriodTwoCycle:
    """Assemble the full stability record for one period-two pair."""
    jac = second_iterate_jacobian(form, phi, psi)
    chi = jac[0][0] + jac[1][1]
    lam = _lambda_closed_form(form, phi, psi)
    mu1, mu2 = characteristic_roots(chi, -lam)
    jury, eigen = cycle_criteria(chi, lam)
    residual = verify_cycle(form, phi, psi, guards)
    return PeriodTwoCycle(
        phi=phi,
        psi=psi,
        jacobian=jac,
        chi=chi,
        lam=lam,
        eigenvalues=(mu1, mu2),
        jury_criterion=jury,
        eigen_criterion=eigen,
        residual=residual,
    )


def cycle_stability(cycle: PeriodTwoCycle) -> tuple[bool, bool]:
    """(jury_criterion, eigen_criterion) for an assembled cycle."""
    return cycle_criteria(cycle.chi, cycle.lam)


def period2_cycles(
    form: EquationForm, guards: Guards = DEFAULT_GUARDS
) -> list[PeriodTwoCycle]:
    """All non-spurious period-two pairs with their stability records."""
    return [
        build_cycle(form, phi, psi, guards)
        for phi, psi in period2_solutions(form)
    ]


def sets_are_swapped(pairs: list[tuple[complex, complex]], tol: float = 1e-9) -> bool:
    """Whether two returned pairs are elementwise swaps of one another."""
    if len(pairs) != 2:
        return False
    (a1, b1), (a2, b2) = pairs
    return abs(a1 - b2) < tol and abs(b1 - a2) < tol
