"""Closed-form equilibria of the three normal forms.

An equilibrium is a value ``w`` with ``f(w, w) = w``.  Each normal form
admits an explicit solution set:

* constant numerator: the roots of ``(p+q) w**2 + w - 1 = 0``, or the
  single value 1 when ``p + q = 0``;
* current numerator: only 0;
* lagged numerator: 0 and ``(1-p) / (1+q)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import (
    DEFAULT_GUARDS,
    EquationForm,
    FormKind,
    Guards,
    principal_sqrt,
    step,
)

#: Parameters closer than this to a closed-form singularity take the
#: degenerate path (same scale as the default pole tolerance).
DEGENERACY_TOLERANCE = 1e-12


class Branch(Enum):
    """Which closed-form solution an equilibrium came from."""

    MINUS = "minus"
    PLUS = "plus"
    ZERO = "zero"
    NONZERO = "nonzero"
    UNIQUE = "unique"


@dataclass(frozen=True)
class Equilibrium:
    """A fixed point of the recurrence with its defect measured by residual.

    ``residual`` is ``|f(value, value) - value|`` recomputed through the
    guarded step; ``note`` carries degeneracy remarks.
    """

    value: complex
    branch: Branch
    residual: float
    note: Optional[str] = None


def _make(
    form: EquationForm,
    value: complex,
    branch: Branch,
    guards: Guards,
    note: Optional[str] = None,
) -> Equilibrium:
    outcome = step(form, value, value, guards)
    if outcome.ok:
        assert outcome.value is not None
        residual = abs(outcome.value - value)
    else:
        residual = float("inf")
        note = (note + "; " if note else "") + f"step guard fired: {outcome.error}"
    return Equilibrium(value, branch, residual, note)


def equilibria(
    form: EquationForm, guards: Guards = DEFAULT_GUARDS
) -> list[Equilibrium]:
    """All equilibria of a normal form, in a fixed branch order.

    The constant form returns branches (MINUS, PLUS) built with the
    principal square root, or a single UNIQUE equilibrium 1 when
    ``|p+q|`` is below :data:`DEGENERACY_TOLERANCE`.  The current form
    returns only the ZERO equilibrium.  The lagged form returns (ZERO,
    NONZERO), dropping the NONZERO branch when ``1 + q`` is degenerate.

    Raises
    ------
    ValueError
        For the FULL form, which has no closed-form equilibria here;
        reduce it first.
    """
    p, q = form.p, form.q
    kind = form.kind
    if kind is FormKind.CONSTANT:
        s = p + q
        if abs(s) < DEGENERACY_TOLERANCE:
            return [_make(form, 1.0 + 0j, Branch.UNIQUE, guards)]
        root = principal_sqrt(1.0 + 4.0 * p + 4.0 * q)
        # The PLUS quadratic-formula numerator -1 + root cancels as
        # p + q -> 0; the identity 2/(1 + root) is exact and stable
        # because the principal root keeps Re(root) >= 0.
        return [
            _make(form, (-1.0 - root) / (2.0 * s), Branch.MINUS, guards),
            _make(form, 2.0 / (1.0 + root), Branch.PLUS, guards),
        ]
    if kind is FormKind.CURRENT:
        note = None
        if abs(p + q) < DEGENERACY_TOLERANCE:
            note = "every value is fixed when q = -p; returning the zero branch only"
        return [_make(form, 0j, Branch.ZERO, guards, note)]
    if kind is FormKind.LAGGED:
        out = [_make(form, 0j, Branch.ZERO, guards)]
        if abs(1.0 + q) < DEGENERACY_TOLERANCE:
            out[0] = Equilibrium(
                out[0].value,
                out[0].branch,
                out[0].residual,
                "nonzero branch (1-p)/(1+q) undefined for q = -1",
            )
            return out
        out.append(_make(form, (1.0 - p) / (1.0 + q), Branch.NONZERO, guards))
        return out
    raise ValueError("equilibria are computed on normal forms; reduce the full form first")
