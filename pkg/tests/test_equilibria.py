"""Tests for closed-form equilibria and their residual validation."""

from __future__ import annotations

import cmath

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ratdiff.core import EquationForm, FormKind, FullParameters, principal_sqrt
from ratdiff.equilibria import Branch, equilibria

# Degenerate constellations (p+q ~ 0, q ~ -1) also get explicit tests;
# the random lagged draws filter q ~ -1 so the nonzero branch exists.
COORDS = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)
COMPLEXES = st.builds(complex, COORDS, COORDS)


@given(p=COMPLEXES, q=COMPLEXES)
def test_constant_form_residuals(p, q) -> None:
    """Both quadratic branches satisfy the fixed-point equation.

    Near p + q = 0 one branch value grows like 1/|p+q| and evaluating
    the defining equation there cancels catastrophically, so the bound
    scales with the squared equilibrium modulus.
    """
    form = EquationForm.constant(p, q)
    for eq in equilibria(form):
        if eq.residual != float("inf"):
            assert eq.residual < 1e-9 * max(1.0, abs(eq.value)) ** 2


def test_constant_form_branches_match_quadratic() -> None:
    p, q = 0.5, 0.5j
    form = EquationForm.constant(p, q)
    eqs = equilibria(form)
    assert [eq.branch for eq in eqs] == [Branch.MINUS, Branch.PLUS]
    s = principal_sqrt(1 + 4 * p + 4 * q)
    assert eqs[0].value == pytest.approx((-1 - s) / (2 * (p + q)))
    assert eqs[1].value == pytest.approx((-1 + s) / (2 * (p + q)))


def test_constant_form_branch_identity() -> None:
    # The quadratic-formula values coincide with -2/(-1+s) and 2/(1+s).
    p, q = 1.25 - 0.5j, -0.75 + 2.0j
    form = EquationForm.constant(p, q)
    eqs = equilibria(form)
    s = principal_sqrt(1 + 4 * p + 4 * q)
    assert eqs[0].value == pytest.approx(-2 / (-1 + s))
    assert eqs[1].value == pytest.approx(2 / (1 + s))


def test_constant_form_degenerate_sum_gives_unique_equilibrium() -> None:
    form = EquationForm.constant(2.0 + 1j, -2.0 - 1j)
    eqs = equilibria(form)
    assert len(eqs) == 1
    assert eqs[0].branch is Branch.UNIQUE
    assert eqs[0].value == 1.0 + 0j
    assert eqs[0].residual == 0.0


def test_current_form_returns_only_zero() -> None:
    form = EquationForm.current(3.0, -2.0)
    eqs = equilibria(form)
    assert len(eqs) == 1
    assert eqs[0].branch is Branch.ZERO
    assert eqs[0].value == 0j
    assert eqs[0].residual == 0.0


def test_current_form_notes_equilibrium_continuum() -> None:
    # With p + q = 0 every w with 1 + p*w + q*w = 1 is fixed; the zero
    # report carries a note instead of enumerating the continuum.
    form = EquationForm.current(1.0, -1.0)
    eqs = equilibria(form)
    assert len(eqs) == 1
    assert eqs[0].note is not None


@given(p=COMPLEXES, q=COMPLEXES.filter(lambda z: abs(1 + z) > 1e-3))
def test_lagged_form_zero_and_nonzero(p, q) -> None:
    form = EquationForm.lagged(p, q)
    eqs = equilibria(form)
    branches = [eq.branch for eq in eqs]
    assert branches == [Branch.ZERO, Branch.NONZERO]
    assert eqs[1].value == pytest.approx((1 - p) / (1 + q))
    for eq in eqs:
        if eq.residual != float("inf"):
            assert eq.residual < 1e-7


def test_lagged_form_nonzero_branch_undefined_at_minus_one() -> None:
    form = EquationForm.lagged(0.5, -1.0)
    eqs = equilibria(form)
    assert [eq.branch for eq in eqs] == [Branch.ZERO]
    assert eqs[0].note is not None


def test_lagged_worked_example_value() -> None:
    form = EquationForm.lagged(1 + 0.5j, 0.1 + 1j)
    nonzero = equilibria(form)[1]
    assert cmath.isclose(
        nonzero.value, -0.22624434389140272 - 0.24886877828054299j, rel_tol=1e-12
    )


def test_full_form_is_rejected() -> None:
    full = EquationForm.full_form(FullParameters(1, 0, 0, 1, 1, 1))
    assert full.kind is FormKind.FULL
    with pytest.raises(ValueError):
        equilibria(full)
