"""Unit and property tests for form construction, stepping, and reduction."""

from __future__ import annotations

import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratdiff.core import (
    DegenerateDivisorError,
    EquationForm,
    FormKind,
    FullParameters,
    GuardEvent,
    Guards,
    NotReducibleError,
    conjugate_form,
    numerator_denominator,
    principal_sqrt,
    reduce,
    step,
)

# Parameter magnitudes are kept moderate so denominators stay well away
# from IEEE overflow; degeneracy cases get dedicated explicit tests.
COORDS = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)
COMPLEXES = st.builds(complex, COORDS, COORDS)
NONZERO = COMPLEXES.filter(lambda z: abs(z) > 1e-3)

NORMAL_FORMS = st.sampled_from(
    [FormKind.CONSTANT, FormKind.CURRENT, FormKind.LAGGED]
)


def make_form(kind: FormKind, p: complex, q: complex) -> EquationForm:
    return EquationForm(kind, p, q)


def direct_step(form: EquationForm, w_n: complex, w_prev: complex) -> complex:
    num, den = numerator_denominator(form, w_n, w_prev)
    return num / den


@given(kind=NORMAL_FORMS, p=COMPLEXES, q=COMPLEXES, w=COMPLEXES, u=COMPLEXES)
def test_step_matches_defining_ratio(kind, p, q, w, u) -> None:
    """A successful guarded step equals the literal numerator/denominator ratio."""
    form = make_form(kind, p, q)
    outcome = step(form, w, u)
    if outcome.ok:
        assert outcome.value == direct_step(form, w, u)


def test_constant_form_step_value() -> None:
    form = EquationForm.constant(1.0, 2.0)
    outcome = step(form, 1.0, 0.5)
    assert outcome.ok
    assert outcome.value == pytest.approx(1.0 / (1.0 + 1.0 + 1.0))


def test_current_form_step_value() -> None:
    form = EquationForm.current(2.0, 1.0)
    outcome = step(form, 0.5, 0.25)
    assert outcome.ok
    assert outcome.value == pytest.approx(0.5 / (1.0 + 1.0 + 0.25))


def test_lagged_form_step_value() -> None:
    form = EquationForm.lagged(2.0, 3.0)
    outcome = step(form, 1.0, 0.5)
    assert outcome.ok
    assert outcome.value == pytest.approx(0.5 / (2.0 + 3.0 + 0.5))


def test_full_form_step_value() -> None:
    params = FullParameters(1.0, 2.0, 3.0, 4.0, 5.0, 6.0)
    form = EquationForm.full_form(params)
    outcome = step(form, 1.0, 1.0)
    assert outcome.ok
    assert outcome.value == pytest.approx((1 + 2 + 3) / (4 + 5 + 6))


def test_pole_guard_fires_on_vanishing_denominator() -> None:
    # 1 + p*w with p=1, w=-1 places the denominator exactly at zero.
    form = EquationForm.constant(1.0, 0.0)
    outcome = step(form, -1.0, 0.0)
    assert not outcome.ok
    assert outcome.error is GuardEvent.POLE_HIT


def test_pole_guard_respects_tolerance() -> None:
    form = EquationForm.constant(1.0, 0.0)
    loose = Guards(pole_tolerance=1e-2)
    outcome = step(form, -1.0 + 1e-3, 0.0, loose)
    assert not outcome.ok
    assert outcome.error is GuardEvent.POLE_HIT


def test_overflow_guard_fires_beyond_threshold() -> None:
    # step value is exactly 0.5 and the guard is strict, so a threshold
    # below it must fire and one at it must not.
    form = EquationForm.constant(1.0, 0.0)
    outcome = step(form, 1.0, 0.0, Guards(overflow_threshold=0.4))
    assert not outcome.ok
    assert outcome.error is GuardEvent.OVERFLOW
    assert step(form, 1.0, 0.0, Guards(overflow_threshold=0.5)).ok


def test_full_parameters_reject_state_free_denominator() -> None:
    with pytest.raises(ValueError, match="must not both be zero"):
        FullParameters(1.0, 1.0, 1.0, 1.0, 0.0, 0.0)


def test_full_parameters_reject_non_finite() -> None:
    with pytest.raises(ValueError):
        FullParameters(float("nan"), 0.0, 0.0, 1.0, 1.0, 1.0)


def test_form_requires_finite_parameters() -> None:
    with pytest.raises(ValueError):
        EquationForm.constant(float("inf"), 0.0)


def test_full_form_requires_coefficients() -> None:
    with pytest.raises(ValueError):
        EquationForm(FormKind.FULL)


@given(alpha=NONZERO, a=NONZERO, b=COMPLEXES, c=COMPLEXES)
def test_constant_reduction_is_exact(alpha, a, b, c) -> None:
    """The constant-numerator reduction reproduces the original orbit."""
    if b == 0 and c == 0:
        b = 1.0 + 0j
    full = FullParameters(alpha, 0.0, 0.0, a, b, c)
    red = reduce(full)
    assert red.form.kind is FormKind.CONSTANT
    assert red.exact
    z_n, z_prev = 0.3 + 0.1j, -0.2 + 0.4j
    w_n, w_prev = z_n / red.scale, z_prev / red.scale
    full_next = step(EquationForm.full_form(full), z_n, z_prev)
    reduced_next = step(red.form, w_n, w_prev)
    if full_next.ok and reduced_next.ok:
        assert full_next.value == pytest.approx(
            red.scale * reduced_next.value, rel=1e-9, abs=1e-9
        )


@given(gamma=NONZERO, a=COMPLEXES, b=COMPLEXES, c=NONZERO)
def test_lagged_reduction_is_exact(gamma, a, b, c) -> None:
    """The lagged-numerator reduction reproduces the original orbit."""
    full = FullParameters(0.0, 0.0, gamma, a, b, c)
    red = reduce(full)
    assert red.form.kind is FormKind.LAGGED
    assert red.exact
    z_n, z_prev = 0.3 + 0.1j, -0.2 + 0.4j
    w_n, w_prev = z_n / red.scale, z_prev / red.scale
    full_next = step(EquationForm.full_form(full), z_n, z_prev)
    reduced_next = step(red.form, w_n, w_prev)
    if full_next.ok and reduced_next.ok:
        assert full_next.value == pytest.approx(
            red.scale * reduced_next.value, rel=1e-9, abs=1e-9
        )


def test_current_reduction_exact_only_for_matched_coefficients() -> None:
    # The linear substitution cannot absorb the numerator prefactor, so
    # exactness requires beta == a and b == c.
    matched = reduce(FullParameters(0.0, 2.0, 0.0, 2.0, 3.0, 3.0))
    assert matched.form.kind is FormKind.CURRENT
    assert matched.exact
    unmatched = reduce(FullParameters(0.0, 5.0, 0.0, 2.0, 3.0, 3.0))
    assert not unmatched.exact


def test_current_reduction_exact_case_reproduces_orbit() -> None:
    full = FullParameters(0.0, 2.0, 0.0, 2.0, 3.0, 3.0)
    red = reduce(full)
    z_n, z_prev = 0.4 - 0.2j, 0.1 + 0.3j
    w_n, w_prev = z_n / red.scale, z_prev / red.scale
    full_next = step(EquationForm.full_form(full), z_n, z_prev)
    reduced_next = step(red.form, w_n, w_prev)
    assert full_next.ok and reduced_next.ok
    assert full_next.value == pytest.approx(red.scale * reduced_next.value)


def test_reduce_rejects_ambiguous_numerator() -> None:
    with pytest.raises(NotReducibleError):
        reduce(FullParameters(0.0, 0.0, 0.0, 1.0, 1.0, 1.0))


def test_reduce_rejects_general_numerator() -> None:
    with pytest.raises(NotReducibleError):
        reduce(FullParameters(1.0, 1.0, 1.0, 1.0, 1.0, 1.0))


def test_reduce_rejects_degenerate_divisors() -> None:
    with pytest.raises(DegenerateDivisorError):
        reduce(FullParameters(1.0, 0.0, 0.0, 0.0, 1.0, 1.0))
    with pytest.raises(DegenerateDivisorError):
        reduce(FullParameters(0.0, 1.0, 0.0, 1.0, 1.0, 0.0))
    with pytest.raises(DegenerateDivisorError):
        reduce(FullParameters(0.0, 0.0, 1.0, 1.0, 1.0, 0.0))


@settings(max_examples=200)
@given(kind=NORMAL_FORMS, p=COMPLEXES, q=COMPLEXES, w=COMPLEXES, u=COMPLEXES)
def test_step_conjugation_equivariance(kind, p, q, w, u) -> None:
    """Conjugating parameters and state conjugates the next iterate exactly."""
    form = make_form(kind, p, q)
    mirrored = conjugate_form(form)
    original = step(form, w, u)
    reflected = step(mirrored, w.conjugate(), u.conjugate())
    assert original.ok == reflected.ok
    if original.ok:
        assert reflected.value == original.value.conjugate()


def test_conjugate_form_covers_full_parameters() -> None:
    params = FullParameters(1j, 2.0, 3.0 - 1j, 4.0, 5j, 6.0)
    mirrored = conjugate_form(EquationForm.full_form(params))
    assert mirrored.full is not None
    assert mirrored.full.alpha == -1j
    assert mirrored.full.b == -5j


def test_principal_sqrt_branch() -> None:
    root = principal_sqrt(-4.0 + 0j)
    assert root == pytest.approx(2j)
    assert principal_sqrt(9.0 + 0j) == pytest.approx(3.0)
    assert cmath.isclose(principal_sqrt(2j) ** 2, 2j)
