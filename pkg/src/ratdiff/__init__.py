"""Analysis toolkit for a family of complex rational difference equations.

The family is z[n+1] = (alpha + beta*z[n] + gamma*z[n-1]) /
(a + b*z[n] + c*z[n-1]) with complex coefficients, studied through three
normal forms plus the unreduced six-coefficient equation: equilibria and
their local stability, boundedness balls, prime period-two cycles, orbit
simulation, and largest-Lyapunov-exponent chaos detection.
"""

__version__ = "0.1.0"

from .core import (
    DEFAULT_GUARDS,
    DegenerateDivisorError,
    DegenerateEvaluationError,
    DegenerateFormError,
    DegenerateParametersError,
    EquationForm,
    FormKind,
    FullParameters,
    GuardEvent,
    Guards,
    InsufficientSamplesError,
    NoPrimePeriodTwoError,
    NotReducibleError,
    PoleHitError,
    RatdiffError,
    Reduction,
    StepOutcome,
    conjugate_form,
    numerator_denominator,
    principal_sqrt,
    reduce,
    step,
)
from .equilibria import Branch, Equilibrium, equilibria
from .lyapunov import (
    EstimateStatus,
    LyapunovEstimate,
    ScanReport,
    largest_lyapunov,
    lyapunov_scan,
    planar_jacobian,
)
from .period2 import (
    PeriodTwoCycle,
    build_cycle,
    cycle_criteria,
    cycle_stability,
    period2_cycles,
    period2_solutions,
    second_iterate_jacobian,
    verify_cycle,
)
from .simulate import (
    ContainmentReport,
    Orbit,
    Termination,
    ball_containment,
    detect_period,
    orbit,
    sample_ball,
)
from .stability import (
    ConditionReport,
    Linearization,
    StabilityClass,
    boundedness_condition,
    characteristic_roots,
    clark_test,
    classify,
    linearize,
    spectral_radius,
)

__all__ = [
    "__version__",
    "Branch",
    "ConditionReport",
    "ContainmentReport",
    "DEFAULT_GUARDS",
    "DegenerateDivisorError",
    "DegenerateEvaluationError",
    "DegenerateFormError",
    "DegenerateParametersError",
    "EquationForm",
    "Equilibrium",
    "EstimateStatus",
    "FormKind",
    "FullParameters",
    "GuardEvent",
    "Guards",
    "InsufficientSamplesError",
    "Linearization",
    "LyapunovEstimate",
    "NoPrimePeriodTwoError",
    "NotReducibleError",
    "Orbit",
    "PeriodTwoCycle",
    "PoleHitError",
    "RatdiffError",
    "Reduction",
    "ScanReport",
    "StabilityClass",
    "StepOutcome",
    "Termination",
    "ball_containment",
    "boundedness_condition",
    "build_cycle",
    "characteristic_roots",
    "clark_test",
    "classify",
    "conjugate_form",
    "cycle_criteria",
    "cycle_stability",
    "detect_period",
    "equilibria",
    "largest_lyapunov",
    "linearize",
    "lyapunov_scan",
    "numerator_denominator",
    "orbit",
    "period2_cycles",
    "period2_solutions",
    "planar_jacobian",
    "principal_sqrt",
    "reduce",
    "sample_ball",
    "second_iterate_jacobian",
    "spectral_radius",
    "step",
    "verify_cycle",
]
