"""Event-by-event local hidden-variable simulator for singlet statistics.

The package has three layers.  model solves detector-pattern parameters for
a target (efficiency, visibility) point and evaluates the measurement
function itself; analytic provides the closed-form statistics, feasibility
frontiers, and Bell/CHSH helpers those patterns reproduce; montecarlo,
quadrature, and experiments sample, integrate, and orchestrate comparisons
between the two.  The cli module exposes all of it as the singlet-lhv
command.
"""

__version__ = "0.1.0"

from .analytic import (
    BELL_CRITICAL_EFFICIENCY,
    CHSH_CRITICAL_EFFICIENCY,
    FULL_EFFICIENCY_MAX_VISIBILITY,
    FULL_VISIBILITY_MAX_EFFICIENCY,
    STANDARD_CHSH_ANGLES,
    ChshAngles,
    ProbQuad,
    RegionVerdict,
    bell_generalized_slack,
    chsh_bound,
    chsh_value,
    classify_region,
    correlation,
    line_g,
    marginal_prob,
    max_visibility,
    nonideal_probs,
    qm_probs,
    reduce_theta,
)
from .errors import (
    DegeneratePoint,
    DomainError,
    EmptyTally,
    InfeasibleParameters,
    InvalidConfig,
    SingletLhvError,
)
from .experiments import (
    CheckResult,
    ChshReport,
    ChshSetting,
    SweepGate,
    SweepRow,
    VerifyReport,
    chsh_experiment,
    region_scan,
    sweep_gate,
    theta_sweep,
    verify_suite,
)
from .model import (
    DetectorSide,
    HiddenVariable,
    ModelParams,
    Outcome,
    PatternKind,
    boundary,
    is_feasible,
    measure,
    measure_many,
    solve_params,
    unsymmetrized_marginals,
)
from .montecarlo import (
    Estimates,
    IndependenceReport,
    RunConfig,
    Tally,
    derive_seed,
    estimate,
    independence_check,
    run,
    sample_lambda,
    substream,
    tally_outcomes,
)
from .quadrature import PatternIntegral, outcome_probabilities

__all__ = [
    "__version__",
    "BELL_CRITICAL_EFFICIENCY",
    "CHSH_CRITICAL_EFFICIENCY",
    "FULL_EFFICIENCY_MAX_VISIBILITY",
    "FULL_VISIBILITY_MAX_EFFICIENCY",
    "STANDARD_CHSH_ANGLES",
    "ChshAngles",
    "CheckResult",
    "ChshReport",
    "ChshSetting",
    "DegeneratePoint",
    "DetectorSide",
    "DomainError",
    "EmptyTally",
    "Estimates",
    "HiddenVariable",
    "IndependenceReport",
    "InfeasibleParameters",
    "InvalidConfig",
    "ModelParams",
    "Outcome",
    "PatternIntegral",
    "PatternKind",
    "ProbQuad",
    "RegionVerdict",
    "RunConfig",
    "SingletLhvError",
    "SweepGate",
    "SweepRow",
    "Tally",
    "VerifyReport",
    "bell_generalized_slack",
    "boundary",
    "chsh_bound",
    "chsh_experiment",
    "chsh_value",
    "classify_region",
    "correlation",
    "derive_seed",
    "estimate",
    "independence_check",
    "is_feasible",
    "line_g",
    "marginal_prob",
    "max_visibility",
    "measure",
    "measure_many",
    "nonideal_probs",
    "outcome_probabilities",
    "qm_probs",
    "reduce_theta",
    "region_scan",
    "run",
    "sample_lambda",
    "solve_params",
    "substream",
    "sweep_gate",
    "tally_outcomes",
    "theta_sweep",
    "unsymmetrized_marginals",
    "verify_suite",
]
