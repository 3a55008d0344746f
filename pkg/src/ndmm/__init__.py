"""Decision matrix scoring with indeterminacy-valued ratings.

Ratings may be plain numbers or carry an indeterminacy component (d + c*I).
Scores are weighted column sums, projected to intervals over a configured
I-range; selection is decided by interval midpoints with a k-parameterized
rule for crisp scores inside another alternative's interval.
"""

from .engine import (
    Alternative,
    Contention,
    Criterion,
    DecisionProblem,
    Diagnostic,
    EvaluationConfig,
    EvaluationResult,
    InvalidProblemError,
    RatingScheme,
    SensitivityStep,
    deneutrosophy,
    evaluate,
    k_sensitivity,
    score_classical,
    score_neutro,
    select,
    validate_problem,
)
from .problem_io import (
    ProblemDocument,
    ProblemFormatError,
    RatingSyntaxError,
    format_rating,
    parse_problem,
    parse_rating,
    serialize_problem,
)
from .values import Interval, IntervalRelation, NeutroValue, NonFiniteError

__version__ = "0.1.0"

__all__ = [
    "Alternative",
    "Contention",
    "Criterion",
    "DecisionProblem",
    "Diagnostic",
    "EvaluationConfig",
    "EvaluationResult",
    "Interval",
    "IntervalRelation",
    "InvalidProblemError",
    "NeutroValue",
    "NonFiniteError",
    "ProblemDocument",
    "ProblemFormatError",
    "RatingScheme",
    "RatingSyntaxError",
    "SensitivityStep",
    "deneutrosophy",
    "evaluate",
    "format_rating",
    "k_sensitivity",
    "parse_problem",
    "parse_rating",
    "score_classical",
    "score_neutro",
    "select",
    "serialize_problem",
    "validate_problem",
]
