"""Complete incomplete AHP pairwise comparison matrices with DEMATEL."""

from .completion import CompletionOptions, CompletionReport, Mode, complete, from_total_relation, to_direct_relation
from .dematel import normalize, prominence, total_relation, truncated_series
from .linalg import principal_eigenpair, solve_linear, spectral_radius_estimate
from .pcm import (
    CompletePCM,
    ConsistencyReport,
    IncompletePCM,
    PriorityVector,
    connectivity,
    consistency,
    priorities,
    validate,
)

__version__ = "0.1.0"
