"""Exact balanced hypergraph partitioning toolkit."""
from .core import (
    RELAXED,
    STRICT,
    BalanceSpec,
    Constraint,
    CostMetric,
    Hypergraph,
    Partition,
    canonical_labels,
    cost,
    is_balanced,
    lambda_e,
    merge_smallest_parts,
    nonempty_part_bounds,
    threshold,
    to_bisection_instance,
)
from .errors import BudgetExceeded, HyperpartError, NotMergeable, ParameterError, ParseError

__version__ = "0.1.0"
