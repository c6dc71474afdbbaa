"""Generators for gadgets, reductions and counterexamples.

Every generator returns an :class:`Instance` whose ``certificate`` lists the
facts the construction guarantees; the verification suites recompute them
with the exact solvers instead of trusting them.
"""
from ._common import Builder, Instance
from .blocks import (AT_LEAST, AT_MOST, EXACT, EnforceCounts, FixedBlocks, Grid, VariableCounts,
                     add_fixed_blocks, add_grid, block, block_is_degenerate, block_split_bound,
                     enforce_set, enforce_variable_set, extended_grid, fixed_color_blocks, grid,
                     grid_minority)
from .counterexamples import (equal_sum_split, has_clique, recursive_counterexample,
                              scheduling_hardness_instance, twostep_cost_formula,
                              twostep_counterexample)
from .reductions import (as_graph, coloring_reduction, has_orthogonal_pair, hyperdag_np_instance,
                         lift_partition, multiconstraint_to_ksection, ovp_reduction,
                         spes_optimum, spes_reduction, three_coloring)

__all__ = [name for name in dir() if not name.startswith("_")]
