"""Acceptance criteria 1-13, one suite run each.

Every criterion is exact: integer or rational results must match with zero
tolerance, and a suite passes only with zero failed checks. The only
numeric tolerances are the wall-clock limits below.

Run directly (``python3 tests/test_acceptance.py``) for the bare report,
or through pytest, which prints the same lines in its terminal summary.
"""
import sys
from fractions import Fraction

import pytest

from hyperpart import gadgets as gd
from hyperpart.hierarchy import HierTopology, count_assignments, enumerate_assignments
from hyperpart.verify import BY_CRITERION, run_suite

# criterion -> (wall-clock limit in seconds, short description)
CRITERIA = {
    1: (60, "bounded solver equals brute force"),
    2: (60, "multi-constraint DP equals brute force"),
    3: (30, "peeling recognition equals subset oracle"),
    4: (120, "grid cut cost >= sqrt(t0)"),
    5: (5, "block split cost >= b-1"),
    6: (120, "SpES reduction preserves the optimum"),
    7: (60, "OVP reduction: optimum 0 iff orthogonal pair"),
    8: (120, "3-colouring reduction: optimum 0 iff 3-colourable"),
    9: (300, "recursive bisection gap grows with n"),
    10: (300, "two-step bounds and counterexample ratio"),
    11: (60, "matching assignment equals brute force"),
    12: (120, "makespan values and 3-partition certificates"),
    13: (30, "enforce gadgets match their predicates"),
}

RESULTS = {}


def _line(num, ok, detail):
    limit, text = CRITERIA[num]
    return f"{'PASS' if ok else 'FAIL'} criterion {num:2d} ({text}): {detail}"


def run_criterion(num):
    rep = run_suite(BY_CRITERION[num])
    limit = CRITERIA[num][0]
    in_time = rep.seconds <= limit
    detail = (f"{rep.checks} checks, {rep.failures} failures, "
              f"{rep.seconds:.1f}s of {limit}s")
    RESULTS[num] = _line(num, rep.ok and in_time, detail)
    return rep, in_time


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    rep, in_time = run_criterion(num)
    assert rep.ok, rep.render()
    assert in_time, f"criterion {num} took {rep.seconds:.1f}s, limit {CRITERIA[num][0]}s"


def test_recursive_gap_values():
    from hyperpart.solvers import branch_and_bound, recursive_partitioner

    ratios = []
    for n in (24, 48):
        inst = gd.recursive_counterexample(n)
        _, steps = recursive_partitioner(inst.h, (2, 2), 0)
        rec = sum(s.cost for s in steps)
        conn = inst.certificate["connectors"]
        direct = branch_and_bound(inst.h, inst.spec, inst.metric, 4, upper_bound=conn)
        assert direct.cost == conn
        assert branch_and_bound(inst.h, inst.spec, inst.metric, 4, upper_bound=conn - 1) is None
        assert rec >= n // 12 - 1
        ratios.append(Fraction(rec, direct.cost))
    assert ratios[1] > ratios[0]


def test_twostep_counterexample_values():
    inst = gd.twostep_counterexample(HierTopology((2, 2), (4, 1)))
    cert = inst.certificate
    m, g1 = cert["m"], 4
    ratio = cert["twostep_cost"] / cert["hier_optimum"]
    c = cert["hier_optimum"] - 3 * m
    assert ratio >= Fraction(2 * g1 + 1) / (3 + Fraction(c) / m)
    assert ratio >= Fraction(g1, 2)


@pytest.mark.parametrize("b,f", [((2, 2), 3), ((2, 3), 10)])
def test_assignment_counts(b, f):
    T = HierTopology(b, (2, 1))
    assert count_assignments(T) == f == len(enumerate_assignments(T))


if __name__ == "__main__":
    failed = 0
    for num in sorted(CRITERIA):
        rep, in_time = run_criterion(num)
        failed += not (rep.ok and in_time)
        print(RESULTS[num], flush=True)
    sys.exit(1 if failed else 0)
