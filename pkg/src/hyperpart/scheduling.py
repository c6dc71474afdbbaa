"""Unit-time DAG scheduling on k processors.

Makespans are found exactly. A state is the set of completed nodes,
stored as an integer bitmask. Starting from a lower bound, the search asks
"can everything finish within M steps?" for increasing M. Each question
is a depth-first search that cuts a branch once ``steps + lower bound``
exceeds M, and remembers states that already failed.

Only maximal steps are generated: when a processor could run a ready node
it does. Shifting a unit task into an idle earlier slot never breaks
precedence, so this loses no optimum.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Partition, as_fraction
from .errors import BudgetExceeded, ParameterError
from .hyperdag import Dag

DEFAULT_BUDGET = 2 * 10**7


@dataclass(frozen=True)
class Schedule:
    proc: tuple
    time: tuple

    @property
    def makespan(self) -> int:
        return max(self.time, default=0)


def validate_schedule(d: Dag, s: Schedule, k: int) -> bool:
    if len(s.proc) != d.n or len(s.time) != d.n:
        return False
    slots = set()
    for v in range(d.n):
        p, t = s.proc[v], s.time[v]
        if not 0 <= p < k or t < 1:
            return False
        if (p, t) in slots:
            return False
        slots.add((p, t))
    return all(s.time[u] < s.time[v] for u, v in d.arcs)


class _Search:
    def __init__(self, d: Dag, k: int, partition: Partition | None, budget: int):
        self.d, self.k, self.budget = d, k, budget
        self.n = d.n
        self.full = (1 << self.n) - 1
        self.pred = [0] * self.n
        for u, v in d.arcs:
            self.pred[v] |= 1 << u
        order = d.topological_order()
        succ = d.successors()
        tail = [1] * self.n
        for v in reversed(order):
            for w in succ[v]:
                tail[v] = max(tail[v], tail[w] + 1)
        self.tail = tail
        self.proc = None
        if partition is not None:
            if partition.n != self.n:
                raise ParameterError("partition and DAG have different node counts")
            if partition.k > k:
                raise ParameterError("partition uses more parts than processors")
            self.proc = partition.assign
            self.proc_mask = [0] * k
            for v, p in enumerate(partition.assign):
                self.proc_mask[p] |= 1 << v
        self.states = 0

    def lower_bound(self, done: int) -> int:
        rest = self.full & ~done
        if not rest:
            return 0
        longest = max(self.tail[v] for v in range(self.n) if rest >> v & 1)
        if self.proc is None:
            return max(longest, -(-bin(rest).count("1") // self.k))
        busiest = max(bin(rest & pm).count("1") for pm in self.proc_mask)
        return max(longest, busiest)

    def ready(self, done: int) -> list[int]:
        return [v for v in range(self.n)
                if not done >> v & 1 and self.pred[v] & ~done == 0]

    def moves(self, done: int):
        ready = self.ready(done)
        if self.proc is None:
            r = min(self.k, len(ready))
            for combo in itertools.combinations(ready, r):
                yield sum(1 << v for v in combo), combo
            return
        per = [[] for _ in range(self.k)]
        for v in ready:
            per[self.proc[v]].append(v)
        groups = [g for g in per if g]
        for combo in itertools.product(*groups):
            yield sum(1 << v for v in combo), combo

    def feasible(self, limit: int):
        """Return a list of steps finishing within ``limit``, or None."""
        failed: dict = {}
        path: list = []

        def rec(done, t):
            if done == self.full:
                return True
            if t + self.lower_bound(done) > limit:
                return False
            seen = failed.get(done)
            if seen is not None and seen <= t:
                return False
            self.states += 1
            if self.states > self.budget:
                raise BudgetExceeded(f"makespan search visited more than {self.budget} states")
            for mask, combo in self.moves(done):
                path.append(combo)
                if rec(done | mask, t + 1):
                    return True
                path.pop()
            failed[done] = t
            return False

        return list(path) if rec(0, 0) else None

    def solve(self):
        limit = self.lower_bound(0)
        while True:
            steps = self.feasible(limit)
            if steps is not None:
                return limit, steps
            limit += 1

    def to_schedule(self, steps) -> Schedule:
        proc = [0] * self.n
        time = [0] * self.n
        for t, combo in enumerate(steps, start=1):
            for slot, v in enumerate(combo):
                proc[v] = self.proc[v] if self.proc is not None else slot
                time[v] = t
        return Schedule(tuple(proc), tuple(time))


def optimal_makespan(d: Dag, k: int, budget: int = DEFAULT_BUDGET, with_schedule: bool = False):
    """Minimum makespan over all schedules on k processors."""
    if k < 1:
        raise ParameterError("k must be positive")
    search = _Search(d, k, None, budget)
    mu, steps = search.solve()
    return (mu, search.to_schedule(steps)) if with_schedule else mu


def optimal_makespan_fixed_partition(d: Dag, p: Partition, k: int | None = None,
                                     budget: int = DEFAULT_BUDGET, with_schedule: bool = False):
    """Minimum makespan when node v must run on processor ``p.assign[v]``."""
    k = p.k if k is None else k
    search = _Search(d, k, p, budget)
    mu, steps = search.solve()
    return (mu, search.to_schedule(steps)) if with_schedule else mu


def makespan_at_most(d: Dag, limit: int, k: int, p: Partition | None = None,
                     budget: int = DEFAULT_BUDGET) -> bool:
    """Decide whether a schedule of length at most ``limit`` exists."""
    return _Search(d, k, p, budget).feasible(limit) is not None


def schedule_balance_check(d: Dag, p: Partition, k: int, eps, budget: int = DEFAULT_BUDGET):
    """Return ``(feasible, mu, mu_p)`` with feasible meaning mu_p <= (1+eps) mu."""
    eps = as_fraction(eps)
    mu = optimal_makespan(d, k, budget)
    mu_p = optimal_makespan_fixed_partition(d, p, k, budget)
    return mu_p <= (1 + eps) * mu, mu, mu_p


def enumerate_schedules(d: Dag, k: int, horizon: int):
    """Every valid schedule with times in 1..horizon (tiny inputs only)."""
    slots = [(p, t) for t in range(1, horizon + 1) for p in range(k)]
    for choice in itertools.permutations(slots, d.n):
        s = Schedule(tuple(c[0] for c in choice), tuple(c[1] for c in choice))
        if validate_schedule(d, s, k):
            yield s
