"""Building blocks: dense blocks, grids, fixed-colour blocks and constraint fillers.

The constraint fillers work for two colours. "Red" is colour 0, the
colour of the first fixed block; "blue" is colour 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..core import STRICT, Constraint, Hypergraph, as_fraction, threshold
from ..errors import ParameterError
from ._common import Builder

AT_MOST = "at-most"
AT_LEAST = "at-least"
EXACT = "exact"
_MODES = (AT_MOST, AT_LEAST, EXACT)


def _check_two_colors(k: int):
    if k != 2:
        raise ParameterError("only k = 2 is supported for this gadget")


def _check_mode(mode: str) -> str:
    mode = str(mode).strip().lower().replace("_", "-")
    if mode not in _MODES:
        raise ParameterError(f"mode must be one of {', '.join(_MODES)}")
    return mode


def block(b: int) -> Hypergraph:
    """``b`` nodes and ``b`` hyperedges, the ``i``-th omitting node ``i``."""
    if b < 2:
        raise ParameterError("a block needs at least 2 nodes")
    return Hypergraph(b, [[v for v in range(b) if v != i] for i in range(b)])


def block_is_degenerate(b: int) -> bool:
    """Size-2 blocks consist of singleton edges, which never cost anything."""
    return b == 2


def block_split_bound(b: int) -> int:
    """Lower bound on the cut cost of any non-monochromatic colouring."""
    return 0 if b == 2 else b - 1


@dataclass(frozen=True)
class Grid:
    h: Hypergraph
    ell: int
    row_edges: tuple
    col_edges: tuple
    row_outsiders: tuple
    col_outsiders: tuple

    def core(self) -> range:
        return range(self.ell * self.ell)

    @property
    def outsiders(self) -> tuple:
        return self.row_outsiders + self.col_outsiders


def add_grid(bld: Builder, ell: int, row_out: int = 0, col_out: int = 0, weight: int = 1):
    """Append an ``ell x ell`` grid with outsiders on the first rows/columns.

    Returns ``(core nodes row-major, row outsiders, column outsiders,
    row edge ids, column edge ids)``.
    """
    if ell < 1:
        raise ParameterError("grid side must be positive")
    if not (0 <= row_out <= ell and 0 <= col_out <= ell):
        raise ParameterError("at most one outsider per row and per column")
    core = bld.nodes(ell * ell)
    rows_o = bld.nodes(row_out)
    cols_o = bld.nodes(col_out)
    rows, cols = [], []
    for i in range(ell):
        pins = core[i * ell:(i + 1) * ell] + ([rows_o[i]] if i < row_out else [])
        rows.append(bld.edge(pins, weight))
    for j in range(ell):
        pins = core[j::ell] + ([cols_o[j]] if j < col_out else [])
        cols.append(bld.edge(pins, weight))
    return core, rows_o, cols_o, rows, cols


def extended_grid(ell: int, ell0: int = 0, col_outsiders: int = 0) -> Grid:
    """Grid gadget; outsider ``i`` joins the row-``i`` hyperedge.

    ``col_outsiders`` adds the column variant used to pad a grid to an
    arbitrary size.
    """
    if ell < 2:
        raise ParameterError("grid side must be at least 2")
    if not 0 <= ell0 <= ell:
        raise ParameterError("need 0 <= ell0 <= ell")
    bld = Builder()
    _, ro, co, rows, cols = add_grid(bld, ell, ell0, col_outsiders)
    return Grid(bld.hypergraph(), ell, tuple(rows), tuple(cols), tuple(ro), tuple(co))


def grid(ell: int) -> Grid:
    return extended_grid(ell, 0)


def grid_minority(g: Grid, colors) -> int:
    """Occurrences of the less frequent colour in the core."""
    red = sum(1 for v in g.core() if colors[v] == 0)
    return min(red, g.ell * g.ell - red)


# ---------------------------------------------------------------- constraint fillers

@dataclass(frozen=True)
class EnforceCounts:
    """Fixed nodes (and free slack nodes) to put next to ``S`` in one constraint."""

    size_s: int
    h: int
    eps: Fraction
    mode: str
    red: int
    blue: int
    slack: int = 0
    formula_m: int = 0

    @property
    def total(self) -> int:
        return self.size_s + self.red + self.blue + self.slack

    def predicate(self, red_in_s: int) -> bool:
        if self.mode == AT_MOST:
            return red_in_s <= self.h
        if self.mode == AT_LEAST:
            return red_in_s >= self.h
        return red_in_s == self.h

    def satisfiable(self, red_in_s: int) -> bool:
        """Whether some colouring of the slack nodes meets the constraint."""
        cap = threshold(self.total, self.eps, 2, STRICT)
        for x in range(self.slack + 1):
            red = self.red + red_in_s + x
            blue = self.total - red
            if red <= cap and blue <= cap:
                return True
        return False

    def sound(self) -> bool:
        return all(self.satisfiable(r) == self.predicate(r) for r in range(self.size_s + 1))


def _eps_positive_at_most(size_s: int, h: int, eps: Fraction):
    """Counts from the ``eps > 0`` formulas, for "at most ``h`` red"."""
    half = (1 + eps) / 2
    m = max(size_s, 1)
    while not (eps / 2 * m > h and (1 - half) * m > size_s - h):
        m += 1
    formula_m = m
    while True:
        red = math.floor(half * m) - h
        blue = m - size_s - red
        if red >= 0 and blue >= 0:
            cand = EnforceCounts(size_s, h, eps, AT_MOST, red, blue, 0, formula_m)
            if cand.sound():
                return cand
        m += 1


def enforce_set(size_s: int, h: int, eps=0, mode: str = AT_MOST, k: int = 2) -> EnforceCounts:
    """Fixed red/blue counts making a constraint on ``S`` act as a cardinality test.

    With ``eps > 0`` the smallest ``m`` meeting the two strict inequalities
    is taken first; if integer rounding still lets the all-blue side
    overflow, ``m`` is increased until the predicate is matched exactly on
    every red count (``formula_m`` keeps the starting value). With
    ``eps = 0`` "at most" and "at least" are reduced to "exactly" by adding
    free slack nodes to the constraint.
    """
    _check_two_colors(k)
    mode = _check_mode(mode)
    eps = as_fraction(eps)
    if not 0 <= h <= size_s:
        raise ParameterError("need 0 <= h <= |S|")
    if eps >= 1:
        raise ParameterError("epsilon must be below k-1 = 1")
    if eps == 0:
        if mode == EXACT:
            slack, target = 0, h
        elif mode == AT_MOST:
            slack, target = h, h
        else:
            slack, target = size_s - h, size_s
        s_all = size_s + slack
        m = 2
        while not (m // 2 > target and m // 2 > s_all - target):
            m += 2
        out = EnforceCounts(size_s, h, eps, mode, m // 2 - target, m // 2 - (s_all - target),
                            slack, m)
    else:
        if mode == EXACT:
            raise ParameterError("mode 'exact' requires epsilon = 0")
        if mode == AT_MOST:
            out = _eps_positive_at_most(size_s, h, eps)
        else:
            # at least h red  <=>  at most |S|-h blue; swap the fixed colours
            sw = _eps_positive_at_most(size_s, size_s - h, eps)
            out = EnforceCounts(size_s, h, eps, AT_LEAST, sw.blue, sw.red, 0, sw.formula_m)
    assert out.sound(), "enforce_set produced counts that do not realize the predicate"
    return out


@dataclass(frozen=True)
class VariableCounts:
    """Fixed nodes per colour for a constraint whose variable part is all red."""

    h: int
    h0: int | None
    eps: Fraction
    mode: str
    red: int
    blue: int

    def predicate(self, size: int) -> bool:
        if self.mode == AT_MOST:
            return size <= self.h
        if self.mode == AT_LEAST:
            return size >= self.h
        return size == self.h

    def satisfied(self, size: int) -> bool:
        total = self.red + self.blue + size
        cap = threshold(total, self.eps, 2, STRICT)
        return self.red + size <= cap and self.blue <= cap

    def sweep_limit(self) -> int:
        if self.mode == AT_LEAST:
            return self.h0
        return self.h + self.red + self.blue + 2

    def sound(self) -> bool:
        return all(self.satisfied(s) == self.predicate(s) for s in range(self.sweep_limit() + 1))


def enforce_variable_set(h: int, h0: int | None = None, eps=0, mode: str = EXACT,
                         k: int = 2) -> VariableCounts:
    """Fixed counts so that a constraint holds iff ``|S|`` meets the mode predicate.

    ``eps = 0`` supports "exact" only; ``eps > 0`` supports "at-most" and
    "at-least", the latter needing an upper bound ``h0`` on ``|S|``.
    """
    _check_two_colors(k)
    mode = _check_mode(mode)
    eps = as_fraction(eps)
    if h < 0:
        raise ParameterError("h must be nonnegative")
    if eps >= 1:
        raise ParameterError("epsilon must be below k-1 = 1")
    half = (1 + eps) / 2
    if eps == 0:
        if mode != EXACT:
            raise ParameterError("with epsilon = 0 only mode 'exact' is available")
        out = VariableCounts(h, h0, eps, mode, 1, h + 1)
    elif mode == EXACT:
        raise ParameterError("mode 'exact' requires epsilon = 0")
    elif mode == AT_MOST:
        m = 1
        while Fraction(m + h, 2 * m + h) > half:
            m += 1
        m1 = m
        while Fraction(m1 + 1 + h, m + m1 + 1 + h) <= half:
            m1 += 1
        out = VariableCounts(h, h0, eps, mode, m1, m)
        while not out.sound():
            m += 1
            m1 = m
            while Fraction(m1 + 1 + h, m + m1 + 1 + h) <= half:
                m1 += 1
            out = VariableCounts(h, h0, eps, mode, m1, m)
    else:
        if h0 is None or h0 < h:
            raise ParameterError("mode 'at-least' needs an upper bound h0 >= h")
        m = max(h, h0) + 1
        while True:
            m2 = m
            while not (half * h < (1 - half) * m2):
                m2 += 1
            if (1 - half) * m2 <= half * m:
                mp = 0
                while Fraction(m2, m2 + mp) > half:
                    mp += 1
                if h <= mp:
                    out = VariableCounts(h, h0, eps, mode, mp - h, m2)
                    if out.sound():
                        break
            m += 1
    assert out.sound(), "enforce_variable_set produced counts that do not realize the predicate"
    return out


# ---------------------------------------------------------------- fixed blocks

@dataclass(frozen=True)
class FixedBlocks:
    h: Hypergraph
    red: tuple
    blue: tuple
    constraint: Constraint
    core: int


def _fixed_core_ok(core: int, eps: Fraction) -> bool:
    return 2 * core > threshold(2 * core, eps, 2, STRICT)


def add_fixed_blocks(bld: Builder, m0: int, eps, core: int | None = None):
    """Two blocks of ``m0`` nodes, one covering hyperedge each.

    The first ``core`` nodes of each block go into a joint constraint, so a
    cost-0 balanced colouring must give the two blocks different colours.
    Returns ``(red block, blue block)`` node lists.
    """
    eps = as_fraction(eps)
    core = m0 if core is None else core
    if m0 < 1 or not 1 <= core <= m0:
        raise ParameterError("need 1 <= core <= m0")
    if eps >= 1:
        raise ParameterError("epsilon must be below k-1 = 1")
    if not _fixed_core_ok(core, eps):
        raise ParameterError("joint constraint does not separate the two blocks")
    red = bld.nodes(m0)
    blue = bld.nodes(m0)
    if m0 >= 2:
        bld.edge(red)
        bld.edge(blue)
    bld.constraint(red[:core] + blue[:core], eps)
    return red, blue


def fixed_color_blocks(m0: int, eps=0, k: int = 2, core: int | None = None) -> FixedBlocks:
    _check_two_colors(k)
    if m0 < 2:
        raise ParameterError("fixed blocks need m0 >= 2")
    bld = Builder()
    red, blue = add_fixed_blocks(bld, m0, eps, core)
    return FixedBlocks(bld.hypergraph(), tuple(red), tuple(blue), bld.constraints[0],
                       m0 if core is None else core)


class FixedPools:
    """Hands out fixed red and blue nodes from the two fixed blocks."""

    def __init__(self, red, blue):
        self._red = list(red)
        self._blue = list(blue)

    def take(self, red: int, blue: int):
        if red > len(self._red) or blue > len(self._blue):
            raise ParameterError("fixed pools exhausted")
        r, self._red = self._red[:red], self._red[red:]
        b, self._blue = self._blue[:blue], self._blue[blue:]
        return r + b


def plan_pools(counts) -> int:
    """Block size able to feed every filler, plus one core node."""
    return 1 + max(sum(c.red for c in counts), sum(c.blue for c in counts), 1)


def apply_enforce(bld: Builder, s_nodes, counts: EnforceCounts, pools: FixedPools):
    """Add the constraint ``S + fixed + slack`` described by ``counts``."""
    if len(s_nodes) != counts.size_s:
        raise ParameterError("set size differs from the planned filler")
    fixed = pools.take(counts.red, counts.blue)
    slack = bld.nodes(counts.slack)
    bld.constraint(list(s_nodes) + fixed + slack, counts.eps)
    bld.fillers.append((list(s_nodes), counts, slack))


def color_slack(bld: Builder, assign: list) -> None:
    """Colour the slack nodes of every filler so that its constraint holds.

    ``assign`` must already colour ``S`` and the fixed blocks (0 = red).
    Leaves slack untouched when no choice works.
    """
    for s_nodes, counts, slack in bld.fillers:
        red_in_s = sum(1 for v in s_nodes if assign[v] == 0)
        cap = threshold(counts.total, counts.eps, 2, STRICT)
        for x in range(len(slack) + 1):
            red = counts.red + red_in_s + x
            if red <= cap and counts.total - red <= cap:
                for i, v in enumerate(slack):
                    assign[v] = 0 if i < x else 1
                break
