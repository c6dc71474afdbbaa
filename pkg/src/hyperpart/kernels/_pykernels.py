"""Pure-Python search kernels.

These mirror ``_ckernels.pyx`` function by function and are used when the
compiled module is unavailable or when ``HYPERPART_PURE=1`` is set.
"""
import sys

FOUND = 0
NONE_BELOW = 1
OVER_BUDGET = 2


class _Budget(Exception):
    pass


class TableBudget(Exception):
    """The sparse packing table grew beyond its cell budget."""


def bnb_search(n, k, eptr, pins, weights, nptr, nedges, metric, node_cons,
               caps, order, ub, canonical, budget):
    """Depth-first branch and bound over node-to-part assignments.

    Nodes are assigned in ``order``; parts are tried in increasing label.
    A branch is cut as soon as the cost of hyperedges already spanning
    several parts reaches the incumbent, or when a constraint's part
    would exceed its cap. With ``canonical`` set, a node may only open the
    next unused label, which removes label permutations.

    Returns ``(status, cost, assign, visits)``. ``status`` is FOUND when a
    partition with cost < ub exists (the first minimum in visiting order is
    reported), NONE_BELOW when none exists and OVER_BUDGET when more than
    ``budget`` partial assignments were generated.
    """
    m = len(eptr) - 1
    ecnt = [0] * (m * k)
    elam = [0] * m
    ncons = len(caps)
    ccnt = [0] * (ncons * k)
    assign = [-1] * n
    state = {"best": ub, "best_assign": None, "visits": 0}
    cutnet = metric == 0

    def rec(pos, cost, maxlab):
        if pos == n:
            state["best"] = cost
            state["best_assign"] = list(assign)
            return
        v = order[pos]
        j = node_cons[v]
        top = k - 1
        if canonical and maxlab + 1 < top:
            top = maxlab + 1
        lo, hi = nptr[v], nptr[v + 1]
        for c in range(top + 1):
            if j >= 0 and ccnt[j * k + c] >= caps[j]:
                continue
            state["visits"] += 1
            if state["visits"] > budget:
                raise _Budget
            delta = 0
            for idx in range(lo, hi):
                e = nedges[idx]
                if ecnt[e * k + c] == 0:
                    lam = elam[e]
                    if cutnet:
                        if lam == 1:
                            delta += weights[e]
                    elif lam >= 1:
                        delta += weights[e]
            if cost + delta >= state["best"]:
                continue
            for idx in range(lo, hi):
                e = nedges[idx]
                slot = e * k + c
                if ecnt[slot] == 0:
                    elam[e] += 1
                ecnt[slot] += 1
            if j >= 0:
                ccnt[j * k + c] += 1
            assign[v] = c
            rec(pos + 1, cost + delta, c if c > maxlab else maxlab)
            assign[v] = -1
            if j >= 0:
                ccnt[j * k + c] -= 1
            for idx in range(lo, hi):
                e = nedges[idx]
                slot = e * k + c
                ecnt[slot] -= 1
                if ecnt[slot] == 0:
                    elam[e] -= 1

    old = sys.getrecursionlimit()
    if old < n + 200:
        sys.setrecursionlimit(n + 200)
    try:
        rec(0, 0, -1)
    except _Budget:
        return OVER_BUDGET, -1, None, state["visits"]
    finally:
        sys.setrecursionlimit(old)
    if state["best_assign"] is None:
        return NONE_BELOW, -1, None, state["visits"]
    return FOUND, state["best"], state["best_assign"], state["visits"]


def pack_order(sizes):
    """Component order for :func:`pack_components`.

    Components touching many constraints come first, then the rest grouped
    by constraint, so a constraint is finished soon after it is first
    touched. Components in no constraint are left out.
    """
    keyed = []
    for i, comp in enumerate(sizes):
        touched = [j for j, s in enumerate(comp) if s]
        if touched:
            keyed.append((-len(touched), touched[0], i))
    keyed.sort()
    return [i for _, _, i in keyed]


def pack_components(sizes, allowed, k, caps, max_cells=10**7):
    """Decide whether components can be coloured within per-constraint caps.

    ``sizes[i]`` is a tuple with the number of nodes component ``i`` has
    in each constraint; ``allowed[i]`` is a bitmask of admissible colours.
    The table is indexed by the flattened vector of per-constraint
    per-colour counts and filled sparsely, component by component, keeping
    the first predecessor written into each cell. Once the last component
    of a constraint has been placed its counts are reset to zero, which
    merges cells that differ only in finished constraints.

    Returns the list of colours, or ``None`` when no cell survives.
    """
    ncons = len(caps)
    colors = [-1] * len(sizes)
    for i, mask in enumerate(allowed):
        if not mask:
            return None
        if not any(sizes[i]):
            colors[i] = (mask & -mask).bit_length() - 1
    order = pack_order(sizes)
    last = [-1] * ncons
    for pos, i in enumerate(order):
        for j in range(ncons):
            if sizes[i][j]:
                last[j] = pos
    closing = [[j for j in range(ncons) if last[j] == pos] for pos in range(len(order))]
    start = (0,) * (ncons * k)
    layer = {start: None}
    history = []
    cells = 1
    for pos, i in enumerate(order):
        comp, mask = sizes[i], allowed[i]
        nxt = {}
        for cell in layer:
            for c in range(k):
                if not (mask >> c) & 1:
                    continue
                new = list(cell)
                ok = True
                for j in range(ncons):
                    s = comp[j]
                    if s:
                        idx = j * k + c
                        new[idx] += s
                        if new[idx] > caps[j]:
                            ok = False
                            break
                if not ok:
                    continue
                for j in closing[pos]:
                    for c2 in range(k):
                        new[j * k + c2] = 0
                key = tuple(new)
                if key not in nxt:
                    nxt[key] = (cell, c)
        if not nxt:
            return None
        cells += len(nxt)
        if cells > max_cells:
            raise TableBudget
        history.append(nxt)
        layer = nxt
    cell = min(layer) if layer else start
    for pos in range(len(order) - 1, -1, -1):
        prev, c = history[pos][cell]
        colors[order[pos]] = c
        cell = prev
    return colors
