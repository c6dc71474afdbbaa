# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same signatures as ``_pykernels``."""
from libc.stdlib cimport malloc, calloc, free

from ._pykernels import pack_components, FOUND, NONE_BELOW, OVER_BUDGET


cdef struct Ctx:
    int n
    int k
    int metric
    int canonical
    long long budget
    long long visits
    long long best
    int over
    int found
    int *eptr
    int *nptr
    int *nedges
    long long *weights
    int *node_cons
    int *caps
    int *order
    int *ecnt
    int *elam
    int *ccnt
    int *assign
    int *best_assign


cdef void _rec(Ctx *ctx, int pos, long long cost, int maxlab) nogil:
    cdef int v, j, top, c, idx, e, lo, hi, slot, i
    cdef long long delta
    if pos == ctx.n:
        ctx.best = cost
        ctx.found = 1
        for i in range(ctx.n):
            ctx.best_assign[i] = ctx.assign[i]
        return
    v = ctx.order[pos]
    j = ctx.node_cons[v]
    top = ctx.k - 1
    if ctx.canonical and maxlab + 1 < top:
        top = maxlab + 1
    lo = ctx.nptr[v]
    hi = ctx.nptr[v + 1]
    for c in range(top + 1):
        if j >= 0 and ctx.ccnt[j * ctx.k + c] >= ctx.caps[j]:
            continue
        ctx.visits += 1
        if ctx.visits > ctx.budget:
            ctx.over = 1
            return
        delta = 0
        for idx in range(lo, hi):
            e = ctx.nedges[idx]
            if ctx.ecnt[e * ctx.k + c] == 0:
                if ctx.metric == 0:
                    if ctx.elam[e] == 1:
                        delta += ctx.weights[e]
                elif ctx.elam[e] >= 1:
                    delta += ctx.weights[e]
        if cost + delta >= ctx.best:
            continue
        for idx in range(lo, hi):
            e = ctx.nedges[idx]
            slot = e * ctx.k + c
            if ctx.ecnt[slot] == 0:
                ctx.elam[e] += 1
            ctx.ecnt[slot] += 1
        if j >= 0:
            ctx.ccnt[j * ctx.k + c] += 1
        ctx.assign[v] = c
        _rec(ctx, pos + 1, cost + delta, c if c > maxlab else maxlab)
        ctx.assign[v] = -1
        if j >= 0:
            ctx.ccnt[j * ctx.k + c] -= 1
        for idx in range(lo, hi):
            e = ctx.nedges[idx]
            slot = e * ctx.k + c
            ctx.ecnt[slot] -= 1
            if ctx.ecnt[slot] == 0:
                ctx.elam[e] -= 1
        if ctx.over:
            return


cdef int *_ints(object seq) except NULL:
    cdef Py_ssize_t i, size = len(seq)
    cdef int *buf = <int *> malloc((size + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = seq[i]
    return buf


def bnb_search(n, k, eptr, pins, weights, nptr, nedges, metric, node_cons,
               caps, order, ub, canonical, budget):
    cdef Ctx ctx
    cdef Py_ssize_t i
    cdef int m = len(eptr) - 1
    cdef int ncons = len(caps)
    ctx.n = n
    ctx.k = k
    ctx.metric = metric
    ctx.canonical = 1 if canonical else 0
    ctx.budget = budget
    ctx.visits = 0
    ctx.best = ub
    ctx.over = 0
    ctx.found = 0
    ctx.eptr = _ints(eptr)
    ctx.nptr = _ints(nptr)
    ctx.nedges = _ints(nedges)
    ctx.node_cons = _ints(node_cons)
    ctx.caps = _ints(caps)
    ctx.order = _ints(order)
    ctx.weights = <long long *> malloc((m + 1) * sizeof(long long))
    ctx.ecnt = <int *> calloc(m * k + 1, sizeof(int))
    ctx.elam = <int *> calloc(m + 1, sizeof(int))
    ctx.ccnt = <int *> calloc(ncons * k + 1, sizeof(int))
    ctx.assign = <int *> malloc((n + 1) * sizeof(int))
    ctx.best_assign = <int *> malloc((n + 1) * sizeof(int))
    try:
        for i in range(m):
            ctx.weights[i] = weights[i]
        for i in range(n):
            ctx.assign[i] = -1
        with nogil:
            _rec(&ctx, 0, 0, -1)
        if ctx.over:
            return OVER_BUDGET, -1, None, ctx.visits
        if not ctx.found:
            return NONE_BELOW, -1, None, ctx.visits
        return FOUND, ctx.best, [ctx.best_assign[i] for i in range(n)], ctx.visits
    finally:
        free(ctx.eptr)
        free(ctx.nptr)
        free(ctx.nedges)
        free(ctx.node_cons)
        free(ctx.caps)
        free(ctx.order)
        free(ctx.weights)
        free(ctx.ecnt)
        free(ctx.elam)
        free(ctx.ccnt)
        free(ctx.assign)
        free(ctx.best_assign)
