# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled branch-and-bound kernel.

Mirrors ``_bnb_py.bnb_exact`` line for line: same candidate order, same
pruning, same budget accounting, identical explored-node counts.  See the
pure module for the algorithm description.
"""

from libc.stdlib cimport free, malloc


cdef struct Ctx:
    int n
    int min_step
    long long budget
    long long nodes
    bint limit_hit
    int best_span          # -1 means none yet
    bint has_best
    int *dist
    int *forced            # (n+1) rows of n
    int *order
    int *best_order
    unsigned char *used
    int *cand_c            # (n+1) rows of n, per-depth scratch
    int *cand_v


cdef void _place(Ctx *s, int m, int last) noexcept:
    cdef int n = s.n
    cdef int i, j, v, w, c, fw, need, rem, base, cnt, pend
    cdef int *fm
    cdef int *fnext
    cdef int *cc
    cdef int *cv
    if m == n:
        if s.best_span < 0 or last < s.best_span:
            s.best_span = last
            s.has_best = 1
            for i in range(n):
                s.best_order[i] = s.order[i]
        return
    fm = s.forced + m * n
    cc = s.cand_c + m * n
    cv = s.cand_v + m * n
    cnt = 0
    pend = -1
    for v in range(n):
        if not s.used[v]:
            c = fm[v]
            cc[cnt] = c
            cv[cnt] = v
            cnt += 1
            if c > pend:
                pend = c
    if s.best_span >= 0 and pend >= s.best_span:
        return
    # insertion sort by (color, vertex)
    for i in range(1, cnt):
        c = cc[i]
        v = cv[i]
        j = i - 1
        while j >= 0 and (cc[j] > c or (cc[j] == c and cv[j] > v)):
            cc[j + 1] = cc[j]
            cv[j + 1] = cv[j]
            j -= 1
        cc[j + 1] = c
        cv[j + 1] = v
    rem = n - m - 1
    fnext = s.forced + (m + 1) * n
    for i in range(cnt):
        c = cc[i]
        v = cv[i]
        if s.best_span >= 0 and c + rem * s.min_step >= s.best_span:
            break
        if s.limit_hit:
            return
        if s.budget >= 0 and s.nodes >= s.budget:
            s.limit_hit = 1
            return
        s.nodes += 1
        s.used[v] = 1
        s.order[m] = v
        base = v * n
        for w in range(n):
            fw = fm[w]
            need = c + n - 1 - s.dist[base + w]
            fnext[w] = need if need > fw else fw
        _place(s, m + 1, c)
        s.used[v] = 0


def bnb_exact(dist, int n, long long budget=-1, prefix=(), int incumbent=-1):
    """Compiled twin of ``_bnb_py.bnb_exact``; same signature and semantics."""
    cdef Ctx s
    cdef int i, v, w, c, m, last, fw, need, maxd, base
    cdef int *fm
    cdef int *fnext
    cdef bint ok = 1
    s.n = n
    s.budget = budget
    s.nodes = 0
    s.limit_hit = 0
    s.best_span = incumbent
    s.has_best = 0
    s.dist = <int *> malloc(n * n * sizeof(int))
    s.forced = <int *> malloc((n + 1) * n * sizeof(int))
    s.order = <int *> malloc(n * sizeof(int))
    s.best_order = <int *> malloc(n * sizeof(int))
    s.used = <unsigned char *> malloc(n * sizeof(unsigned char))
    s.cand_c = <int *> malloc((n + 1) * n * sizeof(int))
    s.cand_v = <int *> malloc((n + 1) * n * sizeof(int))
    if (s.dist == NULL or s.forced == NULL or s.order == NULL or
            s.best_order == NULL or s.used == NULL or s.cand_c == NULL or
            s.cand_v == NULL):
        _free_ctx(&s)
        raise MemoryError()
    try:
        maxd = 0
        for i in range(n * n):
            s.dist[i] = dist[i]
            if s.dist[i] > maxd:
                maxd = s.dist[i]
        s.min_step = 1 if maxd <= n - 2 else 0
        for i in range(n):
            s.used[i] = 0
            s.forced[i] = 0
        for i in range(n, (n + 1) * n):
            s.forced[i] = 0
        m = 0
        last = 0
        for v in prefix:
            if s.budget >= 0 and s.nodes >= s.budget:
                s.limit_hit = 1
                ok = 0
                break
            s.nodes += 1
            fm = s.forced + m * n
            c = fm[v]
            s.used[v] = 1
            s.order[m] = v
            fnext = s.forced + (m + 1) * n
            base = v * n
            for w in range(n):
                fw = fm[w]
                need = c + n - 1 - s.dist[base + w]
                fnext[w] = need if need > fw else fw
            last = c
            m += 1
        if ok:
            _place(&s, m, last)
        if not s.has_best:
            return -1, None, s.nodes, bool(s.limit_hit)
        best = [s.best_order[i] for i in range(n)]
        return s.best_span, best, s.nodes, bool(s.limit_hit)
    finally:
        _free_ctx(&s)


cdef void _free_ctx(Ctx *s) noexcept:
    if s.dist != NULL:
        free(s.dist)
    if s.forced != NULL:
        free(s.forced)
    if s.order != NULL:
        free(s.order)
    if s.best_order != NULL:
        free(s.best_order)
    if s.used != NULL:
        free(s.used)
    if s.cand_c != NULL:
        free(s.cand_c)
    if s.cand_v != NULL:
        free(s.cand_v)
