# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled computational kernels.

Same contract as `pmspace._kernels_py`, which is the readable reference:
plain float sequences in, lists/tuples of floats out, and bit-identical
results. Every floating-point operation below mirrors the Python kernel's
order exactly (and the build uses plain -O2, no fast-math), so the two
backends can be compared with == in tests. Change the two files together.

t-norm ids: 0 = minimum, 1 = product, 2 = lukasiewicz.
"""

from libc.math cimport INFINITY
from libc.stdlib cimport free, malloc, qsort


# --- scalar t-norms -----------------------------------------------------------


cdef inline double _tnorm(int op, double x, double y) noexcept nogil:
    cdef double s
    if op == 0:
        return x if x <= y else y
    if op == 1:
        return x * y
    if x == 1.0:
        return y
    if y == 1.0:
        return x
    s = x + y - 1.0
    return s if s > 0.0 else 0.0


cdef inline double _tconorm(int op, double x, double y) noexcept nogil:
    if x == 0.0:
        return y
    if y == 0.0:
        return x
    if x == 1.0 or y == 1.0:
        return 1.0
    return 1.0 - _tnorm(op, 1.0 - x, 1.0 - y)


def tnorm(int op, double x, double y):
    return _tnorm(op, x, y)


def tconorm(int op, double x, double y):
    return _tconorm(op, x, y)


# --- array plumbing -----------------------------------------------------------


cdef double* _copy_seq(object seq, Py_ssize_t n) except NULL:
    cdef double* a = <double*> malloc((n if n > 0 else 1) * sizeof(double))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        a[i] = <double> seq[i]
    return a


cdef Py_ssize_t _bisect_left(double* a, Py_ssize_t n, double t) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) // 2
        if a[mid] < t:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef Py_ssize_t _bisect_right(double* a, Py_ssize_t n, double t) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) // 2
        if t < a[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo


cdef inline double _eval_left(double* locs, double* levels, Py_ssize_t n, double t) noexcept nogil:
    cdef Py_ssize_t i = _bisect_left(locs, n, t)
    return levels[i - 1] if i > 0 else 0.0


cdef inline double _eval_right(double* locs, double* levels, Py_ssize_t n, double t) noexcept nogil:
    cdef Py_ssize_t i = _bisect_right(locs, n, t)
    return levels[i - 1] if i > 0 else 0.0


def eval_left(locs, levels, double t):
    cdef Py_ssize_t n = len(locs)
    cdef double* al = _copy_seq(locs, n)
    cdef double* av = NULL
    cdef double out
    try:
        av = _copy_seq(levels, n)
        out = _eval_left(al, av, n, t)
    finally:
        free(al)
        free(av)
    return out


def eval_right(locs, levels, double t):
    cdef Py_ssize_t n = len(locs)
    cdef double* al = _copy_seq(locs, n)
    cdef double* av = NULL
    cdef double out
    try:
        av = _copy_seq(levels, n)
        out = _eval_right(al, av, n, t)
    finally:
        free(al)
        free(av)
    return out


# --- pointwise order ----------------------------------------------------------


def leq(lf, vf, lg, vg):
    cdef Py_ssize_t n = len(lf), m = len(lg), i
    cdef double* alf = NULL
    cdef double* avf = NULL
    cdef double* alg = NULL
    cdef double* avg = NULL
    cdef bint out = True
    cdef double c
    try:
        alf = _copy_seq(lf, n)
        avf = _copy_seq(vf, n)
        alg = _copy_seq(lg, m)
        avg = _copy_seq(vg, m)
        for i in range(n):
            c = alf[i]
            if _eval_right(alf, avf, n, c) > _eval_right(alg, avg, m, c):
                out = False
                break
        if out:
            for i in range(m):
                c = alg[i]
                if _eval_right(alf, avf, n, c) > _eval_right(alg, avg, m, c):
                    out = False
                    break
    finally:
        free(alf)
        free(avf)
        free(alg)
        free(avg)
    return out


# --- modified Levy admissibility and bisection ---------------------------------


cdef bint _half_adm(double* lf, double* vf, Py_ssize_t n,
                    double* lg, double* vg, Py_ssize_t m, double h) noexcept nogil:
    # Pieces of t -> G(t) - F(t+h) open at 0, at G's locations, and at F's
    # locations shifted by -h; the F side of the shifted candidates is read
    # by index so (a - h) + h is never formed.
    cdef double upper = 1.0 / h
    cdef Py_ssize_t i
    cdef double b, p
    if _eval_right(lg, vg, m, 0.0) > _eval_right(lf, vf, n, h) + h:
        return False
    for i in range(m):
        b = lg[i]
        if 0.0 < b < upper:
            if _eval_right(lg, vg, m, b) > _eval_right(lf, vf, n, b + h) + h:
                return False
    for i in range(n):
        p = lf[i] - h
        if 0.0 < p < upper:
            if _eval_right(lg, vg, m, p) > vf[i] + h:
                return False
    return True


cdef bint _admissible(double* lf, double* vf, Py_ssize_t n,
                      double* lg, double* vg, Py_ssize_t m, double h) noexcept nogil:
    return _half_adm(lf, vf, n, lg, vg, m, h) and _half_adm(lg, vg, m, lf, vf, n, h)


def admissible(lf, vf, lg, vg, double h):
    cdef Py_ssize_t n = len(lf), m = len(lg)
    cdef double* alf = NULL
    cdef double* avf = NULL
    cdef double* alg = NULL
    cdef double* avg = NULL
    cdef bint out
    try:
        alf = _copy_seq(lf, n)
        avf = _copy_seq(vf, n)
        alg = _copy_seq(lg, m)
        avg = _copy_seq(vg, m)
        out = _admissible(alf, avf, n, alg, avg, m, h)
    finally:
        free(alf)
        free(avf)
        free(alg)
        free(avg)
    return out


def levy_bracket(lf, vf, lg, vg, double tol):
    cdef Py_ssize_t n = len(lf), m = len(lg), i
    cdef bint same = n == m
    if same:
        for i in range(n):
            if lf[i] != lg[i] or vf[i] != vg[i]:
                same = False
                break
    if same:
        return 0.0, 0.0, 0
    cdef double* alf = NULL
    cdef double* avf = NULL
    cdef double* alg = NULL
    cdef double* avg = NULL
    cdef double lo = 0.0, hi = 1.0, mid
    cdef long iterations = 0
    try:
        alf = _copy_seq(lf, n)
        avf = _copy_seq(vf, n)
        alg = _copy_seq(lg, m)
        avg = _copy_seq(vg, m)
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if _admissible(alf, avf, n, alg, avg, m, mid):
                hi = mid
            else:
                lo = mid
            iterations += 1
    finally:
        free(alf)
        free(avf)
        free(alg)
        free(avg)
    return lo, hi, iterations


# --- exact triangle-function constructions -------------------------------------


ctypedef struct Pair:
    double loc
    double val


cdef int _pair_cmp(const void* a, const void* b) noexcept nogil:
    # Lexicographic on (loc, val): matches Python's tuple sort, and makes
    # qsort's instability invisible (fully equal pairs are interchangeable).
    cdef double la = (<const Pair*> a).loc, lb = (<const Pair*> b).loc
    if la < lb:
        return -1
    if la > lb:
        return 1
    cdef double va = (<const Pair*> a).val, vb = (<const Pair*> b).val
    if va < vb:
        return -1
    if va > vb:
        return 1
    return 0


cdef int _dbl_cmp(const void* a, const void* b) noexcept nogil:
    cdef double x = (<const double*> a)[0], y = (<const double*> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


def star_sum(lf, vf, lg, vg, int op):
    cdef Py_ssize_t n = len(lf), m = len(lg), i, j, k
    if n == 0 or m == 0:
        return [], []
    cdef double* alf = NULL
    cdef double* avf = NULL
    cdef double* alg = NULL
    cdef double* avg = NULL
    cdef Pair* pairs = NULL
    cdef list out_l = []
    cdef list out_v = []
    cdef double best = 0.0, loc, val
    try:
        alf = _copy_seq(lf, n)
        avf = _copy_seq(vf, n)
        alg = _copy_seq(lg, m)
        avg = _copy_seq(vg, m)
        pairs = <Pair*> malloc(n * m * sizeof(Pair))
        if pairs == NULL:
            raise MemoryError()
        k = 0
        for i in range(n):
            for j in range(m):
                pairs[k].loc = alf[i] + alg[j]
                pairs[k].val = _tnorm(op, avf[i], avg[j])
                k += 1
        qsort(pairs, n * m, sizeof(Pair), _pair_cmp)
        for k in range(n * m):
            loc = pairs[k].loc
            val = pairs[k].val
            if val > best:
                if out_l and out_l[len(out_l) - 1] == loc:
                    out_v[len(out_v) - 1] = val
                else:
                    out_l.append(loc)
                    out_v.append(val)
                best = val
    finally:
        free(alf)
        free(avf)
        free(alg)
        free(avg)
        free(pairs)
    return out_l, out_v


def star_pointwise(lf, vf, lg, vg, int op):
    cdef Py_ssize_t n = len(lf), m = len(lg), i, j
    cdef double* alf = NULL
    cdef double* avf = NULL
    cdef double* alg = NULL
    cdef double* avg = NULL
    cdef list out_l = []
    cdef list out_v = []
    cdef double best = 0.0, c, v
    try:
        alf = _copy_seq(lf, n)
        avf = _copy_seq(vf, n)
        alg = _copy_seq(lg, m)
        avg = _copy_seq(vg, m)
        # Both inputs are strictly increasing, so a dedup merge walks the
        # sorted union of locations.
        i = 0
        j = 0
        while i < n or j < m:
            if j >= m or (i < n and alf[i] < alg[j]):
                c = alf[i]
                i += 1
            elif i >= n or alg[j] < alf[i]:
                c = alg[j]
                j += 1
            else:
                c = alf[i]
                i += 1
                j += 1
            v = _tnorm(op, _eval_right(alf, avf, n, c), _eval_right(alg, avg, m, c))
            if v > best:
                out_l.append(c)
                out_v.append(v)
                best = v
    finally:
        free(alf)
        free(avf)
        free(alg)
        free(avg)
    return out_l, out_v


def star_conorm(lf, vf, lg, vg, int op):
    cdef Py_ssize_t n = len(lf), m = len(lg)
    cdef Py_ssize_t n1 = n + 1, m1 = m + 1, i, j, k, idx, ncuts, npairs
    cdef double* A = NULL
    cdef double* P = NULL
    cdef double* B = NULL
    cdef double* Q = NULL
    cdef double* enters = NULL
    cdef double* exits = NULL
    cdef double* vals = NULL
    cdef double* cs = NULL
    cdef list out_l = []
    cdef list out_v = []
    cdef double prev = 0.0, c, nxt, lo, e
    try:
        A = <double*> malloc((n + 2) * sizeof(double))
        P = <double*> malloc(n1 * sizeof(double))
        B = <double*> malloc((m + 2) * sizeof(double))
        Q = <double*> malloc(m1 * sizeof(double))
        if A == NULL or P == NULL or B == NULL or Q == NULL:
            raise MemoryError()
        A[0] = 0.0
        P[0] = 0.0
        for i in range(n):
            A[i + 1] = lf[i]
            P[i + 1] = vf[i]
        A[n + 1] = INFINITY
        B[0] = 0.0
        Q[0] = 0.0
        for j in range(m):
            B[j + 1] = lg[j]
            Q[j + 1] = vg[j]
        B[m + 1] = INFINITY

        npairs = n1 * m1
        enters = <double*> malloc(npairs * sizeof(double))
        exits = <double*> malloc(npairs * sizeof(double))
        vals = <double*> malloc(npairs * sizeof(double))
        cs = <double*> malloc(npairs * sizeof(double))
        if enters == NULL or exits == NULL or vals == NULL or cs == NULL:
            raise MemoryError()
        k = 0
        for i in range(n1):
            for j in range(m1):
                e = A[i] + B[j]
                enters[k] = e
                exits[k] = A[i + 1] + B[j + 1]
                vals[k] = _tconorm(op, P[i], Q[j])
                cs[k] = e
                k += 1
        qsort(cs, npairs, sizeof(double), _dbl_cmp)
        ncuts = 0
        for k in range(npairs):
            if ncuts == 0 or cs[k] != cs[ncuts - 1]:
                cs[ncuts] = cs[k]
                ncuts += 1
        for k in range(ncuts):
            c = cs[k]
            nxt = cs[k + 1] if k + 1 < ncuts else INFINITY
            lo = INFINITY
            for idx in range(npairs):
                if enters[idx] <= c and exits[idx] >= nxt and vals[idx] < lo:
                    lo = vals[idx]
            if lo > prev:
                out_l.append(c)
                out_v.append(lo)
                prev = lo
    finally:
        free(A)
        free(P)
        free(B)
        free(Q)
        free(enters)
        free(exits)
        free(vals)
        free(cs)
    return out_l, out_v
