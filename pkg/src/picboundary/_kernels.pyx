# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled compute kernels: twin of _kernels_py with identical output.

closed_subsets runs on C machine words (conductors are capped at 64, so a
membership mask fits in a uint64; wider calls delegate to the pure twin).
reduce_rows keeps arbitrary-precision Python integers for polynomial
coefficients and compiles the indexing loops. Enumeration order and the
dependency normalization match the pure module bit for bit.
"""


from math import gcd

from libc.stdint cimport uint64_t

from . import _kernels_py

IMPLEMENTATION = "compiled"


cdef void _walk(int p, uint64_t mask, int cnt, int v0, int lo, int size,
                uint64_t req, int* sh, int nshifts, list out):
    cdef int i, q
    cdef bint forced
    if size >= 0:
        if cnt > size or cnt + (v0 - p) < size:
            return
    if p == v0:
        out.append(mask)
        return
    forced = (req >> p) & 1
    if not forced:
        for i in range(nshifts):
            q = p - sh[i]
            if q >= lo and (mask >> q) & 1:
                forced = True
                break
    if not forced:
        _walk(p + 1, mask, cnt, v0, lo, size, req, sh, nshifts, out)
    _walk(p + 1, mask | ((<uint64_t>1) << p), cnt + 1,
          v0, lo, size, req, sh, nshifts, out)


def closed_subsets(v0, shifts, size, required_mask=0, lo=0):
    """Bitmasks of subsets S of [lo, v0) that are closed under the shifts.

    Closed means s in S and s + sh < v0 imply s + sh in S. Every returned
    mask contains required_mask; popcount equals size unless size < 0 (any).
    Order is lexicographic on the membership word (w_lo, ..., w_{v0-1}),
    zeros first.
    """
    cdef int c_v0, c_lo, c_size, nshifts
    cdef uint64_t c_req
    cdef int[64] sh
    if v0 > 64:
        return _kernels_py.closed_subsets(v0, shifts, size, required_mask, lo)
    c_v0 = v0
    c_lo = lo
    c_size = size
    c_req = required_mask
    nshifts = 0
    for s in sorted({int(x) for x in shifts if 0 < int(x) < v0}):
        sh[nshifts] = s
        nshifts += 1
    out = []
    if c_v0 - c_lo <= 0:
        if c_req == 0 and (c_size < 0 or c_size == 0):
            out.append(0)
        return out
    _walk(c_lo, 0, 0, c_v0, c_lo, c_size, c_req, sh, nshifts, out)
    return out


cdef tuple _trim(tuple t):
    cdef Py_ssize_t n = len(t)
    while n and t[n - 1] == 0:
        n -= 1
    return t[:n]


cdef Py_ssize_t _order(tuple t):
    cdef Py_ssize_t i
    for i in range(len(t)):
        if t[i]:
            return i
    return -1  # zero polynomial


cdef list _scale_add(list acc, object scalar, tuple t):
    """acc += scalar * t, in place."""
    cdef Py_ssize_t i
    if len(t) > len(acc):
        acc.extend([0] * (len(t) - len(acc)))
    for i in range(len(t)):
        if t[i]:
            acc[i] = acc[i] + scalar * t[i]
    return acc


cdef object _first_dependency(list E):
    """First r with E[r] rationally dependent on E[0..r-1], plus the relation.

    Returns (r, lam) with sum(lam[i] * E[i]) == 0, lam[r] != 0, lam integer,
    coprime, first nonzero entry positive; or None when all rows are
    independent. The relation is unique up to scale, so the canonical
    normalization matches the pure twin even though the elimination here is
    fraction-free (integer cross-multiplication instead of Fractions).
    """
    cdef Py_ssize_t ncols = len(E[0]) if E else 0
    cdef Py_ssize_t nrows = len(E)
    cdef Py_ssize_t r, j, lead
    basis = []  # [reduced integer row, integer coeffs over originals, lead]
    for r in range(nrows):
        cur = list(E[r])
        coef = [0] * nrows
        coef[r] = 1
        for brow, bcoef, blead in basis:
            f = cur[<Py_ssize_t>blead]
            if f:
                g = brow[<Py_ssize_t>blead]
                for j in range(ncols):
                    cur[j] = g * cur[j] - f * brow[j]
                for j in range(nrows):
                    coef[j] = g * coef[j] - f * bcoef[j]
        lead = -1
        for j in range(ncols):
            if cur[j]:
                lead = j
                break
        if lead < 0:
            lam = coef
            g = 0
            for x in lam:
                g = gcd(g, x if x >= 0 else -x)
            if g > 1:
                lam = [x // g for x in lam]
            for x in lam:
                if x:
                    if x < 0:
                        lam = [-y for y in lam]
                    break
            return r, lam
        # scale the pair down; (cur, coef) stays a valid row relation
        g = 0
        for x in cur:
            g = gcd(g, x if x >= 0 else -x)
        for x in coef:
            g = gcd(g, x if x >= 0 else -x)
        if g > 1:
            cur = [x // g for x in cur]
            coef = [x // g for x in coef]
        basis.append((cur, coef, lead))
    return None


def reduce_rows(rows, v0, max_iter):
    """Drive a matrix of integer beta-polynomials to independence at beta=0.

    Same contract as the pure twin: normalize each row by its minimal beta
    order, evaluate at beta=0, and while the evaluations are dependent
    replace the support row whose evaluation leads in the rightmost column
    by the integer relation combination.

    Returns ("ok", eval_matrix), ("rank_drop", None), or ("guard", None).
    """
    cdef Py_ssize_t c_v0 = v0
    cdef Py_ssize_t nrows, i, j, o, eo, pivot, lead, best_lead
    cdef long it, c_max = max_iter
    work = [[_trim(tuple(e)) for e in row] for row in rows]
    nrows = len(work)
    for it in range(c_max):
        for i in range(nrows):
            row = work[i]
            o = -1
            for e in row:
                eo = _order(<tuple>e)
                if eo >= 0 and (o < 0 or eo < o):
                    o = eo
            if o < 0:
                return ("rank_drop", None)
            if o > 0:
                work[i] = [e[o:] if e else e for e in row]
        E = [[(e[0] if e else 0) for e in row] for row in work]
        dep = _first_dependency(E)
        if dep is None:
            return ("ok", E)
        _, lam = dep
        support = [i for i in range(nrows) if lam[i]]
        pivot = -1
        best_lead = -1
        for i in support:
            lead = c_v0
            for j in range(c_v0):
                if E[i][j]:
                    lead = j
                    break
            if lead > best_lead:
                best_lead = lead
                pivot = i
        newrow = []
        for j in range(c_v0):
            acc = []
            for i in support:
                _scale_add(acc, lam[i], work[i][j])
            newrow.append(_trim(tuple(acc)))
        work[pivot] = newrow
    return ("guard", None)
