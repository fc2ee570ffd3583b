"""Pure-Python compute kernels.

Two hot loops live here (and in the compiled twin _kernels.pyx):

  closed_subsets  enumerate shift-closed bitmask subsets of [lo, v0)
  reduce_rows     exact limit reduction of integer-polynomial row matrices

Both are deliberately dependency-free; callers translate status strings
into package exceptions. The compiled twin must match this module's output
bit for bit, including enumeration order and dependency normalization.
"""

from fractions import Fraction

IMPLEMENTATION = "pure"


def closed_subsets(v0, shifts, size, required_mask=0, lo=0):
    """Bitmasks of subsets S of [lo, v0) that are closed under the shifts.

    Closed means s in S and s + sh < v0 imply s + sh in S. Every returned
    mask contains required_mask; popcount equals size unless size < 0 (any).
    Order is lexicographic on the membership word (w_lo, ..., w_{v0-1}),
    zeros first.
    """
    shifts = sorted({int(s) for s in shifts if 0 < int(s) < v0})
    out = []
    npos = v0 - lo

    def walk(p, mask, cnt):
        if size >= 0:
            if cnt > size or cnt + (v0 - p) < size:
                return
        if p == v0:
            out.append(mask)
            return
        forced = bool(required_mask >> p & 1)
        if not forced:
            for sh in shifts:
                q = p - sh
                if q >= lo and mask >> q & 1:
                    forced = True
                    break
        if not forced:
            walk(p + 1, mask, cnt)
        walk(p + 1, mask | 1 << p, cnt + 1)

    if npos <= 0:
        # no free positions: only the empty set, if it qualifies
        if required_mask == 0 and (size < 0 or size == 0):
            out.append(0)
        return out
    walk(lo, 0, 0)
    return out


# -- integer beta-polynomial helpers (tuples, low degree first, trimmed) ----


def _trim(t):
    n = len(t)
    while n and t[n - 1] == 0:
        n -= 1
    return t[:n]


def _order(t):
    for i, c in enumerate(t):
        if c:
            return i
    return -1  # zero polynomial


def _scale_add(acc, scalar, t):
    """acc += scalar * t, in place on a list."""
    if len(t) > len(acc):
        acc.extend([0] * (len(t) - len(acc)))
    for i, c in enumerate(t):
        if c:
            acc[i] += scalar * c
    return acc


def _first_dependency(E):
    """First r with E[r] rationally dependent on E[0..r-1], plus the relation.

    Returns (r, lam) with sum(lam[i] * E[i]) == 0, lam[r] != 0, lam integer,
    coprime, first nonzero entry positive; or None when all rows are
    independent. The relation is unique up to scale, so the normalization
    makes the result implementation-independent.
    """
    ncols = len(E[0]) if E else 0
    basis = []  # [reduced row (Fractions), coeffs over originals, lead]
    for r, row in enumerate(E):
        cur = [Fraction(x) for x in row]
        coef = [Fraction(0)] * len(E)
        coef[r] = Fraction(1)
        for brow, bcoef, lead in basis:
            f = cur[lead]
            if f:
                for j in range(ncols):
                    cur[j] -= f * brow[j]
                for j in range(len(E)):
                    coef[j] -= f * bcoef[j]
        lead = -1
        for j in range(ncols):
            if cur[j]:
                lead = j
                break
        if lead < 0:
            den_lcm = 1
            for c in coef:
                den_lcm = den_lcm * c.denominator // _gcd(den_lcm, c.denominator)
            lam = [int(c * den_lcm) for c in coef]
            g = 0
            for x in lam:
                g = _gcd(g, abs(x))
            if g > 1:
                lam = [x // g for x in lam]
            for x in lam:
                if x:
                    if x < 0:
                        lam = [-y for y in lam]
                    break
            return r, lam
        inv = 1 / cur[lead]
        cur = [x * inv for x in cur]
        coef = [x * inv for x in coef]
        for brow, bcoef, blead in basis:
            f = brow[lead]
            if f:
                for j in range(ncols):
                    brow[j] -= f * cur[j]
                for j in range(len(E)):
                    bcoef[j] -= f * coef[j]
        basis.append((cur, coef, lead))
    return None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def reduce_rows(rows, v0, max_iter):
    """Drive a matrix of integer beta-polynomials to independence at beta=0.

    rows: list of rows; each row is a list of v0 tuples of ints (polynomial
    coefficients in beta, lowest degree first). The rows are modified by the
    classical limit iteration: normalize each row by its minimal beta order,
    evaluate at beta=0, and while the evaluations are dependent replace the
    support row whose evaluation leads in the rightmost column by the integer
    relation combination (which vanishes at beta=0, so its order drops).

    Returns ("ok", eval_matrix) on success, ("rank_drop", None) if a row
    becomes identically zero, ("guard", None) if max_iter passes elapse.
    """
    rows = [[_trim(tuple(e)) for e in row] for row in rows]
    nrows = len(rows)
    for _ in range(max_iter):
        # normalize each row by its minimal beta order
        for i, row in enumerate(rows):
            o = -1
            for e in row:
                eo = _order(e)
                if eo >= 0 and (o < 0 or eo < o):
                    o = eo
            if o < 0:
                return ("rank_drop", None)
            if o > 0:
                rows[i] = [e[o:] if e else e for e in row]
        E = [[(e[0] if e else 0) for e in row] for row in rows]
        dep = _first_dependency(E)
        if dep is None:
            return ("ok", E)
        r, lam = dep
        support = [i for i in range(nrows) if lam[i]]
        leads = {}
        for i in support:
            lead = v0
            for j in range(v0):
                if E[i][j]:
                    lead = j
                    break
            leads[i] = lead
        pivot = min(support, key=lambda i: (-leads[i], i))
        newrow = []
        for j in range(v0):
            acc = []
            for i in support:
                _scale_add(acc, lam[i], rows[i][j])
            newrow.append(_trim(tuple(acc)))
        rows[pivot] = newrow
    return ("guard", None)
