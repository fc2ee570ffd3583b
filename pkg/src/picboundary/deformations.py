"""One-parameter deformation families and their exact flat limits.

A family element is a finite sum of terms c(b) * t^e with exact rational
coefficients in the deformation parameter b. Over a semigroup ring O it
spans, for generic b, a torsion-free rank-one module; flat_limit computes
the value set of the limit module at b = 0 by exact arithmetic.

Textual grammar (whitespace-insensitive):

    family := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := INT | 'b' ['^' INT] | 't' ['^' INT] | '(' family ')'

Canonical printing emits one term per t-exponent, highest exponent first,
parenthesizing coefficients that have several b-terms. Parsing the canonical
text reproduces the element exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from . import kernels
from .betapoly import BetaScalar, pconst, pdivmod, pgcd, pmul, ptext
from .errors import (
    NonTermination,
    NotAUnit,
    ParseError,
    PicBoundaryError,
    RankDrop,
)
from .semigroups import NumericalSemigroup
from .valuesets import ValueSet, in_filtration

_MAX_EXPONENT = 4096


class FamilyElement:
    """A finite sum of terms c(b) * t^e with distinct, sorted t-exponents."""

    __slots__ = ("_terms",)

    def __init__(self, terms):
        merged = {}
        for e, c in terms:
            e = int(e)
            if e < 0:
                raise PicBoundaryError(f"negative t-exponent {e}")
            if e > _MAX_EXPONENT:
                raise PicBoundaryError(f"t-exponent {e} too large")
            if not isinstance(c, BetaScalar):
                if isinstance(c, tuple):
                    c = BetaScalar(c)
                else:
                    c = BetaScalar.constant(c)
            if e in merged:
                merged[e] = merged[e] + c
            else:
                merged[e] = c
        self._terms = tuple(
            (e, c) for e, c in sorted(merged.items()) if not c.is_zero()
        )

    @property
    def terms(self) -> tuple:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exponent(self) -> int:
        if not self._terms:
            raise NotAUnit("the zero family element has no order")
        return self._terms[0][0]

    @property
    def max_exponent(self) -> int:
        if not self._terms:
            raise NotAUnit("the zero family element has no order")
        return self._terms[-1][0]

    def normalized(self) -> "FamilyElement":
        """Divide by t^min_exponent (the unit part of the family)."""
        m = self.min_exponent
        if m == 0:
            return self
        return FamilyElement([(e - m, c) for e, c in self._terms])

    def coefficient(self, e: int) -> BetaScalar:
        for ee, c in self._terms:
            if ee == e:
                return c
        return BetaScalar.constant(0)

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FamilyElement):
            return NotImplemented
        return FamilyElement(list(self._terms) + list(other._terms))

    def __neg__(self):
        return FamilyElement([(e, -c) for e, c in self._terms])

    def __sub__(self, other):
        if not isinstance(other, FamilyElement):
            return NotImplemented
        return self.__add__(-other)

    def __mul__(self, other):
        if not isinstance(other, FamilyElement):
            return NotImplemented
        out = []
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                out.append((e1 + e2, c1 * c2))
        return FamilyElement(out)

    def __eq__(self, other):
        if not isinstance(other, FamilyElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            parts.append(_term_text(e, c))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"FamilyElement({self})"

    @classmethod
    def parse(cls, text: str) -> "FamilyElement":
        return _parse_family(text)


def _term_text(e: int, c: BetaScalar) -> str:
    if not c.is_polynomial():
        coeff = f"({c})"
        multi = True
    else:
        n_terms = sum(1 for x in c.num if x)
        coeff = ptext(c.num)
        multi = n_terms > 1
    if e == 0:
        return f"({coeff})" if multi and not coeff.startswith("(") else coeff
    tpow = "t" if e == 1 else f"t^{e}"
    if multi:
        return f"({coeff})*{tpow}" if not coeff.startswith("(") else f"{coeff}*{tpow}"
    if coeff == "1":
        return tpow
    if coeff == "-1":
        return f"-{tpow}"
    return f"{coeff}*{tpow}"


# -- parser -------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(\d+|[bt^*+\-()])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(
                    f"unexpected character {text[pos:].strip()[0]!r} in family"
                )
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, tok):
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}")

    def parse_family(self) -> FamilyElement:
        negate = False
        if self.peek() == "-":
            self.take()
            negate = True
        elem = self.parse_term()
        if negate:
            elem = -elem
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            elem = elem + (-rhs if op == "-" else rhs)
        return elem

    def parse_term(self) -> FamilyElement:
        elem = self.parse_factor()
        while self.peek() == "*":
            self.take()
            elem = elem * self.parse_factor()
        return elem

    def parse_factor(self) -> FamilyElement:
        tok = self.take()
        if tok is None:
            raise ParseError("unexpected end of family expression")
        if tok == "(":
            inner = self.parse_family()
            self.expect(")")
            return inner
        if tok.isdigit():
            return FamilyElement([(0, int(tok))])
        if tok in ("b", "t"):
            k = 1
            if self.peek() == "^":
                self.take()
                p = self.take()
                if p is None or not p.isdigit():
                    raise ParseError(f"malformed exponent after {tok}^")
                k = int(p)
                if k > _MAX_EXPONENT:
                    raise ParseError(f"exponent {k} too large")
            if tok == "t":
                return FamilyElement([(k, 1)])
            return FamilyElement([(0, BetaScalar.beta_power(k))])
        raise ParseError(f"unexpected token {tok!r} in family")


def _parse_family(text: str) -> FamilyElement:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty family expression")
    parser = _Parser(tokens)
    elem = parser.parse_family()
    if parser.peek() is not None:
        raise ParseError(f"trailing input at token {parser.peek()!r}")
    return elem


# -- the module of a family ----------------------------------------------------


def family_module(
    family: FamilyElement, S: NumericalSemigroup, *, normalize: bool = True
) -> list:
    """Integer-polynomial rows spanning the family's module below the conductor.

    By default the family is normalized by its minimal t-exponent (its unit
    part u); the rows are u * t^a for each element a of the semigroup below
    the conductor, truncated to t-degrees [0, v0). With normalize=False the
    family is used as is, so a positive-order generator spans a module inside
    the boundary rather than a unit deformation. Row entries are tuples of
    integer b-coefficients; each row is scaled by a nonzero rational in b,
    which changes neither the spanned module nor its limit.
    """
    if family.is_zero():
        raise NotAUnit("the zero family element spans no module")
    u = family.normalized() if normalize else family
    v0 = S.conductor
    rows = []
    for a in S.smalls:
        entries = [BetaScalar.constant(0)] * v0
        for e, c in u.terms:
            col = a + e
            if col < v0:
                entries[col] = entries[col] + c
        # clear polynomial denominators (unit scaling up to a beta power)
        den = pconst(1)
        for ent in entries:
            if not ent.is_zero() and not ent.is_polynomial():
                g = pgcd(den, ent.den)
                den = pmul(pdivmod(den, g)[0], ent.den)
        nums = []
        for ent in entries:
            scaled = ent * BetaScalar(den)
            assert scaled.is_polynomial()
            nums.append(scaled.num)
        # clear integer denominators with one scalar for the whole row
        lcm = 1
        for num in nums:
            for c in num:
                lcm = lcm * c.denominator // _igcd(lcm, c.denominator)
        row = []
        for num in nums:
            row.append(tuple(int(c * lcm) for c in num))
        rows.append(row)
    return rows


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a


class LimitResult(NamedTuple):
    value_set: ValueSet
    basis: tuple  # reduced-echelon rows over Q, pivot columns ascending
    leads: tuple


def flat_limit(
    family: FamilyElement, S: NumericalSemigroup, *, normalize: bool = True
) -> LimitResult:
    """Value set of the limit at b = 0 of the module the family spans.

    The result is guaranteed to have colength delta, to be stable under the
    semigroup, and to be filtration-bounded; these are asserted.
    """
    v0 = S.conductor
    gamma = S.gamma
    if gamma == 0:
        return LimitResult(ValueSet(S, [], 0), (), ())
    rows = family_module(family, S, normalize=normalize)
    maxdeg = 0
    for row in rows:
        for e in row:
            maxdeg = max(maxdeg, len(e))
    max_iter = gamma * v0 * (maxdeg + 2) + 10
    status, E = kernels.reduce_rows(rows, v0, max_iter)
    if status == "rank_drop":
        raise RankDrop("family module degenerates below full dimension")
    if status == "guard":
        if _beta_rank(family_module(family, S, normalize=normalize), v0) < gamma:
            raise RankDrop("family module degenerates below full dimension")
        raise NonTermination("limit iteration exceeded its certified bound")
    basis, leads = _rref(E)
    limit = ValueSet(S, leads, v0)
    assert len(leads) == gamma
    assert limit.colength == S.delta
    _assert_stable(basis, leads, S)
    assert in_filtration(limit)
    return LimitResult(limit, basis, leads)


def _rref(E) -> tuple:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    rows = [[Fraction(x) for x in row] for row in E]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        sel = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return (
        tuple(tuple(row) for row in rows[:r]),
        tuple(pivots),
    )


def _assert_stable(basis, leads, S: NumericalSemigroup) -> None:
    """The reduced basis must stay in its own span under semigroup shifts."""
    v0 = S.conductor
    lead_index = {c: i for i, c in enumerate(leads)}
    for k in S.smalls:
        if k == 0:
            continue
        for row in basis:
            shifted = [Fraction(0)] * v0
            for j in range(v0 - k):
                shifted[j + k] = row[j]
            # reduce against the basis; remainder must vanish
            for c, i in lead_index.items():
                if shifted[c]:
                    f = shifted[c]
                    shifted = [x - f * y for x, y in zip(shifted, basis[i])]
            assert all(x == 0 for x in shifted), (k, row)


def _beta_rank(rows, v0: int) -> int:
    """Rank over the rational function field in b (exact)."""
    mat = [[BetaScalar(e) for e in row] for row in rows]
    rank = 0
    for col in range(v0):
        sel = None
        for i in range(rank, len(mat)):
            if not mat[i][col].is_zero():
                sel = i
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        pivot = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            if not mat[i][col].is_zero():
                f = mat[i][col] / pivot
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank
