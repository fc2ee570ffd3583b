"""Value sets of torsion-free rank-one modules over a semigroup ring.

A value set is a subset of the naturals of the form E union [tail, infinity)
with E finite. It records the t-adic valuations of a fractional ideal of the
ring k[[Gamma]]. Instances carry the semigroup they are considered over, but
equality and hashing compare the underlying sets only; translation-equivalent
sets with different parents compare by content.

Construction never enforces closure under the parent semigroup: diagnostic
workflows need to hold printed, possibly non-closed sets. Use is_closed /
closure for validation.
"""

from __future__ import annotations

import re

from . import kernels
from .errors import (
    DOutOfRange,
    NotContainingConductor,
    ParseError,
    PicBoundaryError,
    WrongColength,
)
from .semigroups import NumericalSemigroup

_PARSE_RE = re.compile(r"^\{([0-9,\s]*)\}\s*\+\s*\[\s*(\d+)\s*,\s*\)$")


class ValueSet:
    """A cofinite set of naturals attached to a parent numerical semigroup."""

    __slots__ = ("_parent", "_elems", "_tail", "_eset")

    def __init__(self, parent: NumericalSemigroup, elements, tail: int):
        tail = int(tail)
        if tail < 0:
            raise PicBoundaryError(f"tail must be nonnegative, got {tail}")
        elems = {int(x) for x in elements}
        if any(x < 0 for x in elems):
            raise PicBoundaryError("negative values are not allowed")
        elems = {x for x in elems if x < tail}
        while tail > 0 and (tail - 1) in elems:
            tail -= 1
            elems.discard(tail)
        self._parent = parent
        self._elems = tuple(sorted(elems))
        self._tail = tail
        self._eset = frozenset(elems)

    @classmethod
    def of_semigroup(cls, S: NumericalSemigroup) -> "ValueSet":
        """The semigroup itself, viewed as the value set of the ring."""
        return cls(S, S.smalls, S.conductor)

    @classmethod
    def parse(cls, text: str, parent: NumericalSemigroup) -> "ValueSet":
        """Parse the textual form '{a,b,c}+[t,)' (elements may be empty)."""
        m = _PARSE_RE.match(text.strip())
        if not m:
            raise ParseError(f"malformed value set: {text!r}")
        body, tail = m.group(1).strip(), int(m.group(2))
        if body:
            parts = [p.strip() for p in body.split(",")]
            if any(not p.isdigit() for p in parts):
                raise ParseError(f"malformed value set elements: {text!r}")
            elems = [int(p) for p in parts]
        else:
            elems = []
        return cls(parent, elems, tail)

    # -- structure --------------------------------------------------------

    @property
    def parent(self) -> NumericalSemigroup:
        return self._parent

    @property
    def elements(self) -> tuple:
        """Finite part: the members below the tail, increasing."""
        return self._elems

    @property
    def tail(self) -> int:
        return self._tail

    @property
    def colength(self) -> int:
        """Number of naturals outside the set."""
        return self._tail - len(self._elems)

    @property
    def min_element(self) -> int:
        return self._elems[0] if self._elems else self._tail

    def __contains__(self, n) -> bool:
        n = int(n)
        if n < 0:
            return False
        return n >= self._tail or n in self._eset

    def members_below(self, bound) -> list:
        return [n for n in range(bound) if n in self]

    def nth_smallest(self, j: int) -> int:
        """The j-th member in increasing order (j = 0 gives the minimum)."""
        if j < 0:
            raise PicBoundaryError("index must be nonnegative")
        if j < len(self._elems):
            return self._elems[j]
        return self._tail + (j - len(self._elems))

    # -- module structure ---------------------------------------------------

    def is_closed(self) -> bool:
        """True when the set is stable under adding parent elements."""
        gens = self._parent.minimal_generators
        return all(x + g in self for x in self._elems for g in gens)

    def closure(self) -> "ValueSet":
        """Smallest parent-stable set containing this one."""
        gens = self._parent.minimal_generators
        elems = set(self._elems)
        frontier = list(elems)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = x + g
                if y < self._tail and y not in elems:
                    elems.add(y)
                    frontier.append(y)
        return ValueSet(self._parent, elems, self._tail)

    def closure_missing(self) -> list:
        """Elements the closure adds; empty iff is_closed()."""
        c = self.closure()
        return [x for x in range(self._tail) if x in c and x not in self]

    def module_generators(self) -> tuple:
        """Minimal generators over the parent (meaningful for closed sets)."""
        S = self._parent
        bound = self._tail + S.multiplicity
        pos = [g for g in S.members_below(bound) if g > 0]
        gens = []
        for x in self.members_below(bound):
            if not any(g <= x and (x - g) in self for g in pos):
                gens.append(x)
        return tuple(gens)

    def translate(self, n: int) -> "ValueSet":
        """The set shifted by n (n may be negative down to -min_element)."""
        if n < -self.min_element:
            raise PicBoundaryError(
                f"translation by {n} would produce negative values"
            )
        return ValueSet(
            self._parent, [x + n for x in self._elems], self._tail + n
        )

    def iso_normalize(self) -> "ValueSet":
        """Translate so the minimum is 0 (isomorphism-class representative)."""
        return self.translate(-self.min_element)

    # -- plumbing -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ValueSet):
            return NotImplemented
        return self._tail == other._tail and self._elems == other._elems

    def __hash__(self):
        return hash((self._elems, self._tail))

    def __str__(self):
        inner = ",".join(str(x) for x in self._elems)
        return "{" + inner + "}+[" + str(self._tail) + ",)"

    def __repr__(self):
        return f"ValueSet({self}, over gens={self._parent.minimal_generators})"

    def to_dict(self) -> dict:
        return {"elements": list(self._elems), "tail": self._tail}


# -- enumeration ------------------------------------------------------------


def _closure_shifts(S: NumericalSemigroup) -> list:
    return [g for g in S.minimal_generators if g < S.conductor]


def _mask_to_elems(mask: int, v0: int) -> list:
    return [j for j in range(v0) if mask >> j & 1]


def enumerate_modules(S: NumericalSemigroup, d: int) -> list:
    """All value sets of colength d that contain [v0, infinity) and are
    stable under S, ordered lexicographically by membership word."""
    v0 = S.conductor
    if d < 0 or d > v0:
        raise DOutOfRange(f"colength {d} outside [0, {v0}]")
    masks = kernels.closed_subsets(v0, _closure_shifts(S), v0 - d)
    return [ValueSet(S, _mask_to_elems(m, v0), v0) for m in masks]


def enumerate_modules_bounded(S: NumericalSemigroup, tail_start: int, d: int) -> list:
    """Value sets inside [tail_start, infinity) of colength d relative to it.

    The bounding ideal must contain the conductor ideal (tail_start <= v0).
    """
    v0 = S.conductor
    if tail_start < 0 or tail_start > v0:
        raise NotContainingConductor(
            f"[{tail_start}, ) does not contain [{v0}, )"
        )
    if d < 0 or d > v0 - tail_start:
        raise DOutOfRange(f"colength {d} outside [0, {v0 - tail_start}]")
    masks = kernels.closed_subsets(
        v0, _closure_shifts(S), (v0 - tail_start) - d, 0, tail_start
    )
    return [ValueSet(S, _mask_to_elems(m, v0), v0) for m in masks]


def iso_classes(S: NumericalSemigroup) -> list:
    """Isomorphism classes of S-stable cofinite sets, as minimum-0 sets.

    Every class has a unique representative containing 0, which then
    contains all of S; representatives differ by which gaps they fill.
    """
    v0 = S.conductor
    required = 0
    for k in S.smalls:
        required |= 1 << k
    masks = kernels.closed_subsets(v0, _closure_shifts(S), -1, required)
    return [ValueSet(S, _mask_to_elems(m, v0), v0) for m in masks]


# -- filtration membership ----------------------------------------------------


def filtration(delta: ValueSet) -> list:
    """Successive tails of the set, cut at its own members.

    Entry j is the intersection with [a_j, infinity) where a_j is the j-th
    member. The list stops at (and includes) the first entry contained in
    the conductor ideal of the parent.
    """
    v0 = delta.parent.conductor
    out = []
    j = 0
    while True:
        a = delta.nth_smallest(j)
        out.append(
            ValueSet(
                delta.parent,
                [x for x in delta.elements if x >= a],
                max(delta.tail, a),
            )
        )
        if a >= v0:
            return out
        j += 1


def in_filtration(delta: ValueSet) -> bool:
    """Whether the set lies between the ring and its conductor, member by
    member: the j-th member must be at least the ring's j-th element.

    Requires colength equal to the number of gaps of the parent.
    """
    S = delta.parent
    if delta.colength != S.delta:
        raise WrongColength(
            f"colength {delta.colength} != delta {S.delta} of the parent"
        )
    return all(
        delta.nth_smallest(j) >= S.smalls[j] for j in range(S.gamma)
    )


# -- duality and endomorphisms -----------------------------------------------


def dual(delta: ValueSet) -> tuple:
    """The set of integers n with n + delta inside the parent semigroup.

    Returned as (value_set, shift) with shift <= 0: the actual dual is the
    value set translated by the shift. Negative members can occur only when
    the input misses 0.
    """
    S = delta.parent
    v0 = S.conductor
    m = delta.min_element
    members = []
    for n in range(-m, v0):
        if all((n + x) in S for x in delta.members_below(v0 - n)):
            members.append(n)
    lowest = members[0] if members else v0
    shift = min(0, lowest)
    return (
        ValueSet(S, [x - shift for x in members], v0 - shift),
        shift,
    )


def endomorphism_semigroup(delta: ValueSet) -> NumericalSemigroup:
    """All nonnegative n with n + delta inside delta; always a semigroup."""
    tail = delta.tail
    members = [
        n
        for n in range(tail)
        if all((n + x) in delta for x in delta.elements)
    ]
    return NumericalSemigroup.from_small_elements(members, tail)


def is_module_over(delta: ValueSet, T: NumericalSemigroup) -> bool:
    """Whether the set is stable under the semigroup T."""
    return all(x + g in delta for x in delta.elements for g in T.minimal_generators)


def dualizing_value_set(S: NumericalSemigroup) -> ValueSet:
    """Value set of the dualizing module: j belongs iff v0-1-j is a gap.

    Its colength is gamma, and it equals the semigroup itself exactly when
    the semigroup is Gorenstein.
    """
    v0 = S.conductor
    elems = [j for j in range(v0) if (v0 - 1 - j) not in S]
    return ValueSet(S, elems, v0)
