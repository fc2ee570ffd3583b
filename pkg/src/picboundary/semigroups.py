"""Numerical semigroups attached to unibranch curve singularities.

A numerical semigroup is an additively closed subset of the naturals
containing 0 with finite complement. Conventions used throughout:

    v0     conductor: least c with [c, infinity) contained in the semigroup
    delta  number of gaps (naturals outside the semigroup)
    gamma  v0 - delta = number of semigroup elements below the conductor

The elements below the conductor, in increasing order, are written
k_0 = 0 < k_1 < ... < k_{gamma-1}; k_1 is the multiplicity. Instances are
immutable and hashable; equality is equality of element sets.
"""

from __future__ import annotations

import math

from .errors import (
    AlreadyNormal,
    ClosureDiagnostic,
    ConductorTooLarge,
    EmptyGenerators,
    NotCoprime,
    PicBoundaryError,
)

# exact arithmetic everywhere; the cap keeps enumerations and bitmask
# kernels (64-bit words) comfortably in range
MAX_CONDUCTOR = 64


class NumericalSemigroup:
    """Immutable numerical semigroup stored as (elements below conductor, conductor)."""

    __slots__ = ("_smalls", "_conductor", "_small_set")

    def __init__(self, smalls, conductor):
        # internal constructor: data must already be canonical and closed;
        # use from_generators / from_small_elements
        self._smalls = tuple(smalls)
        self._conductor = int(conductor)
        self._small_set = frozenset(self._smalls)

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_generators(cls, generators) -> "NumericalSemigroup":
        """Semigroup generated by the given positive integers (gcd must be 1)."""
        gens = sorted({int(g) for g in generators})
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] <= 0:
            raise PicBoundaryError(f"generators must be positive, got {gens[0]}")
        g = 0
        for x in gens:
            g = math.gcd(g, x)
        if g != 1:
            raise NotCoprime(f"generators {tuple(gens)} have gcd {g}")
        mult = gens[0]
        if mult > MAX_CONDUCTOR:
            raise ConductorTooLarge(
                f"multiplicity {mult} forces conductor > {MAX_CONDUCTOR}"
            )
        # exact membership table; a run of `mult` consecutive members
        # certifies everything beyond it, and if no such run starts by
        # MAX_CONDUCTOR the conductor is out of range
        limit = MAX_CONDUCTOR + mult + 1
        member = [False] * limit
        member[0] = True
        for n in range(1, limit):
            member[n] = any(member[n - x] for x in gens if x <= n)
        run = 0
        run_start = -1
        for n in range(limit):
            run = run + 1 if member[n] else 0
            if run == mult:
                run_start = n - mult + 1
                break
        if run_start < 0:
            raise ConductorTooLarge(f"conductor exceeds {MAX_CONDUCTOR}")
        conductor = 0
        for n in range(run_start - 1, -1, -1):
            if not member[n]:
                conductor = n + 1
                break
        if conductor > MAX_CONDUCTOR:
            raise ConductorTooLarge(
                f"conductor {conductor} exceeds {MAX_CONDUCTOR}"
            )
        smalls = tuple(n for n in range(conductor) if member[n])
        return cls(smalls, conductor)

    @classmethod
    def from_small_elements(cls, smalls, conductor) -> "NumericalSemigroup":
        """Semigroup with the given elements below `conductor`, plus [conductor, inf).

        Entries >= conductor are redundant and dropped. The conductor is
        canonicalized (trailing consecutive elements are absorbed into the
        tail). Raises ClosureDiagnostic if the resulting set is not closed
        under addition or does not contain 0.
        """
        conductor = int(conductor)
        if conductor < 0:
            raise PicBoundaryError(f"conductor must be nonnegative, got {conductor}")
        if conductor > MAX_CONDUCTOR:
            raise ConductorTooLarge(f"conductor {conductor} exceeds {MAX_CONDUCTOR}")
        elems = {int(x) for x in smalls}
        if any(x < 0 for x in elems):
            raise PicBoundaryError("negative elements are not allowed")
        elems = {x for x in elems if x < conductor}
        while conductor > 0 and (conductor - 1) in elems:
            conductor -= 1
            elems.discard(conductor)
        if conductor > 0 and 0 not in elems:
            raise ClosureDiagnostic(
                "element set does not contain 0", sorted(elems), (0,)
            )
        ordered = sorted(elems)
        missing = set()
        for i, a in enumerate(ordered):
            if a == 0:
                continue
            for b in ordered[i:]:
                s = a + b
                if s < conductor and s not in elems:
                    missing.add(s)
        if missing:
            raise ClosureDiagnostic(
                f"element set is not closed under addition ({len(missing)} missing)",
                ordered,
                sorted(missing),
            )
        return cls(tuple(ordered), conductor)

    @classmethod
    def naturals(cls) -> "NumericalSemigroup":
        """The full semigroup of natural numbers."""
        return cls((), 0)

    # -- basic structure ------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def smalls(self) -> tuple:
        """Elements below the conductor, increasing (k_0 = 0, ..., k_{gamma-1})."""
        return self._smalls

    @property
    def small_set(self) -> frozenset:
        return self._small_set

    @property
    def gaps(self) -> tuple:
        return tuple(
            n for n in range(self._conductor) if n not in self._small_set
        )

    @property
    def delta(self) -> int:
        """Number of gaps."""
        return self._conductor - len(self._smalls)

    @property
    def gamma(self) -> int:
        """Number of elements below the conductor (= conductor - delta)."""
        return len(self._smalls)

    @property
    def multiplicity(self) -> int:
        """Least positive element."""
        if len(self._smalls) > 1:
            return self._smalls[1]
        return self._conductor if self._conductor > 0 else 1

    @property
    def is_full(self) -> bool:
        """True for the semigroup of all naturals."""
        return self._conductor == 0

    def __contains__(self, n) -> bool:
        n = int(n)
        if n < 0:
            return False
        return n >= self._conductor or n in self._small_set

    def members_below(self, bound) -> list:
        """All elements < bound, increasing."""
        return [n for n in range(bound) if n in self]

    @property
    def minimal_generators(self) -> tuple:
        """Elements of the unique minimal generating set, increasing."""
        if self.is_full:
            return (1,)
        # every element >= conductor + multiplicity splits off a multiplicity
        positives = [n for n in range(1, self._conductor + self.multiplicity) if n in self]
        posset = set(positives)
        gens = [
            x
            for x in positives
            if not any(x - p in posset for p in positives if p < x)
        ]
        return tuple(gens)

    # -- invariants -----------------------------------------------------

    def is_gorenstein(self) -> bool:
        """True when the gap count is exactly half the conductor (symmetry)."""
        return self._conductor == 2 * self.delta

    def symmetry_defect(self) -> int:
        """Number of j in [0, v0) with both j and v0-1-j outside the semigroup."""
        v0 = self._conductor
        return sum(
            1
            for j in range(v0)
            if j not in self._small_set and (v0 - 1 - j) not in self._small_set
        )

    def multiplicity_condition(self) -> bool:
        """True when the elements below the conductor form {0, k_1, 2 k_1, ...}
        and the conductor itself is the next multiple.

        Equivalently v0 = k_{gamma-1} + k_1, and equivalently the maximal
        ideal needs a single generator modulo t * conductor ideal. False for
        the full semigroup (degenerate: there is no largest small element).
        """
        if self.is_full:
            return False
        return self._conductor == self._smalls[-1] + self.multiplicity

    def maximal_ideal_rank(self, shift: int = 0) -> int:
        """Number of minimal generators below conductor + shift.

        shift=0 counts generators of the maximal ideal modulo the conductor
        ideal; shift=1 counts them modulo t times the conductor ideal.
        """
        if shift not in (0, 1):
            raise PicBoundaryError(f"shift must be 0 or 1, got {shift}")
        bound = self._conductor + shift
        return sum(1 for g in self.minimal_generators if g < bound)

    # -- partial normalization -------------------------------------------

    def partial_normalization(self) -> "NumericalSemigroup":
        """Adjoin [v0 - 1, infinity); drops delta by exactly one."""
        if self.is_full:
            raise AlreadyNormal("the full semigroup has no proper normalization")
        return NumericalSemigroup.from_small_elements(
            self._smalls, self._conductor - 1
        )

    def normalization_chain(self) -> list:
        """Successive partial normalizations down to the naturals.

        Returns [self, ..., naturals]; length is delta + 1 and each step
        removes exactly one gap.
        """
        chain = [self]
        cur = self
        while not cur.is_full:
            nxt = cur.partial_normalization()
            assert nxt.delta == cur.delta - 1
            chain.append(nxt)
            cur = nxt
        return chain

    # -- plumbing ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return (
            self._conductor == other._conductor and self._smalls == other._smalls
        )

    def __hash__(self):
        return hash((self._smalls, self._conductor))

    def __repr__(self):
        return (
            f"NumericalSemigroup(gens={self.minimal_generators},"
            f" conductor={self._conductor})"
        )

    def __str__(self):
        inner = ",".join(str(x) for x in self._smalls)
        return "{" + inner + "}+[" + str(self._conductor) + ",)"

    def to_dict(self) -> dict:
        """JSON-ready summary with a fixed key order."""
        return {
            "generators": list(self.minimal_generators),
            "conductor": self._conductor,
            "delta": self.delta,
            "gamma": self.gamma,
            "small_elements": list(self._smalls),
            "gaps": list(self.gaps),
            "multiplicity": self.multiplicity,
        }


def iterate_semigroups(max_conductor: int):
    """Yield every numerical semigroup with conductor <= max_conductor.

    Deterministic order: ascending conductor, then ascending bitmask of the
    undetermined positions 1..v0-2 (0 is always in, v0-1 never is).
    """
    if max_conductor < 0:
        raise PicBoundaryError("max_conductor must be nonnegative")
    if max_conductor > MAX_CONDUCTOR:
        raise ConductorTooLarge(
            f"max_conductor {max_conductor} exceeds {MAX_CONDUCTOR}"
        )
    yield NumericalSemigroup.naturals()
    for v0 in range(2, max_conductor + 1):
        free = v0 - 2  # positions 1 .. v0-2
        for mask in range(1 << free):
            smalls = [0] + [p for p in range(1, v0 - 1) if mask >> (p - 1) & 1]
            sset = set(smalls)
            ok = True
            for i, a in enumerate(smalls[1:], 1):
                for b in smalls[i:]:
                    s = a + b
                    if s < v0 and s not in sset:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                yield NumericalSemigroup(tuple(smalls), v0)
