"""Constructions of one-parameter families reaching prescribed value sets.

Each construction returns a WitnessResult whose family has been run through
the limit engine and compared against the promised target; a mismatch raises
VerificationMismatch rather than returning an unverified claim.
"""

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Union

from .betapoly import BetaScalar
from .deformations import FamilyElement, flat_limit
from .errors import (
    HypothesisFails,
    RankDrop,
    VerificationMismatch,
)
from .semigroups import NumericalSemigroup
from .valuesets import ValueSet, in_filtration


class WitnessResult(NamedTuple):
    family: FamilyElement
    limit: ValueSet
    offset: int  # valuation of the generic generator; 0 for unit families
    variant: str


class ExhaustedReport(NamedTuple):
    limits_reached: tuple  # distinct limits seen, in first-found order
    candidates_tried: int


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for the deterministic family search; None means the default."""

    terms: int = None  # max number of terms per family (default gamma + 2)
    beta_degree: int = None  # max b-degree (default v0)
    exponent_cap: int = None  # max t-exponent drawn into the pool (default 2*v0)

    def resolve(self, S: NumericalSemigroup) -> tuple:
        terms = self.terms if self.terms is not None else S.gamma + 2
        beta_degree = (
            self.beta_degree if self.beta_degree is not None else S.conductor
        )
        cap = (
            self.exponent_cap
            if self.exponent_cap is not None
            else 2 * S.conductor
        )
        return terms, beta_degree, cap


def _bpow(k: int) -> BetaScalar:
    return BetaScalar.beta_power(k)


def _prepare_target(S: NumericalSemigroup, target: ValueSet) -> ValueSet:
    tgt = ValueSet(S, target.elements, target.tail)
    if not in_filtration(tgt):  # raises WrongColength when out of the stratum
        raise HypothesisFails(
            f"{tgt} violates the filtration bound and is certified unreachable"
        )
    if not tgt.is_closed():
        raise HypothesisFails(f"{tgt} is not stable under the semigroup")
    return tgt


def certified_non_limit(target: ValueSet) -> bool:
    """True when the filtration bound already rules the value set out."""
    return not in_filtration(target)


def normalization_family(S: NumericalSemigroup) -> WitnessResult:
    """The family t - b, whose limit is the shifted partial normalization."""
    S2 = S.partial_normalization()
    family = FamilyElement([(1, 1), (0, BetaScalar((0, -1)))])
    target = ValueSet(S, [1 + x for x in S2.smalls], S2.conductor + 1)
    res = flat_limit(family, S)
    if res.value_set != target:
        raise VerificationMismatch(
            f"normalization family reached {res.value_set}, expected {target}"
        )
    return WitnessResult(family, res.value_set, 0, "normalization")


def staircase_family(S: NumericalSemigroup, target: ValueSet) -> WitnessResult:
    """A ladder family whose limit is the given value set.

    Requires at most one minimal generator below the conductor. The target
    splits into the translated-semigroup part h + S and the extra elements;
    the extras are carried by increasing powers of b at exponents chosen so
    each lands on its own row, with a second exponent pattern as fallback
    when the first would need a negative power of t.
    """
    if S.maximal_ideal_rank(0) > 1:
        raise HypothesisFails(
            "staircase families need at most one generator below the conductor"
        )
    tgt = _prepare_target(S, target)
    gamma, v0, k1 = S.gamma, S.conductor, S.multiplicity
    if tgt == ValueSet.of_semigroup(S):
        candidates = [("staircase-constant", [(0, 1)])]
    else:
        h = tgt.min_element
        window = tgt.members_below(v0)
        extras = [x for x in window if (x - h) not in S]
        r = len(extras)
        candidates = []
        if r == 0:
            candidates.append(("staircase-pure", [(h, 1), (0, _bpow(1))]))
        else:
            base = gamma - r - 1
            exps_a = [e - (base + i) * k1 for i, e in enumerate(extras, 1)]
            if all(e >= 0 for e in exps_a):
                terms = [(h, 1)]
                terms += [(x, _bpow(i)) for i, x in enumerate(exps_a, 1)]
                terms += [(0, _bpow(r + 1))]
                candidates.append(("staircase-a", terms))
            exps_b = [e - (i - 1) * k1 for i, e in enumerate(extras, 1)]
            exps_b.append(h - r * k1)
            if all(e >= 0 for e in exps_b):
                terms = [(x, _bpow(i)) for i, x in enumerate(exps_b[:r])]
                terms += [(exps_b[r], _bpow(r)), (0, _bpow(r + 1))]
                candidates.append(("staircase-b", terms))
            if not candidates:
                raise HypothesisFails(
                    f"no ladder with nonnegative exponents reaches {tgt}"
                )
    last = None
    for variant, terms in candidates:
        family = FamilyElement(terms)
        res = flat_limit(family, S)
        if res.value_set == tgt:
            return WitnessResult(family, tgt, 0, variant)
        last = res.value_set
    raise VerificationMismatch(
        f"ladder families reached {last}, not the target {tgt}"
    )


def maximal_join_family(
    S: NumericalSemigroup, choice: str = "auto"
) -> WitnessResult:
    """A family reaching the join of the two top translated semigroups.

    Requires exactly one minimal generator k1 below the conductor. The join
    is (e + S) union (k1 + S) union the conductor tail with e = (gamma-1)*k1
    + 1; when that set is merely a translate of a point already on the
    normalization chain, e drops to (gamma-1)*k1 - 1. choice forces a branch
    ("plus"/"minus") instead of the automatic rule.
    """
    if choice not in ("auto", "plus", "minus"):
        raise ValueError(f"unknown branch choice {choice!r}")
    if S.maximal_ideal_rank(0) != 1:
        raise HypothesisFails(
            "join families need exactly one generator below the conductor"
        )
    gamma, v0, k1 = S.gamma, S.conductor, S.multiplicity
    plus_e = (gamma - 1) * k1 + 1

    def join_set(e):
        elems = sorted(
            {e + x for x in S.smalls} | {k1 + x for x in S.smalls}
        )
        return ValueSet(S, [x for x in elems if x < v0], v0)

    if choice == "auto":
        chain_isos = {
            ValueSet(S, T.smalls, T.conductor)
            for T in S.normalization_chain()
        }
        e = plus_e
        if join_set(plus_e).iso_normalize() in chain_isos:
            e = (gamma - 1) * k1 - 1
            branch = "minus"
        else:
            branch = "plus"
    else:
        branch = choice
        e = plus_e if choice == "plus" else (gamma - 1) * k1 - 1
    if e < 1:
        raise HypothesisFails("join exponent would not be positive")
    target = join_set(e)
    if target.colength != S.delta:
        raise HypothesisFails(
            f"join of {e} and {k1} leaves the stratum (colength "
            f"{target.colength} != {S.delta})"
        )
    family = FamilyElement([(e, 1), (k1, _bpow(1)), (0, _bpow(2))])
    res = flat_limit(family, S)
    if res.value_set != target:
        raise VerificationMismatch(
            f"join family reached {res.value_set}, expected {target}"
        )
    return WitnessResult(family, target, 0, "join-" + branch)


def descent_family(S: NumericalSemigroup, target: ValueSet) -> WitnessResult:
    """A witness for the target built one step down the normalization chain.

    Requires the multiplicity condition. The target shifted down by one is
    reached over the partial normalization by a staircase family, and t times
    that family reaches the target itself; the limit is taken without unit
    normalization, so the result carries offset 1.
    """
    if not S.multiplicity_condition():
        raise HypothesisFails(
            "descent needs the multiplicity condition on the semigroup"
        )
    tgt = _prepare_target(S, target)
    if tgt == ValueSet.of_semigroup(S):
        raise HypothesisFails("the ring itself does not descend")
    S2 = S.partial_normalization()
    v0 = S.conductor
    down = ValueSet(S2, [x - 1 for x in tgt.members_below(v0)], v0 - 1)
    inner = staircase_family(S2, down)
    family = FamilyElement([(1, 1)]) * inner.family
    res = flat_limit(family, S, normalize=False)
    if res.value_set != tgt:
        raise VerificationMismatch(
            f"descent family reached {res.value_set}, expected {tgt}"
        )
    return WitnessResult(family, tgt, 1, "descent-" + inner.variant)


def search_family(
    S: NumericalSemigroup,
    target: ValueSet,
    budget: SearchBudget = None,
) -> Union[WitnessResult, ExhaustedReport]:
    """Deterministic search for a family reaching the target.

    Candidates are t^e0 + sum of b^i t^(c_i) with e0 the least target element,
    consecutive powers of b, and the c_i drawn from the target's module
    generators, their downward semigroup translates, and 0. Returns the first
    witness in enumeration order, or an ExhaustedReport of every distinct
    limit encountered within the budget.
    """
    budget = budget if budget is not None else SearchBudget()
    terms, beta_degree, cap = budget.resolve(S)
    tgt = _prepare_target(S, target)
    if tgt == ValueSet.of_semigroup(S):
        family = FamilyElement([(0, 1)])
        return WitnessResult(family, tgt, 0, "search")
    e0 = tgt.min_element
    pool = set()
    for g in tgt.module_generators():
        if g <= cap:
            pool.add(g)
        for s in S.smalls:
            if s > 0 and g - s >= 0 and g - s <= cap:
                pool.add(g - s)
    pool.add(0)
    pool = sorted(pool)
    tried = 0
    seen = []
    for m in range(1, min(terms - 1, beta_degree) + 1):
        for combo in product(pool, repeat=m):
            terms_list = [(e0, 1)]
            terms_list += [(c, _bpow(i)) for i, c in enumerate(combo, 1)]
            family = FamilyElement(terms_list)
            tried += 1
            try:
                res = flat_limit(family, S)
            except RankDrop:
                continue
            if res.value_set == tgt:
                return WitnessResult(family, tgt, 0, "search")
            if res.value_set not in seen:
                seen.append(res.value_set)
    return ExhaustedReport(tuple(seen), tried)
