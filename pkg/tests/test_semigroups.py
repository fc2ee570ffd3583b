"""Semigroup invariants against an independent brute-force oracle."""

import math

import pytest

from picboundary import (
    AlreadyNormal,
    ClosureDiagnostic,
    ConductorTooLarge,
    EmptyGenerators,
    MAX_CONDUCTOR,
    NotCoprime,
    NumericalSemigroup,
    PicBoundaryError,
    iterate_semigroups,
)


def oracle_members(gens, bound):
    """All sums of generators below `bound`, by breadth-first closure.

    Independent of the membership table construction in the package.
    """
    members = {0}
    frontier = {0}
    while frontier:
        new = set()
        for m in frontier:
            for g in gens:
                s = m + g
                if s < bound and s not in members:
                    new.add(s)
        members |= new
        frontier = new
    return members


def oracle_conductor(gens, bound=400):
    members = oracle_members(gens, bound)
    gaps = [n for n in range(bound) if n not in members]
    return max(gaps) + 1 if gaps else 0


CASES = [
    # gens, conductor, delta, gamma, smalls, gaps, multiplicity
    ([1], 0, 0, 0, (), (), 1),
    ([2, 3], 2, 1, 1, (0,), (1,), 2),
    ([2, 5], 4, 2, 2, (0, 2), (1, 3), 2),
    ([2, 7], 6, 3, 3, (0, 2, 4), (1, 3, 5), 2),
    ([3, 4, 5], 3, 2, 1, (0,), (1, 2), 3),
    ([3, 4], 6, 3, 3, (0, 3, 4), (1, 2, 5), 3),
    ([3, 5, 7], 5, 3, 2, (0, 3), (1, 2, 4), 3),
    ([3, 7, 8], 6, 4, 2, (0, 3), (1, 2, 4, 5), 3),
    ([4, 5, 6], 8, 4, 4, (0, 4, 5, 6), (1, 2, 3, 7), 4),
    ([3, 7, 11], 9, 5, 4, (0, 3, 6, 7), (1, 2, 4, 5, 8), 3),
    ([4, 13, 18, 19], 16, 11, 5, (0, 4, 8, 12, 13), (1, 2, 3, 5, 6, 7, 9, 10, 11, 14, 15), 4),
    ([5, 7, 9, 11, 13], 9, 6, 3, (0, 5, 7), (1, 2, 3, 4, 6, 8), 5),
]


@pytest.mark.parametrize("gens,v0,delta,gamma,smalls,gaps,mult", CASES)
def test_frozen_invariants(gens, v0, delta, gamma, smalls, gaps, mult):
    S = NumericalSemigroup.from_generators(gens)
    assert S.conductor == v0
    assert S.delta == delta
    assert S.gamma == gamma
    assert S.smalls == smalls
    assert S.gaps == gaps
    assert S.multiplicity == mult
    assert S.gamma == S.conductor - S.delta


@pytest.mark.parametrize("gens,v0,delta,gamma,smalls,gaps,mult", CASES)
def test_membership_matches_oracle(gens, v0, delta, gamma, smalls, gaps, mult):
    S = NumericalSemigroup.from_generators(gens)
    bound = 3 * (v0 + max(gens)) + 5
    mem = oracle_members(gens, bound)
    for n in range(bound):
        assert (n in S) == (n in mem)
    assert oracle_conductor(gens) == S.conductor


def test_generator_validation():
    with pytest.raises(EmptyGenerators):
        NumericalSemigroup.from_generators([])
    with pytest.raises(NotCoprime):
        NumericalSemigroup.from_generators([4, 6])
    with pytest.raises(PicBoundaryError):
        NumericalSemigroup.from_generators([0, 3])
    with pytest.raises(ConductorTooLarge):
        NumericalSemigroup.from_generators([2, 2 * MAX_CONDUCTOR + 3])
    with pytest.raises(ConductorTooLarge):
        NumericalSemigroup.from_generators([MAX_CONDUCTOR + 1, MAX_CONDUCTOR + 2])


def test_minimal_generators():
    assert NumericalSemigroup.from_generators([3, 4, 5, 7, 9]).minimal_generators == (3, 4, 5)
    assert NumericalSemigroup.from_generators([3, 7, 8]).minimal_generators == (3, 7, 8)
    assert NumericalSemigroup.from_generators([1]).minimal_generators == (1,)
    S = NumericalSemigroup.from_small_elements((0, 5, 7), 9)
    assert S.minimal_generators == (5, 7, 9, 11, 13)


def test_from_small_elements_canonicalizes():
    # trailing run folds into the tail
    S = NumericalSemigroup.from_small_elements((0, 3, 4), 5)
    assert S.conductor == 3 and S.smalls == (0,)
    # entries at or above the conductor are redundant
    T = NumericalSemigroup.from_small_elements((0, 3, 7, 9), 6)
    assert T == NumericalSemigroup.from_generators([3, 7, 8])
    with pytest.raises(ClosureDiagnostic) as ei:
        NumericalSemigroup.from_small_elements((0, 3, 4), 9)
    assert set(ei.value.missing) == {6, 7, 8}
    with pytest.raises(ClosureDiagnostic):
        NumericalSemigroup.from_small_elements((2, 4), 6)


def test_gorenstein_and_symmetry():
    expected = {
        (2, 3): True,
        (3, 4): True,
        (4, 5, 6): True,
        (2, 7): True,
        (3, 4, 5): False,
        (3, 5, 7): False,
        (3, 7, 8): False,
    }
    for gens, ans in expected.items():
        S = NumericalSemigroup.from_generators(gens)
        assert S.is_gorenstein() is ans, gens
        assert S.symmetry_defect() == 2 * S.delta - S.conductor, gens
        assert (S.symmetry_defect() == 0) is ans, gens


def test_symmetry_remark_sweep():
    # a member j < v0 always reflects to a gap: j in S implies v0-1-j not in S
    for S in iterate_semigroups(12):
        v0 = S.conductor
        for j in S.smalls:
            assert (v0 - 1 - j) not in S
        if v0 > 0:
            assert (v0 - 1) not in S


def test_multiplicity_condition_frozen():
    expected = {
        (1,): False,  # degenerate: full semigroup
        (2, 3): True,
        (2, 5): True,
        (2, 7): True,
        (3, 4, 5): True,
        (3, 7, 8): True,
        (3, 5, 7): False,  # {0,3}+[5,): 5 != 3 + 3
        (3, 4): False,
        (4, 5, 6): False,
        (3, 7, 11): False,
    }
    for gens, ans in expected.items():
        S = NumericalSemigroup.from_generators(gens)
        assert S.multiplicity_condition() is ans, gens


def test_multiplicity_condition_equivalences_sweep():
    # three characterizations agree on every semigroup with conductor <= 14:
    # (1) v0 = k_{gamma-1} + k_1, (2) elements below and at the conductor are
    # 0, k_1, 2 k_1, ..., gamma k_1, (3) single generator below v0 + 1
    for S in iterate_semigroups(14):
        if S.is_full:
            assert S.multiplicity_condition() is False
            continue
        k1 = S.multiplicity
        a = list(S.smalls) + [S.conductor]
        arithmetic = all(a[i] == i * k1 for i in range(len(a)))
        rank_one = S.maximal_ideal_rank(shift=1) == 1
        assert S.multiplicity_condition() == arithmetic == rank_one, S


def test_maximal_ideal_rank_frozen():
    vals = {
        (3, 4, 5): (0, 1),
        (3, 7, 8): (1, 1),
        (4, 5, 6): (3, 3),
        (3, 4): (2, 2),
        (2, 5): (1, 1),
        (5, 7, 9, 11, 13): (2, 3),
    }
    for gens, (r0, r1) in vals.items():
        S = NumericalSemigroup.from_generators(gens)
        assert S.maximal_ideal_rank(shift=0) == r0, gens
        assert S.maximal_ideal_rank(shift=1) == r1, gens
    with pytest.raises(PicBoundaryError):
        NumericalSemigroup.from_generators([2, 3]).maximal_ideal_rank(shift=2)


def test_partial_normalization_chains():
    S = NumericalSemigroup.from_generators([3, 7, 8])
    chain = S.normalization_chain()
    assert [T.conductor for T in chain] == [6, 5, 3, 2, 0]
    assert [T.delta for T in chain] == [4, 3, 2, 1, 0]
    assert chain[1] == NumericalSemigroup.from_generators([3, 5, 7])
    assert chain[-1].is_full

    T = NumericalSemigroup.from_generators([3, 4])
    assert [U.conductor for U in T.normalization_chain()] == [6, 3, 2, 0]

    with pytest.raises(AlreadyNormal):
        NumericalSemigroup.naturals().partial_normalization()


def test_chain_length_sweep():
    for S in iterate_semigroups(12):
        chain = S.normalization_chain()
        assert len(chain) == S.delta + 1
        # deltas strictly descend by one and the tail is the full semigroup
        assert [T.delta for T in chain] == list(range(S.delta, -1, -1))


def test_iterate_semigroups_counts():
    # counts by Frobenius number f = v0 - 1; hand-checked for f <= 4
    by_f = {}
    for S in iterate_semigroups(14):
        if S.is_full:
            continue
        by_f[S.conductor - 1] = by_f.get(S.conductor - 1, 0) + 1
    assert by_f[1] == 1 and by_f[2] == 1 and by_f[3] == 2 and by_f[4] == 2
    # each enumerated set is genuinely closed: rebuild from its generators
    seen = set()
    for S in iterate_semigroups(10):
        assert S not in seen
        seen.add(S)
        assert NumericalSemigroup.from_generators(S.minimal_generators) == S


def test_str_and_repr():
    S = NumericalSemigroup.from_generators([3, 7, 8])
    assert str(S) == "{0,3}+[6,)"
    assert "3, 7, 8" in repr(S)
    d = S.to_dict()
    assert list(d) == [
        "generators",
        "conductor",
        "delta",
        "gamma",
        "small_elements",
        "gaps",
        "multiplicity",
    ]
    assert d["small_elements"] == [0, 3]


def test_gcd_multi_generator():
    # gcd over the whole set, not pairwise
    S = NumericalSemigroup.from_generators([6, 10, 15])
    assert S.conductor == oracle_conductor([6, 10, 15])
    assert 30 == S.conductor
