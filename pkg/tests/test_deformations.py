"""Flat limits against an independent Grassmann-coordinate oracle."""

import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from picboundary import (
    BetaScalar,
    FamilyElement,
    NotAUnit,
    NumericalSemigroup,
    ParseError,
    PicBoundaryError,
    ValueSet,
    family_module,
    flat_limit,
    in_filtration,
    iterate_semigroups,
)
from picboundary.betapoly import (
    padd,
    pconst,
    peval,
    pgcd,
    pmul,
    pneg,
    poly,
    porder,
    ptext,
)


# -- oracle: limit via normalized determinant coordinates ---------------------


def _poly_det(mat):
    n = len(mat)
    det = ()
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = pconst(sign)
        for i in range(n):
            term = pmul(term, mat[i][perm[i]])
            if not term:
                break
        det = padd(det, term)
    return det


def oracle_limit_leads(family, S):
    """Leads of the limit by minor coordinates: compute every maximal minor
    of the family's row matrix over Q[b], divide out the common power of b,
    and evaluate at 0. The surviving coordinates cut out the limit subspace;
    its pivot columns are the lexicographically smallest surviving support.
    """
    rows = family_module(family, S)
    gamma, v0 = S.gamma, S.conductor
    if gamma == 0:
        return ()
    coords = {}
    for cols in combinations(range(v0), gamma):
        det = _poly_det([[poly(rows[i][j]) for j in cols] for i in range(gamma)])
        if det:
            coords[cols] = det
    assert coords, "family rows must have full rank over Q(b)"
    m = min(porder(d) for d in coords.values())
    surviving = {
        cols: d[m] for cols, d in coords.items() if len(d) > m and d[m] != 0
    }
    return min(surviving)


def fam(text):
    return FamilyElement.parse(text)


def sg(*gens):
    return NumericalSemigroup.from_generators(list(gens))


# -- scalar algebra -----------------------------------------------------------


def test_beta_scalar_algebra():
    b = BetaScalar.beta_power(1)
    one = BetaScalar.constant(1)
    assert (b + b) == BetaScalar((0, 2))
    assert b * b == BetaScalar.beta_power(2)
    assert (one + b) * (one - b) == BetaScalar((1, 0, -1))
    q = (one + b) / (one - b)
    assert q * (one - b) == one + b
    assert (b / b) == one
    assert BetaScalar((0, 2), (0, 0, 4)).num == (Fraction(1, 2),)
    assert str(BetaScalar((1, 1))) == "1 + b"
    assert str(BetaScalar((0, -1, 2))) == "-b + 2*b^2"
    with pytest.raises(ZeroDivisionError):
        b / (b - b)
    assert (b - b).is_zero()
    assert b.order() == 1 and (b * b / (one + b)).order() == 2
    assert (one / (one + b)).at_zero() == 1
    with pytest.raises(PicBoundaryError):
        (one / b).at_zero()


def test_poly_text():
    assert ptext(()) == "0"
    assert ptext(poly([1, 0, -1])) == "1 - b^2"
    assert ptext(poly([0, 1])) == "b"
    assert ptext(poly([Fraction(3, 2)])) == "3/2"
    assert pgcd(poly([1, 2, 1]), poly([1, 1])) == poly([1, 1])
    assert pneg(poly([1, -2])) == poly([-1, 2])
    assert peval(poly([1, 2, 3]), 2) == 17


# -- family elements and the textual grammar -----------------------------------


def test_family_parse_frozen():
    f = fam("t^7 + b*t + b^2")
    assert f.terms == (
        (0, BetaScalar.beta_power(2)),
        (1, BetaScalar.beta_power(1)),
        (7, BetaScalar.constant(1)),
    )
    assert str(f) == "t^7 + b*t + b^2"
    assert fam(str(f)) == f

    g = fam("t^5 + (b + b^2)")
    assert g.coefficient(0) == BetaScalar((0, 1, 1))
    assert str(g) == "t^5 + (b + b^2)"

    h = fam("(1 + b)*t^3 - 2*t")
    assert h.coefficient(3) == BetaScalar((1, 1))
    assert h.coefficient(1) == BetaScalar.constant(-2)
    assert fam(str(h)) == h

    # merging of repeated exponents
    assert fam("t + t") == fam("2*t")
    assert fam("b*t^2 + b^2*t^2") == fam("(b + b^2)*t^2")
    assert fam("t - t").is_zero()
    assert str(fam("t - t")) == "0"
    assert fam("0").is_zero()

    # products distribute
    assert fam("(t + b)*(t + b)") == fam("t^2 + 2*b*t + b^2")
    assert fam("t^2*(1 + b*t)") == fam("t^2 + b*t^3")


def test_family_parse_errors():
    for bad in ["", "t^", "t +", "(t", "t)*", "b^^2", "x + t", "t^-2", "3/2*t"]:
        with pytest.raises(ParseError):
            fam(bad)


def test_family_round_trip_sweep():
    rng = random.Random(7)
    b = BetaScalar.beta_power
    for _ in range(200):
        terms = []
        for e in rng.sample(range(9), rng.randint(1, 4)):
            coeff = BetaScalar((0,) * rng.randint(0, 3) + (rng.randint(-3, 3),))
            terms.append((e, coeff))
        try:
            f = FamilyElement(terms)
        except NotAUnit:
            continue
        if f.is_zero():
            continue
        assert fam(str(f)) == f
    assert fam(str(FamilyElement([(0, b(1) + b(3)), (2, -1)]))) == FamilyElement(
        [(0, b(1) + b(3)), (2, -1)]
    )


def test_family_normalized():
    f = fam("t^2 + b*t")
    assert f.min_exponent == 1
    assert f.normalized() == fam("t + b")
    assert fam("t + b").normalized() == fam("t + b")


# -- the module rows -----------------------------------------------------------


def test_family_module_shape():
    S = sg(3, 7, 8)
    rows = family_module(fam("t - b"), S)
    assert len(rows) == S.gamma == 2
    assert all(len(r) == S.conductor == 6 for r in rows)
    with pytest.raises(NotAUnit):
        family_module(fam("t - t"), S)


def test_family_module_row_content():
    S = sg(3, 7, 8)
    rows = family_module(fam("t - b"), S)
    assert rows[0] == [(0, -1), (1,), (), (), (), ()]
    assert rows[1] == [(), (), (), (0, -1), (1,), ()]
    # fractional coefficients are cleared by a row-wide scalar
    half = FamilyElement([(0, BetaScalar((Fraction(1, 2),))), (1, 1)])
    rows2 = family_module(half, sg(3, 4, 5))
    assert rows2[0] == [(1,), (2,), ()]


FROZEN_LIMITS = [
    # (family text, generators, limit elements, limit tail)
    ("t + b", (3, 4, 5), (1,), 3),
    ("t^2 + b*t + b^2", (3, 4, 5), (2,), 3),
    ("t^2 + 2*b*t + b^2", (3, 4, 5), (2,), 3),
    ("t^2 + b*t + 5*b^2", (3, 4, 5), (2,), 3),
    ("t^2 + b", (3, 4, 5), (2,), 3),
    ("t - b", (3, 7, 8), (1, 4), 6),
    ("t^3 + b*t + b^2", (3, 7, 8), (3, 4), 6),
    ("t^2 + b", (2, 5), (0, 2), 4),  # unit family: the ring itself
    ("t + b", (4, 5, 6), (1, 5, 6, 7), 8),
    ("t^2 + b*t", (4, 5, 6), (1, 5, 6, 7), 8),  # normalized to t + b
    ("t^2 + b", (4, 5, 6), (2, 4, 6, 7), 8),
    ("t^2 + b*t + b^2", (4, 5, 6), (2, 5, 6, 7), 8),
    ("t^3 + b", (4, 5, 6), (3, 5, 6, 7), 8),
    ("t^3 + b*t^2 + b^2*t + b^3", (4, 5, 6), (3, 4, 5, 7), 8),
    ("t^4 + b*t^5 + b^2*t^6 + b^3*t^7 + b^4", (4, 5, 6), (4, 5, 6, 7), 8),
    ("b + t^5 + t^6 + t^7", (4, 5, 6), (4, 5, 6, 7), 8),
    ("t^5 + b", (3, 4, 5), (0,), 3),  # generic member is a unit of the ring
]


@pytest.mark.parametrize("text,gens,elems,tail", FROZEN_LIMITS)
def test_flat_limit_frozen(text, gens, elems, tail):
    S = sg(*gens)
    res = flat_limit(fam(text), S)
    assert res.value_set == ValueSet(S, elems, tail), text
    assert res.value_set.colength == S.delta
    assert in_filtration(res.value_set)
    assert res.leads == tuple(res.value_set.members_below(S.conductor))


@pytest.mark.parametrize("text,gens,elems,tail", FROZEN_LIMITS)
def test_flat_limit_matches_oracle(text, gens, elems, tail):
    S = sg(*gens)
    got = flat_limit(fam(text), S)
    assert got.leads == oracle_limit_leads(fam(text), S), text


def test_unit_normalization_blocks_non_unit_reading():
    # t^7 + b*t over {0,7,9}+[12,): read as t(t^6 + b), a unit family times t,
    # the limit is NOT {7,8,10} (which only the non-normalized rows produce)
    S = NumericalSemigroup.from_small_elements((0, 7, 9), 12)
    res = flat_limit(fam("t^7 + b*t"), S)
    assert res.value_set == ValueSet(S, (6, 7, 9), 12)
    # whereas the honest unit family with the same top term reaches it
    res2 = flat_limit(fam("t^7 + b*t + b^2"), S)
    assert res2.value_set == ValueSet(S, (7, 8, 10), 12)
    assert oracle_limit_leads(fam("t^7 + b*t + b^2"), S) == (7, 8, 10)


def test_flat_limit_full_semigroup():
    N = NumericalSemigroup.naturals()
    res = flat_limit(fam("t + b"), N)
    assert res.value_set == ValueSet(N, [], 0)
    assert res.basis == () and res.leads == ()


def test_flat_limit_translation_invariance():
    # multiplying the family by t^k leaves the limit unchanged
    for text, gens in [("t + b", (3, 7, 8)), ("t^2 + b", (4, 5, 6))]:
        S = sg(*gens)
        base = flat_limit(fam(text), S).value_set
        for k in (1, 2, 5):
            shifted = fam(text) * fam(f"t^{k}")
            assert flat_limit(shifted, S).value_set == base


def test_flat_limit_scalar_invariance():
    # multiplying the family by a nonzero constant leaves the limit unchanged
    S = sg(3, 7, 8)
    assert (
        flat_limit(fam("3*t^3 + 3*b*t + 3*b^2"), S).value_set
        == flat_limit(fam("t^3 + b*t + b^2"), S).value_set
    )


def test_flat_limit_randomized_against_oracle():
    rng = random.Random(20240817)
    semis = [sg(3, 4, 5), sg(2, 5), sg(3, 7, 8), sg(3, 4), sg(2, 7), sg(5, 7, 9, 11, 13)]
    checked = 0
    for _ in range(160):
        S = rng.choice(semis)
        v0 = S.conductor
        nterms = rng.randint(1, 4)
        terms = []
        for _ in range(nterms):
            e = rng.randint(0, v0 + 2)
            k = rng.randint(0, 3)
            c = rng.randint(-2, 2)
            if c == 0:
                c = 1
            terms.append((e, BetaScalar((0,) * k + (c,))))
        f = FamilyElement(terms)
        if f.is_zero():
            continue
        res = flat_limit(f, S)
        assert res.leads == oracle_limit_leads(f, S), (str(f), S)
        assert res.value_set.colength == S.delta
        checked += 1
    assert checked > 120


def test_flat_limit_sweep_staircase_families():
    # b-power ladders over every small semigroup; oracle cross-check
    count = 0
    for S in iterate_semigroups(8):
        if S.is_full:
            continue
        for h in [k for k in S.smalls if k > 0][:2]:
            terms = [(h, BetaScalar.constant(1)), (0, BetaScalar.beta_power(1))]
            f = FamilyElement(terms)
            res = flat_limit(f, S)
            assert res.leads == oracle_limit_leads(f, S), (str(f), S)
            count += 1
    assert count > 20
