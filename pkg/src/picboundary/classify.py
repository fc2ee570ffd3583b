"""Structure reports for the compactified-Jacobian boundary of a monomial curve.

Given a numerical semigroup, the functions here grade every colength-delta
value set by the evidence we hold for it being a limit of free modules:

  Witnessed      an explicit verified one-parameter family reaches it
  TheoremBacked  a structure theorem guarantees it without an explicit family
  Exhausted      the monomial candidate search ran out within its budget
  CertifiedOut   it violates the filtration bound, so no family can reach it

boundary_report assembles the per-module table together with the ring-level
flags (Gorenstein data, generator ranks, chain structure, necessary
conditions) into one deterministic JSON-ready dictionary.

Cross-statements between the flags are asserted, never reconciled: any
disagreement raises VerificationMismatch.
"""

from __future__ import annotations

from functools import lru_cache

from .deformations import FamilyElement, flat_limit
from .errors import (
    HypothesisFails,
    HypothesisNotApplicable,
    PreconditionFailed,
    VerificationMismatch,
)
from .valuesets import ValueSet, dual, enumerate_modules, in_filtration, iso_classes
from .witnesses import (
    SearchBudget,
    WitnessResult,
    normalization_family,
    search_family,
    staircase_family,
)

WITNESSED = "Witnessed"
THEOREM_BACKED = "TheoremBacked"
EXHAUSTED = "Exhausted"
CERTIFIED_OUT = "CertifiedOut"

PROVED = "Proved"
ALL_WITNESSED = "AllWitnessed"
COUNTEREXAMPLE_EVIDENCE = "CounterexampleEvidence"

# Probe searches only certify "no witness under budget"; a trimmed budget
# keeps them interactive on conductor-16 rings without changing semantics.
_PROBE_BUDGET = SearchBudget(terms=4)

# Chain duals are theorem-backed regardless, so only a shallow search runs
# on them, to upgrade the easy ones to an explicit family.
_CHAIN_BUDGET = SearchBudget(terms=3)


def _kth(semigroup, j):
    # j-th smallest element, extended past the conductor (k_0 = 0).
    if j < semigroup.gamma:
        return semigroup.smalls[j]
    return semigroup.conductor + (j - semigroup.gamma)


def _is_planar(semigroup):
    # Two-generator surrogate for "the local ring embeds in a smooth surface".
    return len(semigroup.minimal_generators) <= 2


def _module_from_generators(semigroup, generators):
    return ValueSet(semigroup, generators, semigroup.conductor).closure()


def _equality_clauses(semigroup):
    """Clause report for the boundedness dichotomy: either the conductor is
    large relative to the top small element, or the smalls climb with
    consecutive gaps bounded by v0 - top once they pass v0 - k1. Whenever
    every colength-delta module is bounded, one of the clauses holds; this
    is swept exhaustively for v0 <= 20 in the test suite."""
    gamma = semigroup.gamma
    v0 = semigroup.conductor
    k1 = semigroup.multiplicity
    degenerate = gamma <= 1
    top = semigroup.smalls[-1] if gamma >= 1 else 0
    conductor_bound = v0 >= top + k1 - 1
    report = {
        "conductor_bound": conductor_bound,
        "degenerate": degenerate,
        "below_bound": None,
    }
    if conductor_bound or degenerate:
        report["satisfied"] = conductor_bound
        return report
    second_top = semigroup.smalls[-2]
    second_top_bound = v0 - k1 <= second_top
    top_gap_bound = top <= v0 - top + second_top
    middle_bounds = True
    for j in range(2, gamma - 1):
        kj = semigroup.smalls[j]
        prev = semigroup.smalls[j - 1]
        # The gap bound applies once the previous small reaches v0 - k1;
        # guarding on the current small instead rejects bounded rings,
        # first at {0,5,7,10,12}+[14,).
        if prev >= v0 - k1 and kj > v0 - top + prev:
            middle_bounds = False
            break
    report["below_bound"] = {
        "second_top_bound": second_top_bound,
        "top_gap_bound": top_gap_bound,
        "middle_bounds": middle_bounds,
    }
    report["satisfied"] = second_top_bound and top_gap_bound and middle_bounds
    return report


def all_modules_filtration_bounded(semigroup):
    """True when every colength-delta value set satisfies the filtration bound.

    Two cross-statements are asserted: a single generator below the conductor
    together with a large conductor forces the answer True, and whenever the
    answer is True one of the dichotomy clauses must hold.
    """
    modules = enumerate_modules(semigroup, semigroup.delta)
    bounded = all(in_filtration(vs) for vs in modules)
    gamma = semigroup.gamma
    if gamma >= 1 and semigroup.maximal_ideal_rank(0) <= 1:
        top = semigroup.smalls[-1]
        if semigroup.conductor >= top + semigroup.multiplicity - 1 and not bounded:
            raise VerificationMismatch(
                "a single-generator ring with a large conductor must bound all "
                "modules, yet one escapes on " + str(semigroup)
            )
    if bounded and not _equality_clauses(semigroup)["satisfied"]:
        raise VerificationMismatch(
            "every module is bounded but neither dichotomy clause holds on "
            + str(semigroup)
        )
    return bounded


def filtration_equality_conditions(semigroup):
    """Clause report for the filtration-equality sufficient conditions.

    Raises PreconditionFailed when some module escapes the filtration bound,
    since the clause dichotomy is only claimed in the bounded case.
    """
    if not all_modules_filtration_bounded(semigroup):
        raise PreconditionFailed(
            "the clause dichotomy applies only when every colength-delta "
            "module satisfies the filtration bound"
        )
    return _equality_clauses(semigroup)


def _extract_shape(semigroup):
    """Match the two small-multiplicity shapes that force several generators
    at the top conductor value. Returns (kind, n, m) or None."""
    v0 = semigroup.conductor
    k1 = semigroup.multiplicity
    small_set = semigroup.small_set
    if k1 >= 2 and v0 % k1 == 0:
        m = v0 // k1 - 1
        hits = [j for j in range(1, m + 1) if j * k1 + 1 in small_set]
        if hits:
            n = hits[0]
            expected = {0}
            expected.update(j * k1 for j in range(1, m + 1))
            expected.update(j * k1 + 1 for j in range(n, m + 1))
            if expected == set(semigroup.smalls):
                return ("multiple", n, m)
    if k1 >= 2 and (v0 + 1) % k1 == 0:
        m = (v0 + 1) // k1 - 1
        hits = [j for j in range(1, m + 1) if j * k1 - 1 in small_set]
        if hits:
            n = hits[0]
            expected = {0}
            expected.update(j * k1 for j in range(1, m + 1))
            expected.update(j * k1 - 1 for j in range(n, m + 1))
            if expected == set(semigroup.smalls):
                return ("offset", n, m)
    return None


def _probe_record(semigroup, module, predicted_outside, budget):
    record = {
        "module": str(module),
        "in_E": module.colength == semigroup.delta,
        "in_filtration": None,
        "predicted_outside": predicted_outside,
        "status": None,
        "family": None,
        "candidates_tried": None,
    }
    if not record["in_E"]:
        return record
    record["in_filtration"] = in_filtration(module)
    if not record["in_filtration"]:
        record["status"] = CERTIFIED_OUT
        return record
    result = search_family(semigroup, module, budget)
    if isinstance(result, WitnessResult):
        record["status"] = WITNESSED
        record["family"] = str(result.family)
    else:
        record["status"] = EXHAUSTED
        record["candidates_tried"] = result.candidates_tried
    return record


def counterexample_probes(semigroup, budget=None):
    """Executable counterexample constructions for rings whose conductor sits
    exactly one below the top small element plus the multiplicity.

    The probe modules follow the printed constructions verbatim; whether each
    lands in the colength-delta stratum is recorded (in_E), never assumed.
    When the construction is predicted to lie outside the closure of the free
    orbit, a search witness for it raises VerificationMismatch.
    """
    budget = _PROBE_BUDGET if budget is None else budget
    gamma = semigroup.gamma
    v0 = semigroup.conductor
    k1 = semigroup.multiplicity
    top = semigroup.smalls[-1] if gamma >= 1 else 0
    applicable = (
        gamma >= 2
        and v0 == top + k1 - 1
        and semigroup.maximal_ideal_rank(0) != 1
    )
    if not applicable:
        raise HypothesisNotApplicable(
            "probes need the top-conductor equality and several generators "
            "below the conductor"
        )
    top_case = None
    if k1 > 4:
        module = _module_from_generators(
            semigroup, [k1 + 4, v0 - k1, v0 - k1 + 2, v0 - k1 + 4]
        )
        top_case = _probe_record(semigroup, module, True, budget)
        top_case["second_top_matches"] = semigroup.smalls[-2] == v0 - k1
    shape_case = None
    shape = _extract_shape(semigroup)
    if shape is not None:
        kind, n, m = shape
        module = _module_from_generators(semigroup, [k1, n * k1 + 2, m * k1 + 3])
        predicted = k1 > 3 if kind == "multiple" else k1 > 4
        shape_case = _probe_record(semigroup, module, predicted, budget)
        shape_case["shape"] = kind
        shape_case["n"] = n
        shape_case["m"] = m
        if k1 <= 4:
            shape_case["exception_note"] = (
                "multiplicity %d is inside the small-multiplicity exception; "
                "equality of the closure can still fail by direct evidence" % k1
            )
        else:
            shape_case["exception_note"] = None
    if top_case is None and shape_case is None:
        raise HypothesisNotApplicable("neither probe construction applies")
    violations = [
        "%s is reached by %s" % (record["module"], record["family"])
        for record in (top_case, shape_case)
        if record is not None
        and record["predicted_outside"]
        and record["status"] == WITNESSED
    ]
    if violations:
        raise VerificationMismatch(
            "probe modules predicted outside the closure were witnessed: "
            + "; ".join(violations)
        )
    return {"top_case": top_case, "shape_case": shape_case}


def _chain_duals(semigroup):
    """Colength-delta translates of the duals of the partial-normalization
    chain rings; these are boundary members by the chain theorem."""
    out = {}
    delta = semigroup.delta
    chain = semigroup.normalization_chain()
    for j, ring in enumerate(chain[1:], 1):
        vs, shift = dual(ValueSet(semigroup, ring.smalls, ring.conductor))
        if shift != 0:
            continue
        n = delta - vs.colength
        if n < -vs.min_element:
            continue
        out.setdefault(vs.translate(n), j)
    return out


@lru_cache(maxsize=None)
def _status_rows(semigroup, budget):
    delta = semigroup.delta
    rank = semigroup.maximal_ideal_rank(0)
    planar = _is_planar(semigroup)
    ring_point = ValueSet.of_semigroup(semigroup)
    chain_points = _chain_duals(semigroup)
    norm_point = None
    if not semigroup.is_full:
        prime = semigroup.partial_normalization()
        norm_point = ValueSet(
            semigroup, [1 + x for x in prime.smalls], prime.conductor + 1
        )
    rows = []
    for vs in enumerate_modules(semigroup, delta):
        row = {
            "value_set": str(vs),
            "in_filtration": in_filtration(vs),
            "status": None,
            "family": None,
            "variant": None,
            "offset": None,
            "free_orbit": vs == ring_point,
            "chain_member": vs in chain_points,
        }
        witness = None
        if not row["in_filtration"]:
            row["status"] = CERTIFIED_OUT
        elif vs == ring_point:
            family = FamilyElement([(0, 1)])
            result = flat_limit(family, semigroup)
            if result.value_set != vs:
                raise VerificationMismatch(
                    "the constant family must recover the ring on " + str(semigroup)
                )
            witness = WitnessResult(family, vs, 0, "constant")
        elif rank <= 1:
            try:
                witness = staircase_family(semigroup, vs)
            except HypothesisFails:
                row["status"] = THEOREM_BACKED
                row["variant"] = "single-generator"
        elif norm_point is not None and vs == norm_point:
            witness = normalization_family(semigroup)
        elif row["chain_member"]:
            result = search_family(semigroup, vs, _CHAIN_BUDGET)
            if isinstance(result, WitnessResult):
                witness = result
            else:
                row["status"] = THEOREM_BACKED
                row["variant"] = "chain-dual"
        else:
            result = search_family(semigroup, vs, budget)
            if isinstance(result, WitnessResult):
                witness = result
            elif planar:
                row["status"] = THEOREM_BACKED
                row["variant"] = "planar-irreducible"
            else:
                row["status"] = EXHAUSTED
                row["variant"] = "exhausted:%d" % result.candidates_tried
        if witness is not None:
            row["status"] = WITNESSED
            row["family"] = str(witness.family)
            row["variant"] = witness.variant
            row["offset"] = witness.offset
        rows.append(row)
    if rank <= 1:
        for row in rows:
            if row["in_filtration"] and row["status"] not in (WITNESSED, THEOREM_BACKED):
                raise VerificationMismatch(
                    "single-generator rings must cover every bounded module, "
                    "missing %s on %s" % (row["value_set"], semigroup)
                )
    return tuple(rows)


def _module_statuses(semigroup, budget):
    return [dict(row) for row in _status_rows(semigroup, budget)]


def _level_summary(semigroup, budget):
    rows = _module_statuses(semigroup, budget)
    return {
        "semigroup": str(semigroup),
        "modules": len(rows),
        "witnessed": sum(r["status"] == WITNESSED for r in rows),
        "theorem_backed": sum(r["status"] == THEOREM_BACKED for r in rows),
        "certified_out": sum(r["status"] == CERTIFIED_OUT for r in rows),
        "exhausted": sum(r["status"] == EXHAUSTED for r in rows),
    }


def equivalence_report(semigroup, budget=None):
    """Compare the single-generator test modulo t*conductor against closure
    coverage of the modules at the ring level and one normalization step down.

    Only the checkable direction is asserted: when the generator test passes,
    every module at both levels must carry positive evidence. The converse is
    set-theoretic only, so full coverage with a failing generator test is
    flagged as inconsistent rather than raised. Evidence gaps (budget
    exhaustion) are reported, not resolved.
    """
    budget = SearchBudget() if budget is None else budget
    single = semigroup.maximal_ideal_rank(1) == 1
    mult = semigroup.multiplicity_condition()
    if single != mult:
        raise VerificationMismatch(
            "the single-generator rank and the multiplicity form disagree on "
            + str(semigroup)
        )
    if semigroup.is_full:
        return {
            "single_generator": single,
            "multiplicity_condition": mult,
            "ring_level": _level_summary(semigroup, budget),
            "step_level": None,
            "consistent": True,
            "notes": ["smooth point: the boundary is empty"],
        }
    ring_level = _level_summary(semigroup, budget)
    step_level = None
    prime = None
    if not semigroup.is_full:
        prime = semigroup.partial_normalization()
        step_level = _level_summary(prime, budget)
    report = {
        "single_generator": single,
        "multiplicity_condition": mult,
        "ring_level": ring_level,
        "step_level": step_level,
        "consistent": True,
        "notes": [],
    }
    levels = [ring_level] + ([step_level] if step_level is not None else [])
    refuted = any(level["certified_out"] > 0 for level in levels)
    unresolved = any(level["exhausted"] > 0 for level in levels)
    if single:
        if refuted or unresolved:
            raise VerificationMismatch(
                "the generator test passes but module coverage fails on "
                + str(semigroup)
            )
        for level in [semigroup] + ([prime] if prime is not None else []):
            if level.gamma >= 1 and level.maximal_ideal_rank(0) <= 1:
                top = level.smalls[-1]
                if level.conductor >= top + level.multiplicity - 1:
                    if not all_modules_filtration_bounded(level):
                        raise VerificationMismatch(
                            "the filtration bound must cover " + str(level)
                        )
        report["notes"].append(
            "every module at both levels carries a verified family"
        )
    elif refuted:
        report["notes"].append(
            "closure coverage refuted by a filtration-bound violation"
        )
    elif unresolved:
        report["notes"].append(
            "coverage unresolved: some modules exhausted the search budget"
        )
    else:
        # Coverage evidence is set-theoretic; the generator test detects a
        # finer (scheme-level) boundary equality.  Coverage without a single
        # generator is therefore possible and is reported, not raised.
        report["consistent"] = False
        report["notes"].append(
            "every module is covered although the generator test fails; "
            "set-level coverage does not certify the boundary equality"
        )
    return report


def normalization_gorenstein_check(semigroup):
    """(computed, predicted) Gorenstein flags for the one-step normalization.

    predicted is the closed form: multiplicity two below the conductor, or a
    ring whose only small element is zero with conductor under four. Any
    disagreement raises VerificationMismatch.
    """
    if semigroup.is_full:
        raise HypothesisNotApplicable(
            "the full semigroup has no normalization step"
        )
    computed = semigroup.partial_normalization().is_gorenstein()
    v0 = semigroup.conductor
    k1 = semigroup.multiplicity
    predicted = (v0 > k1 and k1 == 2) or (v0 == k1 and k1 < 4)
    if computed != predicted:
        raise VerificationMismatch(
            "normalization Gorenstein flag disagrees with the closed form on "
            + str(semigroup)
        )
    return (computed, predicted)


def boundary_necessary_conditions(semigroup):
    """Necessary conditions for the boundary to be one normalization
    pushforward: two-generator (planar surrogate) or conductor 2*delta - 1,
    plus the conductor-drop condition across the first chain step."""
    planar = _is_planar(semigroup)
    near_symmetric = semigroup.conductor == 2 * semigroup.delta - 1
    drop = None
    drop_ok = True
    if not semigroup.is_full:
        drop = semigroup.conductor - semigroup.partial_normalization().conductor
        drop_ok = semigroup.multiplicity == 2 or drop == 1
    return {
        "planar": planar,
        "near_symmetric": near_symmetric,
        "necessary_ok": planar or near_symmetric,
        "conductor_drop": drop,
        "drop_condition_ok": drop_ok,
    }


def chain_structure(semigroup):
    """Chain-conductor report: the dichotomy at the first step, the unique
    small case, and the pivot index splitting the conductor-drop pattern.

    Applies to non-planar rings with at least one positive small element;
    others raise HypothesisNotApplicable.
    """
    if semigroup.is_full:
        raise HypothesisNotApplicable("the full semigroup has no chain")
    if _is_planar(semigroup):
        raise HypothesisNotApplicable(
            "planar rings are outside the chain analysis"
        )
    if semigroup.gamma == 1:
        raise HypothesisNotApplicable(
            "the maximal ideal equals the conductor ideal"
        )
    chain = semigroup.normalization_chain()
    conductors = [ring.conductor for ring in chain]
    v0 = semigroup.conductor
    delta = semigroup.delta
    k1 = semigroup.multiplicity
    v1 = conductors[1]
    report = {
        "chain_conductors": conductors,
        "dichotomy_holds": v1 == k1 or v0 - v1 == k1,
        "unique_small_case": semigroup.smalls == (0, 3) and v0 == 5,
        "pivot": None,
        "pivot_bound": delta - k1 + 1,
        "trace": [],
    }
    if v1 <= k1:
        report["trace"].append(
            "first chain conductor does not exceed the multiplicity"
        )
        return report
    if v0 - v1 != k1:
        report["trace"].append(
            "conductor drop across the first step is not the multiplicity"
        )
        return report
    pivots = []
    for j in range(1, delta + 1):
        if j >= delta - k1 + 1 or conductors[j] != delta:
            continue
        below = all(v0 - conductors[i] == _kth(semigroup, i) for i in range(1, j))
        above = all(
            v0 - conductors[i] == _kth(semigroup, i - 1)
            for i in range(j + 1, delta + 1)
        )
        if below and above:
            pivots.append(j)
    if len(pivots) > 1:
        raise VerificationMismatch(
            "the chain pivot is not unique on " + str(semigroup)
        )
    if pivots:
        report["pivot"] = pivots[0]
    elif all(conductors[j] != delta for j in range(1, delta + 1)):
        report["trace"].append("no chain conductor equals the gap count")
    else:
        report["trace"].append(
            "chain conductors fail the element-matching clauses"
        )
    return report


def boundary_report(semigroup, budget=None):
    """Full structure report: ring flags, per-module evidence table, chain
    data, and the component-count surrogate, in deterministic field order."""
    budget = SearchBudget() if budget is None else budget
    rank0 = semigroup.maximal_ideal_rank(0)
    rank1 = semigroup.maximal_ideal_rank(1)
    mult = semigroup.multiplicity_condition()
    if mult != (rank1 == 1):
        raise VerificationMismatch(
            "multiplicity condition and shifted generator rank disagree on "
            + str(semigroup)
        )
    planar = _is_planar(semigroup)
    m_equals_c = (not semigroup.is_full) and semigroup.gamma == 1
    bounded = all_modules_filtration_bounded(semigroup)
    rows = _module_statuses(semigroup, budget)
    exhausted = [r["value_set"] for r in rows if r["status"] == EXHAUSTED]
    if rank0 <= 1 or planar:
        closure_status = PROVED
    elif not exhausted:
        closure_status = ALL_WITNESSED
    else:
        closure_status = COUNTEREXAMPLE_EVIDENCE
    equivalence = equivalence_report(semigroup, budget)
    necessary = boundary_necessary_conditions(semigroup)
    gorenstein_prime = None
    if not semigroup.is_full:
        gorenstein_prime = normalization_gorenstein_check(semigroup)[0]
    try:
        chain = chain_structure(semigroup)
    except HypothesisNotApplicable:
        chain = None
    row_by_set = {r["value_set"]: r for r in rows}
    dominated = 0
    classes = iso_classes(semigroup)
    for representative in classes:
        n = semigroup.delta - representative.colength
        if n < -representative.min_element:
            continue
        row = row_by_set.get(str(representative.translate(n)))
        if row is None or row["free_orbit"]:
            continue
        if row["status"] in (WITNESSED, THEOREM_BACKED):
            dominated += 1
    drop = necessary["conductor_drop"]
    return {
        "semigroup": semigroup.to_dict(),
        "M_equals_C": m_equals_c,
        "gorenstein": semigroup.is_gorenstein(),
        "gorenstein_prime": gorenstein_prime,
        "multiplicity_condition": mult,
        "rank_M_mod_C": rank0,
        "rank_M_mod_tC": rank1,
        "planar": planar,
        "all_modules_filtration_bounded": bounded,
        "filtration_closure_status": closure_status,
        "unreachable_modules": exhausted,
        "equivalence_consistent": equivalence["consistent"],
        "boundary_necessary_ok": necessary["necessary_ok"],
        "conductor_drop": (drop == 1) if drop is not None else None,
        "boundary_fully_described": m_equals_c or semigroup.is_full,
        "component_surrogate": len(classes) - dominated,
        "chain_structure": chain,
        "modules": rows,
        "notes": [
            "planar means generated by two elements",
            "component count is an isomorphism-class surrogate",
        ],
    }


def survey_row(semigroup):
    """Flat per-semigroup summary for survey tables. Runs no family searches,
    so the cost stays polynomial in the conductor."""
    modules = enumerate_modules(semigroup, semigroup.delta)
    bounded_count = sum(1 for vs in modules if in_filtration(vs))
    necessary = boundary_necessary_conditions(semigroup)
    try:
        pivot = chain_structure(semigroup)["pivot"]
    except HypothesisNotApplicable:
        pivot = None
    if semigroup.is_full:
        gorenstein_prime = ""
    else:
        gorenstein_prime = normalization_gorenstein_check(semigroup)[0]
    drop = necessary["conductor_drop"]
    return {
        "generators": " ".join(str(g) for g in semigroup.minimal_generators),
        "conductor": semigroup.conductor,
        "delta": semigroup.delta,
        "gamma": semigroup.gamma,
        "multiplicity": semigroup.multiplicity,
        "gorenstein": semigroup.is_gorenstein(),
        "gorenstein_prime": gorenstein_prime,
        "m_equals_c": (not semigroup.is_full) and semigroup.gamma == 1,
        "multiplicity_condition": semigroup.multiplicity_condition(),
        "rank_m_mod_c": semigroup.maximal_ideal_rank(0),
        "rank_m_mod_tc": semigroup.maximal_ideal_rank(1),
        "planar": _is_planar(semigroup),
        "modules": len(modules),
        "filtration_bounded": bounded_count,
        "all_modules_filtration_bounded": all_modules_filtration_bounded(semigroup),
        "near_symmetric": necessary["near_symmetric"],
        "necessary_ok": necessary["necessary_ok"],
        "conductor_drop": drop if drop is not None else "",
        "chain_pivot": pivot if pivot is not None else "",
    }
