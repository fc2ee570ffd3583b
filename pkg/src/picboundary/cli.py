"""Command-line front end.

Subcommands
-----------
analyze             invariants of one semigroup as JSON
enumerate           colength-d stable value sets, optionally filtration-only
limit               exact limit of a one-parameter family
classify            full boundary report for one semigroup
replicate-examples  replay the bundled worked-example fixtures
survey              one summary row per semigroup up to a conductor bound

Conventions: JSON on stdout by default (`--csv` for surveys), no color, no
locale-dependent formatting; identical invocations print identical bytes.
Exit codes: 0 success, 2 parse error, 3 hypothesis not applicable,
4 verification mismatch (a theorem-backed assertion failed; the message
names the assertion), 1 any other engine rejection.
"""

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import fixtures
from .classify import boundary_report, survey_row
from .deformations import FamilyElement, flat_limit
from .errors import (
    HypothesisNotApplicable,
    ParseError,
    PicBoundaryError,
    VerificationMismatch,
)
from .semigroups import NumericalSemigroup, iterate_semigroups
from .valuesets import enumerate_modules, in_filtration

SURVEY_COLUMNS = (
    "generators",
    "conductor",
    "delta",
    "gamma",
    "multiplicity",
    "gorenstein",
    "gorenstein_prime",
    "m_equals_c",
    "multiplicity_condition",
    "rank_m_mod_c",
    "rank_m_mod_tc",
    "planar",
    "modules",
    "filtration_bounded",
    "all_modules_filtration_bounded",
    "near_symmetric",
    "necessary_ok",
    "conductor_drop",
    "chain_pivot",
)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Comma-separated generator list, e.g. "3,7,8"."""
    parts = [p.strip() for p in text.split(",")]
    gens = []
    for i, part in enumerate(parts):
        if not part.isdigit():
            raise ParseError(
                f"semigroup spec {text!r}: item {i + 1} ({part!r}) is not a"
                " positive integer"
            )
        gens.append(int(part))
    return NumericalSemigroup.from_generators(gens)


def emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2))
    sys.stdout.write("\n")


def cmd_analyze(args) -> int:
    S = parse_semigroup(args.semigroup)
    emit_json(S.to_dict())
    return 0


def cmd_enumerate(args) -> int:
    S = parse_semigroup(args.semigroup)
    rows = []
    # The filtration bound is a statement about the colength-delta stratum;
    # at any other colength the column is null and --filt-only keeps nothing.
    stratum = args.d == S.delta
    for vs in enumerate_modules(S, args.d):
        bounded = in_filtration(vs) if stratum else None
        if args.filt_only and not bounded:
            continue
        row = vs.to_dict()
        row["value_set"] = str(vs)
        row["in_filtration"] = bounded
        rows.append(row)
    emit_json(
        {
            "semigroup": S.to_dict(),
            "colength": args.d,
            "filt_only": args.filt_only,
            "rows": rows,
        }
    )
    return 0


def cmd_limit(args) -> int:
    S = parse_semigroup(args.semigroup)
    family = FamilyElement.parse(args.family)
    result = flat_limit(family, S)
    payload = result.value_set.to_dict()
    payload["value_set"] = str(result.value_set)
    emit_json(
        {
            "semigroup": S.to_dict(),
            "family": str(family),
            "limit": payload,
            "leads": list(result.leads),
            "basis": [[str(x) for x in row] for row in result.basis],
        }
    )
    return 0


def cmd_classify(args) -> int:
    S = parse_semigroup(args.semigroup)
    emit_json(boundary_report(S))
    return 0


def cmd_replicate_examples(args) -> int:
    records = fixtures.run_all(only=args.only)
    emit_json(records)
    failed = [
        (record["example"], check["label"])
        for record in records
        for check in record["checks"]
        if check["status"] != "pass"
    ]
    if failed:
        for number, label in failed:
            sys.stderr.write(f"example {number}: failed check: {label}\n")
        raise VerificationMismatch(
            f"{len(failed)} fixture check(s) failed; see stderr"
        )
    return 0


def cmd_survey(args) -> int:
    semigroups = list(iterate_semigroups(args.v0_max))
    # Fan out across worker threads; executor.map preserves input order, so
    # the reduce is deterministic regardless of scheduling.
    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        rows = list(pool.map(survey_row, semigroups))
    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(SURVEY_COLUMNS)
        for row in rows:
            writer.writerow(
                [
                    "true" if v is True else "false" if v is False else str(v)
                    for v in (row[c] for c in SURVEY_COLUMNS)
                ]
            )
    else:
        emit_json(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="picboundary",
        description="Exact invariants, module enumerations, one-parameter"
        " limits, and boundary reports for unibranch curve singularities"
        " given by a numerical semigroup.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="semigroup invariants as JSON")
    p.add_argument("semigroup", help="comma-separated generators, e.g. 3,7,8")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser(
        "enumerate", help="stable value sets of a fixed colength"
    )
    p.add_argument("semigroup", help="comma-separated generators")
    p.add_argument("--d", type=int, required=True, help="colength")
    p.add_argument(
        "--filt-only",
        action="store_true",
        help="keep only filtration-bounded rows",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("limit", help="exact limit of a one-parameter family")
    p.add_argument("semigroup", help="comma-separated generators")
    p.add_argument(
        "--family",
        required=True,
        help="unit family in t and b, e.g. 't^2 + b*t + b^2'",
    )
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("classify", help="full boundary report as JSON")
    p.add_argument("semigroup", help="comma-separated generators")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser(
        "replicate-examples", help="replay the bundled worked examples"
    )
    p.add_argument(
        "--only",
        type=int,
        choices=fixtures.EXAMPLES,
        default=None,
        help="replay a single example",
    )
    p.set_defaults(func=cmd_replicate_examples)

    p = sub.add_parser(
        "survey", help="one summary row per semigroup with conductor <= N"
    )
    p.add_argument("--v0-max", type=int, required=True, help="conductor bound")
    p.add_argument(
        "--csv", action="store_true", help="CSV instead of JSON rows"
    )
    p.add_argument(
        "--workers", type=int, default=4, help="worker threads (default 4)"
    )
    p.set_defaults(func=cmd_survey)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        sys.stderr.write(f"picboundary: parse error: {err}\n")
        return 2
    except HypothesisNotApplicable as err:
        sys.stderr.write(f"picboundary: hypothesis not applicable: {err}\n")
        return 3
    except VerificationMismatch as err:
        sys.stderr.write(f"picboundary: verification mismatch: {err}\n")
        return 4
    except PicBoundaryError as err:
        sys.stderr.write(f"picboundary: {type(err).__name__}: {err}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
