"""Command-line frontend.

Every subcommand reads poset/group/grading inputs, runs one library
operation, and emits a run report either as deterministic JSON (stable
key order, canonical rational strings, no timing) or as a human-readable
table with wall-clock timing.

Exit codes: 0 success, 1 a verification subcommand found a counterexample
or a cross-check failed, 2 input or usage error.
"""

import argparse
import itertools
import json
import random
import sys
import time

from . import __version__
from .algebra import (
    function_to_json,
    invert,
    morphism_from_json,
    decompose_automorphism,
    zeta,
)
from .corpus import FIXTURE_NAMES, load_poset
from .errors import IncgradeError, VerificationError
from .grading import (
    GradingMap,
    classify_gradings,
    count_distinct_gradings,
    equivalent,
    group_from_spec,
)
from .identities import (
    chain_transitivity_identity_check,
    identity_slice,
    monomial_identities,
    slices_equal_upto,
    verify_chain_reduction,
)
from .linalg import format_rational
from .poset import (
    automorphisms,
    bound,
    connected_components,
    is_chain_transitive,
    maximal_chains,
    poset_to_json,
)


class CounterexampleFound(Exception):
    """Raised by handlers whose verification failed; maps to exit 1."""


def _parse_theta(poset, group, csv):
    names = [part.strip() for part in csv.split(",")]
    return GradingMap(poset, group, [group.index_of(n) for n in names])


def _parse_multidegree(group, csv):
    return tuple(group.index_of(part.strip()) for part in csv.split(","))


def _labels(poset, indices):
    return [poset.elements[i] for i in indices]


def cmd_validate(args):
    poset = load_poset(args.poset)
    return {
        "valid": True,
        "elements": list(poset.elements),
        "covers": [list(c) for c in poset.covers],
        "components": len(connected_components(poset)),
    }


def cmd_chains(args):
    poset = load_poset(args.poset)
    return {"chains": [_labels(poset, c) for c in maximal_chains(poset)]}


def cmd_components(args):
    poset = load_poset(args.poset)
    return {"components": [_labels(poset, c)
                           for c in connected_components(poset)]}


def cmd_bound(args):
    poset = load_poset(args.poset)
    return {"bound": bound(poset)}


def cmd_aut(args):
    poset = load_poset(args.poset)
    auts = automorphisms(poset)
    return {"order": len(auts), "automorphisms": [list(a) for a in auts]}


def cmd_chain_transitive(args):
    poset = load_poset(args.poset)
    transitive, witness = is_chain_transitive(poset)
    if transitive:
        table = [{"from": i, "to": j, "sigma": list(sigma)}
                 for (i, j), sigma in sorted(witness.items())]
        return {"transitive": True, "witnesses": table}
    return {"transitive": False, "unreachable": list(witness)}


def cmd_mobius(args):
    poset = load_poset(args.poset)
    mobius = invert(zeta(poset))
    return {"entries": function_to_json(mobius)["entries"]}


def cmd_decompose(args):
    poset = load_poset(args.poset)
    with open(args.morphism) as handle:
        phi = morphism_from_json(poset, json.load(handle))
    r, s, sigma = decompose_automorphism(phi)
    return {
        "r": function_to_json(r)["entries"],
        "s": function_to_json(s)["entries"],
        "sigma": list(sigma),
    }


def cmd_grade(args):
    poset = load_poset(args.poset)
    group = group_from_spec(args.group)
    theta = _parse_theta(poset, group, args.theta)
    components = {}
    for g, pairs in theta.components().items():
        components[group.names[g]] = [list(p) for p in pairs]
    return {
        "support": [group.names[g] for g in theta.support()],
        "components": components,
    }


def cmd_count(args):
    poset = load_poset(args.poset)
    group = group_from_spec(args.group)
    count = count_distinct_gradings(poset, group, verify=args.verify)
    return {"count": count, "verified": bool(args.verify)}


def cmd_classify(args):
    poset = load_poset(args.poset)
    group = group_from_spec(args.group)
    reps = classify_gradings(poset, group)
    return {
        "classes": len(reps),
        "representatives": [rep.names() for rep in reps],
    }


def cmd_equiv(args):
    poset = load_poset(args.poset)
    group = group_from_spec(args.group)
    theta = _parse_theta(poset, group, args.theta)
    mu = _parse_theta(poset, group, args.mu)
    witness = equivalent(theta, mu)
    if witness is None:
        return {"equivalent": False, "witness": None}
    return {
        "equivalent": True,
        "witness": {
            "shifts": [group.names[h] for h in witness.shifts],
            "sigma": list(witness.sigma),
        },
    }


def cmd_slice(args):
    poset = load_poset(args.poset)
    group = group_from_spec(args.group)
    theta = _parse_theta(poset, group, args.theta)
    multidegree = _parse_multidegree(group, args.multidegree)
    piece = identity_slice(theta, multidegree)
    return {
        "multidegree": [group.names[g] for g in multidegree],
        "dimension": piece.dimension,
        "basis": [[format_rational(v) for v in row]
                  for row in piece.basis.rows],
    }


def cmd_compare_identities(args):
    poset = load_poset(args.poset)
    group = group_from_spec(args.group)
    theta = _parse_theta(poset, group, args.theta)
    mu = _parse_theta(poset, group, args.mu)
    equal, first = slices_equal_upto(theta, mu, args.max_degree)
    return {
        "equal": equal,
        "max_degree": args.max_degree,
        "first_difference": None if first is None
        else [group.names[g] for g in first],
    }


def cmd_verify_reduction(args):
    poset = load_poset(args.poset)
    group = group_from_spec(args.group)
    if args.theta:
        theta = _parse_theta(poset, group, args.theta)
    else:
        rng = random.Random(args.seed)
        theta = GradingMap(
            poset, group,
            [rng.randrange(group.order) for _ in range(poset.n)])
    if args.multidegree:
        degrees = [_parse_multidegree(group, args.multidegree)]
    else:
        alphabet = sorted(set(theta.support()) | {group.identity})
        degrees = []
        for m in range(1, args.max_degree + 1):
            degrees.extend(itertools.product(alphabet, repeat=m))
    checks = []
    all_equal = True
    for multidegree in degrees:
        equal, report = verify_chain_reduction(theta, multidegree)
        all_equal = all_equal and equal
        checks.append({
            "multidegree": [group.names[g] for g in multidegree],
            **report,
        })
    result = {
        "theta": theta.names(),
        "all_equal": all_equal,
        "checks": checks,
    }
    if not all_equal:
        raise CounterexampleFound(result)
    return result


def cmd_monomials(args):
    poset = load_poset(args.poset)
    group = group_from_spec(args.group)
    theta = _parse_theta(poset, group, args.theta)
    words = monomial_identities(theta, args.max_degree)
    return {
        "max_degree": args.max_degree,
        "identities": [[group.names[g] for g in word]
                       for word in sorted(words, key=lambda w: (len(w), w))],
    }


def cmd_transitivity_check(args):
    poset = load_poset(args.poset)
    group = group_from_spec(args.group)
    report = chain_transitivity_identity_check(poset, group)
    result = {
        "degree": report["degree"],
        "classes": report["classes"],
        "pairs_checked": report["pairs_checked"],
        "separated": report["separated"],
        "unseparated": [[a.names(), b.names()]
                        for a, b in report["unseparated"]],
    }
    if not report["separated"]:
        raise CounterexampleFound(result)
    return result


HANDLERS = {
    "validate": cmd_validate,
    "chains": cmd_chains,
    "components": cmd_components,
    "bound": cmd_bound,
    "aut": cmd_aut,
    "chain-transitive": cmd_chain_transitive,
    "mobius": cmd_mobius,
    "decompose": cmd_decompose,
    "grade": cmd_grade,
    "count": cmd_count,
    "classify": cmd_classify,
    "equiv": cmd_equiv,
    "slice": cmd_slice,
    "compare-identities": cmd_compare_identities,
    "verify-reduction": cmd_verify_reduction,
    "monomials": cmd_monomials,
    "transitivity-check": cmd_transitivity_check,
}

NEEDS = {
    "validate": ("poset",),
    "chains": ("poset",),
    "components": ("poset",),
    "bound": ("poset",),
    "aut": ("poset",),
    "chain-transitive": ("poset",),
    "mobius": ("poset",),
    "decompose": ("poset", "morphism"),
    "grade": ("poset", "group", "theta"),
    "count": ("poset", "group"),
    "classify": ("poset", "group"),
    "equiv": ("poset", "group", "theta", "mu"),
    "slice": ("poset", "group", "theta", "multidegree"),
    "compare-identities": ("poset", "group", "theta", "mu"),
    "verify-reduction": ("poset", "group"),
    "monomials": ("poset", "group", "theta"),
    "transitivity-check": ("poset", "group"),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="incgrade",
        description="Elementary group gradings on incidence algebras of "
                    "finite posets.")
    parser.add_argument("command", choices=sorted(HANDLERS),
                        help="operation to run")
    parser.add_argument("--poset",
                        help="poset JSON file or fixture name "
                             f"({', '.join(FIXTURE_NAMES)})")
    parser.add_argument("--group", help="group spec such as C2, C3, C2xC2, S3")
    parser.add_argument("--theta", help="grading map as CSV of element names")
    parser.add_argument("--mu", help="second grading map as CSV")
    parser.add_argument("--multidegree",
                        help="multidegree as CSV of group element names")
    parser.add_argument("--morphism", help="morphism JSON file")
    parser.add_argument("--max-degree", type=int, default=3,
                        help="degree limit for identity sweeps (default 3)")
    parser.add_argument("--verify", action="store_true",
                        help="enable brute-force cross-checks")
    parser.add_argument("--format", choices=("json", "table"),
                        default="table", help="output format")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized subcommands")
    return parser


def _echo_inputs(args, command):
    echo = {}
    for field in NEEDS[command]:
        echo[field] = getattr(args, field)
    if command in ("compare-identities", "monomials", "verify-reduction"):
        echo["max_degree"] = args.max_degree
    if command == "count":
        echo["verify"] = bool(args.verify)
    if command == "verify-reduction":
        if args.theta:
            echo["theta"] = args.theta
        else:
            echo["seed"] = args.seed
        if args.multidegree:
            echo["multidegree"] = args.multidegree
    return echo


def _render_table(report, elapsed_ms):
    lines = [f"command: {report['command']}"]
    for key, value in report["inputs"].items():
        if value is not None:
            lines.append(f"  {key}: {value}")
    lines.append("results:")
    lines.extend(_table_lines(report["results"], indent=2))
    lines.append(f"elapsed: {elapsed_ms:.1f} ms")
    return "\n".join(lines)


def _table_lines(value, indent):
    pad = " " * indent
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_table_lines(item, indent + 2))
            else:
                lines.append(f"{pad}{key}: {json.dumps(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_table_lines(item, indent + 2))
            else:
                lines.append(f"{pad}- {json.dumps(item)}")
    else:
        lines.append(f"{pad}{json.dumps(value)}")
    return lines


def run(argv):
    """Run one subcommand; returns (report dict, exit code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    for field in NEEDS[command]:
        if getattr(args, field) is None:
            parser.error(f"{command} requires --{field.replace('_', '-')}")
    started = time.monotonic()
    code = 0
    try:
        results = HANDLERS[command](args)
    except CounterexampleFound as exc:
        results = exc.args[0]
        code = 1
    except VerificationError as exc:
        results = {"error": str(exc)}
        code = 1
    elapsed_ms = (time.monotonic() - started) * 1000.0
    report = {
        "command": command,
        "version": __version__,
        "inputs": _echo_inputs(args, command),
        "results": results,
        "timing_ms": None,
    }
    return report, code, elapsed_ms


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, code, elapsed_ms = run(argv)
    except (IncgradeError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    args = build_parser().parse_args(argv)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(_render_table(report, elapsed_ms))
    return code


if __name__ == "__main__":
    sys.exit(main())
