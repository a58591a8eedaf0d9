"""Command-line entry point.

Every subcommand builds one :class:`CommandReport`; the human summary and the
``--json`` document are both rendered from it. Exit status is 0 on pass, 1 when
a checked claim fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import catalog, landscape
from .core import contains, induced
from .io import ParseError, resolve, to_trn
from .orderings import backward_arcs, find_galaxy_ordering, is_galaxy_ordering, is_star_ordering
from .schemas import SCHEMA_VERSION
from .search import SearchConfig, local_search
from .structure import (SmoothStructureSpec, check_intersection_bound, nontrivial_homogeneous_sets,
                        validate_smooth_structure)
from .transitive import check_ramsey_bound, tr

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandReport:
    command: list[str]
    key: str
    payload: dict
    passed: bool = True
    findings: int = 0
    lines: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "command": self.command,
                "status": "pass" if self.passed else "fail",
                "findings": self.findings, "payload": self.payload}

    @property
    def exit_code(self) -> int:
        return EXIT_PASS if self.passed else EXIT_FAIL


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated vertex list, got {text!r}") from exc


def _load(ref: str):
    try:
        return resolve(ref)
    except KeyError as exc:
        raise UsageError(str(exc).strip("'\"")) from exc
    except FileNotFoundError as exc:
        raise UsageError(f"no such file: {ref}") from exc


# --- subcommands -------------------------------------------------------

def cmd_catalog(args, argv) -> CommandReport:
    if args.action == "list":
        ids = catalog.all_ids()
        return CommandReport(argv, "catalog list", {"ids": ids}, lines=[" ".join(ids)])
    if args.action == "show":
        if not args.id:
            raise UsageError("catalog show needs an id")
        try:
            info = catalog.describe(args.id)
        except KeyError as exc:
            raise UsageError(str(exc).strip("'\"")) from exc
        info["trn"] = to_trn(catalog.build_named(args.id))
        lines = [info["trn"].rstrip(), "", "adjacency (row beats column):"]
        lines += [f"{lab:>3} {row}" for lab, row in zip(info["labels"], info["adjacency"])]
        return CommandReport(argv, "catalog show", info, lines=lines)
    report = catalog.verify_catalog()
    mismatched = [o for o in report["orderings"] if not (o["isomorphic"] and o["consistent"])]
    lines = [f"{'ok ' if c['ok'] else 'FAIL'} {c['claim']}" for c in report["checks"]]
    lines.append(f"orderings verified: {len(report['orderings']) - len(mismatched)}/{len(report['orderings'])}")
    lines.append(f"corrections applied: {len(report['corrections'])}")
    for c in report["corrections"]:
        lines.append(f"  {c['where']}: {c['printed']} -> {c['used']}")
    return CommandReport(argv, "catalog verify", report, report["passed"],
                         len(report["corrections"]) + len(mismatched), lines)


def cmd_landscape(args, argv) -> CommandReport:
    if args.action == "counts":
        counts = landscape.class_counts(args.max_n)
        return CommandReport(argv, "landscape counts", {"counts": {str(k): v for k, v in counts.items()}},
                             lines=[f"n={k}: {v}" for k, v in counts.items()])
    rep = landscape.run_landscape()
    ok = (rep["coverage"] and rep["regular"]["ok"]
          and all(r["prime"] and not r["galaxy"] and r["k6_l1_l2_free"] for r in rep["residuals"])
          and not rep["degree_identity_failures"] and not rep["extreme_degree_failures"])
    lines = [f"classes: {rep['classes']}", f"coverage: {'100%' if rep['coverage'] else 'INCOMPLETE'}"]
    lines += [f"  {f}: {c}" for f, c in rep["flag_counts"].items()]
    lines.append(f"regular classes: {rep['regular']['count']} " +
                 " ".join(f"{k}={v}" for k, v in rep["regular"]["matches"].items()))
    for r in rep["residuals"]:
        lines.append(f"residual {r['form']} prime={r['prime']} galaxy={r['galaxy']} "
                     f"free={r['k6_l1_l2_free']} {r['degree_profile']}")
    for c in rep["constellation_cases"]:
        lines.append(f"constellation case [{c['case']}] {c['form']} (complement {c['complement_form']}) "
                     f"star={c['star_ordering']} galaxy_ordering={c['galaxy_ordering']}")
    lines.append(f"residuals outside the constellation cases: {len(rep['unexplained_residuals'])}")
    return CommandReport(argv, "landscape run", rep, ok, rep["residual_count"], lines)


def cmd_tr(args, argv) -> CommandReport:
    t = _load(args.tournament)
    X = _vertex_list(args.subset) if args.subset else None
    try:
        res = tr(t, X, exact=False if args.approx else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"n": t.n, "tr": res.size, "witness": list(res.witness), "exact": res.exact,
               "upper_bound": res.upper_bound}
    kind = "tr" if res.exact else f"tr >= (upper bound {res.upper_bound})"
    return CommandReport(argv, "tr", payload, lines=[f"{kind} {res.size}",
                                                     "witness " + " ".join(map(str, res.witness))])


def cmd_contains(args, argv) -> CommandReport:
    host, pattern = _load(args.host), _load(args.pattern)
    try:
        w = contains(host, pattern)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"contains": w is not None, "witness": list(w) if w else None}
    line = f"contains: {' '.join(map(str, w))}" if w else "free"
    return CommandReport(argv, "contains", payload, lines=[line])


def cmd_galaxy(args, argv) -> CommandReport:
    t = _load(args.tournament)
    try:
        theta = find_galaxy_ordering(t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"galaxy": theta is not None, "ordering": list(theta) if theta else None}
    if theta:
        payload["backward_arcs"] = [list(a) for a in backward_arcs(t, theta)]
        lines = ["galaxy ordering " + " ".join(map(str, theta)),
                 "backward arcs " + " ".join(f"{u}->{v}" for u, v in backward_arcs(t, theta))]
    else:
        lines = ["no galaxy ordering"]
    return CommandReport(argv, "galaxy", payload, lines=lines)


def cmd_backward(args, argv) -> CommandReport:
    t = _load(args.tournament)
    theta = _vertex_list(args.theta)
    try:
        arcs = backward_arcs(t, theta)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"theta": theta, "backward_arcs": [list(a) for a in arcs],
               "star": is_star_ordering(t, theta), "galaxy": is_galaxy_ordering(t, theta)}
    lines = [" ".join(f"{u}->{v}" for u, v in arcs) or "(none)",
             f"star ordering: {payload['star']}", f"galaxy ordering: {payload['galaxy']}"]
    return CommandReport(argv, "backward", payload, lines=lines)


def cmd_prime(args, argv) -> CommandReport:
    t = _load(args.tournament)
    try:
        sets = nontrivial_homogeneous_sets(t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"prime": not sets, "homogeneous_sets": [list(s) for s in sets]}
    lines = ["true" if not sets else "false"]
    lines += ["homogeneous " + " ".join(map(str, s)) for s in sets[:10]]
    if len(sets) > 10:
        lines.append(f"... {len(sets) - 10} more")
    return CommandReport(argv, "prime", payload, lines=lines)


def cmd_smooth(args, argv) -> CommandReport:
    t = _load(args.tournament)
    try:
        spec = SmoothStructureSpec.from_json(json.loads(Path(args.spec).read_text()))
    except FileNotFoundError as exc:
        raise UsageError(f"no such file: {args.spec}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad structure spec: {exc}") from exc
    if any(v >= t.n for s in spec.sets for v in s):
        raise UsageError("structure spec names a vertex outside the tournament")
    rep = validate_smooth_structure(t, spec)
    payload = rep.to_json()
    lines = [f"valid: {rep.valid}", f"tr: {rep.tr_value}"]
    lines += [f"violation {v}" for v in rep.violations]
    passed = rep.valid
    if args.intersection is not None:
        if not rep.valid:
            raise UsageError("the intersection bound needs a valid structure")
        try:
            ib = check_intersection_bound(t, spec, args.intersection, _vertex_list(args.sstar or ""),
                                          _vertex_list(args.A or ""))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        payload["intersection"] = ib.to_json()
        lines.append(f"intersection {ib.intersection} >= bound {ib.bound}: {ib.holds}")
        passed = passed and ib.holds
    return CommandReport(argv, "smooth", payload, passed, len(rep.violations), lines)


def cmd_search(args, argv) -> CommandReport:
    forbid = [f for group in args.forbid for f in group.split(",") if f]
    try:
        cfg = SearchConfig(args.n, tuple(forbid), args.seed, args.steps, args.restarts)
        res = local_search(cfg)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc).strip("'\"")) from exc
    if args.out:
        Path(args.out).write_text(to_trn(res.best))
    payload = res.to_json()
    lines = [f"tr {res.tr_value}", f"certificate {'ok' if res.free_certificate else 'FAILED'}",
             "per-restart best " + " ".join(str(r.best_tr) for r in res.trace)]
    if args.out:
        lines.append(f"witness written to {args.out}")
    return CommandReport(argv, "search", payload, res.free_certificate, lines=lines)


def cmd_ramsey(args, argv) -> CommandReport:
    try:
        rep = check_ramsey_bound(args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"k": rep.k, "n": rep.n, "classes": rep.classes, "holds": rep.holds, "min_tr": rep.min_tr,
               "counterexample": rep.counterexample.orientation_bits() if rep.counterexample else None}
    line = (f"{'pass' if rep.holds else 'FAIL'}: all {rep.classes} classes on {rep.n} vertices "
            f"have tr >= {rep.k} (min {rep.min_tr})")
    return CommandReport(argv, "ramsey", payload, rep.holds, lines=[line])


# --- wiring ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", nargs="?", const="-", metavar="PATH",
                        help="emit the JSON report (to PATH, or stdout when omitted)")

    p = argparse.ArgumentParser(prog="tournaments", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("catalog", parents=[common], help="named tournaments and claim verification")
    s.add_argument("action", choices=["list", "show", "verify"])
    s.add_argument("id", nargs="?")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("landscape", parents=[common], help="classify every 7-vertex tournament")
    s.add_argument("action", choices=["run", "counts"])
    s.add_argument("--max-n", type=int, default=7, choices=range(1, 9), metavar="N")
    s.set_defaults(func=cmd_landscape)

    s = sub.add_parser("tr", parents=[common], help="largest transitive subtournament")
    s.add_argument("tournament")
    s.add_argument("--subset", help="restrict to these vertices, e.g. 0,2,5")
    s.add_argument("--approx", action="store_true", help="greedy bounds instead of the exact value")
    s.set_defaults(func=cmd_tr)

    s = sub.add_parser("contains", parents=[common], help="find a copy of PATTERN in HOST")
    s.add_argument("host")
    s.add_argument("pattern")
    s.set_defaults(func=cmd_contains)

    for name, func, helptext in (("galaxy", cmd_galaxy, "search for a galaxy ordering"),
                                 ("prime", cmd_prime, "primality and homogeneous sets")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("tournament")
        s.set_defaults(func=func)

    s = sub.add_parser("backward", parents=[common], help="backward arcs under an ordering")
    s.add_argument("tournament")
    s.add_argument("--theta", required=True, help="vertex order, e.g. 3,0,1,2")
    s.set_defaults(func=cmd_backward)

    s = sub.add_parser("smooth", parents=[common], help="validate a smooth structure")
    s.add_argument("tournament")
    s.add_argument("spec", help="JSON file with c, lambda, w, sets")
    s.add_argument("--intersection", type=int, metavar="J", help="also check the intersection bound in set J")
    s.add_argument("--sstar", help="subset of set J")
    s.add_argument("--A", help="vertices from the other sets")
    s.set_defaults(func=cmd_smooth)

    s = sub.add_parser("search", parents=[common], help="local search for H-free tournaments with small tr")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--forbid", action="append", default=[], help="catalog id or .trn path; repeatable")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--steps", type=int, default=10_000)
    s.add_argument("--restarts", type=int, default=1)
    s.add_argument("--out", help="write the best tournament as .trn")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("ramsey", parents=[common], help="check tr >= k on all 2^(k-1)-vertex tournaments")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_ramsey)
    return p


def dispatch(argv: list[str]) -> CommandReport:
    args = build_parser().parse_args(argv)
    return args.func(args, list(argv))


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args, list(argv))
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json == "-":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print("\n".join(report.lines))
        if args.json:
            Path(args.json).write_text(json.dumps(report.to_json(), indent=2) + "\n")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
