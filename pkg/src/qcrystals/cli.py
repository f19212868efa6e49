"""Command-line interface.

Subcommands: crystal, decompose, skeleton, dual-equivalence, schurify,
count {ssyt,bm,kostka,plethysm-monomials}, check, evac, rsk.

Exit codes: 0 success, 1 domain error, 2 usage or parse error. Standard
output is byte-identical across identical invocations; wall times go to
stderr.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .crystal import generate_crystal
from .decomposition import (
    count_bm, count_ssyt_formula, decompose, kostka,
)
from .errors import QCrystalsError
from .render import (
    crystal_to_dot, crystal_to_json, dual_equivalence_to_dot,
    dual_equivalence_to_json, skeleton_to_dot, skeleton_to_json,
    tableau_from_json, tableau_to_json,
)
from .rsk import evacuate, rsk
from .skeleton import (
    build_skeleton, dual_equivalence_graph, skeleton_stable,
)
from .symfunc import (
    format_schur_expansion, parse_f_expansion, plethysm_monomial_count, schurify,
)
from .tableaux import check_partition, max_entry
from . import verify


def _parse_ints(text: str, parser: argparse.ArgumentParser, what: str):
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        parser.error(f"cannot parse {what} {text!r}: expected comma-separated integers")


def _parse_shape(text, parser):
    parts = _parse_ints(text, parser, "shape")
    try:
        return check_partition(parts)
    except QCrystalsError as exc:
        parser.error(str(exc))


def _parse_word(text, parser):
    if "," in text:
        return _parse_ints(text, parser, "word")
    if not text.isdigit():
        parser.error(f"cannot parse word {text!r}: expected digits or comma-separated integers")
    return tuple(int(ch) for ch in text)


def _parse_tableau(text, parser):
    try:
        return tableau_from_json(text)
    except (QCrystalsError, json.JSONDecodeError) as exc:
        parser.error(f"cannot parse tableau: {exc}")


def _emit_crystal(G, fmt, subs=None):
    if fmt == "dot":
        sys.stdout.write(crystal_to_dot(G, subs))
    elif fmt == "json":
        print(crystal_to_json(G))
    else:
        print(f"{len(G.vertices)} vertices, {len(G.edges)} edges")
        if subs is not None:
            for sub in subs:
                print(f"  class {','.join(map(str, sub.alpha))}: "
                      f"{sub.size} vertices, source {tableau_to_json(sub.source)}")


def cmd_crystal(args, parser):
    shape = _parse_shape(args.shape, parser)
    G = generate_crystal(shape, args.max_entry)
    subs = decompose(G) if args.decompose else None
    _emit_crystal(G, args.format, subs)
    return 0


def cmd_decompose(args, parser):
    shape = _parse_shape(args.shape, parser)
    G = generate_crystal(shape, args.max_entry)
    subs = decompose(G)
    if args.format == "json":
        payload = {
            "shape": list(shape),
            "max_entry": args.max_entry,
            "classes": [{
                "type": list(sub.alpha),
                "size": sub.size,
                "source": [list(row) for row in sub.source],
                "vertices": sorted(sub.vertex_indices),
            } for sub in subs],
        }
        print(json.dumps(payload))
    else:
        _emit_crystal(G, args.format, subs)
    return 0


def cmd_skeleton(args, parser):
    shape = _parse_shape(args.shape, parser)
    if args.max_entry is None:
        skel = skeleton_stable(shape)
    else:
        skel = build_skeleton(shape, args.max_entry)
    if args.format == "dot":
        sys.stdout.write(skeleton_to_dot(skel))
    elif args.format == "json":
        print(skeleton_to_json(skel))
    else:
        print(f"{len(skel.vertices)} vertices, {len(skel.edges)} edges, "
              f"stable bound {skel.stable_bound}")
    return 0


def cmd_dual_equivalence(args, parser):
    shape = _parse_shape(args.shape, parser)
    g = dual_equivalence_graph(shape)
    if args.format == "dot":
        sys.stdout.write(dual_equivalence_to_dot(g))
    elif args.format == "json":
        print(dual_equivalence_to_json(g))
    else:
        print(f"{len(g.vertices)} vertices, {len(g.edges)} labelled edges")
    return 0


def cmd_schurify(args, parser):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as handle:
            text = handle.read()
    expansion = parse_f_expansion(text)
    print(format_schur_expansion(schurify(expansion)))
    return 0


def cmd_count(args, parser):
    if args.what == "ssyt":
        shape = _parse_shape(args.shape, parser)
        print(count_ssyt_formula(shape, args.max_entry))
    elif args.what == "bm":
        print(count_bm(args.size, args.max_entry))
    elif args.what == "kostka":
        shape = _parse_shape(args.shape, parser)
        weight = _parse_ints(args.weight, parser, "weight")
        print(kostka(shape, weight))
    else:  # plethysm-monomials
        outer = _parse_shape(args.outer, parser)
        inner = _parse_shape(args.inner, parser)
        print(plethysm_monomial_count(outer, inner, args.max_entry))
    return 0


def cmd_evac(args, parser):
    T = _parse_tableau(args.tableau, parser)
    n = args.max_entry if args.max_entry is not None else max_entry(T)
    print(tableau_to_json(evacuate(T, n)))
    return 0


def cmd_rsk(args, parser):
    w = _parse_word(args.word, parser)
    pair = rsk(w)
    print(json.dumps({"P": [list(r) for r in pair.P], "Q": [list(r) for r in pair.Q]}))
    return 0


def _theorem_job(payload):
    name, max_size = payload
    report = verify.run_theorem_suite(name, max_size)
    return name, report


def _conjecture_job(payload):
    name, max_size = payload
    reports = verify.run_conjecture_suite(name, max_size)
    return name, reports


def cmd_check(args, parser):
    which = args.which
    results = {"theorems": [], "conjectures": []}
    theorem_jobs = [(name, args.max_size) for name, _ in verify.THEOREM_SUITES] \
        if which in ("theorems", "all") else []
    conjecture_jobs = [(name, args.max_size) for name in verify.CONJECTURE_SUITES] \
        if which in ("conjectures", "all") else []

    if args.parallel:
        with ProcessPoolExecutor() as pool:
            theorem_out = list(pool.map(_theorem_job, theorem_jobs))
            conjecture_out = list(pool.map(_conjecture_job, conjecture_jobs))
    else:
        theorem_out = [_theorem_job(job) for job in theorem_jobs]
        conjecture_out = [_conjecture_job(job) for job in conjecture_jobs]

    all_ok = True
    for name, report in theorem_out:
        results["theorems"].append({
            "suite": name, "name": report.name, "passed": report.passed,
            "details": _jsonable(report.details),
        })
        all_ok = all_ok and report.passed
        print(f"theorem {report.summary()}", file=sys.stderr)
    for name, reports in conjecture_out:
        entries = [{"name": r.name, "passed": r.passed, "details": _jsonable(r.details)}
                   for r in reports]
        consistent = all(r.passed for r in reports)
        results["conjectures"].append({
            "suite": name, "consistent": consistent, "reports": entries,
        })
        print(f"conjecture {name}: "
              f"{'consistent' if consistent else 'VIOLATION FOUND'}", file=sys.stderr)

    if args.json:
        payload = {
            "command": "check",
            "parameters": {"max_size": args.max_size, "which": which},
            "results": results,
        }
        print(json.dumps(payload))
    else:
        for entry in results["theorems"]:
            print(f"theorem {entry['suite']}: {'pass' if entry['passed'] else 'FAIL'}")
        for entry in results["conjectures"]:
            print(f"conjecture {entry['suite']}: "
                  f"{'consistent' if entry['consistent'] else 'VIOLATION FOUND'}")
    return 0 if all_ok else 1


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return repr(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcrystals",
        description="Crystals of tableaux, descent-class decomposition, "
                    "skeletons, and exact basis changes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("crystal", help="generate a crystal of tableaux")
    p.add_argument("--shape", required=True, help="partition, e.g. 4,3")
    p.add_argument("--max-entry", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json", "text"), default="text")
    p.add_argument("--decompose", action="store_true",
                   help="color vertices by descent class")
    p.set_defaults(run=cmd_crystal)

    p = sub.add_parser("decompose", help="decompose a crystal into descent classes")
    p.add_argument("--shape", required=True)
    p.add_argument("--max-entry", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json", "text"), default="text")
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("skeleton", help="skeleton of a crystal")
    p.add_argument("--shape", required=True)
    p.add_argument("--max-entry", type=int, default=None,
                   help="alphabet bound; defaults to the stable bound")
    p.add_argument("--format", choices=("dot", "json", "text"), default="text")
    p.set_defaults(run=cmd_skeleton)

    p = sub.add_parser("dual-equivalence", help="dual equivalence graph")
    p.add_argument("--shape", required=True)
    p.add_argument("--format", choices=("dot", "json", "text"), default="text")
    p.set_defaults(run=cmd_dual_equivalence)

    p = sub.add_parser("schurify", help="rewrite an F-expansion in the Schur basis")
    p.add_argument("--input", required=True, help="file path or - for stdin")
    p.set_defaults(run=cmd_schurify)

    p = sub.add_parser("count", help="exact counts")
    what = p.add_subparsers(dest="what", required=True)
    q = what.add_parser("ssyt")
    q.add_argument("--shape", required=True)
    q.add_argument("--max-entry", type=int, required=True)
    q = what.add_parser("bm")
    q.add_argument("--size", type=int, required=True)
    q.add_argument("--max-entry", type=int, required=True)
    q = what.add_parser("kostka")
    q.add_argument("--shape", required=True)
    q.add_argument("--weight", required=True)
    q = what.add_parser("plethysm-monomials")
    q.add_argument("--outer", required=True)
    q.add_argument("--inner", required=True)
    q.add_argument("--max-entry", type=int, required=True)
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--which", choices=("theorems", "conjectures", "all"),
                   default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("evac", help="evacuation of a tableau")
    p.add_argument("--tableau", required=True, help="JSON array of rows")
    p.add_argument("--max-entry", type=int, default=None)
    p.set_defaults(run=cmd_evac)

    p = sub.add_parser("rsk", help="insertion and recording tableaux of a word")
    p.add_argument("--word", required=True,
                   help="digits, or comma-separated letters")
    p.set_defaults(run=cmd_rsk)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args, parser)
    except QCrystalsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
