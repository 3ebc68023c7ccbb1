"""Command-line front end: ``hyperchrom {gen,chrom,roots,verify,decompose}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from multiprocessing import Pool

from . import chromatic, matroid, roots, suite
from .hypercore import CapExceeded, HypergraphError, generate, parse_hypergraph
from .polynomial import to_falling

log = logging.getLogger("hyperchrom")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_CAP = 3

SWEEP_FAMILIES = ("exhaustive_uniform", "random_sweep", "suite")

CSV_COLUMNS = (
    "instance_id",
    "seed",
    "n",
    "t",
    "D",
    "num_edges",
    "a1",
    "N",
    "max_root_modulus",
    "bound_cR",
    "bound_8etD",
    *suite.CHECKS,
    "ok",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="hypergraph JSON file ('-' for stdin)")
    common.add_argument("--family", help="generator family or sweep family")
    common.add_argument("--n", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--k", type=int, help="edge count for loose_path")
    common.add_argument("--p", type=float)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--count", type=int, default=1, help="instances in a random sweep")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--cap-edges", type=int, default=chromatic.EDGE_CAP)
    common.add_argument("--cap-partition", type=int, default=matroid.PARTITION_CAP)
    common.add_argument("--check", default="all", help="comma-separated check names or 'all'")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="hyperchrom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("gen", parents=[common], help="write a generated hypergraph")
    sub.add_parser("chrom", parents=[common], help="chromatic polynomial (power and falling-factorial forms)")
    sub.add_parser("roots", parents=[common], help="chromatic roots and root-radius bounds")
    sub.add_parser("verify", parents=[common], help="run verification checks")
    sub.add_parser("decompose", parents=[common], help="maximal bad partition / decomposition")
    return parser


def _family_params(args) -> dict:
    fam = args.family
    need = {
        "single_edge": ("t",),
        "complete_uniform": ("n", "t"),
        "tight_cycle": ("n", "t"),
        "loose_path": ("k", "t"),
        "random_uniform": ("n", "t", "p", "seed"),
        "exhaustive_uniform": ("n", "t"),
        "random_sweep": ("n", "t", "p", "seed"),
        "suite": ("seed",),
    }
    if fam not in need:
        raise UsageError(f"unknown family {fam!r}")
    params = {}
    for name in need[fam]:
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"--{name} is required for family {fam}")
        params[name] = val
    return params


def load_instances(args) -> tuple[list[suite.Instance], bool]:
    """Instances named by the arguments, and whether this is a sweep."""
    if args.input:
        if args.family:
            raise UsageError("use either --input or --family")
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
        return [suite.Instance("input", parse_hypergraph(text))], False
    if not args.family:
        raise UsageError("one of --input or --family is required")
    params = _family_params(args)
    if args.family == "exhaustive_uniform":
        return suite.exhaustive_instances(params["n"], params["t"]), True
    if args.family == "random_sweep":
        return suite.random_instances(params["n"], params["t"], params["p"], params["seed"], args.count), True
    if args.family == "suite":
        return suite.random_suite(params["seed"], args.count), True
    H = generate(args.family, **params)
    return [suite.Instance(args.family, H, params.get("seed"))], False


def _single(args):
    instances, sweep = load_instances(args)
    if sweep:
        raise UsageError(f"{args.command} takes a single instance, not a sweep family")
    return instances[0].H


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def cmd_gen(args) -> int:
    H = _single(args)
    _emit(args, H.dumps() + "\n")
    return EXIT_OK


def cmd_chrom(args) -> int:
    H = _single(args)
    P = chromatic.chromatic_polynomial_auto(H, args.cap_edges, args.cap_partition)
    doc = {"hypergraph": H.to_dict(), "power_basis": P.to_list(), "polynomial": str(P)}
    if H.n <= args.cap_partition:
        doc["falling_factorial"] = [str(a) for a in chromatic.admissible_partition_form(H, args.cap_partition)]
    else:
        doc["falling_factorial"] = [str(a) for a in to_falling(P)]
    _emit(args, _dump(doc))
    return EXIT_OK


def cmd_roots(args) -> int:
    H = _single(args)
    P = chromatic.chromatic_polynomial_auto(H, args.cap_edges, args.cap_partition)
    rep = roots.check_root_bound(H, P=P)
    _emit(args, _dump({"hypergraph": H.to_dict(), **rep.to_dict()}))
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_decompose(args) -> int:
    H = _single(args)
    pc = matroid.is_partition_connected(H, args.cap_partition)
    rec = matroid.maximal_bad_partition(H, args.cap_partition)
    pieces = matroid.partition_connected_decomposition(H, args.cap_partition)
    doc = {
        "hypergraph": H.to_dict(),
        "partition_connected": pc,
        "maximal_bad_partition": None
        if rec is None
        else {
            "parts": rec.to_list(),
            "crossing_count": rec.crossing_count,
            "score": f"{rec.score.numerator}/{rec.score.denominator}",
        },
        "decomposition": [list(p) for p in pieces],
    }
    _emit(args, _dump(doc))
    return EXIT_OK


def _selected_checks(spec: str) -> tuple[str, ...]:
    if spec == "all":
        return suite.CHECKS
    names = tuple(s.strip() for s in spec.split(",") if s.strip())
    unknown = [s for s in names if s not in suite.CHECKS]
    if unknown or not names:
        raise UsageError(f"unknown check(s) {unknown}; choose from {', '.join(suite.CHECKS)} or 'all'")
    return names


def _verify_one(job):
    inst, checks, caps = job
    return suite.verify_instance(inst, checks, caps)


def csv_row(report: dict) -> dict:
    checks = report["checks"]
    row = {c: "" for c in CSV_COLUMNS}
    row.update(
        instance_id=report["instance_id"],
        seed="" if report["seed"] is None else report["seed"],
        n=report["n"],
        t="" if report["t"] is None else report["t"],
        D=report["D"],
        num_edges=report["num_edges"],
        ok=report["ok"],
    )
    pen = checks.get("penrose", {})
    row["a1"] = pen.get("a1", "")
    row["N"] = pen.get("N", "")
    rb = checks.get("root_bounds", {})
    for src, dst in (("max_modulus", "max_root_modulus"), ("bound_cR", "bound_cR"), ("bound_8etD", "bound_8etD")):
        if src in rb:
            row[dst] = repr(rb[src])
    for name in suite.CHECKS:
        if name in checks:
            row[name] = checks[name]["status"]
    return row


def render_reports(reports: list[dict], fmt: str) -> str:
    if fmt == "json":
        return _dump(reports)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        writer.writerow(csv_row(rep))
    return buf.getvalue()


def run_verify(instances, checks, caps, workers: int) -> list[dict]:
    jobs = [(inst, checks, caps) for inst in instances]
    if workers <= 1 or len(jobs) <= 1:
        return [_verify_one(j) for j in jobs]
    with Pool(workers) as pool:
        # imap keeps submission order, so the merge is ordered by instance
        return list(pool.imap(_verify_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def cmd_verify(args) -> int:
    checks = _selected_checks(args.check)
    if args.workers < 1:
        raise UsageError("--workers must be positive")
    caps = suite.Caps(edges=args.cap_edges, partition=args.cap_partition)
    instances, sweep = load_instances(args)
    reports = run_verify(instances, checks, caps, args.workers)
    _emit(args, render_reports(reports, args.format))
    if any(r["violation"] for r in reports):
        return EXIT_VIOLATION
    if not sweep and any(c["status"].startswith("skipped") for c in reports[0]["checks"].values()):
        return EXIT_CAP
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "chrom": cmd_chrom,
    "roots": cmd_roots,
    "verify": cmd_verify,
    "decompose": cmd_decompose,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, HypergraphError, OSError, json.JSONDecodeError) as exc:
        print(f"hyperchrom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"hyperchrom: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (matroid.TheoremViolation, roots.RootFindingError) as exc:
        print(f"hyperchrom: theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
