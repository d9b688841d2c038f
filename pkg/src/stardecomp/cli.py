"""Command-line front end: check | survey | hunt | oracle-compare."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from pathlib import Path
from typing import Callable, Iterable, Optional

from stardecomp.certificate import Certificate, verify_certificate
from stardecomp.decompose import (
    ORACLE_MAX_EDGES,
    brute_force_decompose,
    center_count,
    decide_s1r,
    decide_s12,
    necessary_conditions,
)
from stardecomp.errors import SOLVER_MAX_N, ScaleExceeded, StarDecompError, scale_max
from stardecomp.graph import (
    Graph,
    bipartition,
    connected_components,
    has_triangle,
    is_r_regular,
    parse_graph6,
    random_cubic,
    read_graph6_lines,
    vertex_connectivity,
)
from stardecomp.invariants import domination_number, independence_number
from stardecomp.theorems import s11_decompose

log = logging.getLogger("stardecomp")

RECORD_VERSION = 1
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_SCALE = 3


class VerificationFailed(RuntimeError):
    pass


def _regular_degree(g: Graph) -> Optional[int]:
    if g.n == 0:
        return 0
    d = g.degree(0)
    return d if is_r_regular(g, d) else None


def _skip_reason(g: Graph, r: int) -> Optional[str]:
    if not is_r_regular(g, r):
        return "not cubic" if r == 3 else f"not {r}-regular"
    if center_count(g.n, r) is None:
        return "order not divisible by 8" if r == 3 else f"2(r+1) does not divide rn"
    return None


def _no_reason(g: Graph, r: int) -> Optional[str]:
    for comp in connected_components(g):
        if center_count(len(comp), r) is None:
            return "component order not divisible by 8" if r == 3 else "component fails divisibility"
    return None


def decide_checked(g: Graph, r: int = 3, decide: Optional[Callable] = None) -> Optional[Certificate]:
    """Run the exact decision and re-verify any certificate before it is reported."""
    if decide is None:
        cert = decide_s12(g) if r == 3 else decide_s1r(g, r)
    else:
        cert = decide(g)
    if cert is not None:
        verdict = verify_certificate(g, cert, r)
        if not verdict:
            raise VerificationFailed(f"emitted certificate rejected: {verdict.reason} {verdict.detail}")
    return cert


# ---------------------------------------------------------------- check


def cmd_check(args) -> int:
    try:
        g = parse_graph6(args.graph6)
    except StarDecompError as exc:
        print(f"error: cannot parse graph6: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: invalid graph: {exc}", file=sys.stderr)
        return EXIT_PARSE
    r = args.r
    label = "s12" if r == 3 else f"s1{r - 1}"
    report: dict = {"n": g.n, "m": g.m, "regular": _regular_degree(g), "r": r}
    lines = [f"n: {g.n}, m: {g.m}, regular: {report['regular']}"]

    reason = _skip_reason(g, r)
    cert = None
    if reason is not None:
        decision = "no" if reason.startswith("order") or reason.startswith("2(r+1)") else "skipped"
        lines.append(f"{label}: {decision} ({reason})")
    else:
        try:
            cert = decide_checked(g, r)
        except ScaleExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_SCALE
        decision = "yes" if cert is not None else "no"
        reason = None if cert is not None else _no_reason(g, r)
        lines.append(f"{label}: {decision}" + (f" ({reason})" if reason else ""))
    report[label] = decision
    report["reason"] = reason

    if cert is not None:
        lines.append(f"stars: {len(cert.stars)}, centers: {list(cert.center_set)}")
        if r == 3:
            nec = necessary_conditions(g, cert.center_set)
            report["necessary"] = asdict(nec)
            flags = ", ".join(f"{k}={v}" for k, v in asdict(nec).items())
            lines.append(f"necessary conditions: {flags}")
        if args.emit_cert:
            report["certificate"] = cert.to_json(g.n, r)
    if is_r_regular(g, 3):
        try:
            s11 = s11_decompose(g)
            report["s11"] = "yes" if s11 is not None else "no"
            lines.append(f"s11: {report['s11']}")
        except ScaleExceeded:
            report["s11"] = "skipped"

    if args.json:
        print(json.dumps(report))
    else:
        print("\n".join(lines))
        if cert is not None and args.emit_cert:
            print(json.dumps(cert.to_json(g.n, r)))
    if cert is not None and args.out:
        Path(args.out).write_text(json.dumps(cert.to_json(g.n, r)) + "\n")
    return 0


# ---------------------------------------------------------------- survey


def survey_record(index: int, text: str, r: int = 3, cert_dir: Optional[str] = None) -> dict:
    start = time.perf_counter()
    record: dict = {"v": RECORD_VERSION, "index": index, "graph6": text}
    try:
        g = parse_graph6(text)
    except (StarDecompError, ValueError) as exc:
        record["error"] = f"{type(exc).__name__}: {exc}"
        record["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
        return record
    small = g.n <= SOLVER_MAX_N
    record.update(
        n=g.n,
        regular=_regular_degree(g),
        connectivity=vertex_connectivity(g),
        bipartite=bipartition(g) is not None,
        triangle_free=not has_triangle(g),
        alpha=independence_number(g).size if small else None,
        gamma=domination_number(g).size if small else None,
    )
    for key, deg in (("s12", 3),) + ((("s1r", r),) if r != 3 else ()):
        reason = _skip_reason(g, deg)
        if reason is not None:
            record[key] = "skipped"
            record[f"{key}_reason"] = reason
            continue
        try:
            cert = decide_checked(g, deg)
        except ScaleExceeded:
            record[key] = "skipped"
            record[f"{key}_reason"] = "scale exceeded"
            continue
        record[key] = "yes" if cert is not None else "no"
        if cert is not None and cert_dir is not None:
            suffix = "" if deg == 3 else f".r{deg}"
            path = Path(cert_dir) / f"{index}{suffix}.cert.json"
            path.write_text(json.dumps(cert.to_json(g.n, deg)) + "\n")
            record["certificate_path" if deg == 3 else "s1r_certificate_path"] = str(path)
    if r != 3:
        record["r"] = r
    record["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
    return record


def _survey_job(job):
    return survey_record(*job)


def _parallel_map(fn, jobs: list, workers: int) -> Iterable:
    # ProcessPoolExecutor.map yields in submission order: input order is kept
    if workers <= 1 or len(jobs) <= 1:
        return map(fn, jobs)
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        return list(pool.map(fn, jobs, chunksize=4))
    finally:
        pool.shutdown()


def _read_corpus(path: str) -> list[tuple[int, str]]:
    if path == "-":
        return list(read_graph6_lines(sys.stdin))
    with open(path, encoding="utf-8") as fh:
        return list(read_graph6_lines(fh))


def run_survey(lines: list[tuple[int, str]], out, r: int = 3, jobs: int = 1,
               cert_dir: Optional[str] = None) -> dict:
    counts = {"records": 0, "yes": 0, "no": 0, "skipped": 0, "errors": 0}
    work = [(index, text, r, cert_dir) for index, text in lines]
    for record in _parallel_map(_survey_job, work, jobs):
        out.write(json.dumps(record) + "\n")
        counts["records"] += 1
        if "error" in record:
            counts["errors"] += 1
        else:
            counts[record["s12"]] += 1
    return counts


def cmd_survey(args) -> int:
    lines = _read_corpus(args.corpus)
    cert_dir = None
    if args.emit_cert:
        cert_dir = str(Path(args.out).parent) if args.out else "."
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as out:
            counts = run_survey(lines, out, args.r, args.jobs, cert_dir)
        print(json.dumps({"summary": counts}))
    else:
        counts = run_survey(lines, sys.stdout, args.r, args.jobs, cert_dir)
        print(json.dumps({"summary": counts}), file=sys.stderr)
    return 0


# ---------------------------------------------------------------- hunt


def parse_generator(spec: str, default_seed: int = 0) -> list[tuple[int, str]]:
    """``random:n=<N>,count=<C>,seed=<S>`` -> numbered graph6 lines."""
    from stardecomp.graph import encode_graph6

    kind, _, params = spec.partition(":")
    if kind != "random":
        raise ValueError(f"unknown generator {kind!r}")
    fields = dict(item.split("=", 1) for item in params.split(",") if item)
    unknown = set(fields) - {"n", "count", "seed"}
    if unknown or "n" not in fields:
        raise ValueError(f"bad generator spec {spec!r}")
    n = int(fields["n"])
    count = int(fields.get("count", 1))
    seed = int(fields.get("seed", default_seed))
    return [(i + 1, encode_graph6(random_cubic(n, seed + i))) for i in range(count)]


def passes_filters(g: Graph, args) -> bool:
    if not is_r_regular(g, 3):
        return False
    if args.order_mod_8 and g.n % 8:
        return False
    if args.triangle_free and has_triangle(g):
        return False
    if args.bipartite and bipartition(g) is None:
        return False
    if args.min_connectivity and vertex_connectivity(g) < args.min_connectivity:
        return False
    if args.alpha_equals_3n8:
        if g.n % 8 or independence_number(g).size != 3 * g.n // 8:
            return False
    return True


def _hunt_job(job):
    index, text, args = job
    try:
        g = parse_graph6(text)
    except (StarDecompError, ValueError) as exc:
        return {"index": index, "graph6": text, "error": f"{type(exc).__name__}: {exc}"}
    if not passes_filters(g, args):
        return None
    try:
        cert = decide_checked(g)
    except ScaleExceeded as exc:
        return {"index": index, "graph6": text, "skipped": str(exc)}
    if cert is not None:
        return {"index": index, "graph6": text, "s12": "yes"}
    hit = {"index": index, "graph6": text, "n": g.n, "s12": "no", "reason": _no_reason(g, 3)}
    if g.m <= ORACLE_MAX_EDGES:
        oracle = brute_force_decompose(g, 3)
        if oracle is not None:
            raise VerificationFailed(f"line {index}: decision says no, oracle found {oracle}")
        hit["oracle_confirmed"] = True
    else:
        hit["oracle_confirmed"] = None
    return hit


def cmd_hunt(args) -> int:
    if args.generate:
        lines = parse_generator(args.generate, args.seed)
    elif args.corpus:
        lines = _read_corpus(args.corpus)
    else:
        print("error: give a corpus file or --generate", file=sys.stderr)
        return EXIT_PARSE
    results = _parallel_map(_hunt_job, [(i, t, args) for i, t in lines], args.jobs)
    out = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else sys.stdout
    stats = {"scanned": len(lines), "passed_filters": 0, "hits": 0, "errors": 0, "skipped": 0}
    try:
        for res in results:
            if res is None:
                continue
            if "error" in res:
                stats["errors"] += 1
                continue
            if "skipped" in res:
                stats["skipped"] += 1
                continue
            stats["passed_filters"] += 1
            if res["s12"] == "no":
                stats["hits"] += 1
                out.write(json.dumps({"v": RECORD_VERSION, **res}) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    if stats["hits"] == 0:
        print("none found in corpus", file=sys.stderr)
    print(json.dumps({"summary": stats}), file=sys.stderr)
    return 0


# ---------------------------------------------------------------- oracle-compare


def run_oracle_compare(lines: list[tuple[int, str]], max_edges: int = ORACLE_MAX_EDGES,
                       decide: Callable[[Graph], Optional[Certificate]] = decide_s12,
                       out=None) -> tuple[int, dict]:
    out = out if out is not None else sys.stdout
    stats = {"compared": 0, "agree": 0, "mismatch": 0, "skipped": 0}
    for index, text in lines:
        try:
            g = parse_graph6(text)
        except (StarDecompError, ValueError) as exc:
            out.write(f"skip line {index}: parse error ({exc})\n")
            stats["skipped"] += 1
            continue
        if not is_r_regular(g, 3):
            out.write(f"skip line {index}: not cubic\n")
            stats["skipped"] += 1
            continue
        if g.m > min(max_edges, ORACLE_MAX_EDGES):
            out.write(f"skip line {index}: {g.m} edges exceeds oracle cap\n")
            stats["skipped"] += 1
            continue
        try:
            fast = decide(g)
        except ScaleExceeded as exc:
            out.write(f"skip line {index}: {exc}\n")
            stats["skipped"] += 1
            continue
        slow = brute_force_decompose(g, 3)
        stats["compared"] += 1
        bad_cert = fast is not None and not verify_certificate(g, fast, 3)
        if (fast is None) == (slow is None) and not bad_cert:
            stats["agree"] += 1
            continue
        stats["mismatch"] += 1
        row = {
            "index": index,
            "graph6": text,
            "decide": None if fast is None else fast.to_json(g.n, 3),
            "oracle": None if slow is None else slow.to_json(g.n, 3),
        }
        if bad_cert:
            row["decide_verdict"] = verify_certificate(g, fast, 3).reason
        out.write("MISMATCH " + json.dumps(row) + "\n")
    if stats["skipped"] and not stats["compared"]:
        out.write("notice: no line was within oracle scale or cubic\n")
    out.write(json.dumps({"summary": stats}) + "\n")
    return (EXIT_MISMATCH if stats["mismatch"] else 0), stats


def cmd_oracle_compare(args) -> int:
    code, _ = run_oracle_compare(_read_corpus(args.corpus), args.max_edges)
    return code


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, default=3, help="star degree r for S_{1,r-1} (default 3)")
    common.add_argument("--out", help="output path")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--emit-cert", action="store_true", help="write certificates")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="stardecomp",
        description="Exact S_{1,2} edge-decomposition of cubic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide one graph")
    p.add_argument("graph6")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", parents=[common], help="JSONL survey of a graph6 corpus")
    p.add_argument("corpus", help="graph6 file, or - for stdin")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("hunt", parents=[common], help="look for non-decomposable graphs")
    p.add_argument("corpus", nargs="?")
    p.add_argument("--generate", metavar="SPEC", help="random:n=<N>,count=<C>,seed=<S>")
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--min-connectivity", type=int, default=0, metavar="K")
    p.add_argument("--order-mod-8", action="store_true", help="require 8 | n")
    p.add_argument("--alpha-equals-3n8", action="store_true")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("oracle-compare", parents=[common], help="decision vs brute force")
    p.add_argument("corpus")
    p.add_argument("--max-edges", type=int, default=ORACLE_MAX_EDGES)
    p.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        scale_max()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
