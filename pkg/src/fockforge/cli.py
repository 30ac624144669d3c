"""Command-line driver: ``fockforge [flags] {gr-table,findim,apply,crystal,check}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import checks, crystal, grading
from .errors import InvariantError
from .fock import (
    FockSpaceParams,
    FockVector,
    apply_b,
    apply_b_dual,
    apply_casimir,
    apply_e,
    apply_f,
    format_vector,
    parse_vector,
)
from .partitions import format_multipartition

FORMATS = ("json", "csv", "dot", "text")
EXIT_OK, EXIT_USAGE, EXIT_INVARIANT = 0, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    m: int
    ell: int
    charge: tuple
    max_degree: int
    command: str
    fmt: str
    crystal_order: str

    def params(self) -> FockSpaceParams:
        return FockSpaceParams(self.m, self.ell, self.charge, self.max_degree)

    def params_json(self) -> dict:
        return {
            "m": self.m,
            "ell": self.ell,
            "charge": list(self.charge),
            "max_degree": self.max_degree,
            "crystal_order": self.crystal_order,
        }


def _parse_charge(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"charge must be comma-separated integers, got {text!r}")


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--m", type=int, default=default(2), help="rank of the affine algebra (m >= 2)")
    parser.add_argument("--ell", type=int, default=default(1), help="number of components (level)")
    parser.add_argument(
        "--charge", type=_parse_charge, default=default(None), help="comma-separated charge, length ell"
    )
    parser.add_argument("--max-degree", type=int, default=default(6), dest="max_degree")
    parser.add_argument("--format", choices=FORMATS, default=default(None), dest="fmt")
    parser.add_argument(
        "--crystal-order", choices=crystal.ORDERS, default=default(crystal.CONTENT_FIRST), dest="crystal_order"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockforge",
        description="Graded dimensions, crystals and invariant checks on charged higher-level Fock spaces.",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    shared = argparse.ArgumentParser(add_help=False)
    _add_common(shared, suppress=True)

    sub.add_parser("gr-table", parents=[shared], help="graded dimension table for every n <= N")
    sub.add_parser("findim", parents=[shared], help="counts h_n from the generating function")
    ap = sub.add_parser("apply", parents=[shared], help="apply e q, f q, b r, b' r or casimir to a vector")
    ap.add_argument("operator", choices=("e", "f", "b", "b'", "casimir"))
    ap.add_argument("args", nargs="+", metavar="ARG", help="index (except for casimir) then the vector")
    sub.add_parser("crystal", parents=[shared], help="export the crystal graph")
    sub.add_parser("check", parents=[shared], help="run the invariant suite")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    charge = ns.charge if ns.charge is not None else (0,) * max(ns.ell, 0)
    default_fmt = "dot" if ns.command == "crystal" else "json" if ns.command == "gr-table" else "text"
    cfg = RunConfig(ns.m, ns.ell, tuple(charge), ns.max_degree, ns.command, ns.fmt or default_fmt, ns.crystal_order)
    if cfg.m < 2:
        raise UsageError("--m must be at least 2")
    if cfg.ell < 1:
        raise UsageError("--ell must be at least 1")
    if cfg.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    if len(cfg.charge) != cfg.ell:
        raise UsageError(f"--charge has {len(cfg.charge)} entries, expected {cfg.ell}")
    return cfg


# -- commands ---------------------------------------------------------------------


def _table_for_degree(args):
    params, n = args
    return grading.graded_dims(n, params)


def _thread_cap() -> int:
    raw = os.environ.get("FOCKFORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"FOCKFORGE_THREADS must be an integer, got {raw!r}")


def compute_tables(params: FockSpaceParams) -> list:
    degrees = list(range(params.bound + 1))
    workers = min(_thread_cap(), len(degrees))
    if workers <= 1:
        return [grading.graded_dims(n, params) for n in degrees]
    # largest degrees first so the slow jobs start early; map keeps the order
    with ProcessPoolExecutor(max_workers=workers) as pool:
        done = dict(zip(reversed(degrees), pool.map(_table_for_degree, [(params, n) for n in reversed(degrees)])))
    return [done[n] for n in degrees]


def cmd_gr_table(cfg: RunConfig) -> str:
    tables = compute_tables(cfg.params())
    if cfg.fmt == "csv":
        return grading.table_csv(tables)
    if cfg.fmt == "text":
        lines = []
        for t in tables:
            cells = " ".join(f"({i},{j}):{d}" for i, j, d in t.triples())
            lines.append(f"n={t.n} {cells}")
        return "\n".join(lines) + "\n"
    if cfg.fmt == "json":
        return json.dumps({"params": cfg.params_json(), "tables": [t.to_json() for t in tables]}) + "\n"
    raise UsageError(f"gr-table does not support --format {cfg.fmt}")


def cmd_findim(cfg: RunConfig) -> str:
    params = cfg.params()
    h = grading.findim_counts(params)
    singular = [grading.singular_dim(n, params) for n in range(params.bound + 1)]
    rows = [(n, h[n], singular[n], h[n] == singular[n]) for n in range(params.bound + 1)]
    if cfg.fmt == "json":
        return json.dumps(
            {
                "params": cfg.params_json(),
                "counts": [{"n": n, "h": a, "singular_dim": b, "match": ok} for n, a, b, ok in rows],
            }
        ) + "\n"
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "h", "singular_dim", "match"])
        writer.writerows([n, a, b, str(ok).lower()] for n, a, b, ok in rows)
        return buf.getvalue()
    if cfg.fmt == "text":
        return "".join(f"n={n} h={a} singular={b} match={str(ok).lower()}\n" for n, a, b, ok in rows)
    raise UsageError(f"findim does not support --format {cfg.fmt}")


def cmd_apply(cfg: RunConfig, operator: str, args: list) -> str:
    params = cfg.params()
    if operator == "casimir":
        if len(args) != 1:
            raise UsageError("casimir takes exactly one vector argument")
        index, text = None, args[0]
    else:
        if len(args) != 2:
            raise UsageError(f"{operator} takes an index and a vector")
        try:
            index = int(args[0])
        except ValueError:
            raise UsageError(f"operator index must be an integer, got {args[0]!r}")
        text = args[1]
    try:
        vec = parse_vector(text, params)
    except ValueError as exc:
        raise UsageError(str(exc))
    if index is not None and operator in ("e", "f") and not 0 <= index < params.m:
        raise UsageError(f"residue {index} outside 0..{params.m - 1}")
    if index is not None and operator in ("b", "b'") and index < 1:
        raise UsageError("Heisenberg index must be positive")
    ops = {"e": apply_e, "f": apply_f, "b": apply_b, "b'": apply_b_dual}
    out: FockVector = apply_casimir(vec) if operator == "casimir" else ops[operator](index, vec)
    if cfg.fmt == "json":
        terms = [[format_multipartition(k), str(c)] for k, c in _sorted_terms(out)]
        return json.dumps({"params": cfg.params_json(), "vector": str(out), "terms": terms}) + "\n"
    if cfg.fmt == "text":
        return str(out) + "\n"
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["multipartition", "coefficient"])
        writer.writerows([format_multipartition(k), str(c)] for k, c in _sorted_terms(out))
        return buf.getvalue()
    raise UsageError(f"apply does not support --format {cfg.fmt}")


def _sorted_terms(v: FockVector):
    from .fock import basis_sort_key

    return [(k, v.coeffs[k]) for k in sorted(v.coeffs, key=basis_sort_key)]


def cmd_crystal(cfg: RunConfig) -> str:
    g = crystal.build_graph(cfg.params(), cfg.crystal_order)
    if cfg.fmt == "dot":
        return g.to_dot()
    if cfg.fmt == "json":
        return crystal.graph_json(g) + "\n"
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["source", "residue", "target"])
        writer.writerows([format_multipartition(a), q, format_multipartition(b)] for a, q, b in g.arrows)
        return buf.getvalue()
    lines = []
    for n in range(cfg.max_degree + 1):
        census = " ".join(f"{d}:{c}" for d, c in crystal.depth_census(g, n).items())
        lines.append(
            f"n={n} vertices={len(g.layers[n])} highest={len(g.highest_weight_vertices(n))} depths {census}"
        )
    return "\n".join(lines) + "\n"


def cmd_check(cfg: RunConfig):
    results = checks.run_checks(cfg.params(), cfg.crystal_order)
    failed = next((r for r in results if not r.ok), None)
    if cfg.fmt == "json":
        payload = {
            "params": cfg.params_json(),
            "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
            "ok": failed is None,
        }
        text = json.dumps(payload) + "\n"
    else:
        text = "".join(
            f"PASS {r.name}\n" if r.ok else f"FAIL {r.name}: {r.detail}\n" for r in results
        )
    return text, failed


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        cfg = config_from_args(ns)
        if cfg.command == "gr-table":
            out, code = cmd_gr_table(cfg), EXIT_OK
        elif cfg.command == "findim":
            out, code = cmd_findim(cfg), EXIT_OK
        elif cfg.command == "apply":
            out, code = cmd_apply(cfg, ns.operator, ns.args), EXIT_OK
        elif cfg.command == "crystal":
            out, code = cmd_crystal(cfg), EXIT_OK
        else:
            out, failed = cmd_check(cfg)
            code = EXIT_OK if failed is None else EXIT_INVARIANT
    except UsageError as exc:
        print(f"fockforge: error: {exc}", file=stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"fockforge: invariant failure: {exc}", file=stderr)
        return EXIT_INVARIANT
    stdout.write(out)
    if code == EXIT_INVARIANT:
        print(f"fockforge: invariant failure: {failed.name}: {failed.detail}", file=stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
