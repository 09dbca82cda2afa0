"""Command-line interface.

Exit codes: 0 success, 1 verification failure or table mismatch, 2 usage
error, 3 input/output or format error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from importlib import resources
from typing import Optional, Sequence

from . import bounds, constructions, enumeration, lemmas, metrics, planar_code
from .planegraph import DomainError, GraphClass, Kind, PlaneGraph, classify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
CLASS_TAGS = ["tri", "tri4", "tri5", "quad", "quad3"]


class UsageError(Exception):
    pass


def frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def reference_tables() -> dict[str, dict[int, tuple[Optional[int], int]]]:
    """Published extremal tables keyed by class tag and order."""
    text = resources.files("planeprox").joinpath("data/reference_tables.csv").read_text()
    out: dict[str, dict[int, tuple[Optional[int], int]]] = {}
    for row in csv.DictReader(io.StringIO(text)):
        status = int(row["min_status"]) if row["min_status"] else None
        out.setdefault(row["class"], {})[int(row["order"])] = (status, int(row["count"]))
    return out


def _open_out(path: Optional[str], binary: bool = False):
    if path in (None, "-"):
        return sys.stdout.buffer if binary else sys.stdout
    return open(path, "wb" if binary else "w", newline="" if not binary else None)


def _read_graphs(path: str) -> list[PlaneGraph]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return planar_code.read_planar_code(data)


# ---------------------------------------------------------------- invariants

INVARIANT_COLUMNS = [
    "index", "n", "min_status", "proximity_num", "proximity_den",
    "remoteness_num", "remoteness_den", "wiener", "radius", "diameter",
]


def _invariant_row(i: int, g: PlaneGraph) -> dict:
    r = metrics.invariants(g)
    return {
        "index": i, "n": g.n, "min_status": r.min_status,
        "proximity_num": r.proximity.numerator, "proximity_den": r.proximity.denominator,
        "remoteness_num": r.remoteness.numerator, "remoteness_den": r.remoteness.denominator,
        "wiener": r.wiener, "radius": r.radius, "diameter": r.diameter,
    }


def cmd_invariants(args) -> int:
    graphs = _read_graphs(args.input)
    fmt = args.format or "csv"
    if fmt not in ("csv", "json", "text"):
        raise UsageError("invariants supports --format csv, json or text")
    rows = [_invariant_row(i, g) for i, g in enumerate(graphs)]
    out = _open_out(args.out)
    if fmt == "csv" and rows:
        w = csv.DictWriter(out, INVARIANT_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    elif fmt == "json":
        for r in rows:
            out.write(json.dumps(r) + "\n")
    elif fmt == "text":
        for r in rows:
            pi = Fraction(r["proximity_num"], r["proximity_den"])
            rho = Fraction(r["remoteness_num"], r["remoteness_den"])
            out.write(
                f"#{r['index']} n={r['n']} min_status={r['min_status']} proximity={frac(pi)} "
                f"remoteness={frac(rho)} wiener={r['wiener']} radius={r['radius']} diameter={r['diameter']}\n"
            )
    return EXIT_OK


# ---------------------------------------------------------------- construct

def cmd_construct(args) -> int:
    family = args.family
    n = args.n if args.n is not None else args.n_pos
    if family is None or n is None:
        raise UsageError("construct needs a family and an order")
    try:
        spec = constructions.ConstructionSpec(family, n)
        spec.k
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    con = constructions.construct(spec)
    if args.out:
        with _open_out(args.out, binary=True) as fh:
            fh.write(planar_code.write_planar_code([con.graph]))
    rep = constructions.verify_construction(family, n)
    formula = rep.formula_min_status
    shown = str(formula.numerator) if formula.denominator == 1 else frac(formula)
    verdict = "match" if rep.match else "formula-mismatch"
    fmt = args.format or "text"
    if fmt == "json":
        print(json.dumps({
            "family": family, "n": n, "copies": spec.k,
            "min_status": rep.built_min_status,
            "formula_num": formula.numerator, "formula_den": formula.denominator,
            "match": rep.match, "class": rep.graph_class.tag if rep.graph_class else None,
            "class_ok": rep.class_ok, "witness_ok": rep.witness_ok,
        }))
    elif fmt == "planar_code":
        if not args.out:
            sys.stdout.buffer.write(planar_code.write_planar_code([con.graph]))
    else:
        print(f"{family} n={n} min_status={rep.built_min_status} formula={shown} {verdict}")
    if not rep.class_ok:
        print(f"error: built graph classified as {rep.graph_class}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------- table / enumerate

def _class_range(args) -> tuple[GraphClass, int, int]:
    tag = args.cls or args.cls_pos
    if tag is None:
        raise UsageError("a graph class is required (--class)")
    if tag not in CLASS_TAGS:
        raise UsageError(f"unknown class {tag!r}")
    cls = GraphClass.from_tag(tag)
    lo = args.n_min if args.n_min is not None else args.n_min_pos
    hi = args.n_max if args.n_max is not None else args.n_max_pos
    if getattr(args, "n", None) is not None:
        lo = hi = args.n
    if lo is None:
        raise UsageError("an order or order range is required")
    if hi is None:
        hi = lo
    if lo > hi:
        raise UsageError("empty order range")
    s_lo, s_hi = enumeration.SUPPORTED[cls]
    if not s_lo <= lo <= hi <= s_hi:
        raise UsageError(f"{tag} is supported for orders {s_lo}..{s_hi}")
    return cls, lo, hi


def cmd_table(args) -> int:
    cls, lo, hi = _class_range(args)
    rows = enumeration.extremal_table(cls, lo, hi, jobs=args.jobs)
    fmt = args.format or "text"
    out = _open_out(args.out)
    if fmt == "csv":
        out.write("order,min_status,count,total\n")
        for r in rows:
            out.write(f"{r.order},{'' if r.max_min_status is None else r.max_min_status},{r.count},{r.total_classes}\n")
    elif fmt == "json":
        for r in rows:
            out.write(json.dumps({"order": r.order, "min_status": r.max_min_status, "count": r.count, "total": r.total_classes}) + "\n")
    elif fmt == "text":
        out.write(f"{'order':>5} {'min_status':>10} {'count':>6} {'total':>7}\n")
        for r in rows:
            ms = "---" if r.max_min_status is None else str(r.max_min_status)
            out.write(f"{r.order:>5} {ms:>10} {r.count:>6} {r.total_classes:>7}\n")
    else:
        raise UsageError("table supports --format text, csv or json")
    if not args.compare_paper:
        return EXIT_OK
    ref = reference_tables()[cls.tag]
    bad = 0
    for r in rows:
        if r.order not in ref:
            print(f"order {r.order}: no reference row", file=sys.stderr)
            continue
        want = ref[r.order]
        if (r.max_min_status, r.count) != want:
            bad += 1
            print(f"order {r.order}: got ({r.max_min_status}, {r.count}), reference {want}", file=sys.stderr)
    print(f"compared {len(rows)} rows with the reference table: {'OK' if not bad else f'{bad} mismatches'}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_enumerate(args) -> int:
    cls, lo, hi = _class_range(args)
    fmt = args.format or "planar_code"
    graphs = [g for n in range(lo, hi + 1) for g in enumeration.enumerate_class(cls, n, jobs=args.jobs)]
    if fmt == "planar_code":
        data = planar_code.write_planar_code(graphs)
        if args.out:
            with open(args.out, "wb") as fh:
                fh.write(data)
        else:
            sys.stdout.buffer.write(data)
    elif fmt in ("text", "json", "csv"):
        out = _open_out(args.out)
        for i, g in enumerate(graphs):
            if fmt == "json":
                out.write(json.dumps({"index": i, "n": g.n, "rotation": [list(r) for r in g.rotation]}) + "\n")
            else:
                out.write(f"{g.n} " + ",".join(" ".join(str(x + 1) for x in r) for r in g.rotation) + "\n")
    else:
        raise UsageError(f"unknown format {fmt!r}")
    print(f"{len(graphs)} graphs", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------- verify

def _verify_graph(g: PlaneGraph, label: str, do_bounds: bool, do_lemmas: bool, out) -> int:
    cls = classify(g)
    if cls is None:
        out.write(f"{label}: unclassifiable (neither a triangulation nor a quadrangulation)\n")
        return 1
    problems = 0
    if do_bounds:
        chk = bounds.check_bound(g)
        if not chk.ok:
            problems += 1
            out.write(f"{label}: proximity {frac(chk.pi)} exceeds bound {frac(chk.bound)}\n")
    if do_lemmas:
        found = []
        if cls.kind is Kind.TRIANGULATION:
            for k in range(3, cls.min_connectivity + 1):
                found += lemmas.check_layer_lemma(g, k)
        else:
            found += lemmas.check_layer_lemma(g, "quad")
            if cls.min_connectivity >= 3:
                found += lemmas.check_layer_lemma(g, 3)
            found += lemmas.check_active_face_lemma(g)
        for v in sorted(found):
            out.write(f"{label}: {v.to_json()}\n")
        problems += len(found)
    return problems


def cmd_verify(args) -> int:
    do_bounds = args.bounds or not (args.bounds or args.lemmas)
    do_lemmas = args.lemmas or not (args.bounds or args.lemmas)
    items: list[tuple[str, PlaneGraph]] = []
    if args.input:
        items = [(f"graph {i}", g) for i, g in enumerate(_read_graphs(args.input))]
    elif args.constructions:
        hi = args.n_max if args.n_max is not None else 100
        for fam in constructions.FAMILIES:
            for n in constructions.supported_orders(fam, hi):
                items.append((f"{fam}({n})", constructions.build(constructions.ConstructionSpec(fam, n))))
    else:
        cls, lo, hi = _class_range(args)
        for n in range(lo, hi + 1):
            items += [(f"{cls.tag}({n})#{i}", g) for i, g in enumerate(enumeration.enumerate_class(cls, n, jobs=args.jobs))]
    out = _open_out(args.out)
    problems = sum(_verify_graph(g, label, do_bounds, do_lemmas, out) for label, g in items)
    out.write(f"checked {len(items)} graphs, {problems} problems\n")
    return EXIT_FAIL if problems else EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planeprox", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        if fmt:
            sp.add_argument("--format", choices=["csv", "json", "text", "planar_code"])
        sp.add_argument("--out", help="output path (default: standard output)")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")

    def class_args(sp):
        sp.add_argument("cls_pos", nargs="?", metavar="CLASS", choices=CLASS_TAGS + [None])
        sp.add_argument("n_min_pos", nargs="?", type=int, metavar="N_MIN")
        sp.add_argument("n_max_pos", nargs="?", type=int, metavar="N_MAX")
        sp.add_argument("--class", dest="cls", choices=CLASS_TAGS)
        sp.add_argument("--n", type=int)
        sp.add_argument("--n-min", type=int)
        sp.add_argument("--n-max", type=int)

    sp = sub.add_parser("invariants", help="distance invariants of every graph in a planar_code file")
    sp.add_argument("input", help="planar_code file, or - for standard input")
    common(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("construct", help="build a construction and compare with its closed form")
    sp.add_argument("family", nargs="?", choices=list(constructions.FAMILIES))
    sp.add_argument("n_pos", nargs="?", type=int, metavar="N")
    sp.add_argument("--n", type=int)
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("table", help="largest minimum status per order over a class")
    class_args(sp)
    sp.add_argument("--compare-paper", action="store_true", help="diff against the published tables")
    common(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("enumerate", help="export all graphs of a class")
    class_args(sp)
    common(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="check bounds and lemmas on a corpus")
    class_args(sp)
    sp.add_argument("--input", help="planar_code file to check instead of an enumerated corpus")
    sp.add_argument("--constructions", action="store_true", help="check all constructions up to --n-max (default 100)")
    sp.add_argument("--bounds", action="store_true")
    sp.add_argument("--lemmas", action="store_true")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except planar_code.PlanarCodeError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except DomainError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
