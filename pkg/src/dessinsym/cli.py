"""Command line interface: ``dessinsym <command> ...``.

Exit codes: 0 success, 1 parse error, 2 input not regular, 3 construction
failure, 4 internal invariant violated.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import constructions as C
from .dessin import RegularDessin, dual, map_automorphism_count, mirror, walsh
from .errors import ConstructionError, DessinError
from .inclusions import table1_candidates
from .io import (ReportRecord, build_record, dessin_from_dict, dessin_to_dict, load_dessin, load_dessins,
                 read_records, save_dessin)
from .symmetry import decide_symmetric, grow_normal


def construct(spec: str) -> RegularDessin:
    """Build a dessin from a generator spec such as ``biggs:8`` or ``join:biggs:8+v4``."""
    head, _, rest = spec.partition(":")
    try:
        if head == "join":
            parts = rest.split("+")
            if len(parts) < 2:
                raise ConstructionError("join needs at least two operands separated by '+'")
            D = construct(parts[0])
            for part in parts[1:]:
                D = C.join(D, construct(part))
            return D.with_name(spec)
        args = rest.split(":") if rest else []
        if head == "biggs" and len(args) == 1:
            D = C.biggs_map(int(args[0]))
        elif head == "v4" and not args:
            D = C.v4_map()
        elif head == "torus" and len(args) in (1, 2):
            D = C.torus_map(args[0], *(args[1:]))
        elif head == "exceptional" and len(args) == 1:
            D = C.exceptional_dessin(int(args[0]))
        elif head == "klein21" and not args:
            D = C.klein21()
        elif head == "cyclic" and len(args) in (1, 2):
            D = C.cyclic_dessin(*map(int, args))
        elif head == "trivial" and not args:
            D = C.trivial_dessin()
        else:
            raise ConstructionError(f"unrecognised generator spec {spec!r}")
    except ValueError as exc:
        if isinstance(exc, DessinError):
            raise
        raise ConstructionError(f"bad generator spec {spec!r}: {exc}") from None
    return D.with_name(spec)


def _emit(payload, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _flag(b: bool) -> str:
    return "yes" if b else "-"


def format_table(records: Sequence[ReportRecord]) -> str:
    header = ["name", "degree", "type", "genus", "refl", "c1", "c2", "c3", "c4", "symmetric", "growth", "table1"]
    rows = [header]
    for r in records:
        cond = [_flag(r.conditions[k]["holds"]) for k in ("c1", "c2", "c3", "c4")]
        sym = ("yes" if r.symmetric else "no") + (" (maximal)" if r.maximal else "")
        if r.degenerate:
            sym += " [degenerate]"
        rows.append([r.name or "?", str(r.degree), "(%d,%d,%d)" % r.type, str(r.genus), _flag(r.reflexible),
                     *cond, sym, ",".join(r.growth) or "-", ",".join(r.table1) or "-"])
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows) + "\n"


def cmd_info(args) -> int:
    D = load_dessin(args.path)
    info = {
        "name": D.name,
        "degree": D.degree,
        "type": list(D.type),
        "genus": D.genus,
        "degenerate": D.degenerate,
        "reflexible": build_record(D).reflexible,
        "table1": [row.case_label for row in table1_candidates(D.type)],
    }
    _emit(info, None)
    return 0


def cmd_classify(args) -> int:
    records: list[ReportRecord] = []
    status = 0
    for path in args.paths:
        try:
            for D in load_dessins(path):
                records.append(build_record(D, maximal=args.maximal))
        except DessinError as exc:
            print(f"{path}: {type(exc).__name__}: {exc}", file=sys.stderr)
            status = status or exc.exit_code
    if args.table:
        sys.stdout.write(format_table(records))
    else:
        _emit([r.to_dict() for r in records], None)
    return status


def cmd_generate(args) -> int:
    D = construct(args.spec)
    if args.out:
        save_dessin(D, args.out)
    else:
        _emit(dessin_to_dict(D), None)
    return 0


def _census_entry(raw) -> tuple:
    try:
        D = dessin_from_dict(raw)
        rep = decide_symmetric(D)
        refl = rep.c1 is not None
        return ("ok", rep.symmetric, refl, rep.degenerate, tuple(rep.holding))
    except DessinError as exc:
        return ("error", type(exc).__name__, exc.exit_code)


def census(raw_records: Sequence, parallel: int = 1) -> dict:
    """Aggregate verdicts over records; independent of ``parallel``."""
    if parallel > 1 and len(raw_records) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_census_entry, raw_records, chunksize=1))
    else:
        results = [_census_entry(r) for r in raw_records]
    summary = {
        "records": len(results),
        "errors": 0,
        "symmetric": 0,
        "not_symmetric": 0,
        "reflexible": 0,
        "chiral": 0,
        "chiral_symmetric": 0,
        "degenerate": 0,
        "by_condition": {f"c{k}": 0 for k in range(1, 5)},
        "sole_condition": {f"c{k}": 0 for k in range(1, 5)},
    }
    for res in results:
        if res[0] == "error":
            summary["errors"] += 1
            continue
        _, symmetric, refl, degenerate, holding = res
        summary["symmetric" if symmetric else "not_symmetric"] += 1
        summary["reflexible" if refl else "chiral"] += 1
        summary["chiral_symmetric"] += (not refl) and symmetric
        summary["degenerate"] += degenerate
        for k in holding:
            summary["by_condition"][f"c{k}"] += 1
        if len(holding) == 1:
            summary["sole_condition"][f"c{holding[0]}"] += 1
    return summary


def cmd_census(args) -> int:
    summary = census(read_records(args.path), max(1, args.parallel))
    _emit(summary, None)
    return 1 if summary["errors"] else 0


def cmd_dual(args) -> int:
    D = dual(load_dessin(args.path), args.which)
    _emit(dessin_to_dict(D), args.out)
    return 0


def cmd_mirror(args) -> int:
    _emit(dessin_to_dict(mirror(load_dessin(args.path))), args.out)
    return 0


def cmd_walsh(args) -> int:
    D = load_dessin(args.path)
    M = walsh(D)
    payload = {
        "darts": M.dart_count,
        "rotation": list(M.rotation.images),
        "edge_involution": list(M.edge_involution.images),
        "black_vertices": D.order // D.type.l,
        "white_vertices": D.order // D.type.m,
        "faces": len(M.faces()),
        "orientation_preserving_automorphisms": map_automorphism_count(M),
    }
    _emit(payload, args.out)
    return 0


def cmd_grow(args) -> int:
    D = load_dessin(args.path)
    grown = []
    for step in grow_normal(D):
        G = step.grown.with_name(f"{D.name or 'dessin'}/{step.rule}@{step.rotation}")
        grown.append(dessin_to_dict(G))
    _emit(grown, args.out)
    return 0


def cmd_table1(args) -> int:
    rows = table1_candidates((args.l, args.m, args.n))
    for row in rows:
        params = row.match((args.l, args.m, args.n))
        over = row.over_type(params)
        print(f"{row.case_label}  {row.sub_type_pattern} < {row.over_type_pattern}  index {row.index}  "
              f"P = {row.group_name}  {'normal' if row.normal else 'non-normal'}  "
              f"conditions {row.theorem_column}  params {params}  over-type {over}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dessinsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="degree, type, genus and reflexibility of a dessin file")
    p.add_argument("path")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("classify", help="decide symmetry of the surfaces carrying the given dessins")
    p.add_argument("paths", nargs="+")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON records with witnesses (default)")
    fmt.add_argument("--table", action="store_true", help="text table with presence flags")
    p.add_argument("--maximal", action="store_true",
                   help="assert the triangle group is maximal; only conditions 1 and 2 decide")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="write an example dessin, e.g. biggs:8, exceptional:3, join:biggs:8+v4")
    p.add_argument("spec")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("census", help="aggregate symmetry counts over a file of dessins")
    p.add_argument("path")
    p.add_argument("--parallel", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("dual", help="colour-transposing dual")
    p.add_argument("path")
    p.add_argument("--which", choices=("01", "02", "12"), required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("mirror", help="mirror image")
    p.add_argument("path")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("walsh", help="Walsh map as rotation and edge involution on darts")
    p.add_argument("path")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_walsh)

    p = sub.add_parser("grow", help="dessins for the normal triangle group inclusions (rows a, b)")
    p.add_argument("path")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_grow)

    p = sub.add_parser("table1", help="triangle group inclusions whose smaller type matches l m n")
    p.add_argument("l", type=int)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DessinError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
