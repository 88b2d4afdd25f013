"""Command line entry point: ``orbitflags <command> [--spec FILE] [--seed N] [--out PATH]``.

Exit codes: 0 ok, 2 parse error, 3 infeasible construction, 4 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Sequence

from orbitflags.decoder import channel_sim, correction_radius
from orbitflags.flagcodes import (
    ResourceLimitError,
    code_report,
    subgroup_sweep,
    table_report,
    weaved_construction,
)
from orbitflags.flags import FlagError, classify_flag
from orbitflags.gfield import FieldSizeError, build_field
from orbitflags.potential_distances import (
    attained_values,
    pairwise_attained_values,
    potential_values,
)
from orbitflags.specfile import CodeSpec, SpecError, load_spec

EXIT_OK, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_RESOURCE = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _ints(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)


def _need_spec(args: argparse.Namespace) -> CodeSpec:
    if not getattr(args, "spec", None):
        raise UsageError("--spec is required for this command")
    return load_spec(args.spec)


def table1_rows() -> list[tuple[int, int, int, int]]:
    ctx = build_field(2, 1, 12)
    rows = table_report(ctx, 2, [ctx.element(k) for k in (1, 5, 9, 63)])
    return [(r.beta_exponent, r.order, r.intersection_order, r.orbit_size) for r in rows]


def table2_rows() -> list[tuple[int, int]]:
    ctx = build_field(2, 1, 10)
    return [(r.order, r.distance) for r in subgroup_sweep(weaved_construction(ctx, [1, 5]))]


def cmd_table(args: argparse.Namespace) -> None:
    if args.name == "table1":
        text = _csv_text(["beta_exponent", "order", "intersection_order", "orbit_size"], table1_rows())
    else:
        text = _csv_text(["order", "distance"], table2_rows())
    _emit(text, getattr(args, "out", None))


def cmd_report(args: argparse.Namespace) -> None:
    spec = _need_spec(args)
    code = spec.code()
    rep = code_report(code)
    ctx = code.ctx
    cls = rep.classification
    potential = potential_values(ctx.n, rep.type_vector, cls.underlying_type)
    lines = [
        f"field: q={ctx.q} n={ctx.n} (p={ctx.p}, e={ctx.e})",
        f"beta: alpha^{code.beta.exponent} (order {rep.beta_order})",
        f"type: {_ints(rep.type_vector)}",
        f"classification: {cls.kind}"
        + (f" (field dims {_ints(cls.underlying_type)})" if cls.underlying_type else ""),
        f"cardinality: {rep.cardinality}",
        f"min_distance: {rep.min_distance}",
        f"max_distance: {rep.max_distance}",
        f"best_friend: F_q^{rep.best_friend}",
        f"disjoint: {'yes' if rep.disjoint else 'no'}",
        f"consistent: {'yes' if rep.consistent else 'no'}",
        f"potential_distances: {_ints(potential)}",
        "projected codes:",
        "  index dim size distance best_friend",
    ]
    rows = [(i, p.dim, p.size, p.min_distance, p.best_friend) for i, p in enumerate(rep.projected, 1)]
    lines += [f"  {i:>5} {d:>3} {s:>4} {m:>8} {b:>11}" for i, d, s, m, b in rows]
    sys.stdout.write("\n".join(lines) + "\n")
    if getattr(args, "out", None):
        _emit(_csv_text(["index", "dim", "size", "distance", "best_friend"], rows), args.out)


def cmd_sweep(args: argparse.Namespace) -> None:
    spec = _need_spec(args)
    rows = subgroup_sweep(spec.flag())
    text = _csv_text(
        ["order", "cardinality", "distance"], [(r.order, r.cardinality, r.distance) for r in rows]
    )
    _emit(text, getattr(args, "out", None))


def cmd_decode_sim(args: argparse.Namespace) -> None:
    spec = _need_spec(args)
    seed = getattr(args, "seed", None)
    if seed is None:
        raise UsageError("--seed is required for decode-sim")
    code = spec.code()
    max_e = args.max_erasures if args.max_erasures is not None else correction_radius(code)
    rows = channel_sim(code, args.trials, max_e, seed, threads=getattr(args, "threads", None) or 1)
    text = _csv_text(
        ["total_erasures", "trials", "successes", "rate"],
        [(r.total_erasures, r.trials, r.successes, f"{r.rate:.4f}") for r in rows],
    )
    _emit(text, getattr(args, "out", None))


def cmd_potential(args: argparse.Namespace) -> None:
    lines = []
    if getattr(args, "spec", None):
        spec = load_spec(args.spec)
        flag = spec.flag()
        n, types = flag.ctx.n, flag.type_vector
        fields = classify_flag(flag).underlying_type
        lines.append(f"potential: {_ints(potential_values(n, types, fields))}")
        lines.append(f"attained: {_ints(attained_values(flag))}")
        lines.append(f"pairwise: {_ints(pairwise_attained_values(flag))}")
    else:
        if args.n is None or args.type is None:
            raise UsageError("potential needs --spec or both --n and --type")
        fields = args.fields or []
        lines.append(f"potential: {_ints(potential_values(args.n, args.type, fields))}")
    _emit("\n".join(lines) + "\n", getattr(args, "out", None))


def _int_list(raw: str) -> list[int]:
    try:
        return [int(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", default=argparse.SUPPRESS, help="code spec file")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="RNG seed")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write CSV here")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker threads")

    parser = argparse.ArgumentParser(
        prog="orbitflags", description="Cyclic orbit flag codes on finite fields.", parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", parents=[common], help="parameters of the code in --spec")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("table", parents=[common], help="reference tables as CSV")
    p.add_argument("name", choices=["table1", "table2"])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sweep", parents=[common], help="distance over every cyclic subgroup")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("decode-sim", parents=[common], help="erasure channel simulation")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-erasures", type=int, default=None)
    p.set_defaults(func=cmd_decode_sim)

    p = sub.add_parser("potential", parents=[common], help="potential distance values")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--type", type=_int_list, default=None)
    p.add_argument("--fields", type=_int_list, default=None)
    p.set_defaults(func=cmd_potential)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except (SpecError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FieldSizeError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (FlagError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
