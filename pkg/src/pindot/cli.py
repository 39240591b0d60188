"""Command line entry point: ``pindot <subcommand>``.

Exit status is 0 when every theorem-backed check passed, 1 when one failed,
and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .errors import PreconditionError
from .ffield import parse_field
from .formats import FormatError, read_point_set, read_scalar_set
from .harness import CHECKS, CampaignConfig, run_campaign
from .incidence import first_moment, moment_profile, second_moment_formula
from .pinned import pinned_pair, threshold
from .sampling import sample_scalar_set, sample_symmetric_set
from .sumsets import aa_plus_aa_stats, glibichuk_check, mult_subgroup, pinned_dot_count_range, subfield_example


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    data: dict = {}
    if args.infile:
        data = json.loads(Path(args.infile).read_text())
    if args.field:
        data["fields"] = args.field
    for key in ("trials", "size", "seed", "checks", "family"):
        val = getattr(args, key)
        if val is not None:
            data["set_size" if key == "size" else key] = val
    if "fields" not in data:
        raise ValueError("verify needs at least one --field or a config file with 'fields'")
    config = CampaignConfig.from_dict(data)
    report = run_campaign(config, workers=args.workers)
    _emit(report.to_csv() if args.format == "csv" else report.dumps(), args.out)
    for f, t, name in report.defects:
        print(f"DEFECT: field {f} trial {t} check {name}", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_pinned(args: argparse.Namespace) -> int:
    E = read_point_set(args.infile)
    w = pinned_pair(E)
    _emit(_dump(w.to_json()), args.out)
    return 0 if w.dot_count >= threshold(E.spec.q) else 1


def cmd_identity(args: argparse.Namespace) -> int:
    E = read_point_set(args.infile)
    profile = moment_profile(E)
    lhs, rhs = profile.total, second_moment_formula(E)
    out = {
        "field": str(E.spec),
        "size": len(E),
        "lhs": lhs,
        "rhs": rhs,
        "equal": lhs == rhs,
        "first_moment": first_moment(E),
        "profile": profile.to_json(),
    }
    _emit(_dump(out), args.out)
    return 0 if lhs == rhs else 1


def cmd_extremal(args: argparse.Namespace) -> int:
    E = subfield_example(args.p, args.k)
    q = E.spec.q
    lo, hi = pinned_dot_count_range(E)
    sharp = len(E) == q and lo == hi == math.isqrt(q)
    out = {
        "field": str(E.spec),
        "size": len(E),
        "min_dot_count": lo,
        "max_dot_count": hi,
        "sqrt_q": math.isqrt(q),
        "threshold": threshold(q),
        "sharp": sharp,
        "points": [list(pt) for pt in E],
    }
    _emit(_dump(out), args.out)
    return 0 if sharp else 1


def cmd_glibichuk(args: argparse.Namespace) -> int:
    spec = parse_field(args.field[0])
    m = args.size if args.size is not None else math.isqrt(spec.q) + 1
    rows = []
    for t in range(args.trials):
        A = sample_symmetric_set(spec, m, args.seed, t)
        rows.append({"trial": t, "A": sorted(A.members), "holds": glibichuk_check(A)})
    out = {"field": str(spec), "size": m, "seed": args.seed, "results": rows}
    _emit(_dump(out), args.out)
    return 0 if all(r["holds"] for r in rows) else 1


def cmd_stats(args: argparse.Namespace) -> int:
    if args.infile:
        sets = [read_scalar_set(args.infile)]
    elif args.subgroup is not None:
        sets = [mult_subgroup(parse_field(args.field[0]), args.subgroup)]
    else:
        if not args.field or args.size is None:
            raise ValueError("stats needs --in, --subgroup, or --field with --size")
        spec = parse_field(args.field[0])
        sets = [sample_scalar_set(spec, args.size, args.seed, t) for t in range(args.trials)]
    rows = [{"A": sorted(A.members), "size": len(A), **aa_plus_aa_stats(A).to_json()} for A in sets]
    _emit(_dump({"field": str(sets[0].spec), "results": rows}), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pindot", description="Pinned dot products over finite planes.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("--field", action="append", help="field as p,k (repeatable)")
    v.add_argument("--trials", type=int)
    v.add_argument("--size", help="set size: q+1, q, 2q or an integer")
    v.add_argument("--seed", type=int)
    v.add_argument("--checks", help=f"comma separated subset of {','.join(CHECKS)}")
    v.add_argument("--family", choices=["random", "subfield"])
    v.add_argument("--in", dest="infile", help="JSON campaign config")
    v.add_argument("--out")
    v.add_argument("--format", choices=["json", "csv"], default="json")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("pinned", help="pinned pair witness for a point set file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_pinned)

    i = sub.add_parser("identity", help="both sides of the incidence second-moment identity")
    i.add_argument("--in", dest="infile", required=True)
    i.add_argument("--out")
    i.set_defaults(func=cmd_identity)

    e = sub.add_parser("extremal", help="subfield sharpness example")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--k", type=int, default=2)
    e.add_argument("--out")
    e.set_defaults(func=cmd_extremal)

    g = sub.add_parser("glibichuk", help="8-fold sumset of AA for random symmetric A")
    g.add_argument("--field", action="append", required=True)
    g.add_argument("--size", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--trials", type=int, default=1)
    g.add_argument("--out")
    g.set_defaults(func=cmd_glibichuk)

    s = sub.add_parser("stats", help="|AA+AA| statistics")
    s.add_argument("--field", action="append")
    s.add_argument("--size", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=1)
    s.add_argument("--subgroup", type=int, help="use the multiplicative subgroup of this order")
    s.add_argument("--in", dest="infile", help="scalar set file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
