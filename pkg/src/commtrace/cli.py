"""Command-line interface: ``commtrace {tableaux,dims,moments,simulate,report,finite}``.

Exit codes: 0 success, 2 usage error, 3 domain or regime error. Reports go
to stdout (or ``--output``); diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .algebra import DomainError, as_partition, as_staircase, as_type_vector
from .finite_groups import finite_commutator_average, get_group
from .haar import estimate_moments
from .moments import moment_report, clt_report
from .repdims import GroupFamily, Kind, dimension
from .tableaux import count_staircase, count_updown

DEFAULT_SEED = 20250212

GROUP_ALIASES = {
    "sp": Kind.SYMPLECTIC,
    "symplectic": Kind.SYMPLECTIC,
    "so-even": Kind.SO_EVEN,
    "so-odd": Kind.SO_ODD,
    "u": Kind.UNITARY,
    "unitary": Kind.UNITARY,
}


class UsageError(Exception):
    pass


def parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_shape(text: str):
    parts = parse_ints(text)
    try:
        return as_partition(parts)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def parse_staircase(text: str, height: int | None):
    try:
        return as_staircase(parse_ints(text), height)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def parse_type(text: str):
    try:
        return as_type_vector(parse_ints(text.replace("+", "")))
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def exact_str(x: Fraction) -> str:
    """Irreducible fraction and a 12-significant-digit decimal."""
    return f"{x} {format_float(x)}"


def format_float(x) -> str:
    return format(float(x), ".12g")


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)  # RFC 4180: minimal quoting, CRLF line ends
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# --- subcommands ----------------------------------------------------------


def cmd_tableaux(args) -> str:
    if args.entries is not None:
        if args.type is None:
            raise UsageError("--entries requires --type")
        gam = parse_staircase(args.entries, args.height)
        count = count_staircase(gam, parse_type(args.type))
        payload = {"shape": list(gam), "type": list(parse_type(args.type)), "count": count}
    else:
        if args.r is None:
            raise UsageError("--r is required for partition shapes")
        lam = parse_shape(args.shape)
        count = count_updown(lam, args.r, args.height_bound)
        payload = {"shape": list(lam), "r": args.r, "height_bound": args.height_bound, "count": count}
    return _render_single(args, payload, str(count))


def cmd_dims(args) -> str:
    group = GroupFamily(GROUP_ALIASES[args.group], args.n)
    if group.kind is Kind.UNITARY:
        if args.entries is not None:
            label = parse_staircase(args.entries, group.n)
        else:
            lam = parse_shape(args.shape)
            label = as_staircase(lam + (0,) * (group.n - len(lam)), group.n)
    else:
        label = parse_shape(args.shape)
    d = dimension(group, label)
    payload = {"group": group.kind.value, "n": group.n, "label": list(label), "dimension": d}
    return _render_single(args, payload, str(d))


def cmd_moments(args) -> str:
    group = GroupFamily(GROUP_ALIASES[args.group], args.n)
    rep = moment_report(group, args.k, args.r, args.s)
    payload = {
        "group": group.kind.value,
        "n": group.n,
        "k": args.k,
        "r": args.r,
        "s": args.s,
        "exact": str(rep.exact),
        "exact_float": float(rep.exact),
        "limit": str(rep.limit),
        "gap": str(rep.gap),
        "term_count": rep.term_count,
    }
    return _render_single(args, payload, exact_str(rep.exact))


def cmd_simulate(args) -> str:
    group = GroupFamily(GROUP_ALIASES[args.group], args.n)
    em = estimate_moments(
        group, args.k, args.r_max, args.s_max, args.samples, args.seed, args.workers
    )
    doc = em.to_dict()
    if args.format == "csv":
        return dump_csv(
            ["r", "s", "mean_re", "mean_im", "stderr"],
            [[m["r"], m["s"], repr(m["mean_re"]), repr(m["mean_im"]),
              "" if m["stderr"] is None else repr(m["stderr"])] for m in doc["moments"]],
        )
    return dump_json(doc)


REPORT_FIELDS = [
    "n", "exact", "exact_float", "limit", "gap", "gap_float", "term_count",
    "empirical_re", "empirical_im", "stderr",
]


def cmd_report(args) -> str:
    kind = GROUP_ALIASES[args.group]
    rows = []
    for n in parse_ints(args.n_list):
        try:
            (rep,) = clt_report(kind, args.k, args.r, args.s, [n])
        except DomainError as exc:
            print(f"warning: n={n} skipped: {exc}", file=sys.stderr)
            continue
        row = {
            "n": n,
            "exact": str(rep.exact),
            "exact_float": format_float(rep.exact),
            "limit": str(rep.limit),
            "gap": str(rep.gap),
            "gap_float": format_float(rep.gap),
            "term_count": rep.term_count,
            "empirical_re": None,
            "empirical_im": None,
            "stderr": None,
        }
        if args.samples:
            em = estimate_moments(
                GroupFamily(kind, n), args.k, args.r, args.s, args.samples, args.seed, args.workers
            )
            est = em.get(args.r, args.s)
            row["empirical_re"] = float(est.mean.real)
            row["empirical_im"] = float(est.mean.imag)
            row["stderr"] = est.stderr
        rows.append(row)
    if args.format == "json":
        return dump_json({"group": kind.value, "k": args.k, "r": args.r, "s": args.s, "rows": rows})
    return dump_csv(
        REPORT_FIELDS,
        [["" if row[f] is None else row[f] for f in REPORT_FIELDS] for row in rows],
    )


def cmd_finite(args) -> str:
    group = get_group(args.group)
    rows = []
    for idx, (name, d) in enumerate(zip(group.character_names, group.dimensions)):
        avg = finite_commutator_average(group, idx, args.k)
        expected = Fraction(1, d ** (2 * args.k - 1))
        rows.append(
            {"character": name, "dimension": d, "average": str(avg),
             "expected": str(expected), "match": avg == expected}
        )
    if args.format == "json":
        return dump_json({"group": group.name, "k": args.k, "rows": rows})
    if args.format == "csv":
        return dump_csv(list(rows[0]), [list(r.values()) for r in rows])
    return "".join(
        f"{r['character']}\td={r['dimension']}\t{r['average']}\t"
        f"{'ok' if r['match'] else 'MISMATCH'}\n"
        for r in rows
    )


def _render_single(args, payload: dict, text: str) -> str:
    if args.format == "json":
        return dump_json(payload)
    if args.format == "csv":
        return dump_csv(list(payload), [[json.dumps(v) if isinstance(v, list) else v
                                         for v in payload.values()]])
    return text + "\n"


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", default=argparse.SUPPRESS, help="write the report here instead of stdout")
    common.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="commtrace", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    groups = sorted(GROUP_ALIASES)

    p = sub.add_parser("tableaux", parents=[common], help="count up-down (staircase) tableaux")
    p.add_argument("--shape", default="", help='comma-separated parts; "" is the empty partition')
    p.add_argument("--r", type=int)
    p.add_argument("--height-bound", type=int)
    p.add_argument("--height", type=int, help="staircase height (with --entries)")
    p.add_argument("--entries", help="staircase entries, e.g. 1,0,0,-1")
    p.add_argument("--type", help="type vector, e.g. 1,1,-1,-1")
    p.set_defaults(func=cmd_tableaux, default_format="text")

    p = sub.add_parser("dims", parents=[common], help="irrep dimension")
    p.add_argument("--group", choices=groups, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shape", default="")
    p.add_argument("--entries", help="full staircase for the unitary group")
    p.set_defaults(func=cmd_dims, default_format="text")

    p = sub.add_parser("moments", parents=[common], help="exact moment of the commutator-product trace")
    p.add_argument("--group", choices=groups, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.set_defaults(func=cmd_moments, default_format="text")

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo moment estimates")
    p.add_argument("--group", choices=groups, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r-max", type=int, default=4)
    p.add_argument("--s-max", type=int, default=0)
    p.add_argument("--samples", type=int, default=10_000)
    p.set_defaults(func=cmd_simulate, default_format="json")

    p = sub.add_parser("report", parents=[common], help="CLT gap table over several n")
    p.add_argument("--group", choices=groups, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--n-list", required=True, help="comma-separated values of n")
    p.add_argument("--samples", type=int, default=0, help="add empirical moments from this many samples")
    p.set_defaults(func=cmd_report, default_format="csv")

    p = sub.add_parser("finite", parents=[common], help="finite-group commutator averages")
    p.add_argument("--group", required=True, help="s3 or q8")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_finite, default_format="text")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", None) or args.default_format
    args.seed = getattr(args, "seed", DEFAULT_SEED)
    args.workers = getattr(args, "workers", 1)
    output = getattr(args, "output", None)
    try:
        for name in ("n", "k", "samples", "workers"):
            value = getattr(args, name, None)
            if value is not None and value < (0 if name == "samples" and args.command == "report" else 1):
                raise UsageError(f"--{name} must be positive")
        payload = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if output:
        with open(output, "w", newline="") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
