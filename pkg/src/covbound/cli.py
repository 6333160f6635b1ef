"""Command-line entry point: ``covbound <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 work budget exceeded.
"""
import argparse
import csv
import io
import json
import sys


from . import bounds as B
from .claims import run_claims
from .codefile import format_row, read_code, write_code
from .codes import weight_distribution
from .config import get_budget
from .covering import covering_radius, greedy_covering_search, table_entries
from .exceptions import BudgetExceeded, CovboundError
from .families import FAMILIES, FamilySpec, construct

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _emit_rows(rows, columns, fmt, out):
    if fmt == "json":
        out.write(_dump_json(rows))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: _cell(r.get(k)) for k in columns})
        out.write(buf.getvalue())
    else:
        cells = [[_cell(r.get(k)) for k in columns] for r in rows]
        widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
        out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
        for row in cells:
            out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _cell(v):
    if isinstance(v, (list, tuple)):
        return "; ".join(str(x) for x in v)
    return "" if v is None else str(v)


def _budget_note(args):
    print(f"budget: {get_budget()}", file=sys.stderr)


def _cmd_bound(args, out):
    if args.action != "eval":
        raise CovboundError(f"unknown bound action {args.action!r}")
    params = B.CodeParams(args.q, args.n, d=args.d, d_list=args.dlist, L=args.list,
                          k=args.k, linear=args.linear)
    registry = [read_code(p) for p in args.cover]
    if registry:
        _budget_note(args)
    results = B.bound_ladder(params, registry=registry, c=args.c)
    rows = []
    for r in results:
        row = r.as_dict()
        row["tightest"] = r.tightest
        rows.append(row)
    _emit_rows(rows, ["name", "value", "applicable", "tightest", "reason", "citation", "assumptions"],
               args.format, out)
    return EXIT_OK


def _cmd_radius(args, out):
    _budget_note(args)
    code = read_code(args.code)
    method = "coset_leader" if args.method == "coset" else args.method
    res = covering_radius(code, method=method)
    row = {"radius": res.radius, "method": res.method, "exact": res.exact,
           "witness": format_row(res.witness) if res.witness is not None else None}
    if args.format == "json":
        out.write(_dump_json(row))
    else:
        out.write(f"{res.radius}\n" if args.format == "plain" else "")
        if args.format == "table":
            _emit_rows([row], list(row), "table", out)
    return EXIT_OK


def _cmd_weights(args, out):
    _budget_note(args)
    code = read_code(args.code)
    wd = weight_distribution(code)
    rows = [{"weight": int(w), "count": int(c)} for w, c in enumerate(wd) if c]
    _emit_rows(rows, ["weight", "count"], args.format, out)
    return EXIT_OK


def _parse_params(items):
    params = {}
    for item in items:
        if "=" not in item:
            raise CovboundError(f"parameter {item!r} is not of the form key=value")
        key, value = item.split("=", 1)
        if key == "points":
            params[key] = [int(v) for v in value.split(",") if v]
        else:
            params[key] = int(value)
    return params


def _cmd_family(args, out):
    code = construct(FamilySpec(args.name, _parse_params(args.param)))
    if args.out:
        write_code(code, args.out)
    out.write(f"{args.name} [{code.n},{code.k}]_{code.q} checked: {', '.join(code.checked)}\n")
    return EXIT_OK


def _cmd_search(args, out):
    if args.action != "cover":
        raise CovboundError(f"unknown search action {args.action!r}")
    _budget_note(args)
    code = greedy_covering_search(args.q, args.n, args.R, seed=args.seed, restarts=args.restarts)
    if args.out:
        write_code(code, args.out)
    out.write(f"size {code.size}\n")
    for w in code.words:
        out.write(format_row(w) + "\n")
    return EXIT_OK


def _cmd_listdecode(args, out):
    from .listdecode import max_list_size
    _budget_note(args)
    prof = max_list_size(read_code(args.code), args.radius)
    row = {"radius": prof.radius, "max_count": prof.max_count,
           "witness_center": format_row(prof.witness_center)}
    _emit_rows([row], list(row), args.format, out)
    return EXIT_OK


def _cmd_insdel(args, out):
    from .insdel import insdel_report
    _budget_note(args)
    rep = insdel_report(read_code(args.code), m=args.m, t=args.t, const=args.c)
    data = rep.as_dict()
    data["witness_pair"] = [format_row(w) for w in rep.witness_pair]
    if args.format == "json":
        out.write(_dump_json(data))
    else:
        for key in ("code_insdel_distance", "hamming_distance", "k", "k_exact", "has_all_ones",
                    "direct_singleton_ok", "half_singleton_ok", "improved_half_singleton_ok",
                    "witness_pair", "closed_form", "notes"):
            out.write(f"{key}: {_cell(data[key])}\n")
        _emit_rows(data["size_bounds"], ["name", "value", "applicable", "reason", "assumptions"],
                   "table", out)
    return EXIT_OK


def _cmd_lrc(args, out):
    from .lrc import _as_linear, classify_optimal, locality_profile, measured_locality, verify_r_delta
    _budget_note(args)
    code = _as_linear(read_code(args.code))
    certs = None
    if args.certs:
        with open(args.certs, encoding="utf-8") as fh:
            certs = json.load(fh)
    prof = locality_profile(code)
    data = {"r": prof.r, "degenerate": prof.degenerate, "unrecoverable": prof.unrecoverable,
            "recovery_sets": [list(c.S) if c else None for c in prof.per_coordinate]}
    status = EXIT_OK
    if args.delta != 2 or certs is not None or args.r is not None:
        r = args.r if args.r is not None else measured_locality(code, args.delta)
        if r is None:
            data["r_delta"] = {"r": None, "delta": args.delta, "ok": False, "witness": None,
                               "reason": "no recovery sets exist"}
            status = EXIT_FAIL
        else:
            verdict = verify_r_delta(code, r, args.delta, certs)
            data["r_delta"] = {"r": verdict.r, "delta": verdict.delta, "ok": verdict.ok,
                               "witness": verdict.witness, "reason": verdict.reason,
                               "recovery_sets": [list(c.S) for c in verdict.certificates]}
            status = EXIT_OK if verdict.ok else EXIT_FAIL
    if status == EXIT_OK and code.k >= 1 and (prof.r is not None or args.delta != 2):
        opt = classify_optimal(code, args.delta)
        data["optimality"] = {"optimal": opt.optimal, "defect": opt.defect, "d": opt.d,
                              "ceiling": opt.ceiling, "r": opt.r, "delta": opt.delta}
    out.write(_dump_json(data))
    return status


def _cmd_oracle(args, out):
    from .oracle import exact_A, exact_K
    _budget_note(args)
    if args.kind == "A":
        if args.d is None:
            raise CovboundError("oracle A needs --d")
        res = exact_A(args.q, args.n, args.d)
    else:
        if args.R is None:
            raise CovboundError("oracle K needs --R")
        res = exact_K(args.q, args.n, args.R)
    out.write(f"value {res.value}\nnodes {res.stats['nodes']}\n")
    for w in res.witness.words:
        out.write(format_row(w) + "\n")
    return EXIT_OK


def _cmd_verify(args, out):
    if args.target != "paper":
        raise CovboundError(f"unknown verify target {args.target!r}")
    rows = run_claims(only=args.only, workers=args.workers)
    if not rows:
        raise CovboundError(f"no claim matches {args.only!r}")
    if args.format == "json":
        out.write(_dump_json([r.as_dict() for r in rows]))
    else:
        _emit_rows([r.as_dict(with_time=True) for r in rows],
                   ["claim_id", "citation", "expected", "computed", "verdict", "ms"], args.format, out)
    return EXIT_OK if all(r.verdict == "pass" for r in rows) else EXIT_FAIL


def _cmd_table(args, out):
    rows = [e.as_dict() for e in table_entries()]
    _emit_rows(rows, ["kind", "params", "value", "exact", "strict", "citation"], args.format, out)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="covbound", description="Covering-code bounds and exact code computations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = dict(choices=("table", "json", "csv"), default="table")

    s = sub.add_parser("bound", help="evaluate the bound ladder")
    s.add_argument("action", choices=("eval",))
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--d", type=int)
    g.add_argument("--dlist", type=int)
    s.add_argument("--list", type=int, default=1)
    s.add_argument("--k", type=int)
    s.add_argument("--linear", action="store_true")
    s.add_argument("--c", type=float)
    s.add_argument("--cover", action="append", default=[], help="code file of a covering code")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=_cmd_bound)

    s = sub.add_parser("radius", help="covering radius of a code file")
    s.add_argument("--code", required=True)
    s.add_argument("--method", choices=("auto", "exhaustive", "coset"), default="auto")
    s.add_argument("--format", choices=("plain", "table", "json"), default="plain")
    s.set_defaults(func=_cmd_radius)

    s = sub.add_parser("weights", help="weight distribution of a code file")
    s.add_argument("--code", required=True)
    s.add_argument("--format", **fmt)
    s.set_defaults(func=_cmd_weights)

    s = sub.add_parser("family", help="construct a code family member")
    s.add_argument("--name", required=True, choices=FAMILIES)
    s.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    s.add_argument("--out")
    s.set_defaults(func=_cmd_family)

    s = sub.add_parser("search", help="greedy covering-code search")
    s.add_argument("action", choices=("cover",))
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--R", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--restarts", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_search)

    s = sub.add_parser("listdecode", help="largest list in any ball")
    s.add_argument("--code", required=True)
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--format", **fmt)
    s.set_defaults(func=_cmd_listdecode)

    s = sub.add_parser("insdel", help="insertion-deletion report")
    s.add_argument("--code", required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--t", type=int)
    s.add_argument("--c", type=float)
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.set_defaults(func=_cmd_insdel)

    s = sub.add_parser("lrc", help="locality profile and optimality")
    s.add_argument("--code", required=True)
    s.add_argument("--delta", type=int, default=2)
    s.add_argument("--r", type=int)
    s.add_argument("--certs", help="JSON list of recovery index sets")
    s.set_defaults(func=_cmd_lrc)

    s = sub.add_parser("oracle", help="exact A_q(n,d) or K_q(n,R)")
    s.add_argument("kind", choices=("A", "K"))
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--d", type=int)
    g.add_argument("--R", type=int)
    s.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("verify", help="run the embedded claim suite")
    s.add_argument("target", choices=("paper",))
    s.add_argument("--only")
    s.add_argument("--format", **fmt)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("table", help="list the quoted covering-code table")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=_cmd_table)
    return p


def main(argv=None, out=None):
    """Run the CLI and return its exit code."""
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"covbound: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CovboundError, OSError, json.JSONDecodeError) as exc:
        print(f"covbound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


run = main


def main_exit():
    """Console-script wrapper that exits with the return code."""
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
