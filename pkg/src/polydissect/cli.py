"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
3 brute-force capacity exceeded.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .census import brute_fixed, check_capacity, element_fixed
from .furl import furl_marked, unfurl
from .model import (
    CapacityError,
    Dissection,
    InvalidDissection,
    MarkedDissection,
    canonical_indices,
    iter_index_sets,
    parse_element,
    polygon,
)
from .orbits import (
    GROUPS,
    MANDATORY,
    CountReport,
    ReconciliationError,
    canonical_orbit_count,
    cyclic_burnside,
    dihedral_burnside,
    formula,
    reconcile_group,
    special_case,
)

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _check_nk(n, k):
    if n < 3 or k < 0 or k > n - 3:
        raise UsageError(f"need n >= 3 and 0 <= k <= n - 3 (got n={n}, k={k})")


def _burnside(n, k, group):
    return cyclic_burnside(n, k) if group == "cyclic" else dihedral_burnside(n, k)


def cmd_count(args, out, err):
    n, k, group = args.n, args.k, args.group
    _check_nk(n, k)
    method = args.method
    if method == "burnside":
        value = _burnside(n, k, group)
    elif method == "formula":
        value = formula(n, k, group, "corrected")
    elif method == "formula-printed":
        value = formula(n, k, group, "printed")
        truth = _burnside(n, k, group)
        if value != truth:
            print(f"warning: printed formula gives {fmt(value)} but the true count is "
                  f"{fmt(truth)} (known misprint)", file=err)
    elif method == "canonical":
        value = canonical_orbit_count(n, k, group)
    else:
        value = special_case(n, k, group)
        if value is None:
            raise UsageError(f"no special-case formula applies to n={n}, k={k}, {group}")
    print(fmt(value), file=out)
    return EXIT_OK


def cmd_fixed(args, out, err):
    _check_nk(args.n, args.k)
    try:
        sigma = parse_element(args.element)
    except ValueError as exc:
        raise UsageError(str(exc))
    sigma = type(sigma)(sigma.kind, sigma.i % args.n)
    if args.brute:
        value = brute_fixed(args.n, args.k, sigma)
    else:
        value = element_fixed(args.n, args.k, sigma)
    print(value, file=out)
    return EXIT_OK


def cmd_enumerate(args, out, err):
    n, k = args.n, args.k
    _check_nk(n, k)
    check_capacity(n)
    poly = polygon(n)
    if args.orbits:
        reps = sorted({canonical_indices(idx, n, args.group) for idx in iter_index_sets(n, k)})
        for idx in reps:
            print(poly.to_dissection(idx).to_json(), file=out)
    else:
        for idx in iter_index_sets(n, k):
            print(poly.to_dissection(idx).to_json(), file=out)
    return EXIT_OK


def cmd_table(args, out, err):
    if args.max_n < 3:
        raise UsageError("--max-n must be at least 3")
    rows = {n: [_burnside(n, k, args.group) for k in range(n - 2)]
            for n in range(3, args.max_n + 1)}
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        width = args.max_n - 2
        writer.writerow(["n"] + [f"k={k}" for k in range(width)])
        for n, values in rows.items():
            writer.writerow([n] + values + [""] * (width - len(values)))
        out.write(buf.getvalue())
    else:
        records = []
        for n, values in rows.items():
            for k, v in enumerate(values):
                report = CountReport(n, k, args.group, {"burnside": Fraction(v)},
                                     {"burnside": True})
                records.extend(report.to_records())
        json.dump(records, out, indent=1)
        out.write("\n")
    return EXIT_OK


def cmd_verify(args, out, err):
    if args.max_n < 3:
        raise UsageError("--max-n must be at least 3")
    check_capacity(args.max_n)
    failures = 0
    for n in range(3, args.max_n + 1):
        for k in range(n - 2):
            for group in GROUPS:
                try:
                    report = reconcile_group(n, k, group, canonical=True)
                except ReconciliationError as exc:
                    failures += 1
                    print(f"FAIL {exc}", file=out)
                    continue
                mandatory = " ".join(f"{m}={fmt(report.values[m])}" for m in MANDATORY)
                flagged = [m for m, ok in report.agrees.items() if not ok]
                line = f"ok   n={n} k={k} {group:<8} {mandatory}"
                if flagged:
                    line += " flagged: " + ", ".join(
                        f"{m}={fmt(report.values[m])}" for m in flagged)
                print(line, file=out)
    print(f"{'all mandatory methods agree' if not failures else f'{failures} failures'}",
          file=out)
    return EXIT_OK if not failures else EXIT_VERIFY


def _read_record(stream):
    try:
        return json.loads(stream.read())
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON input: {exc}")


def cmd_furl(args, out, err, stdin):
    phi = Dissection.from_record(_read_record(stdin))
    print(furl_marked(phi, args.d).to_json(), file=out)
    return EXIT_OK


def cmd_unfurl(args, out, err, stdin):
    marked = MarkedDissection.from_record(_read_record(stdin))
    print(unfurl(marked, args.d).to_json(), file=out)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="polydissect",
                     description="Count dissections of a regular polygon up to symmetry.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="orbit count for one (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--group", choices=GROUPS, required=True)
    p.add_argument("--method", default="burnside",
                   choices=["burnside", "formula", "formula-printed", "canonical", "special"])

    p = sub.add_parser("fixed", help="number of k-dissections fixed by a group element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--element", required=True, help="rot:I or refl:I")
    p.add_argument("--brute", action="store_true", help="count by enumeration")

    p = sub.add_parser("enumerate", help="list k-dissections as JSON lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--orbits", action="store_true", help="one canonical representative per orbit")
    p.add_argument("--group", choices=GROUPS, default="dihedral")

    p = sub.add_parser("table", help="triangle of orbit counts")
    p.add_argument("--group", choices=GROUPS, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("verify", help="reconcile every method for 3 <= n <= max-n")
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("furl", help="fold a symmetric dissection read from stdin")
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("unfurl", help="unfold a marked dissection read from stdin")
    p.add_argument("--d", type=int, required=True)
    return parser


COMMANDS = {
    "count": cmd_count, "fixed": cmd_fixed, "enumerate": cmd_enumerate,
    "table": cmd_table, "verify": cmd_verify,
}


def run(argv, stdin=None, stdout=None, stderr=None):
    stdin = stdin if stdin is not None else sys.stdin
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command in ("furl", "unfurl"):
            handler = cmd_furl if args.command == "furl" else cmd_unfurl
            return handler(args, out, err, stdin)
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (InvalidDissection, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CAPACITY
    except (ReconciliationError, ArithmeticError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_VERIFY


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
