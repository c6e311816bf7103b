"""Command line front end.

    autorbits omega SPEC [--level L] [--aut-limit N] [--exact] [--json] [--out PATH]
    autorbits orbits SPEC [--csv | --json] [--out PATH]
    autorbits verify paper --suite NAME [--json] [--out PATH] [--parallel]

Exit codes: 0 computed (bounds count as computed), 2 usage or parse error,
3 resource cap hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .constructions import build
from .groups import GroupTooLarge
from .groupspec import SpecError
from .orbits import DEFAULT_AUT_LIMIT, DEFAULT_LEVEL, AutLimitExceeded, omega

EXIT_OK, EXIT_USAGE, EXIT_CAP = 0, 2, 3
CSV_COLUMNS = ["group", "order", "orbit_index", "size", "elem_order", "cent_order"]


def omega_report(spec: str, level=DEFAULT_LEVEL, aut_limit=DEFAULT_AUT_LIMIT, exact=False) -> dict:
    G = build(spec)
    w = omega(G, level=level, exact=exact, aut_limit=aut_limit)
    return {
        "group": G.name,
        "order": G.order,
        "omega": w.as_dict(),
        "trusted": list(w.trusted),
        "orbit_sizes": w.upper.sizes,
    }


def orbit_rows(spec: str, level=DEFAULT_LEVEL, aut_limit=DEFAULT_AUT_LIMIT, exact=False) -> dict:
    """One row per block of the orbit-closure partition, listed by smallest member."""
    G = build(spec)
    w = omega(G, level=level, exact=exact, aut_limit=aut_limit)
    rows = []
    for i, (rep, size) in enumerate(zip(w.upper.reps, w.upper.sizes)):
        rep = int(rep)
        rows.append(
            {
                "orbit_index": i,
                "representative": G.format(rep),
                "size": int(size),
                "elem_order": G.elem_order(rep),
                "cent_order": G.centralizer_order(rep),
            }
        )
    return {"group": G.name, "order": G.order, "omega": w.as_dict(), "trusted": list(w.trusted), "orbits": rows}


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _orbits_csv(rep: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rep["orbits"]:
        w.writerow([rep["group"], rep["order"], r["orbit_index"], r["size"], r["elem_order"], r["cent_order"]])
    return buf.getvalue()


def _orbits_table(rep: dict) -> str:
    o = rep["omega"]
    lines = [f"{rep['group']}  order {rep['order']}  omega {o['lo']}..{o['hi']} ({o['status']})"]
    lines.append(f"{'#':>3} {'size':>8} {'ord':>4} {'|C(g)|':>8}  representative")
    for r in rep["orbits"]:
        lines.append(f"{r['orbit_index']:>3} {r['size']:>8} {r['elem_order']:>4} {r['cent_order']:>8}  {r['representative']}")
    return "\n".join(lines) + "\n"


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="autorbits", description="Certified automorphism orbit counts of finite groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(q):
        q.add_argument("spec", help="group spec, e.g. PSL(2,7), GMF(2,4), POW(A(5),2)")
        q.add_argument("--level", type=int, choices=(1, 2, 3), default=DEFAULT_LEVEL, help="signature level")
        q.add_argument("--aut-limit", type=int, default=DEFAULT_AUT_LIMIT, help="largest order for --exact")
        q.add_argument("--exact", action="store_true", help="use the exhaustive automorphism search")
        q.add_argument("--out", metavar="PATH", help="also write the JSON report here")

    q = sub.add_parser("omega", help="lower/upper bounds on the number of automorphism orbits")
    common(q)
    q.add_argument("--json", action="store_true", help="JSON output (the default for this command)")

    q = sub.add_parser("orbits", help="one row per automorphism orbit")
    common(q)
    fmt = q.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    q = sub.add_parser("verify", help="run the check suites")
    q.add_argument("target", choices=["paper"])
    q.add_argument("--suite", default="all")
    q.add_argument("--json", action="store_true")
    q.add_argument("--out", metavar="PATH")
    q.add_argument("--parallel", action="store_true", help="run checks on a thread pool")
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    out = sys.stdout
    try:
        if args.command == "omega":
            rep = omega_report(args.spec, args.level, args.aut_limit, args.exact)
            text = _dump(rep)
            out.write(text)
            if args.out:
                _write(args.out, text)
        elif args.command == "orbits":
            rep = orbit_rows(args.spec, args.level, args.aut_limit, args.exact)
            out.write(_orbits_csv(rep) if args.csv else _dump(rep) if args.json else _orbits_table(rep))
            if args.out:
                _write(args.out, _orbits_csv(rep) if args.csv else _dump(rep))
        else:
            from .suite import run_suite, suite_names

            try:
                report = run_suite(args.suite, parallel=args.parallel)
            except KeyError:
                print(f"error: unknown suite {args.suite!r}; choose from {', '.join(suite_names())}", file=sys.stderr)
                return EXIT_USAGE
            out.write(report.to_json() + "\n" if args.json else report.table() + "\n")
            if args.out:
                _write(args.out, report.to_json() + "\n")
    except SpecError as exc:
        print(f"error ({exc.kind}): {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupTooLarge, AutLimitExceeded) as exc:
        print(f"error (cap): {exc}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
