"""Command line entry point ``icosa-verify``."""
from __future__ import annotations

import argparse
import sys

from ..errors import UnknownFormat
from .claims import list_claims
from .report import render, run

EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="icosa-verify", description="Check the computational claims of the icosa package.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    ls = sub.add_parser("list", help="list registered claims")
    ls.add_argument("--filter", metavar="PREFIX", default=None)
    rn = sub.add_parser("run", help="run claims and report")
    rn.add_argument("--filter", metavar="PREFIX", default=None)
    rn.add_argument("--jobs", type=int, default=1)
    rn.add_argument("--report", metavar="PATH", default=None)
    rn.add_argument("--format", choices=("json", "md"), default="json")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "list":
        for c in list_claims(args.filter):
            print(f"{c.id}\t{c.description}")
        return 0
    if args.jobs < 1:
        print("icosa-verify: error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    report = run(args.filter, args.jobs)
    try:
        text = render(report, args.format)
    except UnknownFormat as exc:
        print(f"icosa-verify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    s = report.summary
    print(f"pass {s['pass']}  fail {s['fail']}  error {s['error']}", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
