"""Command-line front end.

All computation lives in the core modules; the CLI translates flags into
record dicts and prints them.  With ``--server URL`` the same records are
fetched from a running service instead of being computed in-process.

Exit codes: 0 success, 1 logical failure (failed selftest, inverse lookup
miss), 2 argument or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.request
from typing import Dict, List, Optional

from . import records
from .errors import (
    BasisCountMismatch,
    MarkedPartitionError,
    NotInImage,
    NotInXn,
    SymbolError,
)


def _preferred_line(record: Dict, kind: str) -> str:
    if kind == "symbol":
        return record["symbol"]
    if kind == "class":
        return ",".join(record["members"])
    if kind == "springer":
        return "\t".join(
            str(record[k]) for k in ("class", "char", "symbol", "defect", "bipartition")
        )
    if kind == "spin":
        return "\t".join(
            str(record[k]) for k in ("partition", "t", "bipartition", "weyl_rank")
        )
    if kind == "count":
        return "\t".join(
            str(record[k])
            for k in ("family", "m", "formula_count", "enumeration_count", "agree")
        )
    raise ValueError(kind)


def _emit(rows: List[Dict], fmt: str, kind: str) -> None:
    for record in rows:
        if fmt == "json":
            print(json.dumps(record, separators=(",", ":")))
        else:
            print(_preferred_line(record, kind))


class _Remote:
    def __init__(self, base: str):
        self.base = base.rstrip("/")

    def post(self, path: str, payload: Dict) -> Dict:
        data = json.dumps(payload).encode()
        req = urllib.request.Request(
            self.base + path, data=data, headers={"Content-Type": "application/json"}
        )
        try:
            with urllib.request.urlopen(req) as resp:
                return json.loads(resp.read().decode())
        except urllib.error.HTTPError as exc:
            body = exc.read().decode(errors="replace")
            try:
                detail = json.loads(body).get("detail", body)
            except json.JSONDecodeError:
                detail = body
            message = f"server rejected the request: {detail}"
            if exc.code == 404:
                raise NotInImage(message) from None
            raise SymbolError(message) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcorr",
        description="Symbol combinatorics, unipotent correspondences and census checks.",
    )
    parser.add_argument("--server", help="base URL of a running service; compute remotely")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sym = sub.add_parser("symbols", help="symbol families and similarity classes")
    sym_sub = p_sym.add_subparsers(dest="action", required=True)
    p_enum = sym_sub.add_parser("enumerate", help="list a family or its classes")
    p_enum.add_argument("--rho", type=int, required=True)
    p_enum.add_argument("--s", type=int, required=True)
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument(
        "--defects", required=True, choices=["even", "odd", "odd-positive"]
    )
    p_enum.add_argument("--classes", action="store_true", help="group into classes")
    p_enum.add_argument("--format", choices=["text", "json"], default="text")

    p_spr = sub.add_parser("springer", help="marked-partition correspondences")
    spr_sub = p_spr.add_subparsers(dest="action", required=True)
    for name, needs_class in (("map", True), ("table", False)):
        p = spr_sub.add_parser(name)
        p.add_argument(
            "--case", required=True, choices=["sp", "o-outer", "a-odd", "a-even"]
        )
        p.add_argument("--n", type=int, required=True)
        if needs_class:
            p.add_argument("--class", dest="class_text", required=True)
            p.add_argument("--char", dest="char_text", default="")
        p.add_argument("--format", choices=["text", "json"], default="json")

    p_spin = sub.add_parser("spin", help="spin correspondence")
    spin_sub = p_spin.add_subparsers(dest="action", required=True)
    p_map = spin_sub.add_parser("map")
    p_map.add_argument("--n", type=int, required=True)
    p_map.add_argument("--partition", required=True)
    p_map.add_argument("--format", choices=["text", "json"], default="json")
    p_tab = spin_sub.add_parser("table")
    p_tab.add_argument("--n", type=int, required=True)
    p_tab.add_argument("--format", choices=["text", "json"], default="json")

    p_count = sub.add_parser("count", help="census reports")
    p_count.add_argument("--family", required=True, choices=["a", "d", "sporadic"])
    p_count.add_argument("--m", type=int, required=True)
    p_count.add_argument("--format", choices=["text", "json"], default="json")

    p_self = sub.add_parser("selftest", help="run every invariant suite")
    p_self.add_argument("--max-n", type=int, default=6)
    return parser


def _run_symbols(args, remote: Optional[_Remote]) -> int:
    if remote:
        payload = {
            "rho": args.rho,
            "s": args.s,
            "n": args.n,
            "defects": args.defects,
            "classes": args.classes,
        }
        body = remote.post("/symbols/enumerate", payload)
        rows = body["classes"] if args.classes else body["symbols"]
    else:
        params = records.make_params(args.rho, args.s, args.defects)
        if args.classes:
            rows = records.class_records(params, args.n)
        else:
            rows = records.symbol_records(params, args.n)
    _emit(rows, args.format, "class" if args.classes else "symbol")
    return 0


def _run_springer(args, remote: Optional[_Remote]) -> int:
    if args.action == "map":
        if remote:
            payload = {
                "case": args.case,
                "n": args.n,
                "class": args.class_text,
                "char": args.char_text,
            }
            rows = [remote.post("/springer/map", payload)]
        else:
            rows = [records.springer_record(args.case, args.n, args.class_text, args.char_text)]
    else:
        if remote:
            rows = remote.post("/springer/table", {"case": args.case, "n": args.n})["mappings"]
        else:
            rows = records.springer_table_records(args.case, args.n)
    _emit(rows, args.format, "springer")
    return 0


def _run_spin(args, remote: Optional[_Remote]) -> int:
    if args.action == "map":
        if remote:
            rows = [remote.post("/spin/map", {"n": args.n, "partition": args.partition})]
        else:
            rows = [records.spin_record(args.n, args.partition)]
    else:
        if remote:
            rows = remote.post("/spin/table", {"n": args.n})["mappings"]
        else:
            rows = records.spin_table_records(args.n)
    _emit(rows, args.format, "spin")
    return 0


def _run_count(args, remote: Optional[_Remote]) -> int:
    if remote:
        rows = remote.post("/count", {"family": args.family, "m": args.m})["reports"]
    else:
        rows = records.count_records(args.family, args.m)
    _emit(rows, args.format, "count")
    return 0


def _run_selftest(args, remote: Optional[_Remote]) -> int:
    if remote:
        body = remote.post("/selftest", {"max_n": args.max_n})
    else:
        body = records.selftest_records(args.max_n)
    for check in body["checks"]:
        status = "ok" if check["ok"] else "FAIL"
        print(f"{status} {check['name']}: {check['detail']}")
    return 0 if body["ok"] else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    remote = _Remote(args.server) if args.server else None
    try:
        if args.command == "symbols":
            return _run_symbols(args, remote)
        if args.command == "springer":
            return _run_springer(args, remote)
        if args.command == "spin":
            return _run_spin(args, remote)
        if args.command == "count":
            return _run_count(args, remote)
        return _run_selftest(args, remote)
    except (NotInImage, BasisCountMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SymbolError, MarkedPartitionError, NotInXn, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except urllib.error.URLError as exc:
        print(f"error: cannot reach server: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
