"""Command-line front end, result documents, and the character-table cache.

Every subcommand emits one self-describing JSON document (request
parameters, library version, result) with exact "p/q" scalars and
deterministic ordering, to stdout or to `--out`.  Character tables are
persisted per degree under the directory named by GWHURWITZ_CACHE_DIR
(default ~/.cache/gwhurwitz); the cache is an optimization only and is
rebuilt on any version or checksum mismatch.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile

from . import __version__
from .characters import CharacterTable
from .gwh import (completed_cycle, elsv_check, gwh_crosscheck, i_function_empty,
                  i_function_numeric, stationary_gw)
from .hurwitz import BranchData, hurwitz_connected, hurwitz_disconnected, monodromy_oracle
from .partitions import enumerate_partitions, format_partition, parse_partition
from .qseries import format_rational

CACHE_ENV = "GWHURWITZ_CACHE_DIR"
CACHE_VERSION = 1


def cache_dir() -> str:
    got = os.environ.get(CACHE_ENV)
    if got:
        return got
    return os.path.join(os.path.expanduser("~"), ".cache", "gwhurwitz")


def _table_payload(degree: int, table: CharacterTable) -> dict:
    return {
        "version": CACHE_VERSION,
        "d": degree,
        "partitions": [format_partition(p) for p in table.partitions],
        "matrix": table.matrix,
    }


def _checksum(payload: dict) -> str:
    canon = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


def _cache_path(degree: int) -> str:
    return os.path.join(cache_dir(), f"chartable_d{degree}.json")


def load_cached_table(degree: int) -> CharacterTable | None:
    """Validated load; any mismatch means rebuild, never silent reuse."""
    path = _cache_path(degree)
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except (OSError, ValueError):
        return None
    payload = {k: doc.get(k) for k in ("version", "d", "partitions", "matrix")}
    if payload["version"] != CACHE_VERSION or payload["d"] != degree:
        return None
    if doc.get("checksum") != _checksum(payload):
        return None
    partitions = [parse_partition(p) for p in payload["partitions"]]
    if partitions != enumerate_partitions(degree):
        return None
    return CharacterTable(degree, partitions, payload["matrix"])


def store_table(degree: int, table: CharacterTable) -> str:
    """Atomic write: temp file in the cache directory, then rename."""
    os.makedirs(cache_dir(), exist_ok=True)
    payload = _table_payload(degree, table)
    payload["checksum"] = _checksum({k: payload[k]
                                     for k in ("version", "d", "partitions", "matrix")})
    path = _cache_path(degree)
    fd, tmp = tempfile.mkstemp(dir=cache_dir(), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=1)
            handle.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def character_table(degree: int) -> CharacterTable:
    table = load_cached_table(degree)
    if table is None:
        table = CharacterTable.build(degree)
        store_table(degree, table)
    return table


# ------------------------------------------------------------- subcommands


def _parse_profiles(text: str | None):
    if not text:
        return ()
    try:
        return tuple(parse_partition(p) for p in text.split(";") if p.strip())
    except ValueError as exc:
        raise ValueError(f"--profiles: {exc}") from exc


def _parse_partition_flag(flag: str, text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise ValueError(f"{flag}: {exc}") from exc


def _parse_ks(text: str | None):
    if text is None or not text.strip():
        return []
    try:
        return [int(k) for k in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"--ks: {exc}") from exc


def _emit(doc: dict, out_path: str | None) -> None:
    rendered = json.dumps(doc, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(rendered)
    else:
        sys.stdout.write(rendered)


def _document(command: str, request: dict, result) -> dict:
    return {"command": command, "version": __version__,
            "request": request, "result": result}


def _cmd_hur(args) -> int:
    profiles = _parse_profiles(args.profiles)
    branch = BranchData(args.target_genus, args.d, profiles)
    if args.oracle:
        value = monodromy_oracle(branch, transitive_only=args.connected,
                                 degree_bound=args.oracle_bound)
    elif args.connected:
        value = hurwitz_connected(branch)
    else:
        value = hurwitz_disconnected(branch)
    request = {"target_genus": args.target_genus, "d": args.d,
               "profiles": [format_partition(p) for p in profiles],
               "connected": bool(args.connected), "oracle": bool(args.oracle)}
    _emit(_document("hur", request, {"value": format_rational(value)}), args.out)
    return 0


def _cmd_char(args) -> int:
    table = character_table(args.d)
    payload = _table_payload(args.d, table)
    _emit(_document("char", {"d": args.d}, payload), args.out)
    return 0


def _cmd_cycle(args) -> int:
    cycle = completed_cycle(args.k, args.d)
    _emit(_document("cycle", {"d": args.d, "k": args.k}, cycle.value.to_dict()),
          args.out)
    return 0


def _cmd_gw(args) -> int:
    ks = _parse_ks(args.ks)
    got = stationary_gw(args.target_genus, args.d, ks)
    result = {"total": format_rational(got.total),
              "by_genus": {str(g): format_rational(v) for g, v in got.by_genus.items()}}
    request = {"target_genus": args.target_genus, "d": args.d, "ks": ks}
    _emit(_document("gw", request, result), args.out)
    return 0


def _cmd_ifun(args) -> int:
    eta = _parse_partition_flag("--eta", args.eta)
    if args.empty:
        got = i_function_empty(args.g, eta)
    else:
        if args.k is None:
            raise SystemExit("ifun: --k is required unless --empty is given")
        got = i_function_numeric(args.g, eta, args.k)
    result = {"value": format_rational(got.value), "z_degree": got.z_degree}
    request = {"g": args.g, "eta": format_partition(eta),
               "k": got.k, "empty": bool(args.empty)}
    _emit(_document("ifun", request, result), args.out)
    return 0


def _cmd_elsv(args) -> int:
    mu = _parse_partition_flag("--mu", args.mu)
    report = elsv_check(mu, args.g)
    result = {"stable": report.stable, "m": report.m}
    if report.stable:
        result.update({"lhs": format_rational(report.lhs),
                       "rhs": format_rational(report.rhs),
                       "equal": report.equal})
    _emit(_document("elsv", {"mu": format_partition(mu), "g": args.g}, result),
          args.out)
    return 0 if (not report.stable or report.equal) else 1


def _cmd_verify(args) -> int:
    report = gwh_crosscheck(args.d_max, args.k_max)
    doc = report.to_document()
    oracle_rows = []
    oracle_pass = True
    for d in range(1, min(args.d_max, 3) + 1):
        for h in range(0, 2):
            for profiles in _oracle_profiles(d):
                branch = BranchData(h, d, profiles)
                burnside = hurwitz_disconnected(branch)
                counted = monodromy_oracle(branch)
                ok = burnside == counted
                oracle_pass = oracle_pass and ok
                oracle_rows.append({
                    "d": d, "h": h,
                    "profiles": [format_partition(p) for p in profiles],
                    "status": "pass" if ok else "fail"})
    doc["oracle"] = {"passed": oracle_pass, "rows": oracle_rows}
    doc["passed"] = doc["passed"] and oracle_pass
    _emit(doc, args.out)
    return 0 if doc["passed"] else 1


def _oracle_profiles(d: int):
    parts = enumerate_partitions(d)
    out = [()]
    out += [(p,) for p in parts]
    out += [(p, q) for i, p in enumerate(parts) for q in parts[i:]]
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwhurwitz",
        description="Exact Hurwitz numbers, symmetric-group characters, "
                    "infinite-wedge correlators, completed cycles, and "
                    "stationary invariants of target curves.")
    parser.add_argument("--out", help="write the JSON document to this path")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("hur", help="Hurwitz numbers (character sum or oracle)")
    p.add_argument("--target-genus", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--profiles", help='semicolon-separated, e.g. "(3);(3);(3)"')
    p.add_argument("--connected", action="store_true")
    p.add_argument("--oracle", action="store_true",
                   help="brute-force monodromy count instead of characters")
    p.add_argument("--oracle-bound", type=int, default=5)
    p.set_defaults(func=_cmd_hur)

    p = sub.add_parser("char", help="dump a character table")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("cycle", help="completed cycle as a class sum")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_cycle)

    p = sub.add_parser("gw", help="stationary invariants of a target curve")
    p.add_argument("--target-genus", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ks", help='comma-separated descendent indices, e.g. "1,1"')
    p.set_defaults(func=_cmd_gw)

    p = sub.add_parser("ifun", help="numerical I-function coefficient")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--eta", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--empty", action="store_true", help="no-marking evaluator")
    p.set_defaults(func=_cmd_ifun)

    p = sub.add_parser("elsv", help="Hodge-integral versus cover-count identity")
    p.add_argument("--mu", required=True)
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(func=_cmd_elsv)

    p = sub.add_parser("verify", help="route equivalence and oracle suites")
    p.add_argument("--d-max", type=int, default=2)
    p.add_argument("--k-max", type=int, default=4)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"gwhurwitz: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
