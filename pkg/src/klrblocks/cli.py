"""Batch command-line surface.

Partitions are written as comma-separated parts ("2,2"), bipartitions as
two groups joined by "/" with "-" for an empty component ("3,2,1/-"),
charges as comma-separated integers.  Output is deterministic for a fixed
request; --format json|csv|pretty encode the same data.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence, Tuple

from .cartan import CartanType, RootVector
from .crystal import is_kleshchev
from .graded import gdim_specht, gdim_specht_weight
from .morita import bridge, from_type_c, iter_bridges, verify_bridge
from .partitions import (
    MultiPartition,
    as_partition,
    content,
    multipartitions_of,
)
from .tableaux import degree, enumerate_standard, residue_sequence


def parse_partition(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if text in ("", "-"):
        return ()
    return as_partition(tuple(int(x) for x in text.split(",")))


def parse_shape(text: str) -> MultiPartition:
    return tuple(parse_partition(part) for part in text.split("/"))


def parse_charge(text: str, ct: CartanType) -> Tuple[int, ...]:
    charge = tuple(int(x) for x in text.split(","))
    ct.check_charge(charge)
    return charge


def parse_type(text: str) -> CartanType:
    try:
        return CartanType(text.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown type {text!r} (use a or c)")


def check_level(shape: MultiPartition, charge: Tuple[int, ...]) -> None:
    if len(shape) != len(charge):
        raise ValueError(
            f"shape has {len(shape)} components but charge has {len(charge)}"
        )


def parse_residues(text: str) -> Tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def fmt_shape(shape: MultiPartition) -> str:
    return "/".join(",".join(map(str, p)) or "-" for p in shape)


def emit(records, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        json.dump(records, stream, separators=(",", ":"))
        stream.write("\n")
    elif fmt == "csv":
        rows = records if isinstance(records, list) else [records]
        if not rows:
            return
        keys = list(rows[0])
        writer = csv.writer(stream)
        writer.writerow(keys)
        for row in rows:
            writer.writerow(
                [json.dumps(row[k]) if isinstance(row[k], (list, dict)) else row[k]
                 for k in keys]
            )
    else:
        rows = records if isinstance(records, list) else [records]
        for row in rows:
            if isinstance(row, dict):
                stream.write("  ".join(f"{k}={json.dumps(v)}" for k, v in row.items()))
            else:
                stream.write(json.dumps(row))
            stream.write("\n")


def cmd_block(args) -> int:
    ct = args.type
    charge = parse_charge(args.charge, ct)
    if args.beta:
        beta = RootVector.from_json(json.loads(args.beta))
        shapes = [
            mp for mp in multipartitions_of(beta.height, len(charge))
            if content(ct, charge, mp) == beta
        ]
        records = [{"shape": fmt_shape(mp), "content": content(ct, charge, mp).to_json()}
                   for mp in shapes]
    else:
        records = [
            {"shape": fmt_shape(mp), "content": content(ct, charge, mp).to_json()}
            for mp in multipartitions_of(args.n, len(charge))
        ]
    emit(records, args.format)
    return 0


def cmd_tableaux(args) -> int:
    ct = args.type
    charge = parse_charge(args.charge, ct)
    shape = parse_shape(args.shape)
    check_level(shape, charge)
    residues = parse_residues(args.residues) if args.residues else None
    records = []
    for t in enumerate_standard(shape, ct, charge, residues):
        rec = {"rows": t.rows(),
               "residues": list(residue_sequence(t, ct, charge))}
        if args.with_degrees:
            rec["degree"] = degree(t, ct, charge)
        records.append(rec)
    emit(records, args.format)
    return 0


def cmd_kleshchev(args) -> int:
    ct = args.type
    charge = parse_charge(args.charge, ct)
    if args.shape is not None:
        shape = parse_shape(args.shape)
        check_level(shape, charge)
        result = is_kleshchev(shape, ct, charge)
        if args.format == "json":
            emit({"shape": fmt_shape(shape), "kleshchev": result}, args.format)
        else:
            print("true" if result else "false")
        return 0
    records = [
        {"shape": fmt_shape(mp), "kleshchev": is_kleshchev(mp, ct, charge)}
        for mp in multipartitions_of(args.n, len(charge))
    ]
    if args.list:
        records = [r for r in records if r["kleshchev"]]
    emit(records, args.format)
    return 0


def cmd_gdim(args) -> int:
    ct = args.type
    charge = parse_charge(args.charge, ct)
    shape = parse_shape(args.shape)
    check_level(shape, charge)
    if args.weight:
        poly = gdim_specht_weight(shape, ct, charge, parse_residues(args.weight))
    else:
        poly = gdim_specht(shape, ct, charge)
    if args.format == "pretty":
        print(poly)
    elif args.format == "csv":
        emit([{"exponent": e, "coefficient": c} for e, c in poly.to_pairs()], "csv")
    else:
        emit(poly.to_pairs(), "json")
    return 0


def cmd_bridge(args) -> int:
    nu = parse_partition(args.shape)
    beta = content(CartanType.C, (args.kappa_c,), (nu,))
    b = bridge(args.kappa_c, beta)
    lam, mu = from_type_c(nu, b)
    record = {"bridge": b.to_json(), "nu": list(nu),
              "bipartition": [list(lam), list(mu)]}
    emit(record, args.format)
    return 0


def cmd_verify(args) -> int:
    checks = tuple(args.checks.split(","))
    bridges = list(iter_bridges(args.kappa_c, args.max_n))
    threads = int(os.environ.get("KLR_THREADS", "1"))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda b: verify_bridge(b, checks), bridges))
    else:
        reports = [verify_bridge(b, checks) for b in bridges]
    ok = all(r["pass"] for r in reports)
    if args.format == "pretty":
        for r in reports:
            beta = r["bridge"]["beta"]
            line = " ".join(f"{c}:{'pass' if v['pass'] else 'FAIL'}"
                            for c, v in r["checks"].items())
            print(f"beta={json.dumps(beta)} {line}")
        print("all-pass" if ok else "FAILED")
    else:
        emit(reports, args.format)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klrblocks",
        description="Block, tableau, crystal and graded-dimension "
                    "combinatorics for cyclotomic KLR algebras of types "
                    "A-infinity and C-infinity.",
    )
    parser.add_argument("--format", choices=("json", "csv", "pretty"),
                        default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, charge_default=None):
        p.add_argument("--type", type=parse_type, default=CartanType.C)
        p.add_argument("--charge", default=charge_default, required=charge_default is None)

    p = sub.add_parser("block", help="list the l-partitions of a block or size")
    common(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--beta", help='RootVector JSON, e.g. {"0":1,"1":2}')
    p.set_defaults(func=cmd_block)

    p = sub.add_parser("tableaux", help="stream standard tableaux of a shape")
    common(p)
    p.add_argument("--shape", required=True)
    p.add_argument("--residues")
    p.add_argument("--with-degrees", action="store_true")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("kleshchev", help="Kleshchev membership")
    common(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--shape")
    g.add_argument("--n", type=int)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_kleshchev)

    p = sub.add_parser("gdim", help="graded dimension of a Specht module")
    common(p)
    p.add_argument("--shape", required=True)
    p.add_argument("--weight", help="residue sequence of the weight space")
    p.set_defaults(func=cmd_gdim)

    p = sub.add_parser("bridge", help="bridge datum and bipartition image of a shape")
    p.add_argument("--kappa-c", type=int, required=True)
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("verify", help="run the bridge verification battery")
    p.add_argument("--kappa-c", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--checks", default="count,graded,dominance,kleshchev,goodpath")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
