"""Command line interface and the exhaustive scan harness.

Exit codes: 0 success (scan: no violation), 1 invariant violation,
2 malformed input or bad parameters, 3 bad specialisation.

The scan enumerates all multipartitions of a given level and rank,
groups them by residue vector (the proxy block key) and checks that the
weight computed from residues, the weight computed by the bead
reduction, the defect read off the Schur factors and the divisible-hook
count all agree, member by member and across each block.  Reports are
merged in enumeration order, so the output is byte-identical for any
worker count.  The default worker count is taken from the environment
variable CYCLOSCHUR_JOBS.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice

from . import abacus, groups, schur, weights
from .partitions import (
    Multipartition,
    enumerate_multipartitions,
    format_multicharge,
    format_multipartition,
    parse_multicharge,
    parse_multipartition,
)

JOBS_ENV = "CYCLOSCHUR_JOBS"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BAD_SPECIALISATION = 3


@dataclass(frozen=True)
class BlockReport:
    """One proxy block: key, members in enumeration order, the common
    weight/defect, the core of its first member, and whether any member
    disagreed on any of the four defect computations."""

    key: tuple[int, ...]
    members: tuple[str, ...]
    weight: int
    defect: int
    core: str
    core_charges: tuple[int, ...]
    violation: bool

    def to_json(self) -> dict:
        return {
            "key": list(self.key),
            "members": list(self.members),
            "weight": self.weight,
            "defect": self.defect,
            "core": self.core,
            "core_charges": list(self.core_charges),
            "violation": self.violation,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BlockReport":
        return cls(
            key=tuple(obj["key"]),
            members=tuple(obj["members"]),
            weight=obj["weight"],
            defect=obj["defect"],
            core=obj["core"],
            core_charges=tuple(obj["core_charges"]),
            violation=obj["violation"],
        )


@dataclass(frozen=True)
class ScanReport:
    level: int
    rank: int
    e: int
    charges: tuple[int, ...]
    window: int
    blocks: tuple[BlockReport, ...]

    @property
    def violations(self) -> int:
        return sum(1 for b in self.blocks if b.violation)

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "rank": self.rank,
            "e": self.e,
            "charges": list(self.charges),
            "window": self.window,
            "blocks": [b.to_json() for b in self.blocks],
            "violations": self.violations,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "ScanReport":
        return cls(
            level=obj["level"],
            rank=obj["rank"],
            e=obj["e"],
            charges=tuple(obj["charges"]),
            window=obj["window"],
            blocks=tuple(BlockReport.from_json(b) for b in obj["blocks"]),
        )

    @classmethod
    def from_json_str(cls, text: str) -> "ScanReport":
        return cls.from_json(json.loads(text))

    def to_text(self) -> str:
        lines = [
            f"scan l={self.level} n={self.rank} e={self.e} "
            f"charge={format_multicharge(self.charges)} window={self.window}"
        ]
        for idx, b in enumerate(self.blocks):
            mark = "  VIOLATION" if b.violation else ""
            lines.append(
                f"block {idx}: key={format_multicharge(b.key)} "
                f"size={len(b.members)} weight={b.weight} defect={b.defect} "
                f"core={b.core} core_charges={format_multicharge(b.core_charges)}"
                f"{mark}"
            )
            lines.append("  members: " + " ".join(b.members))
        lines.append(f"blocks={len(self.blocks)} violations={self.violations}")
        return "\n".join(lines)


def _member_record(mp: Multipartition, charges, e: int, m: int):
    fw = weights.fayers_weight(mp, charges, e)
    uw = weights.uglov_weight(mp, charges, e, m)
    di = schur.defect_integer(mp, charges, e)
    nk = abacus.count_divisible_hooks(abacus.multi_beta(mp, charges, m), e)
    cr = weights.core(mp, charges, e, m)
    key = weights.residue_vector(mp, charges, e).counts
    return (
        format_multipartition(mp),
        key,
        fw,
        uw,
        di,
        nk,
        format_multipartition(cr.core),
        cr.charges,
    )


def _scan_chunk(args) -> list:
    l, n, e, charges, m, start, stop = args
    mps = islice(enumerate_multipartitions(l, n), start, stop)
    return [_member_record(mp, charges, e, m) for mp in mps]


def scan(
    l: int,
    n: int,
    e: int,
    charges,
    window: int | None = None,
    jobs: int = 1,
) -> ScanReport:
    """Group all level-l rank-n multipartitions by proxy block key and
    compare the four defect computations; the multicharge is normalised
    into the fundamental domain first."""
    if l < 1:
        raise ValueError("level must be at least 1")
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if e < 2:
        raise ValueError("e must be at least 2")
    if len(charges) != l:
        raise ValueError("multicharge length must equal the level")
    if jobs < 1:
        raise ValueError("jobs must be positive")
    norm, _ = abacus.normalize_multicharge(charges, e)
    m = window if window is not None else n + max(norm, default=0) + 1
    if m < 1:
        raise ValueError("window must be positive")

    if jobs == 1:
        records = _scan_chunk((l, n, e, norm, m, 0, None))
    else:
        total = sum(1 for _ in enumerate_multipartitions(l, n))
        size = -(-total // jobs)
        chunks = [
            (l, n, e, norm, m, start, min(start + size, total))
            for start in range(0, total, size)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [rec for part in pool.map(_scan_chunk, chunks) for rec in part]

    grouped: dict[tuple[int, ...], list] = {}
    for rec in records:
        grouped.setdefault(rec[1], []).append(rec)

    blocks = []
    for key, members in grouped.items():
        values = {v for rec in members for v in rec[2:6]}
        blocks.append(
            BlockReport(
                key=key,
                members=tuple(rec[0] for rec in members),
                weight=members[0][2],
                defect=members[0][4],
                core=members[0][6],
                core_charges=members[0][7],
                violation=len(values) > 1,
            )
        )
    return ScanReport(l, n, e, norm, m, tuple(blocks))


def write_scan_csv(report: ScanReport, path: str, p: int | None = None) -> None:
    """Per-member CSV rows; with p given, each member's orbit size under
    the shift by (level/p)-packages is appended."""
    if p is not None and (p < 1 or report.level % p != 0):
        raise ValueError("p must divide the level")
    header = ["block_id", "residue_key", "multipartition", "weight", "defect", "core"]
    if p is not None:
        header.append("orbit_size")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for idx, b in enumerate(report.blocks):
            for member in b.members:
                row = [
                    idx,
                    format_multicharge(b.key),
                    member,
                    b.weight,
                    b.defect,
                    b.core,
                ]
                if p is not None:
                    mp = parse_multipartition(member)
                    row.append(groups.orbit(mp, report.level // p, p).size)
                writer.writerow(row)


def _charges_for(args, level: int) -> tuple[int, ...]:
    if args.charge is None:
        return (0,) * level
    charges = parse_multicharge(args.charge)
    if len(charges) != level:
        raise ValueError(
            f"multicharge {args.charge!r} has length {len(charges)}, expected {level}"
        )
    return charges


def _parse_roots(text: str) -> schur.RootOfUnity:
    try:
        ambient, exponent = (int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad --roots {text!r}: expected N,t") from exc
    return schur.RootOfUnity(ambient, exponent)


def _cmd_hooks(args) -> int:
    mp = parse_multipartition(args.multipartition)
    charges = _charges_for(args, mp.level)
    cfg = abacus.multi_beta(mp, charges, args.window)
    hooks = abacus.charged_hooks_abacus(cfg, include_diagonal=args.diagonal)
    print(f"H = {hooks.formatted()}")
    print(f"size = {hooks.total}")
    if args.mod is not None:
        if args.mod < 1:
            raise ValueError("--mod must be positive")
        count = sum(mult for v, mult in hooks.items if v % args.mod == 0)
        print(f"divisible by {args.mod}: {count}")
    return EXIT_OK


def _cmd_defect(args) -> int:
    mp = parse_multipartition(args.multipartition)
    if args.general:
        if args.roots is None or args.rcharges is None:
            raise ValueError("--general requires --roots and --rcharges")
        eta = _parse_roots(args.roots)
        rcharges = parse_multicharge(args.rcharges)
        spec = schur.CycloSpec(mp.level, rcharges, args.qexp, eta)
        value = schur.defect_general(mp, spec)
        if args.json:
            print(json.dumps({"defect": value}))
        else:
            print(value)
        return EXIT_OK
    if args.e is None:
        raise ValueError("--e is required without --general")
    charges = _charges_for(args, mp.level)
    if args.via_polynomial:
        value = schur.nu_phi(schur.specialize_integer(mp, charges), args.e)
    else:
        value = schur.defect_integer(mp, charges, args.e)
    if args.json:
        mp2, norm = weights.normalized_instance(mp, charges, args.e)
        cr = weights.core(mp2, norm, args.e)
        payload = {
            "defect": value,
            "weight": weights.fayers_weight(mp, charges, args.e),
            "core": format_multipartition(cr.core),
        }
        print(json.dumps(payload))
    else:
        print(value)
    return EXIT_OK


def _cmd_weight(args) -> int:
    mp = parse_multipartition(args.multipartition)
    charges = _charges_for(args, mp.level)
    fw = weights.fayers_weight(mp, charges, args.e)
    mp2, norm = weights.normalized_instance(mp, charges, args.e)
    uw = weights.uglov_weight(mp2, norm, args.e, args.window)
    if fw != uw:
        print(
            f"VIOLATION: residue weight {fw} != reduction weight {uw}",
            file=sys.stderr,
        )
        return EXIT_VIOLATION
    print(fw)
    return EXIT_OK


def _cmd_core(args) -> int:
    mp = parse_multipartition(args.multipartition)
    charges = _charges_for(args, mp.level)
    mp2, norm = weights.normalized_instance(mp, charges, args.e)
    result = weights.core(mp2, norm, args.e, args.window)
    if args.json:
        print(json.dumps(result.to_json()))
    else:
        print(f"core = {format_multipartition(result.core)}")
        print(f"charges = {format_multicharge(result.charges)}")
        print(f"weight = {result.weight}")
    return EXIT_OK


def _cmd_schur(args) -> int:
    mp = parse_multipartition(args.multipartition)
    if args.charge is not None:
        charges = _charges_for(args, mp.level)
        print(schur.specialize_integer(mp, charges))
    else:
        print(json.dumps(schur.schur_factors(mp).to_json()))
    return EXIT_OK


def _cmd_abacus(args) -> int:
    mp = parse_multipartition(args.multipartition)
    charges = _charges_for(args, mp.level)
    print(abacus.render_abacus(abacus.multi_beta(mp, charges, args.window)))
    return EXIT_OK


def _cmd_dm_classes(args) -> int:
    try:
        ambient = int(args.roots)
    except ValueError as exc:
        raise ValueError("--roots expects the ambient order N") from exc
    params = [
        schur.RootOfUnity(ambient, t) for t in parse_multicharge(args.params)
    ]
    u = schur.RootOfUnity(ambient, args.u)
    classes = schur.dipper_mathas_classes(params, u, args.n)
    print(json.dumps([list(c) for c in classes]))
    return EXIT_OK


def _cmd_yokonuma(args) -> int:
    mp = parse_multipartition(args.multipartition)
    if args.d * args.l != mp.level:
        raise ValueError("level must equal d*l")
    charges = _charges_for(args, args.l)
    value = groups.yokonuma_defect(mp, args.d, args.l, charges, args.e)
    key = groups.yokonuma_block_key(mp, args.d, args.l, charges, args.e)
    if args.json:
        print(
            json.dumps(
                {
                    "defect": value,
                    "key": [list(rv.counts) for rv in key],
                }
            )
        )
    else:
        print(f"defect = {value}")
        for idx, rv in enumerate(key):
            print(f"package {idx}: residues {format_multicharge(rv.counts)}")
    return EXIT_OK


def _cmd_glpn(args) -> int:
    mp = parse_multipartition(args.multipartition)
    if args.p * args.d != mp.level:
        raise ValueError("level must equal p*d")
    eta = _parse_roots(args.roots)
    rcharges = parse_multicharge(args.rcharges)
    if len(rcharges) != args.d:
        raise ValueError("--rcharges expects one charge per package component")
    tiled = tuple(rcharges[k % args.d] for k in range(mp.level))
    spec = schur.CycloSpec(mp.level, tiled, args.qexp, eta)
    orb = groups.orbit(mp, args.d, args.p)
    value = groups.glpn_defect(mp, args.d, args.p, spec)
    print(f"orbit size = {orb.size}")
    print(f"stabilizer = {orb.stabilizer}")
    print(f"defect = {value}")
    return EXIT_OK


def _cmd_scan(args) -> int:
    charges = (
        parse_multicharge(args.charge) if args.charge is not None else (0,) * args.l
    )
    report = scan(args.l, args.n, args.e, charges, args.window, args.jobs)
    print(report.to_text())
    if args.json is not None:
        with open(args.json, "w") as fh:
            fh.write(report.to_json_str() + "\n")
    if args.csv is not None:
        write_scan_csv(report, args.csv, args.p)
    return EXIT_VIOLATION if report.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycloschur",
        description="Charged-hook multisets, weights, cores and Schur-element "
        "defects of multipartitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mp(p):
        p.add_argument("multipartition", help="e.g. '3.1|2.1.1'")

    def add_charge(p):
        p.add_argument("--charge", help="comma-separated multicharge, e.g. '0,2'")

    def add_window(p):
        p.add_argument("--window", type=int, help="abacus window size m")

    p = sub.add_parser("hooks", help="charged-hook multiset")
    add_mp(p)
    add_charge(p)
    add_window(p)
    p.add_argument("--mod", type=int, help="also count hooks divisible by this")
    p.add_argument(
        "--diagonal",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="include the same-component hooks",
    )
    p.set_defaults(func=_cmd_hooks)

    p = sub.add_parser("defect", help="defect of a multipartition")
    add_mp(p)
    add_charge(p)
    p.add_argument("--e", type=int, help="order of the root of unity")
    p.add_argument("--general", action="store_true", help="root-of-unity parameters")
    p.add_argument("--roots", help="N,t for the evaluation root (with --general)")
    p.add_argument("--rcharges", help="y-exponents per component (with --general)")
    p.add_argument("--qexp", type=int, default=1, help="y-exponent of q")
    p.add_argument(
        "--via-polynomial",
        action="store_true",
        help="expand the Schur element and take the cyclotomic valuation",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_defect)

    p = sub.add_parser("weight", help="weight of a charged multipartition")
    add_mp(p)
    add_charge(p)
    add_window(p)
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=_cmd_weight)

    p = sub.add_parser("core", help="core of a charged multipartition")
    add_mp(p)
    add_charge(p)
    add_window(p)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_core)

    p = sub.add_parser("schur", help="factored or expanded Schur element")
    add_mp(p)
    add_charge(p)
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("abacus", help="render the abacus")
    add_mp(p)
    add_charge(p)
    add_window(p)
    p.set_defaults(func=_cmd_abacus)

    p = sub.add_parser("dm-classes", help="parameter classes")
    p.add_argument("--roots", required=True, help="ambient order N")
    p.add_argument("--params", required=True, help="exponents of the parameters")
    p.add_argument("--u", type=int, required=True, help="exponent of u")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.set_defaults(func=_cmd_dm_classes)

    p = sub.add_parser("yokonuma", help="package-split defect and block key")
    add_mp(p)
    add_charge(p)
    p.add_argument("--d", type=int, required=True, help="number of packages")
    p.add_argument("--l", type=int, required=True, help="components per package")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_yokonuma)

    p = sub.add_parser("glpn", help="shift-orbit data and defect")
    add_mp(p)
    p.add_argument("--d", type=int, required=True, help="package size")
    p.add_argument("--p", type=int, required=True, help="number of packages")
    p.add_argument("--roots", required=True, help="N,t for the evaluation root")
    p.add_argument("--rcharges", required=True, help="d charges, repeated per package")
    p.add_argument("--qexp", type=int, default=1)
    p.set_defaults(func=_cmd_glpn)

    p = sub.add_parser("scan", help="exhaustive block-invariance check")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    add_charge(p)
    add_window(p)
    p.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get(JOBS_ENV, "1")),
        help=f"worker count (default from ${JOBS_ENV})",
    )
    p.add_argument("--csv", help="write per-member rows to this path")
    p.add_argument("--json", help="write the report to this path")
    p.add_argument("--p", type=int, help="add orbit sizes for this package count")
    p.set_defaults(func=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except schur.BadSpecialisationError as exc:
        print(f"bad specialisation: {exc}", file=sys.stderr)
        return EXIT_BAD_SPECIALISATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
