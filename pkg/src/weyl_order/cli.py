"""Command line front end.

Subcommands: poset (build and export a quotient), max (closed-form bottom
and top), covers (classified cover edges), dim (dimension product of one
tuple), size (fiber and class counts), verify (the default desk sweep).

Exit codes: 0 success, 1 verify found violations, 2 argument or parse
problems, 3 enumeration guard exceeded.  The tuple budget can also be set
through the WEYL_ORDER_GUARD environment variable; an explicit --guard
wins over it.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .dimensions import (tensor_dim, verify_coroot_inequalities_k2,
                         verify_max_dim, verify_monotone_k2, weyl_dim)
from .posets import (DEFAULT_GUARD, GuardExceeded, build_poset, count_tuples,
                     covers_of, maximal_element, minimal_element,
                     poset_size_k2)
from .roots import (FAMILIES, base_rank, coroot_table_report,
                    expected_table_report, iota, root_system)
from .tuples import WeightTuple
from .weights import Weight


def parse_weight(text: str) -> Weight:
    try:
        return Weight(tuple(int(c) for c in text.split(",")))
    except ValueError as e:
        raise ValueError(f"cannot parse weight {text!r}: {e}") from None


def parse_tuple(text: str) -> WeightTuple:
    return WeightTuple(tuple(parse_weight(p) for p in text.split("/")))


def _slug(lam: Weight) -> str:
    return "-".join(str(c) for c in lam.omega)


def _guard_from(args) -> int:
    if args.guard is not None:
        return args.guard
    return int(os.environ.get("WEYL_ORDER_GUARD", DEFAULT_GUARD))


def _write_json(path: Path, payload: dict):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


# -- verify sweep ------------------------------------------------------------

@dataclass(frozen=True)
class SweepConfig:
    families: tuple[str, ...] = ("A", "C", "B", "D")
    max_coord: int = 3
    max_k: int = 3
    guard: int = DEFAULT_GUARD
    corrupt: bool = False

    def ambient_rank(self, family: str) -> int:
        # base rank 2 throughout the sweep
        return {"A": 2, "C": 2, "B": 3, "D": 4}[family]


def _sweep_lams(max_coord: int) -> list[tuple[int, ...]]:
    return [(a, b) for a in range(max_coord + 1) for b in range(max_coord + 1)
            if (a, b) != (0, 0)]


def sweep_items(cfg: SweepConfig) -> list[tuple]:
    """Flat, deterministic worklist; each entry is picklable."""
    items = []
    for fam in cfg.families:
        items.append(("table", fam, cfg.ambient_rank(fam), None, None,
                      cfg.guard, cfg.corrupt))
    for fam in cfg.families:
        rank = cfg.ambient_rank(fam)
        for lam in _sweep_lams(cfg.max_coord):
            items.append(("size_k2", fam, rank, lam, 2, cfg.guard, cfg.corrupt))
            items.append(("monotone_k2", fam, rank, lam, 2, cfg.guard, cfg.corrupt))
            items.append(("ledger_k2", fam, rank, lam, 2, cfg.guard, cfg.corrupt))
            for k in range(2, cfg.max_k + 1):
                items.append(("extremes", fam, rank, lam, k, cfg.guard, cfg.corrupt))
                items.append(("max_dim", fam, rank, lam, k, cfg.guard, cfg.corrupt))
    return items


def run_sweep_item(item: tuple) -> dict:
    """Execute one verify check; never raises, reports instead."""
    kind, fam, rank, lam_omega, k, guard, corrupt = item
    name = f"{kind}:{fam}{rank}"
    if lam_omega is not None:
        name += f":lam={','.join(str(c) for c in lam_omega)}:k={k}"
    out = {"item": name, "ok": True, "skipped": False, "violations": []}

    def fail(msg: str):
        out["ok"] = False
        out["violations"].append(msg)

    try:
        if kind == "table":
            got = coroot_table_report(fam, rank)
            if corrupt:
                got = dict(got)
                got["missing_from_table"] = list(got["missing_from_table"])
                got["missing_from_table"].append(tuple([1] * rank))
            want = expected_table_report(fam, rank)
            if (sorted(got["extra_in_table"]) != sorted(want["extra_in_table"])
                    or sorted(got["missing_from_table"]) != sorted(want["missing_from_table"])):
                fail(f"coroot table report for {fam}{rank} deviates from the "
                     f"documented discrepancy: {got}")
            return out

        lam = Weight(tuple(lam_omega))
        rs = root_system(fam, rank)
        if kind == "size_k2":
            enumerated = len(build_poset(lam, 2, guard))
            formula = poset_size_k2(lam)
            if enumerated != formula:
                fail(f"class count {enumerated} != closed form {formula}")
        elif kind == "extremes":
            poset = build_poset(lam, k, guard)
            if poset.class_of(minimal_element(lam, k)) != poset.bottom_index:
                fail("closed-form bottom misses the unique minimal class")
            if poset.class_of(maximal_element(lam, k)) != poset.top_index:
                fail("closed-form top misses the unique maximal class")
            if not poset.transitive_ok():
                fail("strict order is not transitive")
        elif kind == "monotone_k2":
            rep = verify_monotone_k2(lam, rs, guard)
            for v in rep.violations:
                fail(str(v))
        elif kind == "ledger_k2":
            rep = verify_coroot_inequalities_k2(lam, rs, guard)
            for v in rep.violations:
                fail(str(v))
        elif kind == "max_dim":
            rep = verify_max_dim(lam, k, rs, guard)
            for v in rep.violations:
                fail(str(v))
        else:
            fail(f"unknown check kind {kind!r}")
    except GuardExceeded as e:
        out["skipped"] = True
        out["note"] = str(e)
    except Exception as e:  # a crashed check is a failed check, not a crash
        fail(f"unexpected error: {type(e).__name__}: {e}")
    return out


def cmd_verify(args) -> int:
    cfg = SweepConfig(families=tuple(args.families.split(",")),
                      max_coord=args.max_coord, max_k=args.max_k,
                      guard=_guard_from(args), corrupt=args.selftest_corrupt)
    for fam in cfg.families:
        if fam not in FAMILIES:
            print(f"unknown family {fam!r}", file=sys.stderr)
            return 2
    items = sweep_items(cfg)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_sweep_item, items))
    else:
        results = [run_sweep_item(it) for it in items]

    violations = [v for r in results for v in r["violations"]]
    skipped = [r["item"] for r in results if r["skipped"]]
    payload = {
        "config": {"families": list(cfg.families), "max_coord": cfg.max_coord,
                   "max_k": cfg.max_k, "guard": cfg.guard,
                   "corrupt": cfg.corrupt},
        "num_checks": len(results),
        "num_violations": len(violations),
        "skipped": skipped,
        "items": results,
    }
    out_dir = Path(args.out_dir)
    _write_json(out_dir / "verify_report.json", payload)
    with open(out_dir / "verify_report.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["item", "ok", "skipped"])
        for r in results:
            w.writerow([r["item"], r["ok"], r["skipped"]])
    print(f"{len(results)} checks, {len(violations)} violations, "
          f"{len(skipped)} skipped")
    for v in violations[:20]:
        print(f"  VIOLATION: {v}")
    return 1 if violations else 0


# -- single-shot subcommands ---------------------------------------------------

def cmd_poset(args) -> int:
    lam = parse_weight(args.lam)
    poset = build_poset(lam, args.k, _guard_from(args))
    out_dir = Path(args.out_dir)
    stem = f"poset_lam{_slug(lam)}_k{args.k}"
    _write_json(out_dir / f"{stem}.json", poset.to_json())
    if args.dot:
        (out_dir / f"{stem}.dot").write_text(poset.to_dot())
    print(f"{lam} k={args.k}: {len(poset.classes)} classes, "
          f"{len(poset.hasse_edges)} cover edges")
    return 0


def cmd_max(args) -> int:
    lam = parse_weight(args.lam)
    bottom = minimal_element(lam, args.k)
    top = maximal_element(lam, args.k)
    print(f"bottom {bottom}")
    print(f"top    {top}")
    if args.json:
        _write_json(Path(args.out_dir) / f"max_lam{_slug(lam)}_k{args.k}.json",
                    {"lambda": list(lam.omega), "k": args.k,
                     "bottom": bottom.to_json(),
                     "top": top.to_json()})
    return 0


def cmd_covers(args) -> int:
    lam = parse_weight(args.lam)
    poset = build_poset(lam, args.k, _guard_from(args))
    records = []
    for c in range(len(poset.classes)):
        for edge in covers_of(poset, c):
            rec = {"low": str(poset.classes[edge.low].rep),
                   "high": str(poset.classes[edge.high].rep),
                   "kind": edge.kind.value,
                   "witness": edge.witness.describe() if edge.witness else None}
            records.append(rec)
            print(f"{rec['low']} -> {rec['high']} [{rec['kind']}]"
                  + (f" ({rec['witness']})" if rec["witness"] else ""))
    if args.json:
        _write_json(Path(args.out_dir) / f"covers_lam{_slug(lam)}_k{args.k}.json",
                    {"lambda": list(lam.omega), "k": args.k, "covers": records})
    return 0


def cmd_dim(args) -> int:
    rs = root_system(args.type)
    tup = parse_tuple(args.tuple)
    dims = [weyl_dim(iota(p, rs)) for p in tup.parts]
    total = tensor_dim(rs, tup)
    print(f"{' * '.join(str(d) for d in dims)} = {total}")
    if args.json:
        _write_json(Path(args.out_dir) / f"dim_{rs.name}.json",
                    {"system": rs.name, "tuple": tup.to_json(),
                     "part_dims": dims, "dim": total})
    return 0


def cmd_size(args) -> int:
    lam = parse_weight(args.lam)
    ordered = count_tuples(lam, args.k)
    print(f"ordered tuples: {ordered}")
    if args.k == 2:
        print(f"classes (closed form): {poset_size_k2(lam)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weyl-order", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, need_lam=True):
        if need_lam:
            p.add_argument("--lambda", dest="lam", required=True,
                           help="dominant weight, comma separated, e.g. 2,1")
            p.add_argument("--k", type=int, default=2)
        p.add_argument("--out-dir", default=".")
        p.add_argument("--guard", type=int, default=None,
                       help=f"tuple enumeration budget (default {DEFAULT_GUARD})")
        p.add_argument("--json", action="store_true",
                       help="also write a JSON artifact")

    p = sub.add_parser("poset", help="build a quotient poset and export it")
    common(p)
    p.add_argument("--dot", action="store_true", help="also write Graphviz")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("max", help="closed-form bottom and top tuples")
    common(p)
    p.set_defaults(func=cmd_max)

    p = sub.add_parser("covers", help="classified cover edges")
    common(p)
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("dim", help="dimension product of one tuple")
    p.add_argument("--type", required=True, help="root system, e.g. C2")
    p.add_argument("--tuple", required=True,
                   help="parts separated by '/', e.g. 2,1/0,0")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--guard", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("size", help="fiber size and class count")
    common(p)
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("verify", help="run the default desk sweep")
    p.add_argument("--families", default="A,C,B,D")
    p.add_argument("--max-coord", type=int, default=3)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", default=".")
    p.add_argument("--guard", type=int, default=None)
    p.add_argument("--selftest-corrupt", action="store_true",
                   help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return args.func(args)
    except GuardExceeded as e:
        print(f"guard exceeded: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
