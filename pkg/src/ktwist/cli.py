"""Command-line interface: ``ktwist order | tor | spinc | crosscheck``.

Exit status is 0 on success/agreement, 1 on disagreement, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, Sequence

import yaml

from . import orders, presets, spinc
from .report import Report, stringify_ints
from .tate import DEFAULT_BOUND, HomologyTable, TateSpec, build_complex, exterior_pattern, homology

EXIT_OK, EXIT_DISAGREE, EXIT_INVALID = 0, 1, 2


class InputError(ValueError):
    pass


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"1..5"`` or ``"1,4,9"`` (pieces may be mixed: ``"1..3,7"``)."""
    out: list[int] = []
    try:
        for piece in str(text).split(","):
            piece = piece.strip()
            if ".." in piece:
                lo, hi = piece.split("..", 1)
                lo, hi = int(lo), int(hi)
                if hi < lo:
                    raise InputError(f"empty range {piece!r}")
                out.extend(range(lo, hi + 1))
            elif piece:
                out.append(int(piece))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"cannot parse integer range {text!r}") from None
    if not out:
        raise InputError(f"empty range {text!r}")
    return out


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("KTWIST_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn: Callable, items: Iterable) -> list:
    items = list(items)
    n = _threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# -- order -------------------------------------------------------------------


def cmd_order(family: str, param: int | None, ks: Sequence[int], all_routes: bool = False) -> Report:
    inputs = {"family": family, "param": param, "k": list(ks), "all_routes": all_routes}
    try:
        specs = [orders.GroupSpec(family, param or 0, k) for k in ks]
    except ValueError as exc:
        raise InputError(str(exc)) from None

    def one(g):
        try:
            if all_routes:
                rep = orders.cross_check(g)
                return {"k": g.k, "order": rep.values["closed_form"], "routes": rep.values, "agree": rep.agree}
            return {"k": g.k, "order": orders.closed_form_order(g)}
        except orders.InsufficientData as exc:
            raise InputError(str(exc)) from None

    rows = _pmap(one, specs)
    agree = all(r.get("agree", True) for r in rows)
    route_names = list(rows[0]["routes"]) if all_routes else ["order"]
    table = (
        ["k"] + route_names,
        [[r["k"]] + ([r["routes"][n] for n in route_names] if all_routes else [r["order"]]) for r in rows],
    )
    name = specs[0].name
    return Report("order", inputs | {"group": name}, stringify_ints(rows), agree, table=table)


# -- tor ---------------------------------------------------------------------


def load_spec_file(path: str | Path) -> tuple[TateSpec, dict | None]:
    """Read a custom complex: ``n_ext``, ``t_images``, ``rows`` and optional ``expected``.

    The file is YAML (JSON also parses), e.g.::

        n_ext: 2
        t_images: [2, 4]
        rows: []
        expected: {order: 2, exterior_rank: 1}
    """
    try:
        data = yaml.safe_load(Path(path).read_text())
    except (OSError, yaml.YAMLError) as exc:
        raise InputError(f"cannot read spec file {path}: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"spec file {path} must hold a mapping")
    try:
        t_images = [int(x) for x in data["t_images"]]
        n_ext = int(data.get("n_ext", len(t_images)))
        rows = [[int(x) for x in r] for r in (data.get("rows") or [])]
        spec = TateSpec(n_ext, tuple(t_images), tuple(tuple(r) for r in rows))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed spec file {path}: {exc}") from None
    expected = data.get("expected")
    if expected is not None and not (isinstance(expected, dict) and "order" in expected):
        raise InputError("expected must be a mapping with 'order' and optional 'exterior_rank'")
    return spec, expected


def _tor_one(spec: TateSpec, bound: int, expected: HomologyTable | None) -> dict:
    h = homology(build_complex(spec, bound))
    row = {"homology": h.to_dict(), "summary": str(h)}
    if expected is not None:
        row["expected"] = str(expected)
        row["matches"] = h == expected
    return row


def cmd_tor(
    preset: str | None,
    ks: Sequence[int] | None = None,
    bound: int = DEFAULT_BOUND,
    c: Sequence[int] | None = None,
    spec_file: str | None = None,
    highest: bool = False,
) -> Report:
    if bound < 1:
        raise InputError("--bound must be >= 1")
    inputs = {"preset": preset, "k": list(ks) if ks else None, "bound": bound, "c": list(c) if c else None,
              "spec_file": spec_file, "highest": highest}
    results = []
    if spec_file:
        spec, exp = load_spec_file(spec_file)
        expected = exterior_pattern(int(exp["order"]), int(exp.get("exterior_rank", 0)), bound) if exp else None
        results.append(_tor_one(spec, bound, expected))
    elif preset == "koszul":
        if not c:
            raise InputError("koszul preset needs --c")
        p = presets.koszul(c)
        results.append(_tor_one(p.spec, bound, p.expected(bound)))
    elif preset:
        if not ks:
            raise InputError(f"preset {preset} needs --k")
        try:
            built = [presets.get_preset(preset, k, highest) for k in ks]
        except ValueError as exc:
            raise InputError(str(exc)) from None

        def one(item):
            k, p = item
            return {"k": k} | _tor_one(p.spec, bound, p.expected(bound))

        results = _pmap(one, list(zip(ks, built)))
    else:
        raise InputError("tor needs a preset name or --spec-file")
    checked = [r["matches"] for r in results if "matches" in r]
    agree = all(checked) if checked else None
    table = None
    if preset and preset != "koszul" and not spec_file:
        rows = [[r["k"]] + [s.split("=", 1)[1] for s in r["summary"].split(", ")] for r in results]
        table = (["k"] + [f"H{d}" for d in range(bound)], rows)
    return Report("tor", inputs, stringify_ints(results), agree, table=table)


# -- spinc -------------------------------------------------------------------


def cmd_spinc(ks: Sequence[int]) -> Report:
    rows = []
    ok = True
    for k in ks:
        cp2 = spinc.char_number(spinc.CP2, spinc.cp2_lambda(k))
        pnu = spinc.char_number(spinc.PNU, spinc.pnu_lambda(k))
        row = {"k": k, "cp2": cp2, "pnu": pnu}
        ok &= cp2 == 4 * k * k + 12 * k + 9 and pnu == 8 * k + 4
        if k % 2:
            b = spinc.boundary_check(k)
            row["boundary"] = b
            ok &= b == 0
        else:
            row["boundary"] = "skipped-even"
        rows.append(row)
    table = (["k", "cp2", "pnu", "boundary"], [[r["k"], r["cp2"], r["pnu"], r["boundary"]] for r in rows])
    return Report("spinc", {"k": list(ks)}, stringify_ints(rows), ok, table=table)


# -- crosscheck --------------------------------------------------------------


def crosscheck_groups(k_max: int, rank_max: int) -> list[orders.GroupSpec]:
    groups = []
    for k in range(1, k_max + 1):
        groups += [orders.GroupSpec("SU", n, k) for n in range(1, rank_max + 1)]
        groups += [orders.GroupSpec("Sp", n, k) for n in range(1, rank_max + 1)]
        groups += [orders.GroupSpec("SpinOdd", m, k) for m in range(2, rank_max + 1)]
        groups += [orders.GroupSpec("SpinEven", m, k) for m in range(2, rank_max + 1)]
        groups.append(orders.GroupSpec("G2", 0, k))
    return groups


def cmd_crosscheck(k_max: int, rank_max: int) -> Report:
    if k_max < 1 or rank_max < 1:
        raise InputError("--k-max and --rank-max must be positive")
    reports = _pmap(orders.cross_check, crosscheck_groups(k_max, rank_max))
    offending = [{"group": r.group.name, "k": r.group.k, "values": r.values} for r in reports if not r.agree]
    results = {"checked": len(reports), "disagreements": offending}
    return Report("crosscheck", {"k_max": k_max, "rank_max": rank_max}, stringify_ints(results), not offending)


# -- entry point -------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", action="store_true", help="flatten k-sweeps to CSV rows")
    common.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable output")
    p = argparse.ArgumentParser(prog="ktwist", description="Cyclic orders of twisted K-homology of simple Lie groups.")
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("order", parents=[common], help="cyclic order c(G, k)")
    o.add_argument("family", help="SU, Sp, SpinOdd, SpinEven or G2")
    o.add_argument("param", nargs="?", type=int, default=None, help="rank parameter (omit for G2)")
    o.add_argument("--k", required=True, help="level, range a..b, or list")
    o.add_argument("--all-routes", action="store_true")

    t = sub.add_parser("tor", parents=[common], help="Tor homology of a Tate complex")
    t.add_argument("preset", nargs="?", help="koszul, " + ", ".join(presets.PRESETS))
    t.add_argument("--k", help="level, range a..b, or list")
    t.add_argument("--c", type=_int_list, help="images for the koszul preset, e.g. 2,4")
    t.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    t.add_argument("--spec-file")
    t.add_argument("--highest", action="store_true", help="charge relation monomials to their highest variable")

    s = sub.add_parser("spinc", parents=[common], help="Spin^c characteristic numbers")
    s.add_argument("--k-range", default="1..3")

    x = sub.add_parser("crosscheck", parents=[common], help="compare all routes for all families")
    x.add_argument("--k-max", type=int, default=50)
    x.add_argument("--rank-max", type=int, default=4)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "order":
            report = cmd_order(args.family, args.param, parse_range(args.k), args.all_routes)
        elif args.command == "tor":
            ks = parse_range(args.k) if args.k else None
            report = cmd_tor(args.preset, ks, args.bound, args.c, args.spec_file, args.highest)
        elif args.command == "spinc":
            report = cmd_spinc(parse_range(args.k_range))
        else:
            report = cmd_crosscheck(args.k_max, args.rank_max)
    except InputError as exc:
        print(f"ktwist {args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report.elapsed_ms = round((time.perf_counter() - start) * 1000)
    if args.csv:
        if report.table is None:
            print(f"ktwist {args.command}: no CSV form for this report", file=sys.stderr)
            return EXIT_INVALID
        sys.stdout.write(report.to_csv())
    else:
        print(report.to_json(timing=not args.no_timing))
    if report.command == "crosscheck" and not report.agree:
        for d in report.results["disagreements"]:
            print(f"disagreement: {d['group']} k={d['k']} {d['values']}", file=sys.stderr)
    return EXIT_DISAGREE if report.agree is False else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
