"""Command-line front end. All work happens in the library modules."""
from __future__ import annotations

import argparse
import csv
import logging
import sys

import numpy as np

from . import bounds
from .catalog import diff_store, verify_catalog
from .certify import PUBLISHED_COVERAGE, completeness_certificate, extrapolate
from .enumeration import enumerate_range
from .simplex import (DEFAULT_WIDTH_CAP, VRepSimplex, first_lattice_class,
                      functional_from_certificate, lattice_classes_in_simplex, tuple_of_vrep,
                      width)
from .store import Store
from .torus import is_primitive, parse_tuple, render
from .white import white_report


def _parse_v(text: str) -> VRepSimplex:
    return VRepSimplex(tuple(int(x) for x in text.replace(",", " ").split()))


def _target(args):
    if (args.v is None) == (args.tuple is None):
        raise SystemExit("give exactly one of --v or --tuple")
    if args.v is not None:
        s = _parse_v(args.v)
        return s, tuple_of_vrep(s)
    u = parse_tuple(args.tuple)
    if not is_primitive(u):
        raise SystemExit(f"{render(u)} is not primitive")
    return None, u


def cmd_enumerate(args) -> int:
    store = Store(args.store)

    def progress(rec):
        wide = sum(1 for w in rec.widths if w is None or w >= 3)
        print(f"D={rec.determinant} {rec.algorithm} classes={len(rec.classes)} wide={wide} "
              f"time={rec.seconds:.3f}s", flush=True)

    report = enumerate_range(args.dmin, args.dmax, store, jobs=args.jobs,
                             algorithm=args.algorithm, progress=progress)
    print(f"computed {len(report.computed)} skipped {len(report.skipped)} "
          f"errors {len(report.errors)}")
    for d, msg in sorted(report.errors.items()):
        print(f"error D={d}: {msg}")
    return 1 if report.errors else 0


def cmd_verify_catalog(args) -> int:
    report = verify_catalog()
    print("catalog self-check:")
    for line in report.lines():
        print(f"  {line}")
    ok = report.ok
    if args.store:
        if args.dmax is None:
            raise SystemExit("--store needs --dmax")
        diff = diff_store(Store(args.store), args.dmax)
        print(f"store diff up to D={args.dmax}:")
        for line in diff.lines():
            print(f"  {line}")
        ok = ok and diff.ok
    return 0 if ok else 1


def cmd_width(args) -> int:
    s, u = _target(args)
    res = width(u, args.cap)
    print(f"tuple {render(u)}")
    print(f"width {res.label()}")
    if res.certificate is not None:
        print("certificate " + " ".join(map(str, res.certificate)))
        if s is not None:
            f = functional_from_certificate(s, res.certificate)
            print("functional " + " ".join(map(str, f.coeffs)) + f" + {f.constant}")
    return 0


def cmd_empty(args) -> int:
    _, u = _target(args)
    k = first_lattice_class(u)
    print(f"tuple {render(u)}")
    if k is None:
        print("empty")
    else:
        print(f"not empty: witness k={k} ({len(lattice_classes_in_simplex(u))} lattice points)")
    return 0


def cmd_bounds(args) -> int:
    if args.cap:
        print(f"lambda bound at 1/42: {bounds.lambda_volume_bound(1 / 42).value:.6f}")
        print(f"lambda >= {bounds.LAMBDA_BRANCH} branch: {bounds.large_lambda_branch():.6f}")
        print(f"projecting case cap: {bounds.PROJECTING_CAP}")
        print(f"volume cap: {bounds.simplex_volume_cap()}")
    if args.width is not None:
        ev = bounds.hollow3_volume_bound(args.width, args.five_point)
        print(f"width {args.width} {ev.regime}: {ev.value:.9f}")
    if args.lam is not None:
        ev = bounds.lambda_volume_bound(args.lam)
        print(f"lambda {args.lam}: {ev.value:.9f}")
    if args.table:
        writer = csv.writer(sys.stdout)
        if args.table == "width":
            writer.writerow(["w", "general", "five_point"])
            for w in np.linspace(2.4, 5.0, 27):
                writer.writerow([f"{w:.2f}", f"{bounds.hollow3_volume_bound(w).value:.6f}",
                                 f"{bounds.hollow3_volume_bound(w, True).value:.6f}"])
        else:
            writer.writerow(["lambda", "bound"])
            for lam in np.linspace(0.02, 0.20, 37):
                writer.writerow([f"{lam:.3f}", f"{bounds.lambda_volume_bound(lam).value:.6f}"])
    if not (args.cap or args.width is not None or args.lam is not None or args.table):
        raise SystemExit("give --width, --lambda, --cap or --table")
    return 0


def cmd_white3d(args) -> int:
    ok = True
    print("q classes orbits empty width1 ok")
    for q in range(1, args.qmax + 1):
        r = white_report(q)
        ok = ok and r.ok
        print(f"{q} {r.classes} {r.orbits} {int(r.all_empty)} {int(r.all_width_one)} {int(r.ok)}")
    return 0 if ok else 1


def cmd_certify(args) -> int:
    store = Store(args.store)
    cert = completeness_certificate(args.dmax, store)
    for line in cert.lines():
        print(line)
    ex = extrapolate(store.timings())
    if ex is not None:
        print(f"timing fit: seconds ~ {ex.prefactor:.3g} * D^{ex.exponent:.3f} ({ex.samples} records)")
        for target in (cert.cap, PUBLISHED_COVERAGE):
            print(f"estimated CPU time for D <= {target}: {ex.total_seconds(target) / 3600:.1f} h")
    return 0 if cert.complete else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="emptysimplex", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate empty 4-simplices per determinant")
    p.add_argument("--dmin", type=int, default=1)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--algorithm", choices=["auto", "a1", "a2"], default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--store", required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-catalog", help="check the wide-simplex catalog (and a store)")
    p.add_argument("--store")
    p.add_argument("--dmax", type=int)
    p.set_defaults(func=cmd_verify_catalog)

    for name, func in (("width", cmd_width), ("empty", cmd_empty)):
        p = sub.add_parser(name)
        p.add_argument("--v", help='vector "a b c d" of Delta(v)')
        p.add_argument("--tuple", help='residue tuple "D:u0 u1 u2 u3 u4"')
        if name == "width":
            p.add_argument("--cap", type=int, default=DEFAULT_WIDTH_CAP)
        p.set_defaults(func=func)

    p = sub.add_parser("bounds", help="evaluate the volume bounds")
    p.add_argument("--width", type=float)
    p.add_argument("--five-point", action="store_true")
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--cap", action="store_true")
    p.add_argument("--table", choices=["width", "lambda"], help="emit a CSV table")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("white3d", help="cross-check empty tetrahedra T(p, q)")
    p.add_argument("--qmax", type=int, required=True)
    p.set_defaults(func=cmd_white3d)

    p = sub.add_parser("certify", help="completeness verdict for a store")
    p.add_argument("--store", required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
