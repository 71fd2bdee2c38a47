"""Command-line interface.

Subcommands: plot, classify, radius, convolve, verify.  The function grammar
is ``name[:re,im]`` for catalog entries and ``conv(left,right)`` for Hadamard
products.  Exit codes: 0 success, 1 check failure, 2 usage error.  The
environment variable ``HMAP_TRUNC_ORDER`` overrides the default truncation
degree 64.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import convolution, radius, verify
from .catalog import parse_function
from .classifiers import coefficient_sum_orders, m_alpha_check, analytic_part_classify, family_bounds_check
from .defaults import DEFAULT_ORDER
from .plotting import PlotSpec, plot_command


def _order_from_env() -> int:
    raw = os.environ.get("HMAP_TRUNC_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        order = int(raw)
    except ValueError as exc:
        raise SystemExit(f"HMAP_TRUNC_ORDER must be an integer, got {raw!r}") from exc
    if order < 8:
        raise SystemExit("HMAP_TRUNC_ORDER must be >= 8")
    return order


def _parse_alpha(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("alpha must be given as re,im")
    return complex(float(parts[0]), float(parts[1]))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hmap",
        description="Construct, classify, convolve and scan planar harmonic maps on the unit disk.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_plot = sub.add_parser("plot", help="write circle/ray images as SVG or CSV")
    p_plot.add_argument("--function", required=True)
    p_plot.add_argument("--radii", default="", help="comma-separated circle radii in (0,1)")
    p_plot.add_argument("--rays", type=int, default=12)
    p_plot.add_argument("--circles", type=int, default=8)
    p_plot.add_argument("--samples", type=int, default=256)
    p_plot.add_argument("--format", choices=("svg", "csv"), default=None,
                        help="defaults to the --out extension")
    p_plot.add_argument("--out", required=True)

    p_cls = sub.add_parser("classify", help="run a coefficient or membership classifier")
    p_cls.add_argument("--function", required=True)
    p_cls.add_argument("--check", required=True,
                       choices=("coefficient-orders", "analytic-sums", "m-alpha", "bounds"))
    p_cls.add_argument("--alpha", type=_parse_alpha, default=None, help="re,im")
    p_cls.add_argument("--power", type=int, choices=(2, 3), default=2)
    p_cls.add_argument("--r-max", type=float, default=0.99)
    p_cls.add_argument("--out", default=None, help="optional JSON report path")

    p_rad = sub.add_parser("radius", help="bracket a convexity/starlikeness transition radius")
    p_rad.add_argument("--function", required=True)
    p_rad.add_argument("--kind", required=True, choices=("convex", "starlike"))
    p_rad.add_argument("--tol", type=float, default=1e-6)
    p_rad.add_argument("--out", default=None, help="optional JSON result path")

    p_conv = sub.add_parser("convolve", help="Hadamard product of two catalog maps")
    p_conv.add_argument("--left", required=True)
    p_conv.add_argument("--right", required=True)
    p_conv.add_argument("--emit", choices=("coeffs", "report"), default="coeffs")
    p_conv.add_argument("--out", default=None)

    p_ver = sub.add_parser("verify", help="run a verification suite and write its report")
    p_ver.add_argument("--suite", choices=verify.SUITES, default="all")
    p_ver.add_argument("--out", default="verification_report.json")
    return parser


def _cmd_plot(args, order: int) -> int:
    f = parse_function(args.function, order)
    radii = tuple(float(r) for r in args.radii.split(",") if r) if args.radii else ()
    fmt = args.format
    if fmt is None:
        fmt = "csv" if args.out.lower().endswith(".csv") else "svg"
    spec = PlotSpec(radii=radii, n_rays=args.rays, n_circles=args.circles,
                    samples_per_curve=args.samples, output_format=fmt)
    plot_command(f, spec, args.out)
    print(f"wrote {fmt} curves for {args.function} to {args.out}")
    return 0


def _alpha_from_function(text: str):
    if ":" in text:
        _, _, param = text.partition(":")
        re_, im = param.split(",")
        return complex(float(re_), float(im))
    if text == "F":
        return 1 + 0j
    if text == "L":
        return -1 + 0j
    if text == "example22":
        return 1 + 0j
    return None


def _cmd_classify(args, order: int) -> int:
    f = parse_function(args.function, order)
    alpha = args.alpha if args.alpha is not None else _alpha_from_function(args.function)
    if args.check == "coefficient-orders":
        rep1, rep2 = coefficient_sum_orders(f)
        payload = [rep1.to_dict(), rep2.to_dict()]
        ok = rep1.passed or rep2.passed
        for rep in (rep1, rep2):
            status = "PASS" if rep.passed else "FAIL"
            print(f"[{status}] {rep.condition_name}: sum = {rep.condition_value:.6g}, "
                  f"orders = (starlike {rep.order_starlike}, convex {rep.order_convex})")
    elif args.check == "analytic-sums":
        if alpha is None:
            raise SystemExit("--alpha is required for analytic-sums")
        rep = analytic_part_classify(f.h, alpha, args.power)
        payload = rep.to_dict()
        ok = rep.passed
        print(f"[{'PASS' if ok else 'FAIL'}] {rep.condition_name}: sum = {rep.condition_value:.6g}, "
              f"orders = (starlike {rep.order_starlike}, convex {rep.order_convex}), "
              f"close_to_convex = {rep.close_to_convex}")
    elif args.check == "m-alpha":
        if alpha is None:
            raise SystemExit("--alpha is required for m-alpha")
        rep = m_alpha_check(f, alpha, r_max=args.r_max)
        payload = rep.to_dict()
        ok = rep.passed
        print(f"[{'PASS' if ok else 'FAIL'}] membership: relation residual {rep.relation_residual:.3e}, "
              f"curvature grid min {rep.curvature_grid_min:.6f} (needs > -0.5)")
    else:  # bounds
        if alpha is None:
            raise SystemExit("--alpha is required for bounds")
        rep = family_bounds_check(f, alpha)
        payload = rep.to_dict()
        ok = rep.passed
        print(f"[{'PASS' if ok else 'FAIL'}] bounds: coeff slack ({rep.coeff_slack_a:.3e}, "
              f"{rep.coeff_slack_b:.3e}), growth min slack {rep.growth_min_slack:.3e}")
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            json.dump(payload, fh, indent=2)
    return 0 if ok else 1


def _cmd_radius(args, order: int) -> int:
    f = parse_function(args.function, order)
    kind = "convexity" if args.kind == "convex" else "starlikeness"
    try:
        result = radius.radius_search(f, kind, tol=args.tol)
    except (ValueError, radius.NonMonotoneError) as exc:
        print(f"radius search failed: {exc}", file=sys.stderr)
        return 1
    if result.upper_limit_hit:
        print(f"{kind} of {args.function}: holds at every tested radius up to {result.r_lo}")
    else:
        print(f"{kind} radius of {args.function}: bracket [{result.r_lo:.9f}, {result.r_hi:.9f}]")
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            json.dump(result.to_dict(), fh, indent=2)
    return 0


def _cmd_convolve(args, order: int) -> int:
    left = parse_function(args.left, order)
    right = parse_function(args.right, order)
    result = convolution.hadamard(left, right)
    prod = result.product
    if args.emit == "coeffs":
        lines = ["n,a_re,a_im,b_re,b_im"]
        for k in range(prod.order + 1):
            a = prod.h.coefficient(k)
            b = prod.g.coefficient(k)
            lines.append(f"{k},{a.real:.12g},{a.imag:.12g},{b.real:.12g},{b.imag:.12g}")
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w", encoding="ascii") as fh:
                fh.write(text)
        else:
            print(text, end="")
        return 0
    from .harmonic import sense_preserving_check

    # products are series-backed; 0.7 is the largest radius where the default
    # truncation degree resolves the Jacobian sign reliably
    sp = sense_preserving_check(prod, 0.7)
    payload = {
        "left": args.left,
        "right": args.right,
        "order": prod.order,
        "sense_preserving": sp.to_dict(),
    }
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        print(text)
    return 0 if sp.passed else 1


def _cmd_verify(args, order: int) -> int:
    report = verify.run_suite(args.suite, order)
    for line in report.summary_lines():
        print(line)
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(report.to_json())
    return 0 if report.passed else 1


def dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    order = _order_from_env()
    try:
        if args.command == "plot":
            return _cmd_plot(args, order)
        if args.command == "classify":
            return _cmd_classify(args, order)
        if args.command == "radius":
            return _cmd_radius(args, order)
        if args.command == "convolve":
            return _cmd_convolve(args, order)
        if args.command == "verify":
            return _cmd_verify(args, order)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
