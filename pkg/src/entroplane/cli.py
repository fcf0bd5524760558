"""Command-line interface.

Subcommands: ``state`` (single-state metrics as JSON), ``regions`` (area
table), ``sample`` (Monte Carlo CSV + manifest), ``curves`` (boundary-curve
CSV), ``plotscript`` (emit a standalone matplotlib script), ``verify``
(acceptance suite).  Exit codes: 0 success, 1 verification failure, 2 usage
or input-validation error, 3 I/O error.
"""

import argparse
import json
import sys

from .errors import EntroplaneError
from .families import E0Params, E1Params, e0_state, e1_state, mems1, mems2
from .measures import chsh_max, concurrence, conditional_renyi, conditional_tsallis, entropic_violation, renyi, von_neumann
from .plane import RegionLabel, chsh_region_areas, classify_entropic, entropic_region_areas
from .states import linear_entropy, parse_density_text, purity
from .experiments import run_sampling, write_curves_csv, manifest_path
from .plotscripts import PLOT_KINDS, render_plot_script

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _require(args, names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise EntroplaneError(f"family {args.family!r} requires --" + ", --".join(missing))


def _state_from_args(args):
    if args.matrix is not None:
        with open(args.matrix) as fh:
            text = fh.read()
        return parse_density_text(text), {"matrix_file": args.matrix}
    fam = args.family
    if fam == "e0":
        _require(args, ("a", "b", "c"))
        p = E0Params(args.a, args.b, args.c, args.theta or 0.0)
        return e0_state(p), {"family": fam, "params": {"a": p.a, "b": p.b, "c": p.c, "theta": p.theta}}
    if fam == "e1":
        _require(args, ("a", "b", "f", "c", "d"))
        p = E1Params(args.a, args.b, args.f, args.c, args.d, args.theta or 0.0, args.phi or 0.0)
        return e1_state(p), {
            "family": fam,
            "params": {"a": p.a, "b": p.b, "f": p.f, "c": p.c, "d": p.d, "theta": p.theta, "phi": p.phi},
        }
    if fam in ("mems1", "mems2"):
        _require(args, ("c",))
        rho = (mems1 if fam == "mems1" else mems2)(args.c, args.theta or 0.0)
        return rho, {"family": fam, "params": {"c": args.c, "theta": args.theta or 0.0}}
    raise EntroplaneError(f"unknown family {fam!r}")


def cmd_state(args) -> int:
    rho, source = _state_from_args(args)
    spect = concurrence(rho)
    report = entropic_violation(rho)
    c = spect.concurrence
    s = linear_entropy(rho)
    out = {
        "input": source,
        "purity": purity(rho),
        "linear_entropy": s,
        "von_neumann": von_neumann(rho),
        "renyi_2": renyi(rho, 2.0).value,
        "conditional_renyi_2": conditional_renyi(rho, 2.0),
        "conditional_tsallis_2": conditional_tsallis(rho, 2.0),
        "concurrence": c,
        "lambdas": [float(v) for v in spect.lambdas],
        "gap_a": report.gap_a,
        "gap_b": report.gap_b,
        "violates_a": report.violates_a,
        "violates_b": report.violates_b,
        "violates_any": report.violates_any,
        "chsh_max": chsh_max(rho),
        "region": classify_entropic((min(max(c, 0.0), 1.0), min(max(s, 0.0), 1.0))).value,
    }
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def _area_block(report):
    return {
        "total_area": report.total_area,
        "areas": {k.value: v for k, v in report.areas.items()},
        "percentages": {k.value: v for k, v in report.percentages.items()},
        "method": report.method,
        "tolerance": report.tolerance,
    }


def cmd_regions(args) -> int:
    entropic = entropic_region_areas(tol=args.tol)
    chsh = chsh_region_areas(resolution=args.resolution)
    rows = [
        ("region", "entropic %", "CHSH %"),
        ("V (all violate)", f"{entropic.percentages[RegionLabel.V_E]:.3f}", f"{chsh.percentages[RegionLabel.V_E]:.3f}"),
        ("Zero (mixed)", f"{entropic.percentages[RegionLabel.ZERO_E]:.3f}", f"{chsh.percentages[RegionLabel.ZERO_E]:.3f}"),
        ("NV (none violate)", f"{entropic.percentages[RegionLabel.NV_E]:.3f}", f"{chsh.percentages[RegionLabel.NV_E]:.3f}"),
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    for r in rows:
        print("  ".join(str(v).ljust(w) for v, w in zip(r, widths)))
    print(f"total physical area = {entropic.total_area:.12f}")
    if args.json:
        payload = {"entropic": _area_block(entropic), "chsh": _area_block(chsh)}
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_sample(args) -> int:
    manifest = run_sampling(args.family, args.n, args.seed, streams=args.streams, out_path=args.out)
    print(f"wrote {args.out} ({manifest.n} records) and {manifest_path(args.out)}")
    print(f"csv sha256 = {manifest.csv_sha256}")
    return EXIT_OK


def cmd_curves(args) -> int:
    n = write_curves_csv(args.step, args.out)
    print(f"wrote {args.out} ({n} rows)")
    return EXIT_OK


def cmd_plotscript(args) -> int:
    text = render_plot_script(args.kind, name=str(args.out))
    with open(args.out, "w", newline="\n") as fh:
        fh.write(text)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = run_verify_lazy(fast=args.fast)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def run_verify_lazy(fast: bool) -> bool:
    # Imported here so the (heavier) verification module does not slow down
    # the other subcommands.
    from .verify import run_verify

    return run_verify(fast=fast)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="entroplane", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    st = sub.add_parser("state", help="metrics of a single state as JSON")
    st.add_argument("--family", choices=("e0", "e1", "mems1", "mems2"))
    st.add_argument("--matrix", help="density-matrix text file (4 lines of 4 're,im' entries)")
    for flag in ("a", "b", "f", "c", "d", "theta", "phi"):
        st.add_argument(f"--{flag}", type=float)
    st.set_defaults(func=cmd_state)

    rg = sub.add_parser("regions", help="entropic and CHSH region areas")
    rg.add_argument("--tol", type=float, default=1e-10)
    rg.add_argument("--resolution", type=int, default=1200)
    rg.add_argument("--json", help="also write the reports to this JSON file")
    rg.set_defaults(func=cmd_regions)

    sm = sub.add_parser("sample", help="Monte Carlo sampling to CSV + manifest")
    sm.add_argument("--family", choices=("e0", "e1", "separable", "full_rank"), default="e1")
    sm.add_argument("--n", type=int, required=True)
    sm.add_argument("--seed", type=int, default=0)
    sm.add_argument("--streams", type=int, default=1)
    sm.add_argument("--out", default="samples.csv")
    sm.set_defaults(func=cmd_sample)

    cv = sub.add_parser("curves", help="boundary-curve table to CSV")
    cv.add_argument("--step", type=float, required=True)
    cv.add_argument("--out", default="curves.csv")
    cv.set_defaults(func=cmd_curves)

    ps = sub.add_parser("plotscript", help="emit a standalone matplotlib script")
    ps.add_argument("--kind", choices=PLOT_KINDS, required=True)
    ps.add_argument("--out", default="plot.py")
    ps.set_defaults(func=cmd_plotscript)

    vf = sub.add_parser("verify", help="run the acceptance checks")
    vf.add_argument("--fast", action="store_true", help="reduced sample counts (smoke test)")
    vf.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "state" and (args.family is None) == (args.matrix is None):
        ap.error("state needs exactly one of --family or --matrix")
    try:
        return args.func(args)
    except (EntroplaneError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
