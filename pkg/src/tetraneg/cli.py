"""Command-line front end.

Subcommands: gs-table, scan-field, scan-thermal, phase-diagram,
verify-appendix.  All energies are in units of J (J = 1 internally).
Exit codes: 0 success, 1 bad configuration, 2 I/O failure,
3 verification failure.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
import time

from . import csvio, oracle, scan, verify
from .model import DEGENERACY_TOL, ModelParams, build_hamiltonian, diagonalize, ground_manifold
from .negativity import ZERO_TOL, negativity
from .reductions import partial_trace

EXIT_OK = 0
EXIT_BAD_CONFIG = 1
EXIT_IO = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_BAD_CONFIG, f"{self.prog}: error: {message}\n")


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        a, b = text.lower().split("x")
        na, nb = int(a), int(b)
    except ValueError:
        raise ValueError(f"grid must look like '201x201', got {text!r}") from None
    if na < 2 or nb < 2:
        raise ValueError("grid needs at least 2 steps per axis")
    return na, nb


def _parse_ranges(pairs: list[str] | None) -> dict[str, tuple[float, float]]:
    out = {}
    for pair in pairs or ():
        try:
            name, span = pair.split("=", 1)
            lo, hi = span.split(":")
            out[name.strip()] = (float(lo), float(hi))
        except ValueError:
            raise ValueError(f"range must look like 'name=min:max', got {pair!r}") from None
    return out


@contextlib.contextmanager
def _output(path: str | None):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _add_tolerances(p):
    p.add_argument("--zero-tol", type=float, default=ZERO_TOL,
                   help="threshold below which eigenvalues/negativities count as zero")
    p.add_argument("--degeneracy-tol", type=float, default=DEGENERACY_TOL,
                   help="energy window (units of J) for ground-state degeneracy")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tetraneg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gs-table",
                       help="ground-state negativity table with closed-form reference values")
    p.add_argument("--regime", choices=["below", "at", "above", "all"], default="all")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    _add_tolerances(p)

    p = sub.add_parser("scan-field",
                       help="grid scan over (J1/J, h/J) at fixed temperature")
    p.add_argument("--grid", default="201x201")
    p.add_argument("--range", action="append", metavar="name=min:max",
                   help="axis ranges; defaults j1_over_j=0:2 h_over_j=0:6")
    p.add_argument("--kt-over-j", type=float, default=0.0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--observables", choices=["all", "none"], default="all")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv"], default="csv")
    _add_tolerances(p)

    p = sub.add_parser("scan-thermal",
                       help="grid scan over (kT/J, h/J) at fixed J1/J")
    p.add_argument("--j1-over-j", type=float, required=True)
    p.add_argument("--grid", default="201x201")
    p.add_argument("--range", action="append", metavar="name=min:max",
                   help="axis ranges; defaults kt_over_j=0.0075:1.5 h_over_j=0:6")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--observables", choices=["all", "none"], default="all")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv"], default="csv")
    _add_tolerances(p)

    p = sub.add_parser("phase-diagram",
                       help="closed-form ground-state boundary segments as JSON")
    p.add_argument("--range", action="append", metavar="name=min:max",
                   help="default j1_over_j=0:2")
    p.add_argument("--h-max", type=float, default=6.0)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("verify-appendix",
                       help="cross-validate the closed-form reference data against brute force")
    p.add_argument("--seed", type=int, default=1234)
    p.add_argument("--draws", type=int, default=60)
    p.add_argument("--out", default=None)
    return parser


def cmd_gs_table(args) -> int:
    regimes = ["below", "at", "above"] if args.regime == "all" else [args.regime]
    rows_out = []
    for regime in regimes:
        for row, (j1, h) in zip(oracle.table2_rows(regime), oracle.REPRESENTATIVE_POINTS[regime]):
            spec = diagonalize(build_hamiltonian(ModelParams(j=1.0, j1=j1, h=h)))
            state = ground_manifold(spec, args.degeneracy_tol)
            r18 = partial_trace(state, ("mu1", "S1", "S2"))
            r12 = partial_trace(state, ("mu1", "mu2", "S2"))
            computed = (
                negativity(r18, "mu1", args.zero_tol).value,
                negativity(r18, "S1", args.zero_tol).value,
                negativity(r18, "S2", args.zero_tol).value,
                negativity(r12, "mu1", args.zero_tol).value,
                negativity(r12, "mu2", args.zero_tol).value,
                negativity(r12, "S2", args.zero_tol).value,
            )
            rows_out.append({
                "regime": regime,
                "states": ";".join(row.states),
                "J1_over_J": j1,
                "h_over_J": h,
                "columns": {
                    name: {"computed": got, "exact": want, "abs_dev": abs(got - want)}
                    for name, got, want in zip(oracle.TABLE2_COLUMNS, computed, row.values)
                },
            })
    with _output(args.out) as fh:
        if args.format == "json":
            json.dump(rows_out, fh, indent=2, sort_keys=True)
            fh.write("\n")
        else:
            cols = [c.replace("|", "_vs_") for c in oracle.TABLE2_COLUMNS]
            header = ["regime", "states", "J1_over_J", "h_over_J"]
            for c in cols:
                header += [f"num_{c}", f"exact_{c}", f"dev_{c}"]
            import csv as _csv

            writer = _csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            for row in rows_out:
                line = [row["regime"], row["states"],
                        csvio.format_number(row["J1_over_J"]), csvio.format_number(row["h_over_J"])]
                for name in oracle.TABLE2_COLUMNS:
                    cell = row["columns"][name]
                    line += [csvio.format_number(cell["computed"]),
                             csvio.format_number(cell["exact"]),
                             csvio.format_number(cell["abs_dev"])]
                writer.writerow(line)
    return EXIT_OK


def _run_scan(args, kind: str) -> int:
    na, nb = _parse_grid(args.grid)
    ranges = _parse_ranges(args.range)
    if kind == "field":
        j1_lo, j1_hi = ranges.get("j1_over_j", (0.0, 2.0))
        h_lo, h_hi = ranges.get("h_over_j", (0.0, 6.0))
        grid = scan.ScanGrid(
            axes=(scan.Axis("j1_over_j", j1_lo, j1_hi, na), scan.Axis("h_over_j", h_lo, h_hi, nb)),
            fixed=(("kt_over_j", args.kt_over_j),),
        )
        runner = scan.field_scan
    else:
        kt_lo, kt_hi = ranges.get("kt_over_j", (0.0075, 1.5))
        h_lo, h_hi = ranges.get("h_over_j", (0.0, 6.0))
        grid = scan.ScanGrid(
            axes=(scan.Axis("kt_over_j", kt_lo, kt_hi, na), scan.Axis("h_over_j", h_lo, h_hi, nb)),
            fixed=(("j1_over_j", args.j1_over_j),),
        )
        runner = scan.thermal_scan
    t0 = time.perf_counter()
    if args.observables == "none":
        records, count = [], 0
    else:
        records = runner(grid, workers=args.workers, zero_tol=args.zero_tol,
                         degeneracy_tol=args.degeneracy_tol)
        count = len(records)
    with _output(args.out) as fh:
        csvio.write_scan_csv(records, fh, include_values=args.observables != "none")
    elapsed = time.perf_counter() - t0
    print(f"{count} nodes in {elapsed:.2f} s", file=sys.stderr)
    return EXIT_OK


def cmd_phase_diagram(args) -> int:
    ranges = _parse_ranges(args.range)
    j1_lo, j1_hi = ranges.get("j1_over_j", (0.0, 2.0))
    segments = scan.phase_boundaries(j1_lo, j1_hi, args.h_max)
    payload = {"j1_range": [j1_lo, j1_hi], "h_max": args.h_max, "segments": []}
    for seg in segments:
        entry = {
            "kind": seg.kind,
            "lower_phase": [lab.text() for lab in seg.lower_labels],
            "upper_phase": [lab.text() for lab in seg.upper_labels],
        }
        if seg.kind == "sloped":
            entry.update(slope=seg.slope, intercept=seg.intercept,
                         j1_range=list(seg.j1_range))
        else:
            entry.update(j1=seg.j1, h_range=list(seg.h_range))
        payload["segments"].append(entry)
    with _output(args.out) as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return EXIT_OK


def cmd_verify_appendix(args) -> int:
    report = verify.run_verification(draws=args.draws, seed=args.seed)
    with _output(args.out) as fh:
        fh.write(report.render())
    return EXIT_OK if report.passed else EXIT_VERIFY


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "gs-table":
            return cmd_gs_table(args)
        if args.command == "scan-field":
            return _run_scan(args, "field")
        if args.command == "scan-thermal":
            return _run_scan(args, "thermal")
        if args.command == "phase-diagram":
            return cmd_phase_diagram(args)
        if args.command == "verify-appendix":
            return cmd_verify_appendix(args)
        parser.error(f"unknown command {args.command!r}")
    except ValueError as exc:
        print(f"tetraneg: error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except OSError as exc:
        print(f"tetraneg: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
