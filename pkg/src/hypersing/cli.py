"""Command-line surface: scans, multiplicity checks, and the case battery.

Subcommands:

    fedder    Frobenius-power prime scan of one polynomial.
    mult      Multiplicity of a hypersurface at an exact rational point.
    slc       The multiplicity obstruction (not-slc iff mu > n+1).
    battery   The full singularity-catalog run: per case, a prime scan,
              multiplicity at the origin, the obstruction verdict, and the
              evidence combinators.

Every command emits either a text report or a canonical JSON envelope
{tool_version, input_echo, rows, summary}; JSON output is byte-identical
across runs for identical inputs, and re-serializing a parsed report
reproduces the bytes.  Exit codes: 0 success, 1 expression parse error,
2 precondition violation, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .birational import (
    INCONCLUSIVE,
    line_multiplicity_probe,
    multiplicity_at,
    slc_obstruction,
    slc_obstruction_from_mu,
)
from .catalog import BATTERY_LABELS, MIN_N, build_case
from .frobenius import FedderScanReport, scan_primes
from .gsnc import (
    CoordinateIdeal,
    GsncPresentation,
    YES,
    du_bois_from_fedder_scan,
    du_bois_from_gsnc,
    du_bois_from_semismooth,
    slc_from_du_bois,
)
from .polyring import PolyParseError, format_monomial, parse_poly, primes_in_range, is_prime

TOOL_VERSION = f"hypersing {__version__}"

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_INTERNAL = 3


def parse_prime_spec(spec: str) -> list[int]:
    """Primes from "lo..hi" (inclusive, filtered) or "2,3,5" (validated)."""
    spec = spec.strip()
    if ".." in spec:
        lo_text, hi_text = spec.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if lo > hi:
            raise ValueError(f"empty prime range {spec!r}")
        primes = primes_in_range(lo, hi)
        if not primes:
            raise ValueError(f"no primes in range {spec!r}")
        return primes
    primes = [int(part) for part in spec.split(",") if part.strip()]
    if not primes:
        raise ValueError("prime list must be nonempty")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    return sorted(set(primes))


def parse_point(text: str) -> tuple[Fraction, ...]:
    """Comma-separated exact rationals (integers or a/b)."""
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise ValueError("point must be nonempty")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"point coordinates must be exact rationals: {exc}") from None


def parse_vars(text: str) -> list[str]:
    names = [v.strip() for v in text.split(",") if v.strip()]
    if not names:
        raise ValueError("variable list must be nonempty")
    return names


def load_poly_text(args) -> str:
    if getattr(args, "poly", None) is not None:
        return args.poly
    if getattr(args, "poly_file", None) is None:
        raise ValueError("provide a polynomial via --poly or --poly-file")
    with open(args.poly_file, encoding="utf-8") as handle:
        return handle.read().strip()


def fraction_str(value) -> str:
    return str(value)


def witness_str(verdict) -> str | None:
    if verdict.witness is None:
        return None
    return format_monomial(verdict.witness.exponents)


def scan_rows(report: FedderScanReport) -> list[dict]:
    return [
        {"prime": v.prime, "passes": v.passes, "witness": witness_str(v)}
        for v in report.verdicts
    ]


def scan_summary(report: FedderScanReport) -> dict:
    return {
        "conclusion": report.conclusion,
        "prime_bound": report.prime_bound,
        "failing_primes": list(report.failing_primes),
        "floor": report.floor,
        "notes": list(report.notes),
    }


def evidence_dict(e) -> dict:
    return {"verdict": e.verdict, "reason": e.reason}


# -- subcommand handlers -------------------------------------------------------


def cmd_fedder(args) -> dict:
    text = load_poly_text(args)
    names = parse_vars(args.vars)
    poly = parse_poly(text, names)
    primes = parse_prime_spec(args.primes)
    report = scan_primes(
        poly, primes, floor=args.floor, split=args.split, polynomial_id=text
    )
    return {
        "tool_version": TOOL_VERSION,
        "input_echo": {
            "command": "fedder",
            "poly": text,
            "vars": names,
            "primes": args.primes,
            "floor": args.floor,
            "split": args.split,
        },
        "rows": scan_rows(report),
        "summary": scan_summary(report),
    }


def cmd_mult(args) -> dict:
    text = load_poly_text(args)
    names = parse_vars(args.vars)
    poly = parse_poly(text, names)
    point = parse_point(args.point)
    report = multiplicity_at(poly, point)
    row = {
        "point": [fraction_str(c) for c in report.point],
        "mu": report.mu,
    }
    summary = {"mu": report.mu}
    if args.cross_check_lines:
        rng = random.Random(args.seed)
        probe = line_multiplicity_probe(poly, point, rng)
        row["line_probe"] = probe
        summary["line_probe_agrees"] = probe == report.mu
    return {
        "tool_version": TOOL_VERSION,
        "input_echo": {
            "command": "mult",
            "poly": text,
            "vars": names,
            "point": args.point,
            "cross_check_lines": args.cross_check_lines,
            "seed": args.seed,
        },
        "rows": [row],
        "summary": summary,
    }


def cmd_slc(args) -> dict:
    n = args.ambient_dim
    if args.mu is not None:
        if args.poly is not None or args.poly_file is not None:
            raise ValueError("give either --mu or a polynomial, not both")
        obstruction = slc_obstruction_from_mu(args.mu, n)
        echo_extra = {"mu": args.mu}
    else:
        if args.point is None:
            raise ValueError("a polynomial input needs --point")
        if args.vars is None:
            raise ValueError("a polynomial input needs --vars")
        text = load_poly_text(args)
        names = parse_vars(args.vars)
        poly = parse_poly(text, names)
        point = parse_point(args.point)
        obstruction = slc_obstruction(poly, point, n)
        echo_extra = {"poly": text, "vars": names, "point": args.point}
    row = {
        "mu": obstruction.mu,
        "ambient_n": obstruction.ambient_n,
        "discrepancy_coefficient": obstruction.discrepancy_coefficient,
        "verdict": obstruction.verdict,
    }
    return {
        "tool_version": TOOL_VERSION,
        "input_echo": {"command": "slc", "ambient_dim": n, **echo_extra},
        "rows": [row],
        "summary": {"verdict": obstruction.verdict},
    }


def _battery_du_bois(label: str, case, report: FedderScanReport):
    """Pick the strongest applicable evidence source for a battery row."""
    if label == "0":
        if case.d == 1:
            return du_bois_from_semismooth(), "smooth sheet"
        presentation = GsncPresentation(
            case.polynomial.nvars,
            [CoordinateIdeal({i}) for i in range(case.d)],
        )
        return du_bois_from_gsnc(presentation), presentation.to_string()
    if label in ("1a", "dnc", "pinch"):
        return du_bois_from_semismooth(), None
    return du_bois_from_fedder_scan(report), None


def cmd_battery(args) -> dict:
    n = args.n
    primes = parse_prime_spec(args.primes)
    labels = args.case if args.case else list(BATTERY_LABELS)
    for label in labels:
        if label not in MIN_N or label in ("dnc", "pinch"):
            raise ValueError(
                f"unknown battery case {label!r}; choose from {', '.join(BATTERY_LABELS)}"
            )
    labels = sorted(set(labels), key=BATTERY_LABELS.index)
    d = args.d if args.d is not None else n + 1
    rows = []
    skipped = []
    for label in labels:
        if n < MIN_N[label]:
            rows.append(
                {
                    "case": label,
                    "skipped": True,
                    "note": f"needs n >= {MIN_N[label]}, battery ran with n = {n}",
                }
            )
            skipped.append(label)
            continue
        case = build_case(label, n, d=d if label == "0" else None)
        report = scan_primes(
            case.polynomial,
            primes,
            split=True,
            polynomial_id=f"case {label}",
        )
        mult = multiplicity_at(case.polynomial, (0,) * case.polynomial.nvars)
        obstruction = slc_obstruction_from_mu(mult.mu, n)
        du_bois, structure = _battery_du_bois(label, case, report)
        slc_evidence = slc_from_du_bois(True, du_bois)
        row = {
            "case": label,
            "skipped": False,
            "citation": case.citation,
            "equation": str(case.polynomial),
            "fedder": scan_rows(report),
            "scan_conclusion": report.conclusion,
            "scan_notes": list(report.notes),
            "multiplicity_at_origin": mult.mu,
            "slc_obstruction": {
                "discrepancy_coefficient": obstruction.discrepancy_coefficient,
                "verdict": obstruction.verdict,
            },
            "du_bois_evidence": evidence_dict(du_bois),
            "slc_evidence": evidence_dict(slc_evidence),
        }
        if label == "0":
            row["d"] = case.d
        if structure is not None:
            row["structure"] = structure
        rows.append(row)
    ran = [r for r in rows if not r["skipped"]]
    summary = {
        "cases_run": [r["case"] for r in ran],
        "cases_skipped": skipped,
        "all_fedder_passes": all(
            cell["passes"] for r in ran for cell in r["fedder"]
        ),
        "all_du_bois_yes": all(r["du_bois_evidence"]["verdict"] == YES for r in ran),
        "all_slc_obstructions_inconclusive": all(
            r["slc_obstruction"]["verdict"] == INCONCLUSIVE for r in ran
        ),
    }
    return {
        "tool_version": TOOL_VERSION,
        "input_echo": {
            "command": "battery",
            "n": n,
            "primes": args.primes,
            "cases": labels,
            "d": d,
        },
        "rows": rows,
        "summary": summary,
    }


# -- rendering -----------------------------------------------------------------


def render_json(envelope: dict) -> str:
    return json.dumps(envelope, indent=2, sort_keys=True)


def _scan_lines(rows, summary) -> list[str]:
    out = []
    for cell in rows:
        mark = "pass" if cell["passes"] else "FAIL"
        witness = f"  witness {cell['witness']}" if cell["witness"] else ""
        out.append(f"  p = {cell['prime']:>3}  {mark}{witness}")
    out.append(f"conclusion: {summary['conclusion']}")
    if summary["prime_bound"] is not None:
        out.append(f"prime bound: {summary['prime_bound']}")
    if summary["failing_primes"]:
        out.append(f"failing primes: {', '.join(map(str, summary['failing_primes']))}")
    for note in summary["notes"]:
        out.append(f"note: {note}")
    return out


def render_text(envelope: dict) -> str:
    echo = envelope["input_echo"]
    command = echo["command"]
    lines = [f"{envelope['tool_version']}  [{command}]"]
    if command == "fedder":
        lines.append(f"polynomial: {echo['poly']}")
        lines.extend(_scan_lines(envelope["rows"], envelope["summary"]))
    elif command == "mult":
        row = envelope["rows"][0]
        lines.append(f"polynomial: {echo['poly']}")
        lines.append(f"point: ({', '.join(row['point'])})")
        lines.append(f"multiplicity: {row['mu']}")
        if "line_probe" in row:
            agree = "agrees" if envelope["summary"]["line_probe_agrees"] else "DISAGREES"
            lines.append(f"random-line probe: {row['line_probe']} ({agree})")
    elif command == "slc":
        row = envelope["rows"][0]
        lines.append(f"mu = {row['mu']}, n = {row['ambient_n']}")
        lines.append(f"discrepancy coefficient: {row['discrepancy_coefficient']}")
        lines.append(f"verdict: {row['verdict']}")
    elif command == "battery":
        lines.append(f"n = {echo['n']}, primes {echo['primes']}, cases {', '.join(echo['cases'])}")
        for row in envelope["rows"]:
            lines.append("")
            if row["skipped"]:
                lines.append(f"case {row['case']}: skipped ({row['note']})")
                continue
            lines.append(f"case {row['case']}: {row['citation']}")
            lines.append(f"  equation: {row['equation']}")
            for cell in row["fedder"]:
                mark = "pass" if cell["passes"] else "FAIL"
                witness = f"  witness {cell['witness']}" if cell["witness"] else ""
                lines.append(f"  p = {cell['prime']:>3}  {mark}{witness}")
            lines.append(f"  scan conclusion: {row['scan_conclusion']}")
            for note in row["scan_notes"]:
                lines.append(f"  note: {note}")
            obstruction = row["slc_obstruction"]
            lines.append(
                f"  multiplicity at origin: {row['multiplicity_at_origin']}"
                f"  (discrepancy {obstruction['discrepancy_coefficient']},"
                f" {obstruction['verdict']})"
            )
            du_bois = row["du_bois_evidence"]
            slc = row["slc_evidence"]
            lines.append(f"  du bois evidence: {_evidence_str(du_bois)}")
            lines.append(f"  slc evidence: {_evidence_str(slc)}")
        summary = envelope["summary"]
        lines.append("")
        lines.append(
            "summary: "
            f"ran {len(summary['cases_run'])}, skipped {len(summary['cases_skipped'])}; "
            f"all scans pass: {summary['all_fedder_passes']}; "
            f"all du bois yes: {summary['all_du_bois_yes']}; "
            f"all obstructions inconclusive: {summary['all_slc_obstructions_inconclusive']}"
        )
    return "\n".join(lines)


def _evidence_str(e: dict) -> str:
    if e["verdict"] == YES:
        return f"yes ({e['reason']})"
    return "unknown"


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersing",
        description="Exact tests for Du Bois and semi-log-canonical hypersurface criteria.",
    )
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_poly_args(p, point_required: bool):
        source = p.add_mutually_exclusive_group(required=False)
        source.add_argument("--poly", help="polynomial expression")
        source.add_argument("--poly-file", help="UTF-8 file with one expression")
        p.add_argument("--vars", required=True, help="comma-separated variable names, in order")
        if point_required is not None:
            p.add_argument(
                "--point",
                required=point_required,
                help="comma-separated exact rational coordinates",
            )

    fedder = sub.add_parser("fedder", help="Frobenius-power prime scan")
    add_poly_args(fedder, point_required=None)
    fedder.add_argument("--primes", required=True, help='"lo..hi" or "p1,p2,..."')
    fedder.add_argument("--floor", type=int, default=0, help="ignore primes <= floor in the conclusion")
    fedder.add_argument("--split", action="store_true", help="scan variable-disjoint factors separately")
    fedder.set_defaults(handler=cmd_fedder)

    mult = sub.add_parser("mult", help="multiplicity at a point")
    add_poly_args(mult, point_required=True)
    mult.add_argument(
        "--cross-check-lines",
        action="store_true",
        help="also probe with random lines through the point",
    )
    mult.add_argument("--seed", type=int, default=0, help="seed for the random-line probe")
    mult.set_defaults(handler=cmd_mult)

    slc = sub.add_parser("slc", help="multiplicity obstruction verdict")
    source = slc.add_mutually_exclusive_group(required=False)
    source.add_argument("--poly", help="polynomial expression")
    source.add_argument("--poly-file", help="UTF-8 file with one expression")
    slc.add_argument("--vars", help="comma-separated variable names")
    slc.add_argument("--point", help="comma-separated exact rational coordinates")
    slc.add_argument("--mu", type=int, default=None, help="known multiplicity (skips the polynomial)")
    slc.add_argument("--ambient-dim", type=int, required=True, help="hypersurface dimension n")
    slc.set_defaults(handler=cmd_slc)

    battery = sub.add_parser("battery", help="run the singularity catalog")
    battery.add_argument("--n", type=int, default=5, help="target dimension (default 5)")
    battery.add_argument("--primes", default="5..13", help='prime spec (default "5..13")')
    battery.add_argument(
        "--case",
        action="append",
        default=None,
        help="run only this case label (repeatable)",
    )
    battery.add_argument("--d", type=int, default=None, help="sheet count for case 0 (default n+1)")
    battery.set_defaults(handler=cmd_battery)

    for p in (fedder, mult, slc, battery):
        p.add_argument(
            "--format",
            choices=("text", "json"),
            default="text",
            help="output format (default text)",
        )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        envelope = args.handler(args)
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except Exception as exc:  # noqa: BLE001  invariant breakage is exit 3
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    output = render_json(envelope) if args.format == "json" else render_text(envelope)
    print(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
