"""Command-line surface: classify, section, table, torsor-check.

Exit codes (stable contract):
  0  success (section: verdict removable and monodromy passed)
  1  malformed input document, unknown config keys, or usage error
  2  classification error (DegenerateModel / UnclassifiedValuations)
  3  gcd obstruction (multiplicity gcd != 1, averaging not applicable)
  4  lift failure (under-sampled contour)
  5  torsor invariant failure
  6  section verification failed (monodromy or extension verdict)

Reports are JSON documents (sorted keys, 2-space indent); the section
command additionally writes a CSV sidecar with header
radius,sup_phi,c1_abs.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from pathlib import Path

from . import checks
from .errors import (
    DegenerateModel,
    DomainError,
    GcdError,
    LiftFailure,
    UnclassifiedValuations,
    WeightSumError,
)
from .fibration import (
    DEFAULT_COEFF_TOL,
    DEFAULT_MONODROMY_TOL,
    DEFAULT_RADII,
    DEFAULT_SAMPLES,
    BranchedMultisection,
    FiberFamily,
    WeightedSystem,
    circle_c1_estimate,
    extension_check,
    monodromy_check,
)
from .kodaira import WeierstrassModel, catalog, fiber_report
from .laurent import from_triples
from .multiplicity import bezout_weights, gcd_vector


class MalformedInput(ValueError):
    """Document fails schema validation; maps to exit 1."""


class _Parser(argparse.ArgumentParser):
    # usage errors are "malformed input" (exit 1), not argparse's default 2
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _require_keys(doc: dict, required: set, optional: set, what: str):
    if not isinstance(doc, dict):
        raise MalformedInput(f"{what} must be a JSON object")
    unknown = set(doc) - required - optional
    if unknown:
        raise MalformedInput(f"unknown keys in {what}: {sorted(unknown)}")
    missing = required - set(doc)
    if missing:
        raise MalformedInput(f"missing keys in {what}: {sorted(missing)}")


def _coefficient_triples(value, what: str):
    if not isinstance(value, list):
        raise MalformedInput(f"{what} must be a list of [exponent, numerator, denominator]")
    for triple in value:
        if (
            not isinstance(triple, list)
            or len(triple) != 3
            or not all(isinstance(v, int) for v in triple)
        ):
            raise MalformedInput(f"bad coefficient triple in {what}: {triple!r}")
        if triple[2] == 0:
            raise MalformedInput(f"zero denominator in {what}: {triple!r}")
    return value


def load_model_document(path: str) -> WeierstrassModel:
    """Model schema: {"a": [[e, num, den], ...], "b": [[e, num, den], ...]}."""
    doc = _read_json(path)
    _require_keys(doc, {"a", "b"}, set(), "model document")
    a = from_triples(_coefficient_triples(doc["a"], "a"))
    b = from_triples(_coefficient_triples(doc["b"], "b"))
    return WeierstrassModel(a, b)


def load_system_document(path: str) -> WeightedSystem:
    """System schema: tau0 = [re, im], optional log_k and radius, and
    entries = [{"weight": int, "mu": int, "series": [[power, re, im], ...]}, ...].
    """
    doc = _read_json(path)
    _require_keys(doc, {"tau0", "entries"}, {"log_k", "radius"}, "system document")
    tau0 = doc["tau0"]
    if (
        not isinstance(tau0, list)
        or len(tau0) != 2
        or not all(isinstance(v, (int, float)) for v in tau0)
    ):
        raise MalformedInput("tau0 must be [re, im]")
    log_k = doc.get("log_k", 0)
    if not isinstance(log_k, int) or log_k < 0:
        raise MalformedInput("log_k must be a nonnegative integer")
    radius = doc.get("radius", 0.5)
    if not isinstance(radius, (int, float)) or radius <= 0:
        raise MalformedInput("radius must be positive")
    if not isinstance(doc["entries"], list) or not doc["entries"]:
        raise MalformedInput("entries must be a nonempty list")
    entries = []
    for entry in doc["entries"]:
        _require_keys(entry, {"weight", "mu", "series"}, set(), "system entry")
        if not isinstance(entry["weight"], int):
            raise MalformedInput(f"weight must be an integer: {entry['weight']!r}")
        if not isinstance(entry["mu"], int) or entry["mu"] < 1:
            raise MalformedInput(f"mu must be a positive integer: {entry['mu']!r}")
        series = entry["series"]
        if not isinstance(series, list):
            raise MalformedInput("series must be a list of [power, re, im]")
        terms = []
        for term in series:
            if (
                not isinstance(term, list)
                or len(term) != 3
                or not isinstance(term[0], int)
                or not all(isinstance(v, (int, float)) for v in term[1:])
            ):
                raise MalformedInput(f"bad series term: {term!r}")
            terms.append((term[0], complex(term[1], term[2])))
        entries.append((entry["weight"], BranchedMultisection(entry["mu"], tuple(terms))))
    try:
        family = FiberFamily(complex(tau0[0], tau0[1]), log_k=log_k, radius=float(radius))
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    return WeightedSystem(tuple(entries), family)


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON in {path}: {exc}") from exc


def _emit(report: dict, output: str | None):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    model = load_model_document(args.input)
    data = fiber_report(model)
    report = {
        "command": "classify",
        "kodaira": data.kodaira.tag,
        "v_delta": data.v_delta,
        "multiplicities": list(data.multiplicities.entries),
        "component_count": data.component_count,
        "min": data.min,
        "gcd": data.gcd,
        "admissible": data.min == data.gcd,
    }
    _emit(report, args.output)
    return 0


def cmd_table(args) -> int:
    rows = []
    for data in catalog():
        rows.append(
            {
                "type": data.kodaira.tag,
                "multiplicities": list(data.multiplicities.entries),
                "component_count": data.component_count,
                "v_delta": data.v_delta,
                "min": data.min,
                "gcd": data.gcd,
                "admissible": data.min == data.gcd,
            }
        )
    report = {"command": "table", "rows": rows, "multiple_m_max": 6, "multiple_n_max": 10}
    _emit(report, args.output)
    return 0


def _parse_radii(text: str) -> tuple[float, ...]:
    try:
        radii = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise MalformedInput(f"bad radii list: {text!r}") from exc
    if not radii:
        raise MalformedInput("empty radii list")
    return radii


def cmd_section(args) -> int:
    system = load_system_document(args.input)
    if system.family.log_k:
        # averaging and monodromy support log-monodromy families through the
        # library, but the extension verdict needs constant tau
        raise DomainError(
            "section verification requires a constant-tau system (log_k = 0)"
        )
    mu_vec = system.multiplicities()
    g = gcd_vector(mu_vec)
    if g != 1:
        raise GcdError(f"gcd of multiplicities {list(mu_vec.entries)} is {g}, not 1")
    if system.total_multiplicity() != 1:
        raise MalformedInput(
            f"entry weights give total multiplicity {system.total_multiplicity()}, expected 1"
        )
    cert = bezout_weights(mu_vec)

    radii = _parse_radii(args.radii) if args.radii else DEFAULT_RADII
    samples = args.samples
    rng = random.Random(args.seed)
    r_lo, r_hi = min(radii), min(max(radii), system.family.radius)
    points = []
    for _ in range(32):
        r = math.exp(rng.uniform(math.log(r_lo), math.log(r_hi)))
        theta = rng.uniform(0, 2 * math.pi)
        points.append(r * complex(math.cos(theta), math.sin(theta)))
    monodromy_ok = all([monodromy_check(system, t, tol=args.tol) for t in points])

    verdict = extension_check(system, radii=radii, samples_per_circle=samples,
                              coeff_tol=args.coeff_tol)

    csv_path = _csv_sidecar_path(args.output)
    lines = ["radius,sup_phi,c1_abs"]
    for r, sup in verdict.sup_by_radius:
        try:
            c1 = circle_c1_estimate(system, r, samples)
        except LiftFailure:
            c1 = float("nan")
        lines.append(f"{r!r},{sup!r},{c1!r}")
    Path(csv_path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    report = {
        "command": "section",
        "seed": args.seed,
        "multiplicities": list(mu_vec.entries),
        "weights": [w for w, _ in system.entries],
        "bezout": {"weights": list(cert.weights), "gcd": cert.gcd},
        "monodromy": {
            "passed": monodromy_ok,
            "tolerance": args.tol,
            "points_checked": len(points),
        },
        "extension": {
            "verdict": verdict.verdict,
            "bounded": verdict.bounded,
            "c1_abs": verdict.coefficient(1),
            "c2_abs": verdict.coefficient(2),
            "lift_winding": list(verdict.lift_winding),
        },
        "sup_by_radius": [[r, sup] for r, sup in verdict.sup_by_radius],
        "samples_per_circle": samples,
        "csv": str(csv_path),
    }
    _emit(report, args.output)
    if verdict.verdict == "removable" and monodromy_ok:
        return 0
    return 6


def _csv_sidecar_path(output: str) -> Path:
    out = Path(output)
    return out.with_suffix(".csv") if out.suffix else out.with_name(out.name + ".csv")


def _parse_n_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise MalformedInput(f"bad n-range {text!r}, expected A..B") from exc
    if lo < 1 or hi < lo:
        raise MalformedInput(f"bad n-range {text!r}")
    return lo, hi


def cmd_torsor_check(args) -> int:
    n_lo, n_hi = _parse_n_range(args.n_range)
    results = checks.run_suite(
        n_lo=n_lo,
        n_hi=n_hi,
        seed=args.seed,
        tol=args.tol,
        mutate=args.inject_mutation,
    )
    report = {
        "command": "torsor-check",
        "seed": args.seed,
        "tolerance": args.tol,
        "n_range": [n_lo, n_hi],
        "max_weight_len": 4,
        "weight_bound": 3,
        "mutation_injected": bool(args.inject_mutation),
        "invariants": [
            {
                "name": r.name,
                "cases": r.cases,
                "passed": r.passed,
                "counterexample": r.counterexample,
            }
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    _emit(report, args.output)
    return 0 if report["all_passed"] else 5


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="torsorkit", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the singular fiber of a model document")
    p.add_argument("--input", required=True, help="model JSON (fields a, b)")
    p.add_argument("--output", help="report path (default: stdout)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("section", help="average a weighted system and verify extension")
    p.add_argument("--input", required=True, help="system JSON (tau0, entries, ...)")
    p.add_argument("--output", required=True, help="report path; CSV sidecar lands next to it")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_MONODROMY_TOL,
                   help="monodromy tolerance")
    p.add_argument("--coeff-tol", type=float, default=DEFAULT_COEFF_TOL,
                   help="negative-coefficient threshold")
    p.add_argument("--radii", help="comma-separated decreasing radii")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("table", help="emit the Kodaira catalog with multiplicities")
    p.add_argument("--output", help="report path (default: stdout)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("torsor-check", help="run the torsor invariant suite")
    p.add_argument("--output", help="report path (default: stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--n-range", default="2..12", help="cyclic instance range A..B")
    p.add_argument("--inject-mutation", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_torsor_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInput as exc:
        print(f"torsorkit: malformed input: {exc}", file=sys.stderr)
        return 1
    except WeightSumError as exc:
        print(f"torsorkit: invalid weights: {exc}", file=sys.stderr)
        return 1
    except (DegenerateModel, UnclassifiedValuations) as exc:
        print(f"torsorkit: classification error: {exc}", file=sys.stderr)
        return 2
    except GcdError as exc:
        print(f"torsorkit: gcd obstruction: {exc}", file=sys.stderr)
        return 3
    except LiftFailure as exc:
        print(f"torsorkit: lift failure: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"torsorkit: domain error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
