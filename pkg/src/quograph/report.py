"""Full analysis pipeline and report serialization.

A Report is the machine-readable result of one graph analysis. JSON output is
deterministic (timing is reported separately, never serialized) and
round-trips losslessly: exact rationals travel as "num/den" strings, walk
counts as decimal strings.
"""
from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field

from .errors import (ContractViolationError, SizeLimitError, ToleranceError)
from .exact import Polynomial, frac_str, parse_frac, poly_to_text
from .graphs import Graph, distances
from .orbits import (DEFAULT_VERTEX_CAP, automorphisms, is_orbit_polynomial,
                     orbit_partition)
from .partitions import adjacency_power_ladder, global_partition
from .quotient import (decide_quotient_polynomial, extended_partition_stable)
from .schemes import (AssociationScheme, ClassificationFlags, build_scheme,
                      generates_scheme_check, is_distance_polynomial,
                      is_distance_regular, is_h_punctually_walk_regular,
                      is_walk_regular, qp_implies_dp, scheme_via_solve)
from .spectral import (Tolerances, spectral_decomposition, spectrum_partition)

log = logging.getLogger("quograph")


@dataclass(frozen=True)
class AnalysisOptions:
    orbits: bool = False
    orbit_cap: int = DEFAULT_VERTEX_CAP
    tol: Tolerances = field(default_factory=Tolerances)
    debug_checks: bool = False


@dataclass
class OrbitResult:
    num_automorphisms: int
    num_orbits: int
    orbit_polynomial: bool


@dataclass
class Report:
    n: int
    degree_sequence: list[int]
    diameter: int | None
    quotient: object | None = None           # QuotientReport
    flags: ClassificationFlags | None = None
    scheme: AssociationScheme | None = None
    scheme_generates: bool | None = None
    orbit: OrbitResult | None = None
    eigenvalues: list[float] | None = None
    multiplicities: list[int] | None = None
    timing: float | None = None              # seconds, not serialized
    error: str | None = None


def analyze(g: Graph, options: AnalysisOptions = AnalysisOptions()) -> Report:
    """partitions -> quotient analysis -> spectral cross-checks -> classifiers."""
    t0 = time.monotonic()
    dd = distances(g)
    report = Report(n=g.n, degree_sequence=g.degree_sequence(),
                    diameter=dd.diameter)
    if not dd.connected:
        report.error = "graph is disconnected; analysis is undefined"
        report.timing = time.monotonic() - t0
        return report

    ladder = adjacency_power_ladder(g)
    pp = global_partition(g, ladder)
    rep = decide_quotient_polynomial(g, dd, ladder, pp)
    report.quotient = rep

    sd = spectral_decomposition(g, expected_distinct=rep.d + 1, tol=options.tol)
    report.eigenvalues = [float(f"{x:.12g}") for x in sd.spectrum.eigenvalues]
    report.multiplicities = list(sd.spectrum.multiplicities)
    # Lemma: m-vector grouping must reproduce the exact walk partition
    if spectrum_partition(g, sd, options.tol.pair_match) != pp.as_setpartition():
        raise ToleranceError(
            "spectrum partition disagrees with the exact walk partition")

    dp = is_distance_polynomial(g, dd, ladder)
    flags = ClassificationFlags(
        walk_regular=is_walk_regular(pp),
        h_punctual=tuple(is_h_punctually_walk_regular(pp, g, h, dd)
                         for h in range(dd.diameter + 1)),
        distance_regular=is_distance_regular(g, rep, dd, ladder),
        distance_polynomial=dp is not None,
        quotient_polynomial=rep.is_quotient_polynomial,
        distance_polys=tuple(dp) if dp is not None else None,
    )

    if rep.is_quotient_polynomial:
        scheme = build_scheme(rep, pp)
        report.scheme = scheme
        report.scheme_generates = generates_scheme_check(scheme, g)
        if options.debug_checks:
            if not scheme_via_solve(scheme):
                raise ContractViolationError(
                    "solve-based intersection numbers disagree with read-off")
            qp_implies_dp(rep, g, dd, ladder)  # raises on failure

    if options.debug_checks and not extended_partition_stable(g, pp, ladder):
        raise ContractViolationError(
            "walk vectors extended to length 2d refine the partition")

    if options.orbits:
        try:
            auts = automorphisms(g, cap=options.orbit_cap)
            op = orbit_partition(auts, g.n)
            flags.orbit_polynomial = is_orbit_polynomial(g, op, ladder)
            report.orbit = OrbitResult(
                num_automorphisms=len(auts),
                num_orbits=len(op.orbits),
                orbit_polynomial=flags.orbit_polynomial,
            )
        except SizeLimitError as e:
            log.warning("orbit pass skipped: %s", e)

    rep.flags = flags
    report.flags = flags
    report.timing = time.monotonic() - t0
    return report


# --- serialization --------------------------------------------------------

def _poly_json(p: Polynomial) -> list[str]:
    return [frac_str(c) for c in p.coeffs]


def _poly_from_json(arr) -> Polynomial:
    return Polynomial.of([parse_frac(s) for s in arr])


def report_to_dict(report: Report) -> dict:
    d: dict = {
        "graph": {
            "n": report.n,
            "degree_sequence": report.degree_sequence,
            "diameter": report.diameter,
        },
        "error": report.error,
    }
    rep = report.quotient
    if rep is not None:
        pp = rep.partition
        d["quotient"] = {
            "d": rep.d,
            "r": rep.r,
            "quotient_polynomial": rep.is_quotient_polynomial,
            "local_dimensions": list(rep.local_dimensions),
            "diagonal_is_identity": pp.diagonal_is_identity,
            "polynomials": ([_poly_json(p) for p in rep.polynomials]
                            if rep.polynomials else None),
            "hoffman": _poly_json(rep.hoffman) if rep.hoffman else None,
            "intersection_matrix": rep.intersection_b,
            "walk_matrix": rep.walk_matrix,
            "walk_matrix_plus": rep.walk_matrix_plus,
        }
        d["partition"] = {
            "num_classes": pp.r + 1,
            "classes": [
                {"walk_vector": [str(x) for x in vec],
                 "pairs": [[u, v] for u, v in cls]}
                for vec, cls in zip(pp.class_walk_vectors, pp.classes)
            ],
        }
    if report.eigenvalues is not None:
        d["spectrum"] = {
            "eigenvalues": report.eigenvalues,
            "multiplicities": report.multiplicities,
        }
    if report.flags is not None:
        f = report.flags
        d["flags"] = {
            "walk_regular": f.walk_regular,
            "h_punctually_walk_regular": list(f.h_punctual),
            "distance_regular": f.distance_regular,
            "distance_polynomial": f.distance_polynomial,
            "quotient_polynomial": f.quotient_polynomial,
            "orbit_polynomial": f.orbit_polynomial,
            "distance_polynomials": ([_poly_json(p) for p in f.distance_polys]
                                     if f.distance_polys is not None else None),
        }
    if report.scheme is not None:
        d["scheme"] = {
            "classes": [[x for row in m for x in row] for m in report.scheme.classes],
            "intersection_numbers": [
                [list(row) for row in pk]
                for pk in report.scheme.intersection_numbers],
            "generates": report.scheme_generates,
        }
    if report.orbit is not None:
        d["orbits"] = {
            "num_automorphisms": report.orbit.num_automorphisms,
            "num_orbits": report.orbit.num_orbits,
            "orbit_polynomial": report.orbit.orbit_polynomial,
        }
    return d


def report_to_json(report: Report) -> str:
    return json.dumps(report_to_dict(report), indent=2)


def report_to_text(report: Report) -> str:
    lines = [f"graph: n={report.n}, diameter={report.diameter}, "
             f"degrees={sorted(set(report.degree_sequence))}"]
    if report.error:
        lines.append(f"error: {report.error}")
        return "\n".join(lines)
    rep = report.quotient
    lines.append(f"d = {rep.d}, r = {rep.r}, "
                 f"quotient-polynomial: {rep.is_quotient_polynomial}")
    if report.eigenvalues is not None:
        spec = ", ".join(f"{lam:g}^{m}" for lam, m
                         in zip(report.eigenvalues, report.multiplicities))
        lines.append(f"spectrum: {{{spec}}}")
    f = report.flags
    if f is not None:
        lines.append(
            f"walk-regular: {f.walk_regular}, distance-regular: "
            f"{f.distance_regular}, distance-polynomial: {f.distance_polynomial}")
        if f.orbit_polynomial is not None:
            lines.append(f"orbit-polynomial: {f.orbit_polynomial}")
    if rep.polynomials:
        for i, p in enumerate(rep.polynomials):
            lines.append(f"p{i}(x) = {poly_to_text(p)}")
        lines.append(f"H(x) = {poly_to_text(rep.hoffman)}")
        lines.append("B = " + json.dumps(rep.intersection_b))
    if f is not None and f.distance_polys is not None and not rep.polynomials:
        for i, p in enumerate(f.distance_polys):
            lines.append(f"distance p{i}(x) = {poly_to_text(p)}")
    if report.scheme is not None:
        lines.append(f"association scheme with {report.scheme.num_classes} "
                     f"classes; generated by the graph: {report.scheme_generates}")
    if report.timing is not None:
        lines.append(f"elapsed: {report.timing:.3f}s")
    return "\n".join(lines)


def report_from_dict(d: dict) -> Report:
    """Rebuild a Report from its JSON dict; inverse of report_to_dict."""
    from .partitions import PairPartition
    from .quotient import QuotientReport

    n = d["graph"]["n"]
    report = Report(n=n,
                    degree_sequence=list(d["graph"]["degree_sequence"]),
                    diameter=d["graph"]["diameter"],
                    error=d.get("error"))
    if "quotient" in d:
        q = d["quotient"]
        pj = d["partition"]
        vecs = tuple(tuple(int(x) for x in c["walk_vector"]) for c in pj["classes"])
        classes = tuple(tuple((u, v) for u, v in c["pairs"]) for c in pj["classes"])
        index = [[0] * n for _ in range(n)]
        for i, cls in enumerate(classes):
            for u, v in cls:
                index[u][v] = i
        pp = PairPartition(
            n=n, classes=classes, class_walk_vectors=vecs,
            class_index=tuple(tuple(row) for row in index),
            diagonal_classes=tuple(i for i, v in enumerate(vecs) if v[0] == 1))
        report.quotient = QuotientReport(
            d=q["d"], r=q["r"], diameter=d["graph"]["diameter"],
            is_quotient_polynomial=q["quotient_polynomial"],
            partition=pp,
            local_dimensions=tuple(q["local_dimensions"]),
            polynomials=(tuple(_poly_from_json(p) for p in q["polynomials"])
                         if q["polynomials"] is not None else None),
            hoffman=(_poly_from_json(q["hoffman"])
                     if q["hoffman"] is not None else None),
            intersection_b=q["intersection_matrix"],
            walk_matrix=q["walk_matrix"],
            walk_matrix_plus=q["walk_matrix_plus"],
        )
    if "spectrum" in d:
        report.eigenvalues = list(d["spectrum"]["eigenvalues"])
        report.multiplicities = list(d["spectrum"]["multiplicities"])
    if "flags" in d:
        f = d["flags"]
        report.flags = ClassificationFlags(
            walk_regular=f["walk_regular"],
            h_punctual=tuple(f["h_punctually_walk_regular"]),
            distance_regular=f["distance_regular"],
            distance_polynomial=f["distance_polynomial"],
            quotient_polynomial=f["quotient_polynomial"],
            orbit_polynomial=f["orbit_polynomial"],
            distance_polys=(tuple(_poly_from_json(p)
                                  for p in f["distance_polynomials"])
                            if f["distance_polynomials"] is not None else None),
        )
        if report.quotient is not None:
            report.quotient.flags = report.flags
    if "scheme" in d:
        s = d["scheme"]
        mats = tuple(
            [flat[i * n:(i + 1) * n] for i in range(n)] for flat in s["classes"])
        report.scheme = AssociationScheme(
            classes=mats,
            intersection_numbers=tuple(
                tuple(tuple(row) for row in pk)
                for pk in s["intersection_numbers"]))
        report.scheme_generates = s["generates"]
    if "orbits" in d:
        o = d["orbits"]
        report.orbit = OrbitResult(
            num_automorphisms=o["num_automorphisms"],
            num_orbits=o["num_orbits"],
            orbit_polynomial=o["orbit_polynomial"])
    return report


# --- census ----------------------------------------------------------------

def census(lines, options: AnalysisOptions = AnalysisOptions()):
    """Analyze a stream of graph6 lines; yields one record per parsed line.

    Disconnected graphs are counted and skipped; malformed lines are logged
    and processing continues. The trailing record carries the summary.
    """
    from .formats import parse_graph6
    records = []
    skipped_disconnected = 0
    parse_errors = 0
    flag_counts: dict[str, int] = {}
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            g = parse_graph6(line)
        except Exception as e:
            parse_errors += 1
            log.error("line %d: %s", lineno, e)
            continue
        report = analyze(g, options)
        if report.error is not None:
            skipped_disconnected += 1
            continue
        f = report.flags
        rec = {
            "line": lineno,
            "graph6": line.strip(),
            "n": report.n,
            "d": report.quotient.d,
            "r": report.quotient.r,
            "D": report.diameter,
            "walk_regular": f.walk_regular,
            "distance_regular": f.distance_regular,
            "distance_polynomial": f.distance_polynomial,
            "quotient_polynomial": f.quotient_polynomial,
            "orbit_polynomial": f.orbit_polynomial,
        }
        for key in ("walk_regular", "distance_regular", "distance_polynomial",
                    "quotient_polynomial"):
            if rec[key]:
                flag_counts[key] = flag_counts.get(key, 0) + 1
        records.append(rec)
    summary = {
        "graphs": len(records),
        "skipped_disconnected": skipped_disconnected,
        "parse_errors": parse_errors,
        "flag_counts": flag_counts,
    }
    return records, summary
