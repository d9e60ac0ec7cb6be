"""Report pipeline, serialization round trip, and census records."""
import json

from quograph import (AnalysisOptions, analyze, build_graph, census,
                      cycle_graph, path_graph, petersen_graph,
                      report_from_dict, report_to_dict, report_to_json,
                      report_to_text)


def test_analyze_flags_and_fields(circ17):
    rpt = analyze(circ17)
    assert rpt.error is None
    assert rpt.quotient.is_quotient_polynomial
    assert rpt.flags.walk_regular and rpt.flags.distance_polynomial
    assert not rpt.flags.distance_regular
    assert rpt.scheme is not None and rpt.scheme_generates
    assert rpt.multiplicities == [1, 4, 4, 4, 4]
    assert rpt.timing is not None and rpt.timing > 0


def test_analyze_disconnected_partial_report():
    rpt = analyze(build_graph(4, [(0, 1), (2, 3)]))
    assert rpt.error is not None and "disconnected" in rpt.error
    assert rpt.quotient is None and rpt.flags is None
    assert rpt.diameter is None


def test_json_round_trip(circ17, y6):
    for g in [circ17, y6, petersen_graph(), path_graph(4)]:
        rpt = analyze(g)
        d1 = report_to_dict(rpt)
        d2 = report_to_dict(report_from_dict(d1))
        assert d1 == d2
        # serialization itself is deterministic
        assert report_to_json(rpt) == json.dumps(d1, indent=2)


def test_json_round_trip_with_orbits():
    rpt = analyze(cycle_graph(6), AnalysisOptions(orbits=True))
    d1 = report_to_dict(rpt)
    assert d1["orbits"]["num_automorphisms"] == 12
    assert report_to_dict(report_from_dict(d1)) == d1


def test_timing_never_serialized(circ17):
    d = report_to_dict(analyze(circ17))
    assert "timing" not in json.dumps(d)


def test_report_text_sections(y6):
    text = report_to_text(analyze(y6))
    assert "quotient-polynomial: False" in text
    assert "distance p2(x)" in text


def test_orbit_pass_skipped_over_cap(caplog):
    # twelve vertices exceeds the default cap; the report survives without
    # an orbit section
    rpt = analyze(cycle_graph(12), AnalysisOptions(orbits=True))
    assert rpt.orbit is None
    assert rpt.flags.orbit_polynomial is None


def test_debug_checks_pass(circ17, y6):
    for g in [circ17, y6, petersen_graph()]:
        rpt = analyze(g, AnalysisOptions(debug_checks=True))
        assert rpt.error is None


def test_census_records():
    lines = ["A_", "Bw", "garbage\x01", "B?"]
    records, summary = census(lines)
    assert summary["graphs"] == 2
    assert summary["parse_errors"] == 1
    assert summary["skipped_disconnected"] == 1
    assert summary["flag_counts"]["quotient_polynomial"] == 2
    assert records[0]["n"] == 2 and records[1]["n"] == 3
