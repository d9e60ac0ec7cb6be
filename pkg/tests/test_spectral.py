"""Numeric spectral layer and its agreement with the exact path."""
import numpy as np
import pytest

from quograph import (Polynomial, ToleranceError, Tolerances, b_via_trace,
                      complete_graph, crossed_multiplicities, cycle_graph,
                      decide_quotient_polynomial, global_partition,
                      graph_scalar_product, spectral_decomposition,
                      spectrum_partition)

from worked_examples import CIRC17_BT, CIRC17_EIGS, Y6_SPECTRUM


def test_spectrum_complete_graph():
    sd = spectral_decomposition(complete_graph(4))
    assert sd.spectrum.eigenvalues == pytest.approx((3.0, -1.0))
    assert sd.spectrum.multiplicities == (1, 3)


def test_spectrum_circulant(circ17):
    sd = spectral_decomposition(circ17)
    assert sd.spectrum.multiplicities == (1, 4, 4, 4, 4)
    for got, want in zip(sd.spectrum.eigenvalues, CIRC17_EIGS):
        assert abs(got - want) < 1e-3


def test_spectrum_y6(y6):
    sd = spectral_decomposition(y6)
    got = list(zip(sd.spectrum.eigenvalues, sd.spectrum.multiplicities))
    for (lam, m), (wl, wm) in zip(got, Y6_SPECTRUM):
        assert abs(lam - wl) < 1e-9 and m == wm


def test_expected_distinct_mismatch_raises(circ17):
    with pytest.raises(ToleranceError):
        spectral_decomposition(circ17, expected_distinct=3)


def test_idempotent_identities(petersen):
    sd = spectral_decomposition(petersen)
    n = petersen.n
    a = np.array(petersen.adjacency_matrix(), dtype=float)
    total = np.zeros((n, n))
    recon = np.zeros((n, n))
    for lam, e in zip(sd.spectrum.eigenvalues, sd.idempotents):
        assert np.allclose(e @ e, e, atol=1e-10)        # idempotent
        assert np.allclose(a @ e, lam * e, atol=1e-10)  # eigenprojection
        total += e
        recon += lam * e
    assert np.allclose(total, np.eye(n), atol=1e-10)    # resolution of I
    assert np.allclose(recon, a, atol=1e-10)            # spectral theorem
    # pairwise orthogonality
    for i in range(len(sd.idempotents)):
        for j in range(i + 1, len(sd.idempotents)):
            assert np.allclose(sd.idempotents[i] @ sd.idempotents[j], 0,
                               atol=1e-10)


def test_crossed_multiplicities_diagonal(circ17):
    sd = spectral_decomposition(circ17)
    mv = crossed_multiplicities(sd, 0, 0)
    # on a vertex-transitive graph m_uu(lambda_j) = m_j / n
    for val, m in zip(mv.values, sd.spectrum.multiplicities):
        assert abs(val - m / circ17.n) < 1e-9
    # same walk class, same m-vector
    mv1 = crossed_multiplicities(sd, 0, 1)
    mv4 = crossed_multiplicities(sd, 0, 4)
    assert np.allclose(mv1.values, mv4.values, atol=1e-9)


def test_spectrum_partition_matches_walk_partition(circ17, y6, petersen):
    for g in [circ17, y6, petersen, cycle_graph(6)]:
        sd = spectral_decomposition(g)
        assert spectrum_partition(g, sd) == global_partition(g).as_setpartition()


def test_spectrum_partition_huge_tol_collapses(petersen):
    # with an absurd tolerance every pair joins the first group
    sd = spectral_decomposition(petersen)
    assert len(spectrum_partition(petersen, sd, tol=10.0)) == 1


def test_spectrum_partition_ambiguous_tol_raises():
    # P4 has walk classes whose m-vectors sit between two others in the
    # Chebyshev metric; a tolerance straddling those gaps must refuse to guess
    from quograph import path_graph
    g = path_graph(4)
    sd = spectral_decomposition(g)
    mats = np.stack(sd.idempotents, axis=-1).reshape(16, -1)
    reps = np.unique(np.round(mats, 9), axis=0)
    gaps = sorted({float(np.max(np.abs(a - b)))
                   for i, a in enumerate(reps) for b in reps[i + 1:]})
    tol = (gaps[0] + gaps[-1]) / 2  # larger than some gaps, smaller than others
    with pytest.raises(ToleranceError):
        spectrum_partition(g, sd, tol=tol)


def test_scalar_product(circ17):
    sd = spectral_decomposition(circ17)
    one = Polynomial.of([1])
    x = Polynomial.of([0, 1])
    assert graph_scalar_product(circ17, sd.spectrum, one, one) == pytest.approx(1.0)
    # <x,x> = (1/n) tr(A^2) = degree for a regular graph
    assert graph_scalar_product(circ17, sd.spectrum, x, x) == pytest.approx(4.0)


def test_quotient_polynomials_are_orthogonal(circ17):
    rep = decide_quotient_polynomial(circ17)
    sd = spectral_decomposition(circ17)
    for i in range(5):
        for j in range(5):
            val = graph_scalar_product(circ17, sd.spectrum,
                                       rep.polynomials[i], rep.polynomials[j])
            if i != j:
                assert abs(val) < 1e-9
            else:
                assert val > 0


def test_b_via_trace_known_entries(circ17):
    rep = decide_quotient_polynomial(circ17)
    assert b_via_trace(circ17, rep.polynomials, 1, 0) == pytest.approx(4.0)
    assert b_via_trace(circ17, rep.polynomials, 4, 4) == pytest.approx(2.0)
    assert b_via_trace(circ17, rep.polynomials, 2, 0) == pytest.approx(0.0)


def test_b_via_trace_recovers_bt(circ17):
    rep = decide_quotient_polynomial(circ17)
    for i in range(5):
        for j in range(5):
            got = b_via_trace(circ17, rep.polynomials, i, j)
            assert abs(got - CIRC17_BT[i][j]) < 1e-9


def test_tolerances_with_base():
    t = Tolerances.with_base(1e-5)
    assert t.eig_gap_rel == 1e-5 and t.pair_match == 1e-5
