"""Smoke tests for the ecclab extension module."""

import pytest

import ecclab


def test_multipartite_energy():
    g = ecclab.complete_multipartite([2, 3])
    assert g.order == 5
    assert g.size == 6
    eps = ecclab.eccentricity_matrix(g)
    assert ecclab.energy(eps) == pytest.approx(12.0, abs=1e-9)


def test_edge_deletion_closed_form_matches_numeric():
    g = ecclab.delete_edge(ecclab.complete_multipartite([2, 3]), 0, 2)
    numeric = ecclab.eigenvalues(ecclab.eccentricity_matrix(g))
    closed = ecclab.kmn_minus_e_spectrum(2, 3)
    assert closed["energy"] == pytest.approx(13.8486879840, abs=1e-8)
    for a, b in zip(sorted(numeric), sorted(closed["values"])):
        assert a == pytest.approx(b, abs=1e-8)


def test_graph6_round_trip():
    g = ecclab.parse_graph6("E~~w")
    assert g.order == 6
    assert g.size == 15
    assert ecclab.encode_graph6(g) == "E~~w"
    with pytest.raises(ValueError):
        ecclab.parse_graph6("A_X")


def test_compare_report():
    k6 = ecclab.complete_multipartite([1, 1, 1, 1, 1, 1])
    r = ecclab.compare_edge_deletion(k6, 0, 1)
    assert r["eps_before"] == pytest.approx(10.0, abs=1e-9)
    assert r["eps_after"] == pytest.approx(10.7445626465, abs=1e-8)
    assert r["eps_class"] == "increase"


def test_search_finds_triangle_increase():
    hits = ecclab.search_corpus("Bw\n", "eps-increase")
    assert len(hits) == 3  # every edge of K3 works
    assert hits[0]["graph_id"] == "Bw"


def test_equitable_quotient():
    g = ecclab.delete_edge(ecclab.complete_multipartite([3, 4]), 0, 3)
    eps = ecclab.eccentricity_matrix(g)
    blocks = [[0], [1, 2], [3], [4, 5, 6]]
    assert ecclab.is_equitable(eps, blocks)
    assert ecclab.quotient_matrix(eps, blocks) == ecclab.quotient_Qpi(3, 4)
    assert ecclab.coarsest_equitable(eps) == blocks
    assert ecclab.spectrum_containment(eps, blocks)


def test_verify_runs():
    results = ecclab.verify("lemma1")
    assert results[0]["pass"] is True


def test_enumeration_counts():
    assert len(ecclab.connected_graphs(6)) == 112
    assert len(ecclab.nonisomorphic_trees(7)) == 11


def test_disconnected_rejected():
    g = ecclab.Graph(2)
    with pytest.raises(ValueError):
        ecclab.distance_matrix(g)
