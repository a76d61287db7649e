"""The assembled property battery at reduced caps (the full-cap run is the
acceptance suite's job)."""

from edge_ideal_lab.battery import (
    corpus_graphs,
    ideals_equal_on_box,
    membership_mask,
    run_battery,
)
from edge_ideal_lab.graphs import Graph, edge_ideal


def test_membership_mask_matches_contains():
    from itertools import product

    from edge_ideal_lab.monomials import Monomial

    ideal = edge_ideal(Graph.cycle(3)).power(2)
    bounds = (3, 3, 3)
    mask = membership_mask(ideal, bounds)
    for a in product(range(4), repeat=3):
        assert mask[a] == ideal.contains(Monomial(ideal.vset, a))


def test_mask_equality_agrees_with_canonical_equality():
    i = edge_ideal(Graph.cycle(4))
    assert ideals_equal_on_box(i.power(2), i.power(2))
    assert not ideals_equal_on_box(i.power(2), i.power(3))
    colon = i.power(3).colon(i)
    assert ideals_equal_on_box(colon, i.power(2)) == (colon == i.power(2))


def test_corpus_counts():
    # labeled connected graphs without isolated vertices: 1, 4, 38 on 2..4 vertices
    assert len(corpus_graphs(4)) == 1 + 4 + 38


def test_run_battery_small_caps():
    results = run_battery(max_vertices=4, max_power=2, samples=4)
    failures = [(n, d) for n, p, d in results if not p]
    assert not failures, failures[:5]
