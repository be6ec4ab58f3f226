import pytest

from ktgspin.diagram.surgery import cut_edge, reglue
from ktgspin.diagram.validate import validate
from ktgspin.errors import NotBrokenError
from ktgspin.moves.mn import mn_endpoint_descend, mn_endpoint_descend_with_record


def _over_arcs(d, crossing):
    node_arcs = d.strand_arcs(crossing, over=True)
    return set(node_arcs)


def test_planar_theta_unchanged(planar_theta):
    b = cut_edge(planar_theta, "e1")
    result, changed = mn_endpoint_descend_with_record(b)
    assert changed == ()
    assert result == b


def test_trefoil_chord_cut_middle_edge(load_fixture):
    d = load_fixture("trefoil-chord-theta")
    b = cut_edge(d, "e2")
    result, changed = mn_endpoint_descend_with_record(b)
    assert changed == ("x1", "x2")
    assert validate(result).ok
    e2_arcs = set(result.edge_map["e2"].arcs)
    for crossing in ("x1", "x2", "x3"):
        assert _over_arcs(result, crossing) <= e2_arcs
    assert [result.node_map[x].sign for x in ("x1", "x2", "x3")] == [-1, -1, 1]


def test_trefoil_chord_cut_chord(load_fixture):
    d = load_fixture("trefoil-chord-theta")
    b = cut_edge(d, "e1")
    assert mn_endpoint_descend_with_record(b)[1] == ()


def test_granny_stops_at_first_visit(load_fixture):
    d = load_fixture("granny-theta")
    b = cut_edge(d, "e1")
    result, changed = mn_endpoint_descend_with_record(b)
    assert changed == ("x2",)
    assert result.crossing_count == b.crossing_count
    assert reglue(result).edge_map.keys() == d.edge_map.keys()


def test_descend_is_idempotent(load_fixture):
    for name, edge in (("trefoil-chord-theta", "e2"), ("granny-theta", "e3")):
        b = cut_edge(load_fixture(name), edge)
        once = mn_endpoint_descend(b)
        again, changed = mn_endpoint_descend_with_record(once)
        assert changed == ()
        assert again == once


def test_closed_diagram_rejected(trefoil):
    with pytest.raises(NotBrokenError):
        mn_endpoint_descend(trefoil)


@pytest.mark.parametrize("name", ["planar-theta", "trefoil-chord-theta", "kinoshita-theta", "granny-theta"])
def test_cut_strand_over_on_every_corpus_cut(load_fixture, name):
    d = load_fixture(name)
    for edge in d.edges:
        b = cut_edge(d, edge.id)
        result = mn_endpoint_descend(b)
        cut_arcs = set(result.edge_map[edge.id].arcs)
        for crossing in result.crossings:
            over = set(result.strand_arcs(crossing.id, over=True))
            under = set(result.strand_arcs(crossing.id, over=False))
            if (over | under) <= cut_arcs:
                continue
            if under <= cut_arcs:
                pytest.fail(f"{name}: {edge.id} 在 {crossing.id} 处仍在下方")
        assert mn_endpoint_descend_with_record(result)[1] == ()
