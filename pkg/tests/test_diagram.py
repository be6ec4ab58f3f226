import pytest

from ktgspin.diagram.faces import faces, genus, sign_for_rotation
from ktgspin.diagram.isomorphism import diagram_hash, is_isomorphic
from ktgspin.diagram.surgery import (
    abstract_graph,
    complement_is_closed,
    complement_is_single_cycle,
    constituent_cycles,
    cut_edge,
    cut_edge_of,
    extract_subdiagram,
    mirror,
    reglue,
    reverse_edge,
)
from ktgspin.diagram.validate import validate
from ktgspin.errors import (
    BrokenDiagramError,
    KtgInputError,
    NonClosedSubgraphError,
    NotBrokenError,
    PositionError,
    UnknownEdgeError,
)
from ktgspin.io.ktg_format import parse
from ktgspin.models.diagram import Arc, Diagram, Edge, Node, NodeKind, Slot

from .conftest import CORPUS, K4, fixture_path


# ---------------- 校验 ----------------
@pytest.mark.parametrize("name", CORPUS)
def test_corpus_is_valid(load_fixture, name):
    assert validate(load_fixture(name)).ok


def test_validate_reports_violations():
    d = Diagram.build(
        nodes=[Node("x1", NodeKind.CROSSING, 0)],
        arcs=[Arc("a1", Slot("x1", "oo"), Slot("x1", "oi"))],
        edges=[Edge("k", ("a1",))],
    )
    codes = validate(d).codes()
    assert "bad sign" in codes
    assert "slot unused" in codes


def test_validate_arc_in_two_edges(planar_theta):
    d = Diagram.build(
        nodes=planar_theta.nodes,
        arcs=planar_theta.arcs,
        edges=[Edge("e1", ("a1",)), Edge("e2", ("a2", "a1")), Edge("e3", ("a3",))],
    )
    assert "arc in several edges" in validate(d).codes()


# ---------------- 面与亏格 ----------------
def test_planar_theta_faces(planar_theta):
    found = {frozenset(face) for face in faces(planar_theta)}
    assert found == {
        frozenset({("a1", True), ("a3", False)}),
        frozenset({("a2", True), ("a1", False)}),
        frozenset({("a3", True), ("a2", False)}),
    }
    assert genus(planar_theta) == 0


def test_trefoil_faces(trefoil):
    sizes = sorted(len(face) for face in faces(trefoil))
    assert sizes == [2, 2, 2, 3, 3]
    assert genus(trefoil) == 0


def test_figure_eight_is_planar(load_fixture):
    d = load_fixture("figure-eight")
    assert len(faces(d)) == 6
    assert genus(d) == 0


def test_wrong_sign_gives_nonplanar_code():
    text = fixture_path("trefoil").read_text(encoding="utf-8").replace("crossing x1 +1", "crossing x1 -1")
    d = parse(text)
    assert validate(d).ok
    assert len(faces(d)) == 3
    assert genus(d) == 1


def test_sign_for_rotation():
    assert sign_for_rotation(["oo", "uo", "oi", "ui"]) == 1
    assert sign_for_rotation(["oi", "ui", "oo", "uo"]) == 1
    assert sign_for_rotation(["oo", "ui", "oi", "uo"]) == -1
    with pytest.raises(ValueError):
        sign_for_rotation(["oo", "oi", "ui", "uo"])


# ---------------- 组成圈 ----------------
def test_theta_constituents(planar_theta):
    assert constituent_cycles(planar_theta) == [("e1", "e2"), ("e1", "e3"), ("e2", "e3")]


def test_k4_constituents():
    cycles = constituent_cycles(parse(K4))
    assert len(cycles) == 7
    assert sum(1 for c in cycles if len(c) == 3) == 4
    assert sum(1 for c in cycles if len(c) == 4) == 3


def test_knot_constituent(trefoil):
    assert constituent_cycles(trefoil) == [("k",)]


def test_handcuff_graph(handcuff):
    graph = abstract_graph(handcuff)
    assert graph.number_of_edges() == 3
    assert constituent_cycles(handcuff) == [("l1",), ("l2",)]
    assert complement_is_closed(handcuff, "bar")
    assert not complement_is_closed(handcuff, "l1")
    assert not complement_is_single_cycle(handcuff, "bar")


def test_complement_single_cycle(planar_theta):
    assert all(complement_is_single_cycle(planar_theta, e) for e in ("e1", "e2", "e3"))


# ---------------- 切边与粘合 ----------------
def test_cut_and_reglue(planar_theta):
    broken = cut_edge(planar_theta, "e2")
    assert broken.is_broken
    assert len(broken.endpoints) == 2
    assert validate(broken).ok
    assert cut_edge_of(broken) == "e2"
    assert reglue(broken) == planar_theta


@pytest.mark.parametrize("name, edge", [("trefoil", "k"), ("unknot", "k"), ("granny-theta", "e1")])
def test_reglue_restores_diagram(load_fixture, name, edge):
    d = load_fixture(name)
    chain = d.edge_map[edge].arcs
    for position in range(len(chain)):
        broken = cut_edge(d, edge, position)
        assert validate(broken).ok
        assert is_isomorphic(reglue(broken), d)


def test_cut_errors(planar_theta):
    with pytest.raises(UnknownEdgeError):
        cut_edge(planar_theta, "zz")
    with pytest.raises(PositionError):
        cut_edge(planar_theta, "e1", 1)
    broken = cut_edge(planar_theta, "e1")
    with pytest.raises(BrokenDiagramError):
        cut_edge(broken, "e2")
    with pytest.raises(BrokenDiagramError):
        constituent_cycles(broken)
    with pytest.raises(NotBrokenError):
        reglue(planar_theta)


# ---------------- 镜像 / 反向 ----------------
def test_mirror(trefoil):
    m = mirror(trefoil)
    assert all(c.sign == -1 for c in m.crossings)
    assert validate(m).ok
    assert genus(m) == 0
    assert mirror(m) == trefoil
    assert not is_isomorphic(m, trefoil)


def test_reverse_edge(trefoil):
    r = reverse_edge(trefoil, "k")
    assert validate(r).ok
    assert genus(r) == 0
    # 反转整个纽结时每个交叉被经过两次，符号不变
    assert [c.sign for c in r.crossings] == [1, 1, 1]
    assert reverse_edge(r, "k") == trefoil


# ---------------- 子图抽取 ----------------
def test_extract_constituent_of_theta(planar_theta):
    sub = extract_subdiagram(planar_theta, ["e1", "e2"])
    assert sub.vertices == []
    assert len(sub.edges) == 1
    assert sub.arcs[0].is_free_loop
    assert validate(sub).ok


def test_extract_trefoil_from_chord_theta(load_fixture):
    d = load_fixture("trefoil-chord-theta")
    knot = extract_subdiagram(d, ["e2", "e3"])
    assert knot.crossing_count == 3
    assert knot.vertices == []
    assert validate(knot).ok
    assert genus(knot) == 0
    for other in (["e1", "e2"], ["e1", "e3"]):
        assert extract_subdiagram(d, other).crossing_count == 0


def test_extract_errors(planar_theta):
    with pytest.raises(NonClosedSubgraphError):
        extract_subdiagram(planar_theta, ["e1"])
    with pytest.raises(KtgInputError):
        extract_subdiagram(planar_theta, [])


# ---------------- 同构 ----------------
def test_isomorphism_ignores_identifiers(planar_theta):
    renamed = parse(
        """\
ktg v1
vertex left (+b7 +b8 +b9)
vertex right (-b7 -b9 -b8)
edge top = b7
edge mid = b8
edge low = b9
"""
    )
    assert is_isomorphic(planar_theta, renamed)
    assert diagram_hash(planar_theta) == diagram_hash(renamed)


def test_isomorphism_respects_cyclic_order(planar_theta):
    # 改变一个顶点的循环顺序
    other = parse(
        """\
ktg v1
vertex u (+a1 +a2 +a3)
vertex v (-a1 -a2 -a3)
edge e1 = a1
edge e2 = a2
edge e3 = a3
"""
    )
    assert not is_isomorphic(planar_theta, other)
