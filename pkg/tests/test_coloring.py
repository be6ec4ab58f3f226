import itertools
import math
import re

import pytest

from ktgspin.algebra.gfamily import associated_quandle, dihedral_gfamily, trivial_gfamily
from ktgspin.algebra.quandle import dihedral_quandle
from ktgspin.coloring.fox import find_fox_coloring, fox_colorings
from ktgspin.coloring.lift import complement_of_cut, lift_fox_to_spin
from ktgspin.coloring.solver import check_coloring, enumerate_colorings, is_trivial_coloring
from ktgspin.diagram.isomorphism import is_isomorphic
from ktgspin.diagram.surgery import cut_edge, extract_subdiagram
from ktgspin.errors import ColoringInputError
from ktgspin.io.ktg_format import parse, serialize
from ktgspin.models.dataclasses import Coloring
from ktgspin.moves.mn import mn_endpoint_descend

from .conftest import CORPUS


def brute_force_count(d, q, carrier=0):
    """逐个检查全部赋值"""
    arcs = [a.id for a in d.arcs]
    total = 0
    for values in itertools.product(range(q.size), repeat=len(arcs)):
        if not check_coloring(d, q, Coloring.from_dict(dict(zip(arcs, values)), carrier)):
            total += 1
    return total


def over_arc_fox_count(k, n):
    """先按上股合并弧段，再枚举每个经典弧的颜色"""
    parent = {a.id: a.id for a in k.arcs}

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for c in k.crossings:
        over_in, over_out = k.strand_arcs(c.id, over=True)
        parent[find(over_out)] = find(over_in)
    classes = sorted({find(a.id) for a in k.arcs})
    total = 0
    for values in itertools.product(range(n), repeat=len(classes)):
        color = dict(zip(classes, values))
        ok = True
        for c in k.crossings:
            over_in, _ = k.strand_arcs(c.id, over=True)
            under_in, under_out = k.strand_arcs(c.id, over=False)
            if (color[find(under_in)] + color[find(under_out)] - 2 * color[find(over_in)]) % n:
                ok = False
                break
        total += ok
    return total


# ---------------- 关联 quandle 染色 ----------------
def test_planar_theta_dihedral_colorings(planar_theta):
    q = associated_quandle(dihedral_gfamily(3))
    result = enumerate_colorings(planar_theta, q)
    assert result.count == 12
    assert result.count == brute_force_count(planar_theta, q, q.carrier_size)
    for coloring in result.colorings:
        assert check_coloring(planar_theta, q, coloring) == []


def test_trefoil_associated_colorings(trefoil):
    q = associated_quandle(dihedral_gfamily(3))
    # G 分量为 0 时 3 个常值染色，为 1 时 9 个 Fox 3-染色
    assert enumerate_colorings(trefoil, q).count == 12
    assert enumerate_colorings(trefoil, associated_quandle(trivial_gfamily(3))).count == 6


@pytest.mark.parametrize("n", [2, 3, 5])
def test_unknot_colorings(load_fixture, n):
    q = associated_quandle(dihedral_gfamily(n))
    assert enumerate_colorings(load_fixture("unknot"), q).count == 2 * n


@pytest.mark.parametrize("n", [2, 3, 5, 7])
@pytest.mark.parametrize("name", ["unknot", "trefoil", "figure-eight"])
def test_associated_count_is_fox_plus_constants(load_fixture, name, n):
    k = load_fixture(name)
    q = associated_quandle(dihedral_gfamily(n))
    assert enumerate_colorings(k, q, list_limit=0).count == fox_colorings(k, n).count + n


def test_trefoil_dihedral_quandle_matches_oracle(trefoil):
    q = dihedral_quandle(3)
    result = enumerate_colorings(trefoil, q)
    assert result.count == 9
    assert brute_force_count(trefoil, q) == 9
    assert sum(1 for c in result.colorings if is_trivial_coloring(c)) == 3


def test_figure_eight_dihedral_quandle(load_fixture):
    d = load_fixture("figure-eight")
    assert enumerate_colorings(d, dihedral_quandle(5)).count == 25
    assert enumerate_colorings(d, dihedral_quandle(3)).count == 3


def test_boundary_conditions(trefoil):
    q = dihedral_quandle(3)
    assert enumerate_colorings(trefoil, q, boundary={"a1": 0}).count == 3
    # a6 与 a1 是同一上股
    assert enumerate_colorings(trefoil, q, boundary={"a1": 0, "a6": 1}).count == 0
    with pytest.raises(ColoringInputError):
        enumerate_colorings(trefoil, q, boundary={"zz": 0})
    with pytest.raises(ColoringInputError):
        enumerate_colorings(trefoil, q, boundary={"a1": 3})


def test_list_limit(trefoil):
    result = enumerate_colorings(trefoil, dihedral_quandle(3), list_limit=2)
    assert result.count == 9
    assert len(result.colorings) == 2


def test_check_coloring_reports_node(trefoil):
    q = dihedral_quandle(3)
    values = {"a1": 0, "a2": 1, "a3": 1, "a4": 2, "a5": 2, "a6": 0}
    assert check_coloring(trefoil, q, Coloring.from_dict(values)) == []
    values["a4"] = 1
    violations = check_coloring(trefoil, q, Coloring.from_dict(values))
    assert {v.node for v in violations} >= {"x1", "x2"}


def test_check_coloring_input_errors(planar_theta, trefoil):
    with pytest.raises(ColoringInputError):
        check_coloring(trefoil, dihedral_quandle(3), Coloring.from_dict({"a1": 0}))
    with pytest.raises(ColoringInputError):
        enumerate_colorings(planar_theta, dihedral_quandle(3))


def test_vertex_violation(planar_theta):
    q = associated_quandle(dihedral_gfamily(3))
    bad = Coloring.from_dict({"a1": q.element(0, 1), "a2": q.element(0, 0), "a3": q.element(1, 0)}, 3)
    rules = {v.rule for v in check_coloring(planar_theta, q, bad)}
    assert rules == {"vertex-x", "vertex-g"}


# ---------------- Fox 染色 ----------------
@pytest.mark.parametrize(
    "name, n, count",
    [("trefoil", 2, 2), ("trefoil", 3, 9), ("trefoil", 5, 5), ("figure-eight", 3, 3), ("figure-eight", 5, 25)],
)
def test_fox_counts(load_fixture, name, n, count):
    k = load_fixture(name)
    result = fox_colorings(k, n)
    assert result.count == count
    assert result.nontrivial == (count > n)
    assert over_arc_fox_count(k, n) == count


@pytest.mark.parametrize("name, determinant", [("trefoil", 3), ("figure-eight", 5)])
def test_fox_invariant_factors(load_fixture, name, determinant):
    factors = fox_colorings(load_fixture(name), 7).invariant_factors
    assert factors.count(0) == 1
    assert math.prod(f for f in factors if f) == determinant


def test_fox_free_parameters(trefoil):
    assert fox_colorings(trefoil, 3).free_parameters == 2
    assert fox_colorings(trefoil, 2).free_parameters == 1


def test_fox_on_free_loop(load_fixture):
    result = fox_colorings(load_fixture("unknot"), 7)
    assert result.count == 7
    assert result.invariant_factors == ()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_granny_knot_fox_counts(load_fixture, n):
    knot = extract_subdiagram(load_fixture("granny-theta"), ["e2", "e3"])
    assert knot.vertices == []
    assert fox_colorings(knot, n).count == over_arc_fox_count(knot, n)
    if n == 3:
        assert fox_colorings(knot, n).count == 27


def test_fox_input_errors(planar_theta, trefoil):
    with pytest.raises(ColoringInputError):
        fox_colorings(planar_theta, 3)
    with pytest.raises(ColoringInputError):
        fox_colorings(trefoil, 1)


def test_find_fox_coloring(trefoil):
    witness = find_fox_coloring(trefoil, 3)
    assert witness is not None
    assert check_coloring(trefoil, dihedral_quandle(3), witness) == []
    assert witness.x_values() == {0, 1, 2}
    assert find_fox_coloring(trefoil, 5) is None
    constant = find_fox_coloring(trefoil, 2, nontrivial=False)
    assert constant is not None and is_trivial_coloring(constant)


# ---------------- 提升 ----------------
def test_lift_on_trefoil_chord(load_fixture):
    d = load_fixture("trefoil-chord-theta")
    broken = mn_endpoint_descend(cut_edge(d, "e1"))
    cut, complement, _ = complement_of_cut(broken)
    assert cut == "e1"
    assert complement.crossing_count == 3
    fox = find_fox_coloring(complement, 3)
    lift = lift_fox_to_spin(broken, fox, 3)
    q = associated_quandle(dihedral_gfamily(3))
    assert check_coloring(broken, q, lift) == []
    assert not is_trivial_coloring(lift)
    cut_arcs = set(broken.edge_map["e1"].arcs)
    for arc in broken.arcs:
        assert lift.pair(arc.id)[1] == (0 if arc.id in cut_arcs else 1)


def test_lift_on_granny(load_fixture):
    broken = mn_endpoint_descend(cut_edge(load_fixture("granny-theta"), "e1"))
    _, complement, _ = complement_of_cut(broken)
    lift = lift_fox_to_spin(broken, find_fox_coloring(complement, 3), 3)
    assert check_coloring(broken, associated_quandle(dihedral_gfamily(3)), lift) == []
    assert not is_trivial_coloring(lift)


def renamed_copy(d):
    """给弧、交叉与图边标识符加前缀，结构不变"""
    header, *body = serialize(d).splitlines()
    body = [re.sub(r"\b([a-z]\d+)\b", r"q\1", line) for line in body if not line.startswith(("name ", "source "))]
    return parse("\n".join([header, *body]) + "\n")


@pytest.mark.parametrize("name", CORPUS)
def test_counts_ignore_identifiers(load_fixture, name):
    d = load_fixture(name)
    copy = renamed_copy(d)
    assert {a.id for a in copy.arcs}.isdisjoint(a.id for a in d.arcs)
    assert is_isomorphic(d, copy)
    for n in (3, 5):
        q = associated_quandle(dihedral_gfamily(n))
        assert enumerate_colorings(copy, q).count == enumerate_colorings(d, q).count
