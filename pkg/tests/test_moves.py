import pytest

from ktgspin.algebra.gfamily import associated_quandle, dihedral_gfamily
from ktgspin.algebra.quandle import dihedral_quandle
from ktgspin.coloring.solver import enumerate_colorings
from ktgspin.diagram.faces import faces, genus
from ktgspin.diagram.isomorphism import is_isomorphic
from ktgspin.diagram.validate import validate
from ktgspin.errors import MoveSiteError
from ktgspin.moves.patterns import Move, MoveKind, applicable_moves, is_applicable
from ktgspin.moves.rewrite import apply_move

from .conftest import CORPUS

Q3 = associated_quandle(dihedral_gfamily(3))


def kinds(moves):
    return {m.kind for m in moves}


def first_of(d, kind):
    return next(m for m in applicable_moves(d) if m.kind is kind)


# ---------------- Move 文本 ----------------
def test_move_text():
    m = Move.parse("R2+@a1,+,a3,-")
    assert m.kind is MoveKind.R2_PLUS
    assert m.site == ("a1", "+", "a3", "-")
    assert str(m) == "R2+@a1,+,a3,-"
    assert Move.parse(" R1-@x1 ") == Move(MoveKind.R1_MINUS, ("x1",))


@pytest.mark.parametrize("text", ["R9@x1", "R1-", "R1-@x1,x2", "VTWIST+@u,0"])
def test_move_text_errors(text):
    with pytest.raises(MoveSiteError):
        Move.parse(text)


def test_crossing_delta():
    assert MoveKind.R2_PLUS.crossing_delta == 2
    assert MoveKind.R3.crossing_delta == 0
    assert MoveKind.VSLIDE_MINUS.crossing_delta == -1
    assert MoveKind.R1_PLUS.is_insertion
    assert not MoveKind.MNCC.is_insertion


# ---------------- 模式匹配 ----------------
def test_planar_theta_moves(planar_theta):
    moves = applicable_moves(planar_theta)
    assert kinds(moves) == {MoveKind.R2_PLUS, MoveKind.VTWIST_PLUS}
    assert sum(1 for m in moves if m.kind is MoveKind.VTWIST_PLUS) == 12
    assert sum(1 for m in moves if m.kind is MoveKind.R2_PLUS) == 6
    assert Move(MoveKind.R2_PLUS, ("a1", "+", "a3", "-")) in moves
    assert applicable_moves(planar_theta) == moves


def test_kink_has_r1_minus(kink_unknot):
    moves = applicable_moves(kink_unknot)
    assert [m for m in moves if m.kind is MoveKind.R1_MINUS] == [Move(MoveKind.R1_MINUS, ("x1",))]


def test_trefoil_has_no_reducing_moves(trefoil):
    found = kinds(applicable_moves(trefoil))
    assert MoveKind.R1_MINUS not in found
    assert MoveKind.R2_MINUS not in found
    assert MoveKind.R3 not in found


def test_kinks_only_on_request(trefoil):
    assert MoveKind.R1_PLUS not in kinds(applicable_moves(trefoil))
    with_kinks = [m for m in applicable_moves(trefoil, use_kinks=True) if m.kind is MoveKind.R1_PLUS]
    assert len(with_kinks) == 4 * len(trefoil.arcs)
    designated = [m for m in applicable_moves(trefoil, designated=["a1"]) if m.kind is MoveKind.R1_PLUS]
    assert {m.site[0] for m in designated} == {"a1"}


def test_vertex_moves_near_crossings(load_fixture):
    d = load_fixture("kinoshita-theta")
    found = kinds(applicable_moves(d))
    assert MoveKind.VSLIDE_PLUS in found
    assert MoveKind.VTWIST_PLUS in found


# ---------------- 执行 ----------------
def test_r1_plus_then_minus(load_fixture):
    unknot = load_fixture("unknot")
    kinked = apply_move(unknot, Move.parse("R1+@a1,over,+1"))
    assert kinked.crossing_count == 1
    assert validate(kinked).ok
    assert genus(kinked) == 0
    straight = apply_move(kinked, first_of(kinked, MoveKind.R1_MINUS))
    assert straight.crossing_count == 0
    assert is_isomorphic(straight, unknot)


def test_r1_minus_on_kink(kink_unknot):
    result = apply_move(kink_unknot, Move.parse("R1-@x1"))
    assert result.crossing_count == 0
    assert result.arcs[0].is_free_loop


def test_r2_plus_then_minus(planar_theta):
    pushed = apply_move(planar_theta, Move.parse("R2+@a1,+,a3,-"))
    assert pushed.crossing_count == 2
    assert validate(pushed).ok
    assert genus(pushed) == 0
    assert sorted(c.sign for c in pushed.crossings) == [-1, 1]
    back = apply_move(pushed, first_of(pushed, MoveKind.R2_MINUS))
    assert is_isomorphic(back, planar_theta)


def test_vtwist_plus_then_minus(planar_theta):
    twisted = apply_move(planar_theta, Move.parse("VTWIST+@u,0,1"))
    assert twisted.crossing_count == 1
    assert validate(twisted).ok
    assert genus(twisted) == 0
    assert is_applicable(twisted, first_of(twisted, MoveKind.VTWIST_MINUS))
    back = apply_move(twisted, first_of(twisted, MoveKind.VTWIST_MINUS))
    assert is_isomorphic(back, planar_theta)


def test_vslide_plus_then_minus(load_fixture):
    d = load_fixture("kinoshita-theta")
    slide = first_of(d, MoveKind.VSLIDE_PLUS)
    slid = apply_move(d, slide)
    assert slid.crossing_count == d.crossing_count + 1
    assert validate(slid).ok
    assert genus(slid) == 0
    minus = [m for m in applicable_moves(slid) if m.kind is MoveKind.VSLIDE_MINUS]
    assert minus
    assert any(is_isomorphic(apply_move(slid, m), d) for m in minus)


def test_r3_keeps_crossing_count(planar_theta):
    # 两次 R2+ 得到三角形面后寻找 R3
    d = apply_move(planar_theta, Move.parse("R2+@a1,+,a3,-"))
    for m in applicable_moves(d):
        if m.kind is not MoveKind.R2_PLUS:
            continue
        candidate = apply_move(d, m)
        r3 = [x for x in applicable_moves(candidate) if x.kind is MoveKind.R3]
        if r3:
            result = apply_move(candidate, r3[0])
            assert result.crossing_count == candidate.crossing_count
            assert validate(result).ok
            assert genus(result) == 0
            return
    pytest.skip("no R3 site reachable by two R2+ insertions")


def test_stale_site_rejected(kink_unknot):
    with pytest.raises(MoveSiteError):
        apply_move(kink_unknot, Move.parse("R2-@x1,x2"))
    with pytest.raises(MoveSiteError):
        apply_move(kink_unknot, Move.parse("R1+@zz,over,+1"))


def test_mncc_changes_crossing(trefoil):
    changed = apply_move(trefoil, Move.parse("MNCC@x1"))
    x1 = changed.node_map["x1"]
    assert x1.sign == -1
    assert changed.strand_arcs("x1", over=True) == ("a3", "a4")
    assert genus(changed) == 0


# ---------------- 染色数不变 ----------------
def _assert_invariant(d, q, moves):
    expected = enumerate_colorings(d, q, list_limit=0).count
    for m in moves:
        result = apply_move(d, m)
        assert validate(result).ok, str(m)
        assert genus(result) == 0, str(m)
        assert enumerate_colorings(result, q, list_limit=0).count == expected, str(m)


def test_moves_preserve_theta_colorings(planar_theta):
    _assert_invariant(planar_theta, Q3, applicable_moves(planar_theta))


def test_moves_preserve_trefoil_colorings(trefoil):
    _assert_invariant(trefoil, dihedral_quandle(3), applicable_moves(trefoil, designated=["a1", "a4"]))


@pytest.mark.parametrize("name", CORPUS)
def test_every_corpus_move_preserves_colorings(load_fixture, name):
    d = load_fixture(name)
    moves = applicable_moves(d, designated=[d.arcs[0].id])
    assert moves
    _assert_invariant(d, Q3, moves)


# ---------------- 自由圈 ----------------
def test_free_loop_self_r2(load_fixture):
    unknot = load_fixture("unknot")
    moves = applicable_moves(unknot)
    assert [str(m) for m in moves] == ["R2+@a1,+,a1,+", "R2+@a1,-,a1,-"]
    for m in moves:
        pushed = apply_move(unknot, m)
        assert pushed.crossing_count == 2
        assert validate(pushed).ok
        assert genus(pushed) == 0
        assert sorted(len(face) for face in faces(pushed)) == [1, 1, 2, 4]
        found = kinds(applicable_moves(pushed))
        assert {MoveKind.R1_MINUS, MoveKind.R2_MINUS} <= found
        back = apply_move(pushed, next(x for x in applicable_moves(pushed) if x.kind is MoveKind.R2_MINUS))
        assert is_isomorphic(back, unknot)
