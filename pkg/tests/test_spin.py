import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from ktgspin.algebra.gfamily import associated_quandle, dihedral_gfamily
from ktgspin.coloring.solver import check_coloring, is_trivial_coloring
from ktgspin.config import SpinOptions, Verdict
from ktgspin.errors import NonClosedSubgraphError, UnknownEdgeError
from ktgspin.moves.patterns import MoveKind, applicable_moves
from ktgspin.moves.rewrite import apply_move
from ktgspin.moves.search import replay_trace
from ktgspin.spin.classifier import (
    TAG_FOX_LIFT,
    TAG_NONE,
    TAG_UNKNOTTED_COMPLEMENT,
    classify_spin,
)
from ktgspin.spin.survey import all_spins

FAST = SpinOptions(n_range=(2, 3), budget=500)


@pytest.fixture
def chord_theta(load_fixture):
    return load_fixture("trefoil-chord-theta")


def test_chord_is_knotted(chord_theta):
    c = classify_spin(chord_theta, "e1", FAST)
    assert c.verdict is Verdict.KNOTTED
    assert c.theorem == TAG_FOX_LIFT
    assert c.twist == 1
    assert c.diagnostics.fox_counts == ((2, 2), (3, 9))
    witness = c.knotted
    assert witness.n == 3
    assert witness.fox_result.count == 9
    q = associated_quandle(dihedral_gfamily(3))
    assert check_coloring(witness.broken, q, witness.lift) == []
    assert not is_trivial_coloring(witness.lift)
    assert c.unknotted is None


def test_mirror_certificate_attached(chord_theta):
    c = classify_spin(chord_theta, "e1", FAST)
    assert c.mirror is not None
    assert c.mirror.twist == -1
    assert c.mirror.verdict is Verdict.KNOTTED
    assert c.mirror.mirror is None

    bare = classify_spin(chord_theta, "e1", FAST.model_copy(update={"with_mirror": False}))
    assert bare.mirror is None


@pytest.mark.parametrize("edge", ["e2", "e3"])
def test_chord_sides_are_unknotted(chord_theta, edge):
    c = classify_spin(chord_theta, edge, FAST)
    assert c.verdict is Verdict.UNKNOTTED
    assert c.theorem == TAG_UNKNOTTED_COMPLEMENT
    assert c.diagnostics.best_crossings == 0
    assert all(count == n for n, count in c.diagnostics.fox_counts)
    assert replay_trace(c.unknotted.trace).crossing_count == 0
    assert c.mirror.verdict is Verdict.UNKNOTTED


def test_descended_crossings_recorded(chord_theta):
    c = classify_spin(chord_theta, "e2", FAST)
    assert c.unknotted.descended == ("x1", "x2")


@pytest.mark.parametrize("position", [0, 1, 2, 3])
def test_verdict_does_not_depend_on_cut(chord_theta, position):
    options = FAST.model_copy(update={"cut_position": position})
    assert classify_spin(chord_theta, "e2", options).verdict is Verdict.UNKNOTTED


def test_unknown_when_evidence_runs_out(chord_theta):
    options = SpinOptions(n_range=(2, 2), budget=5)
    c = classify_spin(chord_theta, "e1", options)
    assert c.verdict is Verdict.UNKNOWN
    assert c.theorem == TAG_NONE
    assert c.diagnostics.fox_counts == ((2, 2),)
    assert c.diagnostics.best_crossings == 3
    assert c.diagnostics.reason
    assert c.knotted is None and c.unknotted is None


def test_cross_check_keeps_knotted(chord_theta):
    options = FAST.model_copy(update={"cross_check": True, "budget": 20, "with_mirror": False})
    c = classify_spin(chord_theta, "e1", options)
    assert c.verdict is Verdict.KNOTTED
    assert c.diagnostics.best_crossings == 3


def test_granny_every_edge_knotted(load_fixture):
    d = load_fixture("granny-theta")
    certificates = all_spins(d, FAST)
    assert [c.edge for c in certificates] == ["e1", "e2", "e3"]
    for c in certificates:
        assert c.verdict is Verdict.KNOTTED
        assert c.knotted.n == 3
        assert c.knotted.fox_result.count == 27


def test_kinoshita_every_edge_unknotted(load_fixture):
    d = load_fixture("kinoshita-theta")
    certificates = all_spins(d, FAST)
    assert [c.verdict for c in certificates] == [Verdict.UNKNOTTED] * 3
    for c in certificates:
        assert c.unknotted.trace.initial.crossing_count == 2


def test_planar_theta_unknotted(planar_theta):
    for c in all_spins(planar_theta, FAST):
        assert c.verdict is Verdict.UNKNOTTED
        assert c.unknotted.trace.steps == ()


def test_handcuff(handcuff):
    with pytest.raises(NonClosedSubgraphError):
        classify_spin(handcuff, "l1", FAST)
    certificates = all_spins(handcuff, FAST)
    assert [(c.edge, c.verdict) for c in certificates] == [
        ("bar", Verdict.UNKNOTTED),
        ("l1", Verdict.UNKNOWN),
        ("l2", Verdict.UNKNOWN),
    ]
    assert certificates[1].mirror is None


def test_unknown_edge(chord_theta):
    with pytest.raises(UnknownEdgeError):
        classify_spin(chord_theta, "e9", FAST)


def test_parallel_matches_serial(load_fixture):
    d = load_fixture("kinoshita-theta")
    serial = all_spins(d, FAST, workers=1)
    parallel = all_spins(d, FAST, workers=2)
    assert [(c.edge, c.verdict, c.theorem) for c in parallel] == [
        (c.edge, c.verdict, c.theorem) for c in serial
    ]


@pytest.mark.parametrize("seed", range(100))
def test_random_theta_never_gets_both_verdicts(load_fixture, seed):
    rng = random.Random(seed)
    d = load_fixture(rng.choice(["planar-theta", "trefoil-chord-theta"]))
    for _ in range(3):
        moves = [m for m in applicable_moves(d) if m.kind is not MoveKind.R2_PLUS or d.crossing_count < 5]
        d = apply_move(d, rng.choice(moves))
    options = SpinOptions(n_range=(2, 3), budget=40, cross_check=True, with_mirror=False)
    for c in all_spins(d, options):
        assert c.verdict in (Verdict.KNOTTED, Verdict.UNKNOTTED, Verdict.UNKNOWN)
        if c.verdict is Verdict.KNOTTED:
            assert c.unknotted is None


def test_concurrent_surveys_do_not_share_a_pool(load_fixture):
    d = load_fixture("kinoshita-theta")
    expected = [(c.edge, c.verdict) for c in all_spins(d, FAST)]
    with ThreadPoolExecutor(max_workers=4) as threads:
        futures = [threads.submit(all_spins, d, FAST, 2) for _ in range(4)]
        results = [f.result() for f in futures]
    for certificates in results:
        assert [(c.edge, c.verdict) for c in certificates] == expected


def _cut_cases():
    cases = []
    for name, chains in [
        ("planar-theta", {"e1": 1, "e2": 1, "e3": 1}),
        ("trefoil-chord-theta", {"e1": 1, "e2": 4, "e3": 4}),
        ("kinoshita-theta", {"e1": 5, "e2": 5, "e3": 5}),
        ("granny-theta", {"e1": 7, "e2": 7, "e3": 7}),
    ]:
        for edge, length in chains.items():
            cases += [(name, edge, position) for position in range(length)]
    return cases


@pytest.mark.parametrize("name, edge, position", _cut_cases())
def test_every_cut_position_agrees(load_fixture, name, edge, position):
    d = load_fixture(name)
    assert len(d.edge_map[edge].arcs) > position
    options = SpinOptions(n_range=(2, 3), budget=2000, with_mirror=False)
    reference = classify_spin(d, edge, options).verdict
    moved = classify_spin(d, edge, options.model_copy(update={"cut_position": position})).verdict
    assert reference is not Verdict.UNKNOWN
    assert moved is reference
