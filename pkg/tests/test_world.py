import random

import pytest

from weakdo import (
    Language,
    MismatchError,
    WorldSpecError,
    build_world,
    make_vocabulary,
    projections,
    totality,
)
from weakdo.experiments import random_world


def test_build_w1(w1):
    assert len(w1.states) == 3
    assert [p.name for p in w1.programs] == ["p1", "p2"]
    assert w1.program("p1").truth == (True, True, False)
    assert w1.program("p2").truth == (False, True, True)


def test_build_collapses_extensional_duplicates():
    world = build_world(
        ["a", "b"],
        {"x": ["a"], "y": ["a"], "z": ["b"]},
    )
    assert [p.name for p in world.programs] == ["x", "z"]
    # the collapsed name aliases the canonical program
    assert world.program("y") is world.program("x")


def test_build_rejects_bad_specs():
    with pytest.raises(WorldSpecError):
        build_world([], {})
    with pytest.raises(WorldSpecError):
        build_world(["a", "a"], {})
    with pytest.raises(WorldSpecError):
        build_world(["a"], [("x", ["a"]), ("x", ["a"])])
    with pytest.raises(WorldSpecError):
        build_world(["a"], {"x": ["nowhere"]})


def test_totality_reads_truth_table(w1):
    assert totality(w1, "phi2").members == {"p1", "p2"}
    assert totality(w1, "phi1").members == {"p1"}
    assert totality(w1, "phi3").members == {"p2"}
    with pytest.raises(WorldSpecError):
        totality(w1, "phi9")


def test_totality_partitions_programs_by_truth():
    rng = random.Random(11)
    for _ in range(25):
        world, _ = random_world(rng, 5, 6)
        for i, state in enumerate(world.states):
            members = totality(world, state).members
            for program in world.programs:
                assert (program.name in members) == program.truth[i]


def test_make_vocabulary(w1):
    vocab = make_vocabulary(w1, ["p1", "p2"])
    assert vocab.width == 2
    assert vocab.bit("p1") == 0
    assert vocab.mask_of(["p2"]) == 0b10
    with pytest.raises(WorldSpecError):
        make_vocabulary(w1, ["p1", "p1"])
    with pytest.raises(WorldSpecError):
        make_vocabulary(w1, ["p1", "p9"])


def test_vocabulary_rejects_programs_true_nowhere():
    world = build_world(["a"], {"x": ["a"], "dead": []})
    with pytest.raises(WorldSpecError):
        make_vocabulary(world, ["dead"])


def test_vocabulary_size_bound(w1):
    with pytest.raises(WorldSpecError):
        make_vocabulary(w1, ["p1", "p2"], max_vocab=1)


def test_projections_w1(w1):
    vocab = make_vocabulary(w1, ["p1", "p2"])
    assert projections(w1, vocab) == {0b01, 0b11, 0b10}
    narrow = make_vocabulary(w1, ["p1"])
    assert projections(w1, narrow) == {0b1, 0b0}


def test_projections_single_state_all_true():
    world = build_world(["only"], {"x": ["only"]})
    vocab = make_vocabulary(world, ["x"])
    assert projections(world, vocab) == {0b1}
    # a state where the whole vocabulary holds projects onto the full mask
    world2 = build_world(["a", "b"], {"x": ["a", "b"], "y": ["a"]})
    vocab2 = make_vocabulary(world2, ["x", "y"])
    assert 0b11 in projections(world2, vocab2)


def test_projections_reject_foreign_vocabulary(w1, w2):
    vocab = make_vocabulary(w2, ["r", "c"])
    with pytest.raises(MismatchError):
        projections(w1, vocab)


def test_projection_count_bound():
    rng = random.Random(5)
    for _ in range(30):
        world, vocab = random_world(rng, 6, 5)
        count = len(projections(world, vocab))
        assert count <= min(len(world.states), 1 << vocab.width)


def test_world_building_is_deterministic():
    spec = (["a", "b", "c"], {"x": ["a", "c"], "y": ["b"], "z": ["a", "c"]})
    first = build_world(*spec)
    second = build_world(*spec)
    assert first == second
    assert [p.name for p in first.programs] == [p.name for p in second.programs]
    v1 = make_vocabulary(first, ["x", "y"])
    v2 = make_vocabulary(second, ["x", "y"])
    assert Language(v1).projection_masks == Language(v2).projection_masks
