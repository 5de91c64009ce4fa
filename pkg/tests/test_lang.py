import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from weakdo import (
    InvalidStatementError,
    MismatchError,
    Statement,
    extension,
    extension_of_set,
    is_higher_level,
    is_true,
    is_valid,
    project_statement,
    totality,
    weakness,
    weakness_inclusion_exclusion,
)
from weakdo.experiments import random_world
from weakdo.lang import Language


def masks(stmts):
    return sorted(s.mask for s in stmts)


def test_validity_w1(w1_lang):
    assert is_valid(w1_lang, w1_lang.statement_of(["p1", "p2"]))
    assert is_valid(w1_lang, w1_lang.statement(0))
    assert w1_lang.size == 4


def test_validity_needs_a_witnessing_totality():
    # no state has both programs true
    from weakdo import build_world, make_vocabulary

    world = build_world(["a", "b"], {"x": ["a"], "y": ["b"]})
    lang = Language(make_vocabulary(world, ["x", "y"]))
    assert not is_valid(lang, lang.statement_of(["x", "y"]))
    assert lang.size == 3


def test_statement_mask_width_guard(w1_lang):
    with pytest.raises(InvalidStatementError):
        Statement(0b100, w1_lang.vocabulary)


def test_vocabulary_mismatch_rejected(w1_lang, w2_full):
    foreign = w2_full.statement_of(["r"])
    with pytest.raises(MismatchError):
        is_valid(w1_lang, foreign)


def test_truth_against_totalities(w1, w1_lang):
    h1 = totality(w1, "phi1")
    assert is_true(w1_lang.statement_of(["p1"]), h1)
    assert not is_true(w1_lang.statement_of(["p1", "p2"]), h1)
    assert is_true(w1_lang.statement(0), h1)


def test_truth_rejects_foreign_world(w2, w1_lang):
    with pytest.raises(MismatchError):
        is_true(w1_lang.statement_of(["p1"]), totality(w2, "calm"))


def test_extension_w1(w1_lang):
    assert masks(extension(w1_lang, w1_lang.statement_of(["p1"]))) == [0b01, 0b11]
    assert masks(extension(w1_lang, w1_lang.statement(0))) == [0b00, 0b01, 0b10, 0b11]
    assert masks(extension(w1_lang, w1_lang.statement_of(["p1", "p2"]))) == [0b11]


def test_extension_rejects_invalid_statement():
    from weakdo import build_world, make_vocabulary

    world = build_world(["a", "b"], {"x": ["a"], "y": ["b"]})
    lang = Language(make_vocabulary(world, ["x", "y"]))
    with pytest.raises(InvalidStatementError):
        extension(lang, lang.statement(0b11))


def test_extension_of_set_w1(w1_lang):
    p1 = w1_lang.statement_of(["p1"])
    p2 = w1_lang.statement_of(["p2"])
    assert masks(extension_of_set(w1_lang, [p1, p2])) == [0b01, 0b10, 0b11]
    assert extension_of_set(w1_lang, []) == frozenset()
    assert masks(extension_of_set(w1_lang, [w1_lang.statement(0)])) == [0, 1, 2, 3]


def test_weakness_w1(w1_lang):
    assert weakness(w1_lang, w1_lang.statement(0)) == 4
    assert weakness(w1_lang, w1_lang.statement_of(["p1"])) == 2
    assert weakness(w1_lang, w1_lang.statement_of(["p1", "p2"])) == 1


def test_higher_level_w1(w1_lang):
    p1 = w1_lang.statement_of(["p1"])
    p2 = w1_lang.statement_of(["p2"])
    both = w1_lang.statement_of(["p1", "p2"])
    assert is_higher_level(w1_lang, p1, both)
    assert not is_higher_level(w1_lang, p1, p1)
    assert not is_higher_level(w1_lang, p1, p2)
    assert not is_higher_level(w1_lang, p2, p1)


def test_higher_level_matches_extension_comparison():
    rng = random.Random(23)
    for _ in range(20):
        _, vocab = random_world(rng, 4, 4)
        lang = Language(vocab)
        stmts = lang.statements()
        for a in stmts:
            for c in stmts:
                za = extension(lang, a)
                zc = extension(lang, c)
                assert is_higher_level(lang, c, a) == (za < zc)


def test_projection_to_narrower_vocabulary(w2, w2_full, w2_reduced):
    wide = w2_full.statement_of(["c", "u"])
    narrow = project_statement(wide, w2_reduced.vocabulary)
    assert narrow.names() == ("c",)
    assert is_valid(w2_reduced, narrow)


@st.composite
def lattice(draw):
    n_states = draw(st.integers(1, 4))
    n_programs = draw(st.integers(1, min(5, (1 << n_states) - 1)))
    vectors = draw(
        st.lists(
            st.integers(1, (1 << n_states) - 1),
            min_size=n_programs, max_size=n_programs, unique=True,
        )
    )
    from weakdo.experiments import world_from_spec

    world, vocab = world_from_spec((n_states, tuple(sorted(vectors))))
    return Language(vocab)


@settings(max_examples=60, deadline=None)
@given(lattice())
def test_extension_lattice_laws(lang):
    stmts = lang.statements()
    assert weakness(lang, lang.statement(0)) == lang.size
    for a in stmts:
        za = extension(lang, a)
        assert a in za
        assert all(is_valid(lang, b) for b in za)
        assert weakness(lang, a) == len(za)
        for b in za:
            # supersets are stronger: smaller extensions, contained in ours
            zb = extension(lang, b)
            assert zb <= za
            assert weakness(lang, b) <= weakness(lang, a)
            if b != a:
                assert zb != za


@settings(max_examples=60, deadline=None)
@given(lattice())
def test_extension_of_set_distributes_over_union(lang):
    stmts = lang.statements()
    half = stmts[: len(stmts) // 2]
    rest = stmts[len(stmts) // 2:]
    combined = extension_of_set(lang, stmts)
    assert combined == extension_of_set(lang, half) | extension_of_set(lang, rest)


def test_weakness_routes_agree_on_random_worlds():
    rng = random.Random(99)
    for _ in range(40):
        _, vocab = random_world(rng, 6, 10)
        lang = Language(vocab)
        for s in lang.statements():
            assert weakness(lang, s) == weakness_inclusion_exclusion(lang, s)


def test_weakness_matches_oracle():
    rng = random.Random(41)
    for _ in range(25):
        _, vocab = random_world(rng, 5, 6)
        lang = Language(vocab)
        valid = oracles.valid_statements(lang.projection_masks, vocab.width)
        assert frozenset(lang.valid_masks()) == valid
        for s in lang.statements():
            assert weakness(lang, s) == oracles.weakness(valid, s.mask)
