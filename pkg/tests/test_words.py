import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mihailova.errors import MalformedWordError, RankMismatchError, ShapeError
from mihailova.words import (
    PairWord,
    Presentation,
    Word,
    format_word,
    invert,
    multiply,
    parse_word,
    random_word,
    reduce,
)

letters2 = st.lists(st.sampled_from([-2, -1, 1, 2]), max_size=25)


def w(text, rank=2):
    return parse_word(text, rank)


def test_reduce_examples():
    assert reduce([1, -1], 2).is_identity
    assert w("a A").is_identity
    assert w("a b B a") == w("a a")
    assert reduce([1, 2, -2, 1], 2).letters == (1, 1)


def test_reduce_rejects_bad_letters():
    with pytest.raises(MalformedWordError):
        reduce([3], 2)
    with pytest.raises(MalformedWordError):
        reduce([0], 2)
    with pytest.raises(MalformedWordError):
        parse_word("c", 2)


@given(letters2)
def test_reduce_idempotent(seq):
    once = reduce(seq, 2)
    assert reduce(once.letters, 2) == once


@given(letters2, st.randoms(use_true_random=False))
def test_reduction_is_confluent(seq, r):
    # cancel adjacent inverse pairs in a random order until none remain
    work = list(seq)
    while True:
        spots = [i for i in range(len(work) - 1) if work[i] == -work[i + 1]]
        if not spots:
            break
        i = r.choice(spots)
        del work[i : i + 2]
    assert tuple(work) == reduce(seq, 2).letters


def test_multiply_invert_examples():
    assert multiply(w("a"), w("b")) == w("a b")
    assert invert(w("a b")) == w("B A")
    u = w("a b A b b")
    assert multiply(u, invert(u)).is_identity


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        w("a") * parse_word("a", 3)
    with pytest.raises(RankMismatchError):
        PairWord(parse_word("a", 3), Word.identity(2))


@given(letters2, letters2, letters2)
def test_group_axioms(x, y, z):
    a, b, c = reduce(x, 2), reduce(y, 2), reduce(z, 2)
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity
    assert a * Word.identity(2) == a
    p, q, r = PairWord(a, b), PairWord(b, c), PairWord(c, a)
    assert (p * q) * r == p * (q * r)
    assert (p * p.inverse()).is_identity


def test_parse_forms():
    names = ["x1", "x2"]
    assert parse_word("x1 x2^-1", 2, names) == reduce([1, -2], 2)
    assert parse_word("X1", 2, names) == reduce([-1], 2)
    assert parse_word("x2^3", 2, names) == reduce([2, 2, 2], 2)
    assert parse_word("g2^-1 g1", 2) == reduce([-2, 1], 2)
    assert parse_word("1", 2).is_identity
    big = parse_word("g27 g30^-1", 30)
    assert big.letters == (27, -30)


def test_format_roundtrip(rng):
    for rank, names in [(2, None), (2, ["x1", "x2"]), (30, None), (5, ["h1", "h2", "h3", "h4", "h5"])]:
        for _ in range(50):
            u = random_word(rng, rank, 12)
            assert parse_word(format_word(u, names), rank, names) == u
    assert format_word(reduce([1, -2, -2], 2)) == "a B B"
    assert format_word(reduce([1, -2], 2), ["x1", "x2"]) == "x1 x2^-1"
    assert format_word(Word.identity(2)) == "1"


def test_huge_exponent_is_one_syllable():
    u = parse_word("a^123456789012345678901234567890 b", 2)
    assert len(u.syllables) == 2
    assert u.length == 123456789012345678901234567891


def test_random_word_is_reduced(rng):
    for _ in range(100):
        u = random_word(rng, 3, 20, min_len=5)
        assert 5 <= len(u) <= 20
        assert reduce(u.letters, 3) == u


def test_presentation_normalizes():
    p = Presentation.from_strings(["x1", "x2"], ["x2 x1 x1 x2^-1", "x1 x1^-1", "x1 x1"])
    # the conjugate collapses to x1^2 and the trivial relator is dropped
    assert [r.letters for r in p.relators] == [(1, 1), (1, 1)]
    assert p.generator_count == 2


def test_presentation_json_roundtrip():
    obj = {"generators": ["x1", "x2"], "relators": ["x1 x1", "x2 x2 x2", "x1 x2 x1 x2"]}
    p = Presentation.from_json(obj)
    assert Presentation.from_json(json.loads(p.dumps())) == p
    assert p.to_json()["relators"] == ["x1^2", "x2^3", "x1 x2 x1 x2"]


def test_presentation_rejects_duplicates():
    with pytest.raises(ShapeError):
        Presentation.from_strings(["x", "x"], [])
    with pytest.raises(ShapeError):
        Presentation.from_json({"generators": ["x1"]})


def test_cyclic_reduction():
    assert w("a b A").cyclically_reduced() == w("b")
    assert w("a b a").cyclically_reduced() == w("a a b")
    assert w("a A").cyclically_reduced().is_identity
