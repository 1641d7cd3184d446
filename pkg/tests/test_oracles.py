import pytest
from hypothesis import given
from hypothesis import strategies as st

from mihailova.errors import CapabilityError, RankMismatchError
from mihailova.oracles import (
    FREE_PRESENTATION,
    QuotientOracle,
    S3_PRESENTATION,
    apply_oracle,
    get_oracle,
    is_central,
    s3_twelve_presentation,
)
from mihailova.words import Word, parse_word, reduce

letters2 = st.lists(st.sampled_from([-2, -1, 1, 2]), max_size=20)


def x(text):
    return parse_word(text, 2, ["x1", "x2"])


def compose_left_to_right(p, q):
    # independent: dict-based composition, apply p then q
    return tuple(dict(enumerate(q))[dict(enumerate(p))[i]] for i in range(len(p)))


def test_s3_examples(s3):
    assert apply_oracle(s3, Word.identity(2)) == (0, 1, 2)
    assert apply_oracle(s3, x("x1 x1")) == (0, 1, 2)
    assert apply_oracle(s3, x("x1")) != apply_oracle(s3, x("x2"))
    t, c = (1, 0, 2), (1, 2, 0)
    assert apply_oracle(s3, x("x1 x2")) == compose_left_to_right(t, c)


def test_s3_relators_vanish(s3):
    for r in s3.presentation.relators:
        assert apply_oracle(s3, r) == s3.identity
    twelve = s3_twelve_presentation()
    assert len(twelve.relators) == 12
    for r in twelve.relators:
        assert apply_oracle(s3, r) == s3.identity


@pytest.mark.parametrize("name", ["s3", "zsq", "free"])
@given(u=letters2, v=letters2)
def test_homomorphism(name, u, v):
    o = get_oracle(name)
    a, b = reduce(u, 2), reduce(v, 2)
    assert apply_oracle(o, a * b) == o.mul(apply_oracle(o, a), apply_oracle(o, b))
    assert apply_oracle(o, a.inverse()) == o.inv(apply_oracle(o, a))


def test_centrality(s3, zsq, free):
    assert is_central(s3, Word.identity(2))
    assert not is_central(s3, x("x1"))
    assert not is_central(s3, x("x2"))
    assert is_central(s3, x("x1 x1"))
    assert is_central(zsq, x("x1 x2^5 x1"))
    assert is_central(free, Word.identity(2))
    assert not is_central(free, x("x1 x2 x1^-1 x2^-1"))


def test_s3_center_is_trivial_by_enumeration(s3):
    from itertools import permutations

    elems = list(permutations(range(3)))
    central = [g for g in elems if all(compose_left_to_right(g, h) == compose_left_to_right(h, g) for h in elems)]
    assert central == [(0, 1, 2)]
    for g in elems:
        assert s3.is_central(g) == (g in central)


def test_capability_error():
    class NoCentre(QuotientOracle):
        supports_centrality = False
        identity = 0

        def mul(self, a, b):
            return a + b

        def inv(self, a):
            return -a

        def generator_token(self, index):
            return 1

    o = NoCentre(FREE_PRESENTATION)
    with pytest.raises(CapabilityError):
        is_central(o, x("x1"))


def test_rank_checked(s3):
    with pytest.raises(RankMismatchError):
        apply_oracle(s3, parse_word("a", 3))


def test_big_exponents(s3, zsq):
    assert apply_oracle(s3, x("x2^300000000000000000002")) == apply_oracle(s3, x("x2^2"))
    assert apply_oracle(zsq, x("x1^99999999999999999999")) == (99999999999999999999, 0)
    assert S3_PRESENTATION.generator_names == ("x1", "x2")


def test_unknown_oracle():
    with pytest.raises(ValueError):
        get_oracle("a5")
