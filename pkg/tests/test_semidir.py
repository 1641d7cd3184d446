import sympy
import pytest

from mihailova.errors import DomainError, ShapeError
from mihailova.matrep import I4, IntMatrix, eval4
from mihailova.oracles import s3_twelve_presentation
from mihailova.fiber import mihailova_generators
from mihailova.semidir import (
    ActionSpec,
    HomWitness,
    SemiElem,
    build_Gh,
    evaluate_word,
    gadget_action,
    identity,
    identity_witness,
    iso_witness,
    semi_inv,
    semi_mul,
    verify_hom,
    verify_isomorphism,
)
from mihailova.words import PairWord, Word, parse_word, random_word


def affine(a, x):
    # independent model: (v, w) <-> [[Phi(w), v], [0, 1]] built with sympy
    m = sympy.eye(4)
    for g, e in x.w.syllables:
        mat = sympy.Matrix(a.matrices[g - 1].rows)
        m = m * (mat ** e)
    out = sympy.zeros(5, 5)
    out[:4, :4] = m
    out[:4, 4] = sympy.Matrix(x.v)
    out[4, 4] = 1
    return out


def random_elem(rng, a, n=4):
    return SemiElem(tuple(rng.randint(-5, 5) for _ in range(4)), random_word(rng, a.q, n))


@pytest.fixture(scope="module")
def action(s3_gens):
    return gadget_action(s3_gens, s3_gens.evaluate(s3_gens.symbol("h1 h2")))


def test_mul_examples(action):
    e1, e2 = (1, 0, 0, 0), (0, 1, 0, 0)
    t1 = Word.generator(action.q, 1)
    x = SemiElem(e1, t1)
    assert semi_mul(action, identity(action), x) == x
    got = semi_mul(action, x, SemiElem(e2, Word.identity(action.q)))
    moved = action.matrices[0].apply(e2)
    assert got == SemiElem(tuple(a + b for a, b in zip(e1, moved)), t1)


def test_mul_matches_affine_model(action, rng):
    for _ in range(30):
        x, y = random_elem(rng, action), random_elem(rng, action)
        assert affine(action, semi_mul(action, x, y)) == affine(action, x) * affine(action, y)
        assert semi_mul(action, x, semi_inv(action, x)) == identity(action)


def test_phi_homomorphism(action, rng):
    for _ in range(30):
        u, v = random_word(rng, action.q, 5), random_word(rng, action.q, 5)
        assert action.phi(u * v) == action.phi(u) @ action.phi(v)


def test_group_axioms(action, rng):
    for _ in range(20):
        x, y, z = (random_elem(rng, action) for _ in range(3))
        assert semi_mul(action, semi_mul(action, x, y), z) == semi_mul(action, x, semi_mul(action, y, z))


def test_build_Gh_counts(s3_gens):
    pres = build_Gh(gadget_action(s3_gens, PairWord.identity()))
    assert pres.generator_count == 10 and len(pres.relators) == 30
    g14 = mihailova_generators(s3_twelve_presentation())
    big = build_Gh(gadget_action(g14, PairWord.identity()))
    assert big.generator_count == 19 and len(big.relators) == 66


def test_identity_action_gives_commutators(s3_gens):
    pres = build_Gh(gadget_action(s3_gens, PairWord.identity()))
    t = pres.generator_count
    for i, rel in enumerate(pres.relators[-4:], start=1):
        assert rel.letters == (t, i, -t, -i)


def test_relators_hold_in_affine_model(action):
    pres = build_Gh(action)
    gens = []
    for i in range(1, action.rank + 1):
        m = sympy.eye(5)
        if i <= 4:
            m[i - 1, 4] = 1
        else:
            m[:4, :4] = sympy.Matrix(action.matrices[i - 5].rows)
        gens.append(m)
    for rel in pres.relators:
        m = sympy.eye(5)
        for g, e in rel.syllables:
            m = m * gens[g - 1] ** e
        assert m == sympy.eye(5)


def test_action_validation():
    with pytest.raises(DomainError):
        ActionSpec((IntMatrix.of([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),))
    with pytest.raises(ShapeError):
        ActionSpec(())


def test_identity_witness_always_verifies(s3_gens, rng):
    for _ in range(5):
        h = PairWord(random_word(rng, 2, 4), random_word(rng, 2, 4))
        a = gadget_action(s3_gens, h)
        assert verify_hom(build_Gh(a), a, identity_witness(a.rank)).ok


def test_iso_witness_examples(s3_gens):
    fwd, bwd = iso_witness(s3_gens, Word.identity(s3_gens.p))
    assert fwd == bwd == identity_witness(s3_gens.p + 5)
    fwd, _ = iso_witness(s3_gens, s3_gens.symbol("h1 h2"))
    names = build_Gh(gadget_action(s3_gens, PairWord.identity())).generator_names
    assert fwd.to_json(names, names)["images"]["t"] == "t1 t2 t"


def test_iso_pipeline_witness_verifies(s3_gens):
    sw = s3_gens.symbol("h1 h2")
    h = s3_gens.evaluate(sw)
    act_h, act_1 = gadget_action(s3_gens, h), gadget_action(s3_gens, PairWord.identity())
    fwd, bwd = iso_witness(s3_gens, sw)
    cert = verify_isomorphism(act_h, act_1, fwd, bwd)
    assert cert.ok


def test_random_witnesses_verify(s3_gens, rng):
    act_1 = gadget_action(s3_gens, PairWord.identity())
    for _ in range(15):
        sw = random_word(rng, s3_gens.p, 6)
        act_h = gadget_action(s3_gens, s3_gens.evaluate(sw))
        assert verify_isomorphism(act_h, act_1, *iso_witness(s3_gens, sw)).ok


def test_corrupted_witness_is_caught(s3_gens):
    sw = s3_gens.symbol("h1 h2")
    act_h = gadget_action(s3_gens, s3_gens.evaluate(sw))
    act_1 = gadget_action(s3_gens, PairWord.identity())
    src = build_Gh(act_h)
    names = src.generator_names
    fwd, _ = iso_witness(s3_gens, sw)
    obj = fwd.to_json(names, names)
    obj["images"]["t"] = "t1 t"
    bad = HomWitness.from_json(obj, names, names)
    check = verify_hom(src, act_1, bad)
    assert not check.ok
    assert all(rel.startswith("t a") for _, rel in check.failures)


def test_witness_shape_errors(s3_gens):
    act = gadget_action(s3_gens, PairWord.identity())
    src = build_Gh(act)
    with pytest.raises(ShapeError):
        verify_hom(src, act, identity_witness(3))
    with pytest.raises(ShapeError):
        verify_hom(src, act, HomWitness((Word.identity(3),) * src.generator_count))


def test_evaluate_word_big_exponents(action):
    a1 = parse_word("a1^1000000000000000000000", action.rank, build_Gh(action).generator_names)
    assert evaluate_word(action, a1).v == (10**21, 0, 0, 0)
