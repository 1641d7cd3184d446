"""Semidirect products Z^4 x| F_q and homomorphism witnesses between them.

Elements are normal forms ``(v, w)`` with ``v`` in Z^4 and ``w`` a reduced
word in the q stable letters. Matrices act on column vectors on the left:

    (v1, w1) * (v2, w2) = (v1 + Phi(w1) v2, w1 w2)

so in the presentation ``s a_i s^-1 = a_1^{M_1i} a_2^{M_2i} a_3^{M_3i} a_4^{M_4i}``
(column ``i`` of the matrix ``M`` of ``s``). Presentation generators are
numbered ``a1..a4`` then the stable letters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError, ShapeError
from .fiber import MihailovaGens
from .matrep import IntMatrix, eval4
from .words import PairWord, Presentation, Word, format_word, parse_word

N_ABELIAN = 4


@dataclass(frozen=True)
class ActionSpec:
    """Images of the stable letters in GL(4, Z)."""

    matrices: tuple[IntMatrix, ...]
    _inverses: tuple[IntMatrix, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        mats = tuple(self.matrices)
        if not mats:
            raise ShapeError("an action needs at least one stable letter")
        for m in mats:
            if m.dim != N_ABELIAN:
                raise ShapeError("actions are by 4x4 matrices")
            if not m.is_unimodular:
                raise DomainError(f"action matrix {m} is not unimodular")
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "_inverses", tuple(m.inverse() for m in mats))

    @property
    def q(self) -> int:
        return len(self.matrices)

    @property
    def rank(self) -> int:
        """Generator count of the presentation: 4 + q."""
        return N_ABELIAN + self.q

    def phi(self, w: Word) -> IntMatrix:
        result = IntMatrix.identity(N_ABELIAN)
        for g, e in w.syllables:
            base = self.matrices[g - 1] if e > 0 else self._inverses[g - 1]
            result = result @ (base ** abs(e))
        return result


def gadget_action(g: MihailovaGens, h: PairWord) -> ActionSpec:
    """t_1..t_p act as the images of the Mihailova generators, t as ``h``."""
    return ActionSpec(tuple(eval4(x) for x in g.gens) + (eval4(h),))


def gadget_names(p: int) -> list[str]:
    return [f"a{i + 1}" for i in range(N_ABELIAN)] + [f"t{j + 1}" for j in range(p)] + ["t"]


@dataclass(frozen=True, slots=True)
class SemiElem:
    v: tuple[int, ...]
    w: Word


def identity(a: ActionSpec) -> SemiElem:
    return SemiElem((0,) * N_ABELIAN, Word.identity(a.q))


def _check(a: ActionSpec, x: SemiElem) -> None:
    if x.w.rank != a.q:
        raise ShapeError(f"element word of rank {x.w.rank} in a group with {a.q} stable letters")


def semi_mul(a: ActionSpec, x: SemiElem, y: SemiElem) -> SemiElem:
    _check(a, x)
    _check(a, y)
    moved = a.phi(x.w).apply(y.v)
    return SemiElem(tuple(p + q for p, q in zip(x.v, moved)), x.w * y.w)


def semi_inv(a: ActionSpec, x: SemiElem) -> SemiElem:
    _check(a, x)
    w_inv = x.w.inverse()
    return SemiElem(tuple(-c for c in a.phi(w_inv).apply(x.v)), w_inv)


def semi_pow(a: ActionSpec, x: SemiElem, n: int) -> SemiElem:
    if n < 0:
        x, n = semi_inv(a, x), -n
    if x.w.is_identity:
        return SemiElem(tuple(n * c for c in x.v), x.w)
    result = identity(a)
    while n:
        if n & 1:
            result = semi_mul(a, result, x)
        x = semi_mul(a, x, x)
        n >>= 1
    return result


def generator_elem(a: ActionSpec, index: int) -> SemiElem:
    """Normal form of presentation generator ``index`` (1-based)."""
    if 1 <= index <= N_ABELIAN:
        v = [0] * N_ABELIAN
        v[index - 1] = 1
        return SemiElem(tuple(v), Word.identity(a.q))
    if index <= a.rank:
        return SemiElem((0,) * N_ABELIAN, Word.generator(a.q, index - N_ABELIAN))
    raise ShapeError(f"generator {index} outside 1..{a.rank}")


def evaluate_word(a: ActionSpec, word: Word, images: Sequence[SemiElem] | None = None) -> SemiElem:
    """Element of the group named by ``word``; generators map to ``images`` if given."""
    if images is None:
        if word.rank != a.rank:
            raise ShapeError(f"word of rank {word.rank} in a {a.rank}-generator group")
        images = [generator_elem(a, i) for i in range(1, a.rank + 1)]
    result = identity(a)
    for g, e in word.syllables:
        result = semi_mul(a, result, semi_pow(a, images[g - 1], e))
    return result


def build_Gh(a: ActionSpec, names: Sequence[str] | None = None) -> Presentation:
    """Presentation with 4 + q generators and 6 + 4q relators."""
    rank = a.rank
    names = list(names) if names is not None else gadget_names(a.q - 1)
    rels = []
    for i in range(1, N_ABELIAN + 1):
        for j in range(i + 1, N_ABELIAN + 1):
            rels.append(Word.from_syllables(rank, [(i, 1), (j, 1), (i, -1), (j, -1)]))
    for s, m in enumerate(a.matrices, start=N_ABELIAN + 1):
        for i in range(N_ABELIAN):
            col = m.column(i)
            image = [(k + 1, col[k]) for k in range(N_ABELIAN)]
            inv_image = [(g, -e) for g, e in reversed(image)]
            rels.append(Word.from_syllables(rank, [(s, 1), (i + 1, 1), (s, -1)] + inv_image))
    return Presentation(tuple(names), tuple(rels))


@dataclass(frozen=True)
class HomWitness:
    """Generator images of a homomorphism, as words in the target's generators."""

    images: tuple[Word, ...]

    def to_json(self, src_names: Sequence[str], tgt_names: Sequence[str]) -> dict:
        return {"images": {n: format_word(w, tgt_names) for n, w in zip(src_names, self.images)}}

    @classmethod
    def from_json(cls, obj: dict, src_names: Sequence[str], tgt_names: Sequence[str]) -> HomWitness:
        images = obj["images"]
        missing = [n for n in src_names if n not in images]
        if missing:
            raise ShapeError(f"witness gives no image for {missing}")
        rank = len(tgt_names)
        return cls(tuple(parse_word(images[n], rank, tgt_names) for n in src_names))


def identity_witness(rank: int) -> HomWitness:
    return HomWitness(tuple(Word.generator(rank, i) for i in range(1, rank + 1)))


def iso_witness(g: MihailovaGens, symbol_word: Word) -> tuple[HomWitness, HomWitness]:
    """Witnesses ``G_h -> G_1`` and ``G_1 -> G_h`` for ``h`` the evaluation of ``symbol_word``.

    Both fix a1..a4 and t1..tp; the first sends ``t`` to ``w(t_i) t``, the
    second to ``w(t_i)^-1 t``.
    """
    if symbol_word.rank != g.p:
        raise ShapeError(f"symbol word of rank {symbol_word.rank}, expected {g.p}")
    rank = N_ABELIAN + g.p + 1
    t = rank
    # h_i -> t_i, which is presentation generator 4 + i
    w = Word(rank, tuple((N_ABELIAN + s, e) for s, e in symbol_word.syllables))
    fixed = tuple(Word.generator(rank, i) for i in range(1, rank))
    tw = Word.generator(rank, t)
    return HomWitness(fixed + (w * tw,)), HomWitness(fixed + (w.inverse() * tw,))


@dataclass(frozen=True)
class HomCheck:
    ok: bool
    failures: tuple[tuple[int, str], ...]

    def to_json(self) -> dict:
        return {"ok": self.ok, "violated_relators": [{"index": i, "relator": r} for i, r in self.failures]}


def _image_elems(tgt_action: ActionSpec, w: HomWitness, n_src: int) -> list[SemiElem]:
    if len(w.images) != n_src:
        raise ShapeError(f"witness has {len(w.images)} images for {n_src} generators")
    out = []
    for img in w.images:
        if img.rank != tgt_action.rank:
            raise ShapeError(f"image word of rank {img.rank} is not expressible in a {tgt_action.rank}-generator target")
        out.append(evaluate_word(tgt_action, img))
    return out


def verify_hom(src: Presentation, tgt_action: ActionSpec, w: HomWitness) -> HomCheck:
    """Does every relator of ``src`` map to the identity of the target?"""
    images = _image_elems(tgt_action, w, src.generator_count)
    one = identity(tgt_action)
    failures = []
    for idx, rel in enumerate(src.relators):
        if evaluate_word(tgt_action, rel, images) != one:
            failures.append((idx, format_word(rel, src.generator_names)))
    return HomCheck(not failures, tuple(failures))


def composite_fixes_generators(
    src_action: ActionSpec, first: HomWitness, tgt_action: ActionSpec, second: HomWitness
) -> bool:
    """Is ``second o first`` the identity on the generators of the source group?"""
    back = _image_elems(src_action, second, tgt_action.rank)
    for i, img in enumerate(first.images, start=1):
        if img.rank != tgt_action.rank:
            raise ShapeError("first witness does not land in the target")
        if evaluate_word(src_action, img, back) != generator_elem(src_action, i):
            return False
    return True


@dataclass(frozen=True)
class IsoCertificate:
    forward: HomCheck
    backward: HomCheck
    composite_source: bool
    composite_target: bool

    @property
    def ok(self) -> bool:
        return self.forward.ok and self.backward.ok and self.composite_source and self.composite_target

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "forward": self.forward.to_json(),
            "backward": self.backward.to_json(),
            "composite_source_identity": self.composite_source,
            "composite_target_identity": self.composite_target,
        }


def verify_isomorphism(
    src_action: ActionSpec, tgt_action: ActionSpec, forward: HomWitness, backward: HomWitness
) -> IsoCertificate:
    src = build_Gh(src_action)
    tgt = build_Gh(tgt_action)
    return IsoCertificate(
        verify_hom(src, tgt_action, forward),
        verify_hom(tgt, src_action, backward),
        composite_fixes_generators(src_action, forward, tgt_action, backward),
        composite_fixes_generators(tgt_action, backward, src_action, forward),
    )
