"""Free-group words, pairs of words, and finite presentations.

A :class:`Word` is stored in syllable form, ``((gen, exp), ...)`` with
``gen`` in ``1..rank`` and ``exp`` a nonzero int, adjacent generators distinct.
This is the freely reduced normal form; long powers such as ``a1^123456789``
cost one syllable. ``Word.letters`` expands to signed letter indices
(``+i`` for the generator, ``-i`` for its inverse).

Text syntax: with at most 26 generators the default names are ``a, b, c, ...``
and an uppercase letter is the inverse (``a A`` is the identity). Any
generator may also be written ``g3``/``g3^-1``, and any name accepts an
integer exponent (``x1^3``). ``1`` denotes the identity.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ._backend import kernels
from .errors import MalformedWordError, RankMismatchError, ShapeError

Syllables = tuple  # tuple[tuple[int, int], ...]

_TOKEN = re.compile(r"^(?P<name>[^\s^]+)(?:\^(?P<exp>[+-]?\d+))?$")
_GFORM = re.compile(r"^g(\d+)$")


@dataclass(frozen=True, slots=True)
class Word:
    """Reduced element of the free group of the given rank.

    The constructor trusts its arguments; use :func:`reduce`,
    :meth:`from_letters` or :meth:`from_syllables` for unreduced input.
    """

    rank: int
    syllables: Syllables = ()

    @classmethod
    def identity(cls, rank: int) -> Word:
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, index: int, exp: int = 1) -> Word:
        _check_index(index, rank)
        return cls(rank, ((index, exp),) if exp else ())

    @classmethod
    def from_letters(cls, rank: int, letters: Iterable[int]) -> Word:
        return reduce(letters, rank)

    @classmethod
    def from_syllables(cls, rank: int, syllables: Iterable[tuple[int, int]]) -> Word:
        syl = tuple((int(g), int(e)) for g, e in syllables)
        for g, _ in syl:
            _check_index(g, rank)
        return cls(rank, kernels.reduce_syllables(syl))

    @property
    def letters(self) -> tuple[int, ...]:
        out: list[int] = []
        for g, e in self.syllables:
            out.extend([g if e > 0 else -g] * abs(e))
        return tuple(out)

    @property
    def length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __len__(self) -> int:
        # len() overflows above sys.maxsize; use .length for huge powers
        return self.length

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} word times rank {other.rank} word")
        return Word(self.rank, kernels.concat_reduce(self.syllables, other.syllables))

    def inverse(self) -> Word:
        return Word(self.rank, kernels.invert_syllables(self.syllables))

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else self.inverse()
        result = Word.identity(self.rank)
        for _ in range(abs(n)):
            result = result * base
        return result

    def cyclically_reduced(self) -> Word:
        syl = list(self.syllables)
        while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
            g = syl[0][0]
            total = syl[0][1] + syl[-1][1]
            syl = syl[1:-1]
            if total:
                syl = kernels.reduce_syllables([(g, total)] + syl)
                syl = list(syl)
        return Word(self.rank, tuple(syl))

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_word(self, names)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True, slots=True)
class PairWord:
    """Element of F2 x F2."""

    left: Word
    right: Word

    def __post_init__(self) -> None:
        if self.left.rank != 2 or self.right.rank != 2:
            raise RankMismatchError("pair components must have rank 2")

    @classmethod
    def identity(cls) -> PairWord:
        return cls(Word.identity(2), Word.identity(2))

    @classmethod
    def diagonal(cls, w: Word) -> PairWord:
        return cls(w, w)

    def __mul__(self, other: PairWord) -> PairWord:
        if not isinstance(other, PairWord):
            return NotImplemented
        return PairWord(self.left * other.left, self.right * other.right)

    def inverse(self) -> PairWord:
        return PairWord(self.left.inverse(), self.right.inverse())

    def conjugate(self, a: PairWord) -> PairWord:
        """``a * self * a^-1``."""
        return a * self * a.inverse()

    @property
    def is_identity(self) -> bool:
        return self.left.is_identity and self.right.is_identity

    def to_json(self, names: Sequence[str] | None = None) -> dict:
        return {"left": format_word(self.left, names), "right": format_word(self.right, names)}

    @classmethod
    def from_json(cls, obj: dict, names: Sequence[str] | None = None) -> PairWord:
        return cls(parse_word(obj["left"], 2, names), parse_word(obj["right"], 2, names))

    def __str__(self) -> str:
        return f"({self.left}, {self.right})"


def _check_index(index: int, rank: int) -> None:
    if not 1 <= index <= rank:
        raise MalformedWordError(f"generator index {index} outside 1..{rank}")


def reduce(letters: Iterable[int], rank: int) -> Word:
    """Freely reduce a raw sequence of signed letter indices."""
    syl = []
    for letter in letters:
        letter = int(letter)
        if letter == 0 or abs(letter) > rank:
            raise MalformedWordError(f"letter {letter} outside +-1..{rank}")
        syl.append((abs(letter), 1 if letter > 0 else -1))
    return Word(rank, kernels.reduce_syllables(syl))


def multiply(u: Word, v: Word) -> Word:
    return u * v


def invert(u: Word) -> Word:
    return u.inverse()


def default_names(rank: int) -> list[str]:
    if rank <= 26:
        return [chr(ord("a") + i) for i in range(rank)]
    return [f"g{i + 1}" for i in range(rank)]


def _is_letter_alphabet(names: Sequence[str]) -> bool:
    return all(len(n) == 1 and n.islower() for n in names)


def _resolve(name: str, rank: int, names: Sequence[str] | None) -> tuple[int, int]:
    if names is not None:
        if name in names:
            return names.index(name) + 1, 1
        if name != name.lower() and name.lower() in names:
            return names.index(name.lower()) + 1, -1
    if rank <= 26 and len(name) == 1 and name.isalpha():
        idx = ord(name.lower()) - ord("a") + 1
        if idx <= rank:
            return idx, 1 if name.islower() else -1
    m = _GFORM.match(name)
    if m and 1 <= int(m.group(1)) <= rank:
        return int(m.group(1)), 1
    raise MalformedWordError(f"unknown generator {name!r} for rank {rank}")


def parse_word(text: str, rank: int, names: Sequence[str] | None = None) -> Word:
    """Parse the space-separated wire format into a reduced word."""
    syl = []
    for token in text.replace(",", " ").split():
        if token == "1":
            continue
        m = _TOKEN.match(token)
        if not m:
            raise MalformedWordError(f"cannot parse token {token!r}")
        gen, sign = _resolve(m.group("name"), rank, names)
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        syl.append((gen, sign * exp))
    return Word(rank, kernels.reduce_syllables(syl))


def format_word(w: Word, names: Sequence[str] | None = None) -> str:
    if w.is_identity:
        return "1"
    names = list(names) if names is not None else default_names(w.rank)
    if len(names) < w.rank:
        raise ShapeError(f"{len(names)} names for a rank {w.rank} word")
    letters = _is_letter_alphabet(names)
    parts = []
    for g, e in w.syllables:
        name = names[g - 1]
        if letters and abs(e) <= 4:
            parts.extend([name if e > 0 else name.upper()] * abs(e))
        elif e == 1:
            parts.append(name)
        else:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def random_word(rng: random.Random, rank: int, max_len: int, min_len: int = 0) -> Word:
    """Uniform length in ``[min_len, max_len]``, then a random reduced word of that length."""
    n = rng.randint(min_len, max_len)
    letters: list[int] = []
    while len(letters) < n:
        letter = rng.choice([i for i in range(-rank, rank + 1) if i])
        if letters and letters[-1] == -letter:
            continue
        letters.append(letter)
    return reduce(letters, rank)


def random_pair(rng: random.Random, max_len: int) -> PairWord:
    return PairWord(random_word(rng, 2, max_len), random_word(rng, 2, max_len))


@dataclass(frozen=True)
class Presentation:
    """Finite presentation. Relators are normalized on construction.

    Relators are cyclically reduced and trivial ones are dropped, so two
    inputs differing only by cyclic reduction produce equal objects.
    """

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self) -> None:
        names = tuple(self.generator_names)
        if not names:
            raise ShapeError("a presentation needs at least one generator")
        if len(set(names)) != len(names):
            raise ShapeError(f"duplicate generator names in {names}")
        rels = []
        for r in self.relators:
            if r.rank != len(names):
                raise RankMismatchError(f"relator of rank {r.rank} in a {len(names)}-generator presentation")
            r = r.cyclically_reduced()
            if not r.is_identity:
                rels.append(r)
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    @classmethod
    def from_strings(cls, names: Sequence[str], relators: Sequence[str]) -> Presentation:
        rank = len(names)
        return cls(tuple(names), tuple(parse_word(r, rank, names) for r in relators))

    def to_json(self) -> dict:
        return {
            "generators": list(self.generator_names),
            "relators": [format_word(r, self.generator_names) for r in self.relators],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Presentation:
        try:
            return cls.from_strings(obj["generators"], obj["relators"])
        except (KeyError, TypeError) as exc:
            raise ShapeError(f"malformed presentation JSON: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def load(cls, path: str) -> Presentation:
        with open(path) as fh:
            return cls.from_json(json.load(fh))
