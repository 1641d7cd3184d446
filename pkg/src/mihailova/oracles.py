"""Decidable stand-ins for the projection F2 -> H.

An oracle maps rank-2 words to hashable tokens so that equal tokens mean equal
images in H. Shipped fixtures:

* ``s3``   -- H = S3 via permutations, x1 -> (1 2), x2 -> (1 2 3)
* ``zsq``  -- H = Z^2 (abelianization), tokens are exponent-sum pairs
* ``free`` -- H = F2 itself, tokens are reduced words; then L is the diagonal

Permutations act left to right: ``p * q`` means apply ``p`` first, then ``q``.
"""

from __future__ import annotations

import json
from abc import ABC, abstractmethod
from importlib import resources
from typing import Hashable, Sequence

from ._backend import kernels
from .errors import CapabilityError, RankMismatchError
from .words import Presentation, Word

Token = Hashable


class QuotientOracle(ABC):
    """Word-problem decision for a 2-generated quotient of F2."""

    name: str = "abstract"
    supports_centrality: bool = True

    def __init__(self, presentation: Presentation):
        if presentation.generator_count != 2:
            raise RankMismatchError("oracles present 2-generated groups")
        self.presentation = presentation

    @property
    @abstractmethod
    def identity(self) -> Token: ...

    @abstractmethod
    def mul(self, x: Token, y: Token) -> Token: ...

    @abstractmethod
    def inv(self, x: Token) -> Token: ...

    @abstractmethod
    def generator_token(self, index: int) -> Token: ...

    def power(self, x: Token, n: int) -> Token:
        if n < 0:
            x, n = self.inv(x), -n
        result = self.identity
        while n:
            if n & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            n >>= 1
        return result

    def evaluate(self, word: Word) -> Token:
        if word.rank != 2:
            raise RankMismatchError(f"oracle input must have rank 2, got {word.rank}")
        result = self.identity
        for g, e in word.syllables:
            result = self.mul(result, self.power(self.generator_token(g), e))
        return result

    def commutes(self, x: Token, y: Token) -> bool:
        return self.mul(x, y) == self.mul(y, x)

    def is_central(self, x: Token) -> bool:
        if not self.supports_centrality:
            raise CapabilityError(f"oracle {self.name!r} cannot test centrality")
        return all(self.commutes(x, self.generator_token(i)) for i in (1, 2))


class PermutationOracle(QuotientOracle):
    """H given as a permutation group on ``range(n)``; tokens are image tuples."""

    def __init__(self, presentation: Presentation, images: Sequence[Sequence[int]], name: str = "perm"):
        super().__init__(presentation)
        self.name = name
        self._gens = tuple(tuple(p) for p in images)
        degree = len(self._gens[0])
        self._identity = tuple(range(degree))
        for p in self._gens:
            if sorted(p) != list(self._identity):
                raise ValueError(f"{p} is not a permutation of range({degree})")

    @property
    def identity(self):
        return self._identity

    def mul(self, x, y):
        return tuple(y[i] for i in x)

    def inv(self, x):
        out = [0] * len(x)
        for i, j in enumerate(x):
            out[j] = i
        return tuple(out)

    def generator_token(self, index):
        return self._gens[index - 1]


class AbelianizationOracle(QuotientOracle):
    """H = Z^2; a word's token is its pair of exponent sums."""

    name = "zsq"

    @property
    def identity(self):
        return (0, 0)

    def mul(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def inv(self, x):
        return (-x[0], -x[1])

    def power(self, x, n):
        return (x[0] * n, x[1] * n)

    def generator_token(self, index):
        return (1, 0) if index == 1 else (0, 1)


class FreeOracle(QuotientOracle):
    """Identity quotient F2 -> F2; tokens are reduced syllable tuples."""

    name = "free"

    @property
    def identity(self):
        return ()

    def mul(self, x, y):
        return kernels.concat_reduce(x, y)

    def inv(self, x):
        return kernels.invert_syllables(x)

    def evaluate(self, word):
        if word.rank != 2:
            raise RankMismatchError(f"oracle input must have rank 2, got {word.rank}")
        return word.syllables

    def generator_token(self, index):
        return ((index, 1),)


S3_PRESENTATION = Presentation.from_strings(["x1", "x2"], ["x1 x1", "x2 x2 x2", "x1 x2 x1 x2"])
ZSQ_PRESENTATION = Presentation.from_strings(["x1", "x2"], ["x1 x2 x1^-1 x2^-1"])
FREE_PRESENTATION = Presentation.from_strings(["x1", "x2"], [])

_S3_IMAGES = ((1, 0, 2), (1, 2, 0))


def s3_oracle(presentation: Presentation | None = None) -> PermutationOracle:
    return PermutationOracle(presentation or S3_PRESENTATION, _S3_IMAGES, name="s3")


def zsq_oracle() -> AbelianizationOracle:
    return AbelianizationOracle(ZSQ_PRESENTATION)


def free_oracle() -> FreeOracle:
    return FreeOracle(FREE_PRESENTATION)


def s3_twelve_presentation() -> Presentation:
    """A 12-relator presentation of S3, for reproducing the 14-generator/F15 shapes."""
    text = resources.files("mihailova.data").joinpath("s3_twelve.json").read_text()
    return Presentation.from_json(json.loads(text))


ORACLES = {"s3": s3_oracle, "zsq": zsq_oracle, "free": free_oracle}


def get_oracle(name: str) -> QuotientOracle:
    try:
        return ORACLES[name]()
    except KeyError:
        raise ValueError(f"unknown oracle {name!r}; choose from {sorted(ORACLES)}") from None


def apply_oracle(o: QuotientOracle, u: Word) -> Token:
    return o.evaluate(u)


def is_central(o: QuotientOracle, u: Word) -> bool:
    return o.is_central(o.evaluate(u))
