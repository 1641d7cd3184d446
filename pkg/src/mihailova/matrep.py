"""Integer matrices and the faithful picture F2 x F2 < GL(4, Z).

The chart sends the free generators to the Sanov matrices
``A = [[1, 2], [0, 1]]`` and ``B = [[1, 0], [2, 1]]``; pairs go to
block-diagonal 4x4 matrices. The image of F2 is the index-2 subgroup of the
level-2 congruence subgroup not containing ``-I`` (index 24 in GL(2, Z)),
so membership reduces to a determinant test, a parity test and a
Euclid-style peeling loop that also recovers the word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._backend import kernels
from .errors import DomainError, NotFoundWithinBound, ShapeError
from .words import PairWord, Word

CHART = "sanov-2"
DEFAULT_POWER_BOUND = 1200


@dataclass(frozen=True, slots=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ShapeError("IntMatrix must be square and nonempty")

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if other.dim != self.dim:
            raise ShapeError(f"{self.dim}x{self.dim} @ {other.dim}x{other.dim}")
        return IntMatrix(kernels.mat_mul(self.rows, other.rows))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(tuple(tuple(-x for x in r) for r in self.rows))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def det(self) -> int:
        # Bareiss fraction-free elimination
        m = [list(r) for r in self.rows]
        n = self.dim
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    @property
    def is_unimodular(self) -> bool:
        return self.det() in (1, -1)

    def inverse(self) -> IntMatrix:
        """Exact inverse of a unimodular matrix."""
        if not self.is_unimodular:
            raise DomainError("only unimodular matrices have integer inverses")
        n = self.dim
        m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next(i for i in range(c, n) if m[i][c] != 0)
            m[c], m[piv] = m[piv], m[c]
            pv = m[c][c]
            m[c] = [x / pv for x in m[c]]
            for i in range(n):
                if i != c and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return IntMatrix(tuple(tuple(int(x) for x in r[n:]) for r in m))

    def __pow__(self, k: int) -> IntMatrix:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = IntMatrix.identity(self.dim)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def block(self, i: int, j: int) -> IntMatrix:
        """2x2 block (i, j) of a 4x4 matrix, i, j in {0, 1}."""
        if self.dim != 4:
            raise ShapeError("blocks are defined for 4x4 matrices")
        return IntMatrix(tuple(tuple(self.rows[2 * i + r][2 * j + c] for c in range(2)) for r in range(2)))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def to_json(self) -> dict:
        return {"dim": self.dim, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> IntMatrix:
        try:
            m = cls.of(obj["rows"])
        except (KeyError, TypeError) as exc:
            raise ShapeError(f"malformed matrix JSON: {exc}") from exc
        if "dim" in obj and obj["dim"] != m.dim:
            raise ShapeError(f"declared dim {obj['dim']} but rows give {m.dim}")
        return m

    def __str__(self) -> str:
        return str([list(r) for r in self.rows])


def block_diag(p: IntMatrix, q: IntMatrix) -> IntMatrix:
    if p.dim != 2 or q.dim != 2:
        raise ShapeError("block_diag takes two 2x2 matrices")
    (a, b), (c, d) = p.rows
    (e, f), (g, h) = q.rows
    return IntMatrix(((a, b, 0, 0), (c, d, 0, 0), (0, 0, e, f), (0, 0, g, h)))


def from_blocks(p: IntMatrix, q: IntMatrix, r: IntMatrix, s: IntMatrix) -> IntMatrix:
    """``[[p, q], [r, s]]`` from four 2x2 blocks."""
    top = tuple(p.rows[i] + q.rows[i] for i in range(2))
    bottom = tuple(r.rows[i] + s.rows[i] for i in range(2))
    return IntMatrix(top + bottom)


SANOV_A = IntMatrix(((1, 2), (0, 1)))
SANOV_B = IntMatrix(((1, 0), (2, 1)))
I2 = IntMatrix.identity(2)
I4 = IntMatrix.identity(4)


def eval2(w: Word) -> IntMatrix:
    if w.rank != 2:
        raise ShapeError(f"eval2 takes rank-2 words, got rank {w.rank}")
    a, b, c, d = kernels.sanov_eval(w.syllables)
    return IntMatrix(((a, b), (c, d)))


def eval4(p: PairWord) -> IntMatrix:
    return block_diag(eval2(p.left), eval2(p.right))


def member_F2(m: IntMatrix) -> Word | None:
    """The reduced word ``w`` with ``eval2(w) == m``, or None if there is none."""
    if m.dim != 2:
        raise ShapeError("member_F2 takes a 2x2 matrix")
    (a, b), (c, d) = m.rows
    syl = kernels.sanov_peel(a, b, c, d)
    return None if syl is None else Word(2, syl)


def member_F2xF2(m: IntMatrix) -> PairWord | None:
    if m.dim != 4:
        raise ShapeError("member_F2xF2 takes a 4x4 matrix")
    if not (m.block(0, 1).is_zero() and m.block(1, 0).is_zero()):
        return None
    left = member_F2(m.block(0, 0))
    if left is None:
        return None
    right = member_F2(m.block(1, 1))
    if right is None:
        return None
    return PairWord(left, right)


def power_into_F2xF2(g: IntMatrix, bound: int = DEFAULT_POWER_BOUND) -> tuple[int, PairWord]:
    """Smallest ``1 <= k <= bound`` with ``g**k`` in the image of F2 x F2."""
    if g.dim != 4:
        raise ShapeError("power_into_F2xF2 takes a 4x4 matrix")
    if not g.is_unimodular:
        raise DomainError("power_into_F2xF2 needs a unimodular matrix")
    power = g
    for k in range(1, bound + 1):
        pair = member_F2xF2(power)
        if pair is not None:
            return k, pair
        power = power @ g
    raise NotFoundWithinBound(f"no power g^k with k <= {bound} lies in F2 x F2", bound)


def load_matrices(path: str) -> list[IntMatrix]:
    """Read one matrix object or a JSON array of them."""
    with open(path) as fh:
        obj = json.load(fh)
    if isinstance(obj, dict):
        return [IntMatrix.from_json(obj)]
    return [IntMatrix.from_json(o) for o in obj]
