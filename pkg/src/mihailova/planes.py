"""Invariant 2-planes of subgroups of GL(4, Z) acting on Q^4, over exact rationals.

Q^4 = Q^2 + Q^2 and ``H_lam = {(x, lam * x)}``, with ``H_0`` the first
summand and ``H_inf`` the second. For a generator set containing the two
diagonal images ``blockdiag(A, A)`` and ``blockdiag(B, B)``, every invariant
2-plane is some ``H_lam``, because {A, B} acts absolutely irreducibly on Q^2
(checked at run time through its commutant). A 4x4 matrix
``M = [[P, Q], [R, S]]`` preserves ``H_lam`` iff ``R + lam (S - P) - lam^2 Q = 0``,
and preserves ``H_inf`` iff ``Q = 0``; the report solves these exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InvariantViolation, ShapeError, UnsupportedInputError
from .matrep import SANOV_A, SANOV_B, IntMatrix, block_diag

Rational = Union[int, Fraction]
Lambda = Union[Fraction, None]  # None stands for infinity

INF = None


def rref(rows: Sequence[Sequence[Rational]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Rational]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Rational]], ncols: int) -> list[tuple[Fraction, ...]]:
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_rational(s: str | int) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class PlaneQ:
    """2-dimensional subspace of Q^4, stored as its 2x4 reduced row echelon basis."""

    basis: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Rational]]) -> PlaneQ:
        reduced, _ = rref(list(vectors))
        if len(reduced) != 2 or len(reduced[0]) != 4:
            raise ShapeError(f"vectors span a {len(reduced)}-dimensional space, not a plane in Q^4")
        return cls((tuple(reduced[0]), tuple(reduced[1])))

    def image(self, m: IntMatrix) -> list[tuple[Fraction, ...]]:
        return [tuple(sum(a * x for a, x in zip(row, v)) for row in m.rows) for v in self.basis]

    def to_json(self) -> dict:
        return {"basis": [[_fmt(x) for x in v] for v in self.basis]}

    @classmethod
    def from_json(cls, obj: dict) -> PlaneQ:
        return cls.span([[_parse_rational(x) for x in v] for v in obj["basis"]])


def plane_H(lam: Lambda | Rational | str) -> PlaneQ:
    """``H_lam``; pass None, ``"inf"`` or ``math.inf`` for the vertical plane."""
    if lam is None or lam == "inf" or lam == "∞" or (isinstance(lam, float) and math.isinf(lam)):
        return PlaneQ.span([(0, 0, 1, 0), (0, 0, 0, 1)])
    lam = Fraction(lam)
    return PlaneQ.span([(1, 0, lam, 0), (0, 1, 0, lam)])


H0 = plane_H(0)
H_INF = plane_H(INF)


def maps_into(p: PlaneQ, m: IntMatrix, target: PlaneQ) -> bool:
    return rank(list(target.basis) + p.image(m)) == 2


def is_invariant(p: PlaneQ, ms: Iterable[IntMatrix]) -> bool:
    """True iff every matrix maps the plane onto itself."""
    for m in ms:
        img = p.image(m)
        if rank(img) != 2 or rank(list(p.basis) + img) != 2:
            return False
    return True


def commutant_basis(ms: Sequence[IntMatrix]) -> list[tuple[Fraction, ...]]:
    """Basis (flattened row-major) of ``{X : XM = MX for all M in ms}``."""
    if not ms:
        raise UnsupportedInputError("commutant of an empty set is not computed")
    n = ms[0].dim
    eqs = []
    for m in ms:
        if m.dim != n:
            raise ShapeError("matrices of mixed size")
        M = m.rows
        for i in range(n):
            for j in range(n):
                row = [0] * (n * n)
                for k in range(n):
                    row[i * n + k] += M[k][j]
                    row[k * n + j] -= M[i][k]
                eqs.append(row)
    return nullspace(eqs, n * n)


def commutant_dim(ms: Sequence[IntMatrix]) -> int:
    return len(commutant_basis(ms))


DELTA_GENERATORS = (block_diag(SANOV_A, SANOV_A), block_diag(SANOV_B, SANOV_B))


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _roots(c0: Fraction, c1: Fraction, c2: Fraction) -> set[Fraction]:
    """Rational roots of ``c0 + c1 x + c2 x^2`` (not identically zero)."""
    if c2 == 0:
        if c1 == 0:
            return set()
        return {-c0 / c1}
    root = _rational_sqrt(c1 * c1 - 4 * c2 * c0)
    if root is None:
        return set()
    return {(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)}


def _lambda_polys(m: IntMatrix) -> list[tuple[Fraction, Fraction, Fraction]]:
    P, Q, R, S = m.block(0, 0), m.block(0, 1), m.block(1, 0), m.block(1, 1)
    polys = []
    for i in range(2):
        for j in range(2):
            c = (Fraction(R.rows[i][j]), Fraction(S.rows[i][j] - P.rows[i][j]), Fraction(-Q.rows[i][j]))
            if any(c):
                polys.append(c)
    return polys


def _lambda_key(lam: Lambda):
    return (1, 0) if lam is None else (0, lam)


@dataclass(frozen=True)
class PlaneReport:
    family: bool
    lambdas: tuple[Lambda, ...]
    commutant_dim: int

    @property
    def planes(self) -> list[PlaneQ]:
        return [plane_H(lam) for lam in self.lambdas]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "description": "all H_lambda, lambda in Q or inf" if self.family else "finite list",
            "lambdas": [] if self.family else ["inf" if x is None else _fmt(x) for x in self.lambdas],
            "planes": [] if self.family else [p.to_json() for p in self.planes],
            "commutant_dim": self.commutant_dim,
        }


def invariant_planes_report(ms: Sequence[IntMatrix]) -> PlaneReport:
    """Classify the invariant 2-planes of a generator set that contains the diagonal images."""
    ms = list(ms)
    if any(m.dim != 4 for m in ms):
        raise UnsupportedInputError("plane classification takes 4x4 matrices")
    if not all(d in ms for d in DELTA_GENERATORS):
        raise UnsupportedInputError("generator set must contain blockdiag(A, A) and blockdiag(B, B)")
    if commutant_dim([SANOV_A, SANOV_B]) != 1:
        raise InvariantViolation("chart is not absolutely irreducible")

    polys = [c for m in ms for c in _lambda_polys(m)]
    cdim = commutant_dim(ms)
    if not polys:
        if cdim != 4:
            raise InvariantViolation(f"full H_lambda family but commutant dimension {cdim}")
        return PlaneReport(True, (), cdim)

    candidates: set[Lambda] = set(_roots(*polys[0]))
    candidates = {lam for lam in candidates if all(c0 + c1 * lam + c2 * lam * lam == 0 for c0, c1, c2 in polys)}
    if all(m.block(0, 1).is_zero() for m in ms):
        candidates.add(INF)
    lambdas = tuple(sorted(candidates, key=_lambda_key))
    for lam in lambdas:
        if not is_invariant(plane_H(lam), ms):
            raise InvariantViolation(f"H_{lam} reported invariant but fails the direct check")
    return PlaneReport(False, lambdas, cdim)


class DecompositionVerdict(enum.Enum):
    PRESERVES = "preserves"
    SWAPS = "swaps"
    NEITHER = "neither"


def decomposition_verdict(g: IntMatrix) -> DecompositionVerdict:
    if g.dim != 4:
        raise ShapeError("decomposition_verdict takes a 4x4 matrix")
    if maps_into(H0, g, H0) and maps_into(H_INF, g, H_INF) and rank(H0.image(g) + H_INF.image(g)) == 4:
        return DecompositionVerdict.PRESERVES
    if maps_into(H0, g, H_INF) and maps_into(H_INF, g, H0) and rank(H0.image(g) + H_INF.image(g)) == 4:
        return DecompositionVerdict.SWAPS
    return DecompositionVerdict.NEITHER
