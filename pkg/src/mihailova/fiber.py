"""The fiber product L = {(u, v) : pi(u) = pi(v)} inside F2 x F2.

For H = <x1, x2 | r_1, ..., r_k> the subgroup L is generated by the two
diagonal pairs (x1, x1), (x2, x2) and the relator pairs (1, r_j), in that
order. Membership is delegated to a quotient oracle; for a genuinely
undecidable H nothing here can decide it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvariantViolation, NotAMemberError, NotFoundWithinBound, ShapeError
from .oracles import QuotientOracle
from .words import PairWord, Presentation, Word, format_word, parse_word

DEFAULT_DEPTH = 8


def symbol_names(p: int) -> list[str]:
    return [f"h{i + 1}" for i in range(p)]


@dataclass(frozen=True)
class MihailovaGens:
    source: Presentation
    gens: tuple[PairWord, ...]

    @property
    def p(self) -> int:
        return len(self.gens)

    @property
    def names(self) -> list[str]:
        return symbol_names(self.p)

    def symbol(self, text: str) -> Word:
        """Parse a symbol word such as ``"h1 h4^-1 h2"``."""
        return parse_word(text, self.p, self.names)

    def format_symbol(self, w: Word) -> str:
        return format_word(w, self.names)

    def evaluate(self, symbol_word: Word) -> PairWord:
        if symbol_word.rank != self.p:
            raise ShapeError(f"symbol word of rank {symbol_word.rank}, expected {self.p}")
        result = PairWord.identity()
        for g, e in symbol_word.syllables:
            step = self.gens[g - 1] if e > 0 else self.gens[g - 1].inverse()
            for _ in range(abs(e)):
                result = result * step
        return result

    def to_json(self) -> dict:
        names = self.source.generator_names
        return {
            "presentation": self.source.to_json(),
            "generators": [
                dict(name=n, **g.to_json(names)) for n, g in zip(self.names, self.gens)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> MihailovaGens:
        source = Presentation.from_json(obj["presentation"])
        names = source.generator_names
        return cls(source, tuple(PairWord.from_json(g, names) for g in obj["generators"]))


def mihailova_generators(h_pres: Presentation) -> MihailovaGens:
    if h_pres.generator_count != 2:
        raise ShapeError(f"H must be 2-generated, got {h_pres.generator_count} generators")
    one = Word.identity(2)
    gens = [PairWord.diagonal(Word.generator(2, 1)), PairWord.diagonal(Word.generator(2, 2))]
    gens.extend(PairWord(one, r) for r in h_pres.relators)
    return MihailovaGens(h_pres, tuple(gens))


def member_L(o: QuotientOracle, p: PairWord) -> bool:
    return o.evaluate(p.left) == o.evaluate(p.right)


def _neighbours(steps: Sequence[tuple[int, PairWord]], node: PairWord):
    for letter, step in steps:
        yield letter, node * step


def _trace(parents: dict, node: PairWord) -> list[int]:
    letters = []
    while True:
        prev, letter, _ = parents[node]
        if prev is None:
            break
        letters.append(letter)
        node = prev
    letters.reverse()
    return letters


def express_in_generators(
    g: MihailovaGens, o: QuotientOracle, p: PairWord, depth: int = DEFAULT_DEPTH
) -> Word:
    """Shortest symbol word (length <= depth) evaluating to ``p``.

    Meet-in-the-middle breadth-first search: one ball grows from the identity,
    one from ``p``, both by right multiplication with ``h_i^{+-1}``. A node
    ``x = eval(W)`` meeting ``y = p * eval(U)`` gives ``p = eval(W U^-1)``.

    Raises NotAMemberError when ``p`` is not in L and NotFoundWithinBound when
    the search is exhausted; the latter proves nothing about expressibility.
    """
    if not member_L(o, p):
        raise NotAMemberError(f"{p} is not in L")
    w = search_symbol_word(g, p, depth)
    if w is None:
        if p.left == p.right:
            # diagonal pairs are words in the first two generators verbatim
            return Word(g.p, p.left.syllables)
        raise NotFoundWithinBound(f"no symbol word of length <= {depth} evaluates to {p}", depth)
    return w


def search_symbol_word(g: MihailovaGens, p: PairWord, depth: int = DEFAULT_DEPTH) -> Word | None:
    """The search behind :func:`express_in_generators`, without the membership gate."""
    steps = []
    for i, h in enumerate(g.gens, start=1):
        steps.append((i, h))
        steps.append((-i, h.inverse()))

    fwd = {PairWord.identity(): (None, 0, 0)}
    bwd = {p: (None, 0, 0)}
    fwd_layer = [PairWord.identity()]
    bwd_layer = [p]
    meet = p if p in fwd else None
    rf = rb = 0
    while meet is None and rf + rb < depth:
        grow_fwd = len(fwd_layer) <= len(bwd_layer)
        visited, other, layer = (fwd, bwd, fwd_layer) if grow_fwd else (bwd, fwd, bwd_layer)
        radius = (rf if grow_fwd else rb) + 1
        new_layer = []
        best = None
        for node in layer:
            for letter, nxt in _neighbours(steps, node):
                if nxt in visited:
                    continue
                visited[nxt] = (node, letter, radius)
                new_layer.append(nxt)
                if nxt in other and (best is None or other[nxt][2] < best):
                    meet, best = nxt, other[nxt][2]
        if grow_fwd:
            fwd_layer, rf = new_layer, rf + 1
        else:
            bwd_layer, rb = new_layer, rb + 1
        if not new_layer:
            break

    if meet is None:
        return None

    head = _trace(fwd, meet)
    tail = _trace(bwd, meet)
    w = Word.from_letters(g.p, head + [-x for x in reversed(tail)])
    if g.evaluate(w) != p:
        raise InvariantViolation(f"search returned {g.format_symbol(w)} which does not evaluate to {p}")
    return w


@dataclass(frozen=True)
class ContainmentReport:
    """Generator-level test of ``a L a^-1 <= L`` (forward) and ``a^-1 L a <= L`` (backward)."""

    element: PairWord
    forward: tuple[bool, ...]
    backward: tuple[bool, ...]
    central_witness: bool

    @property
    def contained(self) -> bool:
        return all(self.forward)

    @property
    def equal(self) -> bool:
        return all(self.forward) and all(self.backward)

    def to_json(self, names: Sequence[str] | None = None) -> dict:
        return {
            "element": self.element.to_json(names),
            "forward": list(self.forward),
            "backward": list(self.backward),
            "central_witness": self.central_witness,
            "contained": self.contained,
            "equal": self.equal,
        }


def lemma1_report(g: MihailovaGens, o: QuotientOracle, a: PairWord) -> ContainmentReport:
    """Check on generators whether conjugation by ``a`` maps L into itself, and back.

    Whenever the forward containment holds the backward one must too, and the
    image of ``x^-1 y`` (for ``a = (x, y)``) must be central; a violation
    raises InvariantViolation, which means the oracle is not a homomorphism
    onto the presented group.
    """
    a_inv = a.inverse()
    forward = tuple(member_L(o, a * h * a_inv) for h in g.gens)
    backward = tuple(member_L(o, a_inv * h * a) for h in g.gens)
    central = o.is_central(o.evaluate(a.left.inverse() * a.right))
    report = ContainmentReport(a, forward, backward, central)
    if report.contained and not (report.equal and central):
        raise InvariantViolation(f"containment without equality/centrality for a = {a}")
    return report
