"""Instance emitters and the two verification pipelines.

``emit_instance`` compiles (H, h) into the pair of gadget groups (G_h, G_1)
and the pair of finite subsets of GL(4, Z). ``pipeline_lemma2`` and
``pipeline_3to1`` run the constructive checks against a decidable oracle and
cross-check every branch against direct membership.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import (
    CapabilityError,
    DomainError,
    InvariantViolation,
    NotFoundWithinBound,
    ShapeError,
)
from .fiber import (
    DEFAULT_DEPTH,
    MihailovaGens,
    express_in_generators,
    lemma1_report,
    member_L,
    mihailova_generators,
    search_symbol_word,
)
from .matrep import CHART, DEFAULT_POWER_BOUND, IntMatrix, eval4, member_F2xF2, power_into_F2xF2
from .oracles import QuotientOracle
from .planes import DecompositionVerdict, decomposition_verdict
from .semidir import build_Gh, gadget_action, iso_witness, verify_isomorphism
from .words import PairWord, Presentation, Word

HInput = Union[Word, PairWord]

CONSISTENT = "consistent"
INCONCLUSIVE = "inconclusive"
NEGATIVE = "negative"
REFUTED = "refuted"

EXIT_CODES = {CONSISTENT: 0, INCONCLUSIVE: 2, NEGATIVE: 3, REFUTED: 3}


def resolve_h(g: MihailovaGens, h_input: HInput) -> tuple[PairWord, Word | None]:
    if isinstance(h_input, PairWord):
        return h_input, None
    if isinstance(h_input, Word):
        return g.evaluate(h_input), h_input
    raise TypeError(f"h must be a symbol Word or a PairWord, not {type(h_input).__name__}")


def _h_json(g: MihailovaGens, h: PairWord, sw: Word | None) -> dict:
    out = {"pair": h.to_json(g.source.generator_names)}
    if sw is not None:
        out["symbol_word"] = g.format_symbol(sw)
    return out


def check_oracle(h_pres: Presentation, oracle: QuotientOracle) -> None:
    """The oracle must kill every relator of H, i.e. factor through H."""
    for r in h_pres.relators:
        if oracle.evaluate(r) != oracle.identity:
            raise CapabilityError(f"oracle {oracle.name!r} does not kill relator {r.format(h_pres.generator_names)}")


@dataclass(frozen=True)
class InstanceBundle:
    theorem1: tuple[Presentation, Presentation]
    theorem2: tuple[tuple[IntMatrix, ...], tuple[IntMatrix, ...]]
    provenance: dict

    @property
    def free_rank(self) -> int:
        return len(self.theorem2[0])

    def to_json(self) -> dict:
        return {
            "theorem1": {
                "shape": f"Z^4 x| F_{self.free_rank}",
                "G_h": self.theorem1[0].to_json(),
                "G_1": self.theorem1[1].to_json(),
            },
            "theorem2": {
                "with_h": [m.to_json() for m in self.theorem2[0]],
                "without_h": [m.to_json() for m in self.theorem2[1]],
            },
            "provenance": self.provenance,
        }


def emit_instance(h_pres: Presentation, h_input: HInput, target_shape: str | None = None) -> InstanceBundle:
    g = mihailova_generators(h_pres)
    if target_shape == "f15" and g.p != 14:
        raise ShapeError(f"F15 shape needs a 12-relator presentation, got {len(h_pres.relators)} relators")
    h, sw = resolve_h(g, h_input)
    act_h = gadget_action(g, h)
    act_1 = gadget_action(g, PairWord.identity())
    provenance = {"presentation": h_pres.to_json(), "h": _h_json(g, h, sw), "chart": CHART}
    return InstanceBundle(
        (build_Gh(act_h), build_Gh(act_1)),
        (act_h.matrices, act_1.matrices[:-1]),
        provenance,
    )


@dataclass
class PipelineReport:
    status: str
    data: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> dict:
        return {"status": self.status, **self.data}


def _sample_conjugators(h: PairWord) -> list[PairWord]:
    one = Word.identity(2)
    x1, x2 = Word.generator(2, 1), Word.generator(2, 2)
    return [h, PairWord(x1, one), PairWord(one, x1), PairWord(x2, one), PairWord(one, x2)]


def pipeline_lemma2(
    h_pres: Presentation, oracle: QuotientOracle, h_input: HInput, depth: int = DEFAULT_DEPTH
) -> PipelineReport:
    """Membership of h in L, and if so an isomorphism G_h -> G_1 that is verified both ways."""
    check_oracle(h_pres, oracle)
    g = mihailova_generators(h_pres)
    h, sw = resolve_h(g, h_input)
    names = h_pres.generator_names
    member = member_L(oracle, h)
    data: dict = {"h": _h_json(g, h, sw), "member": member}

    if not member:
        found = search_symbol_word(g, h, depth)
        if found is not None:
            raise InvariantViolation(f"{g.format_symbol(found)} evaluates to a non-member")
        data["search"] = {
            "depth": depth,
            "found": False,
            "note": "bounded enumeration only; consistent with non-membership",
        }
        data["lemma1"] = [lemma1_report(g, oracle, a).to_json(names) for a in _sample_conjugators(h)]
        return PipelineReport(NEGATIVE, data)

    if sw is None:
        try:
            sw = express_in_generators(g, oracle, h, depth)
        except NotFoundWithinBound:
            data["search"] = {"depth": depth, "found": False, "note": "bound exhausted"}
            return PipelineReport(INCONCLUSIVE, data)
        data["search"] = {"depth": depth, "found": True, "symbol_word": g.format_symbol(sw)}
    if g.evaluate(sw) != h:
        raise InvariantViolation("symbol word does not evaluate to h")

    act_h = gadget_action(g, h)
    act_1 = gadget_action(g, PairWord.identity())
    fwd, bwd = iso_witness(g, sw)
    cert = verify_isomorphism(act_h, act_1, fwd, bwd)
    src_names = build_Gh(act_h).generator_names
    data["witness"] = {
        "symbol_word": g.format_symbol(sw),
        "forward": fwd.to_json(src_names, src_names),
        "backward": bwd.to_json(src_names, src_names),
    }
    data["certificate"] = cert.to_json()
    if not cert.ok:
        raise InvariantViolation("isomorphism witness for a member of L failed verification")
    return PipelineReport(CONSISTENT, data)


def pipeline_3to1(
    h_pres: Presentation,
    oracle: QuotientOracle,
    h_input: HInput,
    conjugator: IntMatrix,
    power_bound: int = DEFAULT_POWER_BOUND,
) -> PipelineReport:
    """Run the conjugacy-implies-membership argument on an explicit conjugator.

    The hypothesis is ``<L, h> = g^-1 L g``. Its necessary conditions
    ``g L g^-1 <= L`` and ``g h g^-1 in L`` are checked on generators; together
    with a power ``g^k`` in F2 x F2 and the containment-equality check they
    force ``h`` in L, which is then compared with direct membership.
    """
    if conjugator.dim != 4 or not conjugator.is_unimodular:
        raise DomainError("conjugator must be a unimodular 4x4 matrix")
    check_oracle(h_pres, oracle)
    g = mihailova_generators(h_pres)
    h, sw = resolve_h(g, h_input)
    names = h_pres.generator_names
    member = member_L(oracle, h)
    data: dict = {"h": _h_json(g, h, sw), "member": member}

    verdict = decomposition_verdict(conjugator)
    data["decomposition"] = verdict.value
    if verdict is DecompositionVerdict.NEITHER:
        data["reason"] = "conjugator does not preserve or swap the two summands, so it cannot conjugate L onto an overgroup"
        return PipelineReport(REFUTED, data)

    base, step = (conjugator, 1) if verdict is DecompositionVerdict.PRESERVES else (conjugator @ conjugator, 2)
    try:
        k, pair = power_into_F2xF2(base, power_bound)
    except NotFoundWithinBound:
        data["power"] = {"bound": power_bound, "found": False}
        return PipelineReport(INCONCLUSIVE, data)
    k *= step
    data["power"] = {"k": k, "pair": pair.to_json(names)}

    report = lemma1_report(g, oracle, pair)
    data["lemma1"] = report.to_json(names)

    g_inv = conjugator.inverse()
    failed = []
    for label, x in [(n, eval4(x)) for n, x in zip(g.names, g.gens)] + [("h", eval4(h))]:
        image = member_F2xF2(conjugator @ x @ g_inv)
        if image is None or not member_L(oracle, image):
            failed.append(label)
    data["hypothesis_checks"] = {"failed": failed}
    if failed:
        data["reason"] = "g x g^-1 leaves L for the listed elements, so <L, h> != g^-1 L g"
        return PipelineReport(REFUTED, data)

    if not report.equal:
        raise InvariantViolation("g L g^-1 <= L but the power g^k does not normalize L")
    if not member:
        raise InvariantViolation("conjugacy hypothesis holds on generators but h is not in L")
    data["verdict"] = "h in L"
    return PipelineReport(CONSISTENT, data)
