"""Command line entry point: ``mihailova <subcommand> ...``.

Every invocation prints one JSON document on stdout. Exit codes:
0 success or consistent, 1 usage or input error, 2 inconclusive (search
bound hit), 3 negative or refuted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .errors import MihailovaError, NotAMemberError, NotFoundWithinBound
from .fiber import DEFAULT_DEPTH, express_in_generators, member_L, mihailova_generators
from .matrep import DEFAULT_POWER_BOUND, load_matrices, power_into_F2xF2
from .oracles import ORACLES, get_oracle
from .pipeline import (
    check_oracle,
    emit_instance,
    pipeline_3to1,
    pipeline_lemma2,
    resolve_h,
)
from .planes import DELTA_GENERATORS, invariant_planes_report
from .semidir import HomWitness, build_Gh, gadget_action, iso_witness, verify_hom, verify_isomorphism
from .words import PairWord, Presentation, parse_word

EXIT_OK, EXIT_USAGE, EXIT_INCONCLUSIVE, EXIT_NEGATIVE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj, pretty: bool) -> str:
    return json.dumps(obj, sort_keys=True, indent=2 if pretty else None, ensure_ascii=False)


def _write_json(path: str, obj) -> None:
    with open(path, "w") as fh:
        fh.write(_dump(obj, True) + "\n")


def _presentation(args) -> Presentation:
    if args.presentation:
        return Presentation.load(args.presentation)
    return get_oracle(args.oracle).presentation


def _pair(args, names) -> PairWord:
    if args.left is None and args.right is None:
        raise MihailovaError("give --left and/or --right")
    return PairWord(parse_word(args.left or "1", 2, names), parse_word(args.right or "1", 2, names))


def _h_input(args, g):
    if args.symbol_word is not None:
        return g.symbol(args.symbol_word)
    if args.left is not None or args.right is not None:
        return _pair(args, g.source.generator_names)
    raise MihailovaError("give h as --symbol-word or as --left/--right")


def cmd_gens(args):
    g = mihailova_generators(_presentation(args))
    return g.to_json(), EXIT_OK


def cmd_member(args):
    pres = _presentation(args)
    o = get_oracle(args.oracle)
    check_oracle(pres, o)
    p = _pair(args, pres.generator_names)
    member = member_L(o, p)
    return {"pair": p.to_json(pres.generator_names), "member": member}, EXIT_OK if member else EXIT_NEGATIVE


def cmd_express(args):
    pres = _presentation(args)
    o = get_oracle(args.oracle)
    check_oracle(pres, o)
    g = mihailova_generators(pres)
    p = _pair(args, pres.generator_names)
    out = {"pair": p.to_json(pres.generator_names), "depth": args.depth}
    try:
        w = express_in_generators(g, o, p, args.depth)
    except NotAMemberError:
        return {**out, "member": False}, EXIT_NEGATIVE
    except NotFoundWithinBound:
        return {**out, "member": True, "found": False}, EXIT_INCONCLUSIVE
    return {**out, "member": True, "found": True, "symbol_word": g.format_symbol(w)}, EXIT_OK


def cmd_emit_iso(args):
    pres = _presentation(args)
    g = mihailova_generators(pres)
    bundle = emit_instance(pres, _h_input(args, g), args.target_shape)
    doc = bundle.to_json()
    out = {"theorem1": doc["theorem1"], "provenance": doc["provenance"]}
    if args.write_files:
        os.makedirs(args.write_files, exist_ok=True)
        _write_json(os.path.join(args.write_files, "G_h.json"), doc["theorem1"]["G_h"])
        _write_json(os.path.join(args.write_files, "G_1.json"), doc["theorem1"]["G_1"])
    return out, EXIT_OK


def cmd_emit_conj(args):
    pres = _presentation(args)
    g = mihailova_generators(pres)
    doc = emit_instance(pres, _h_input(args, g)).to_json()
    out = {"theorem2": doc["theorem2"], "provenance": doc["provenance"]}
    if args.write_files:
        os.makedirs(args.write_files, exist_ok=True)
        _write_json(os.path.join(args.write_files, "subset_with_h.json"), doc["theorem2"]["with_h"])
        _write_json(os.path.join(args.write_files, "subset_L.json"), doc["theorem2"]["without_h"])
    return out, EXIT_OK


def cmd_iso_witness(args):
    pres = _presentation(args)
    g = mihailova_generators(pres)
    sw = g.symbol(args.symbol_word)
    fwd, bwd = iso_witness(g, sw)
    names = build_Gh(gadget_action(g, g.evaluate(sw))).generator_names
    return {
        "symbol_word": g.format_symbol(sw),
        "forward": fwd.to_json(names, names),
        "backward": bwd.to_json(names, names),
    }, EXIT_OK


def cmd_verify(args):
    pres = _presentation(args)
    g = mihailova_generators(pres)
    h, sw = resolve_h(g, _h_input(args, g))
    act_h = gadget_action(g, h)
    act_1 = gadget_action(g, PairWord.identity())
    src = build_Gh(act_h)
    if args.witness:
        with open(args.witness) as fh:
            obj = json.load(fh)
        w = HomWitness.from_json(obj.get("forward", obj), src.generator_names, src.generator_names)
        check = verify_hom(src, act_1, w)
        return {"direction": "G_h -> G_1", **check.to_json()}, EXIT_OK if check.ok else EXIT_NEGATIVE
    if sw is None:
        raise MihailovaError("without --witness, h must be given as a symbol word")
    fwd, bwd = iso_witness(g, sw)
    cert = verify_isomorphism(act_h, act_1, fwd, bwd)
    return cert.to_json(), EXIT_OK if cert.ok else EXIT_NEGATIVE


def cmd_planes(args):
    if args.matrices:
        ms = load_matrices(args.matrices)
    elif args.delta_only:
        ms = list(DELTA_GENERATORS)
    else:
        g = mihailova_generators(_presentation(args))
        ms = list(gadget_action(g, PairWord.identity()).matrices[:-1])
    return invariant_planes_report(ms).to_json(), EXIT_OK


def cmd_power(args):
    (m,) = load_matrices(args.matrix)
    try:
        k, pair = power_into_F2xF2(m, args.power_bound)
    except NotFoundWithinBound:
        return {"found": False, "bound": args.power_bound}, EXIT_INCONCLUSIVE
    return {"found": True, "k": k, "pair": pair.to_json()}, EXIT_OK


def cmd_pipeline_lemma2(args):
    pres = _presentation(args)
    g = mihailova_generators(pres)
    report = pipeline_lemma2(pres, get_oracle(args.oracle), _h_input(args, g), args.depth)
    return report.to_json(), report.exit_code


def cmd_pipeline_3to1(args):
    pres = _presentation(args)
    g = mihailova_generators(pres)
    (conj,) = load_matrices(args.conjugator)
    report = pipeline_3to1(pres, get_oracle(args.oracle), _h_input(args, g), conj, args.power_bound)
    return report.to_json(), report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mihailova", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, h_input=False, pair=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--oracle", choices=sorted(ORACLES), default="s3", help="decidable quotient fixture")
        p.add_argument("--presentation", help="JSON presentation of H (default: the oracle's)")
        p.add_argument("--pretty", action="store_true")
        if h_input or pair:
            p.add_argument("--left", help="left component, e.g. 'x1 x2^-1'")
            p.add_argument("--right", help="right component")
        if h_input:
            p.add_argument("--symbol-word", help="h as a word in h1..hp, e.g. 'h1 h4^-1'")
        return p

    add("gens", cmd_gens, "generators of the fiber product L")
    add("member", cmd_member, "membership of a pair in L", pair=True)
    p = add("express", cmd_express, "write a member of L in the generators", pair=True)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p = add("emit-iso-instance", cmd_emit_iso, "emit the presentations of G_h and G_1", h_input=True)
    p.add_argument("--target-shape", choices=["any", "f15"], default="any")
    p.add_argument("--write-files", metavar="DIR")
    p = add("emit-conj-instance", cmd_emit_conj, "emit the two finite subsets of GL(4,Z)", h_input=True)
    p.add_argument("--write-files", metavar="DIR")
    p = add("iso-witness", cmd_iso_witness, "isomorphism G_h -> G_1 and its inverse")
    p.add_argument("--symbol-word", required=True)
    p = add("verify", cmd_verify, "verify a homomorphism witness", h_input=True)
    p.add_argument("--witness", help="JSON witness; default: build and check the standard pair")
    p = add("planes", cmd_planes, "classify invariant 2-planes")
    p.add_argument("--matrices", help="JSON array of 4x4 matrices")
    p.add_argument("--delta-only", action="store_true", help="use only the diagonal generators")
    p = add("power", cmd_power, "smallest power of a matrix inside F2 x F2")
    p.add_argument("--matrix", required=True)
    p.add_argument("--power-bound", type=int, default=DEFAULT_POWER_BOUND)
    p = add("pipeline-lemma2", cmd_pipeline_lemma2, "membership / isomorphism pipeline", h_input=True)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p = add("pipeline-3to1", cmd_pipeline_3to1, "conjugator certificate pipeline", h_input=True)
    p.add_argument("--conjugator", required=True, help="JSON 4x4 matrix")
    p.add_argument("--power-bound", type=int, default=DEFAULT_POWER_BOUND)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "target_shape", None) == "any":
            args.target_shape = None
        out, code = args.func(args)
    except (ValueError, OSError) as exc:
        print(_dump({"error": type(exc).__name__, "message": str(exc)}, args.pretty))
        return EXIT_USAGE
    print(_dump(out, args.pretty))
    return code


if __name__ == "__main__":
    sys.exit(main())
