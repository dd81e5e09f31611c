"""Command-line front end.

All mathematics flows through the library; this layer only parses flags,
loads JSON payloads, and emits deterministic documents (sorted keys, no
timestamps).  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import affine, cuspidal, duality, invariants, modexpr, pbw, qdata, rootsys
from .affine import SigmaPoint, type_info
from .cuspidal import CuspidalSeq, FundamentalCuspidalSeq
from .modexpr import FusionTable
from .qdata import QDatum

_INVARIANT_KINDS = {
    "d": invariants.d_fund,
    "lambda": invariants.lambda_fund,
    "lambda-inf": invariants.lambda_inf_fund,
    "de-tilde": invariants.de_tilde_fund,
    "zero-c": invariants.zero_c_fund,
    "pairing-e": invariants.pairing_E,
}


def _payload(text: str):
    """A JSON value, either inline or @file."""
    if text.startswith("@"):
        return json.loads(Path(text[1:]).read_text())
    return json.loads(text)


def _emit(doc, fmt: str) -> None:
    if fmt == "text":
        print(doc if isinstance(doc, str) else json.dumps(doc, sort_keys=True))
    else:
        print(json.dumps(doc, sort_keys=True))


def _point(text: str) -> SigmaPoint:
    i, p = (int(x) for x in text.split(","))
    return SigmaPoint(i, p)


def _word(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _range(text: str) -> tuple[int, int]:
    lo, hi = text.split("..")
    return int(lo), int(hi)


def _load_qdatum(info, text: str) -> QDatum:
    data = _payload(text)
    letter, rank = info.fin_type
    data.setdefault("fin_type", letter)
    data.setdefault("rank", rank)
    return qdata.qdatum_from_json(data)


def _load_facts(info, args) -> FusionTable:
    table = FusionTable.builtin(info)
    if getattr(args, "facts", None):
        loaded = FusionTable.from_json(info, _payload(args.facts))
        table = FusionTable(info, table.facts + loaded.facts)
    return table


def _maybe_load_denoms(args) -> None:
    if getattr(args, "denoms", None):
        affine.load_denominator_json(_payload(args.denoms))


def _expr_doc(e) -> dict:
    return modexpr.expr_to_json(e)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_roots(args) -> int:
    rs = rootsys.RootSystem(args.fin[0], int(args.fin[1:]))
    if args.word:
        word = _word(args.word)
        doc = {
            "fin_type": args.fin,
            "word": list(word),
            "reduced": rs.is_reduced(word),
        }
        if doc["reduced"]:
            doc["betas"] = [list(b) for b in rs.beta_sequence(word)]
            doc["spells_longest"] = rs.spells_longest(word)
    else:
        doc = {
            "fin_type": args.fin,
            "longest_word": list(rs.longest_word()),
            "positive_roots": [list(b) for b in rs.positive_roots()],
            "star": {str(i): rs.star(i) for i in rs.nodes},
        }
    _emit(doc, args.format)
    return 0


def _cmd_adapted(args) -> int:
    info = type_info(args.type)
    q = _load_qdatum(info, args.q)
    if args.word:
        word = _word(args.word)
        _emit({"word": list(word), "adapted": qdata.is_adapted(q, word)}, args.format)
    else:
        words = [list(w) for w in qdata.adapted_words(q)]
        _emit({"count": len(words), "adapted_words": words}, args.format)
    return 0


def _cmd_phi(args) -> int:
    info = type_info(args.type)
    q = _load_qdatum(info, args.q)
    word = _word(args.word) if args.word else qdata.some_adapted_word(q)
    mapping = qdata.phi(q, word)
    doc = {
        "word": list(word),
        "labels": [
            {"root": list(beta), "point": [pt.node, pt.power]}
            for beta, pt in mapping.items()
        ],
    }
    _emit(doc, args.format)
    return 0


def _cmd_datum_from_q(args) -> int:
    info = type_info(args.type)
    q = _load_qdatum(info, args.q)
    datum = duality.from_q_datum(info, q)
    doc = duality.datum_to_json(datum)
    doc["strength"] = datum.strength
    doc["complete"] = datum.complete
    _emit(doc, args.format)
    return 0


def _cmd_reflect(args) -> int:
    info = type_info(args.type)
    _maybe_load_denoms(args)
    facts = _load_facts(info, args)
    if args.datum:
        datum = duality.datum_from_json(_payload(args.datum))
    else:
        datum = duality.from_q_datum(info, _load_qdatum(info, args.q))
    op = duality.reflect_inv if args.inverse else duality.reflect
    for _ in range(args.times):
        datum = op(datum, args.node, facts)
    doc = duality.datum_to_json(datum)
    doc["strength"] = datum.strength
    doc["complete"] = datum.complete
    _emit(doc, args.format)
    return 0


def _cmd_cuspidal(args) -> int:
    info = type_info(args.type)
    _maybe_load_denoms(args)
    facts = _load_facts(info, args)
    if args.datum:
        datum = duality.datum_from_json(_payload(args.datum))
    else:
        datum = duality.from_q_datum(info, _load_qdatum(info, args.q))
    seq = CuspidalSeq(datum, _word(args.word), facts)
    lo, hi = _range(args.range)
    doc = [{"k": k, "label": _expr_doc(seq.materialize(k))} for k in range(lo, hi + 1)]
    _emit(doc, args.format)
    return 0


def _cmd_invariant(args) -> int:
    info = type_info(args.type)
    _maybe_load_denoms(args)
    value = _INVARIANT_KINDS[args.kind](info, _point(args.x), _point(args.y))
    if args.format == "text":
        print(value)
    else:
        _emit({"kind": args.kind, "value": value}, args.format)
    return 0


def _cmd_decompose(args) -> int:
    info = type_info(args.type)
    q = _load_qdatum(info, args.q)
    word = _word(args.word) if args.word else qdata.some_adapted_word(q)
    seq = FundamentalCuspidalSeq(info, q, word, _load_facts(info, args))
    multiset = pbw.multiset_from_json(_payload(args.multiset))
    vec = pbw.decompose(multiset, seq)
    _emit(pbw.expvec_to_json(vec), args.format)
    return 0


def _cmd_compare(args) -> int:
    a = pbw.expvec_from_json(_payload(args.a))
    b = pbw.expvec_from_json(_payload(args.b))
    doc = {
        "bilex": pbw.cmp_bilex(a, b).value,
        "left": pbw.cmp_left(a, b),
        "right": pbw.cmp_right(a, b),
    }
    _emit(doc, args.format)
    return 0


def _cmd_sigma_quiver(args) -> int:
    info = type_info(args.type)
    _maybe_load_denoms(args)
    lo, hi = _range(args.window)
    vertices, arrows = affine.sigma_quiver(info, lo, hi)
    if args.format == "dot":
        lines = ["digraph sigma0 {"]
        for v in vertices:
            lines.append(f'  "{v.node}_{v.power}";')
        for src, dst, mult in arrows:
            for _ in range(mult):
                lines.append(
                    f'  "{src.node}_{src.power}" -> "{dst.node}_{dst.power}";'
                )
        lines.append("}")
        print("\n".join(lines))
        return 0
    doc = {
        "vertices": [[v.node, v.power] for v in vertices],
        "arrows": [
            {"from": [a.node, a.power], "to": [b.node, b.power], "mult": m}
            for a, b, m in arrows
        ],
    }
    _emit(doc, args.format)
    return 0


def _cmd_check_strong(args) -> int:
    _maybe_load_denoms(args)
    datum = duality.datum_from_json(_payload(args.datum))
    report = duality.check_strong(datum)
    doc = {
        "overall": report.overall,
        "pairs": {f"{i},{j}": v for (i, j), v in report.pair_verdicts},
        "root_modules": {str(i): v for i, v in report.root_verdicts},
    }
    if report.cartan is not None:
        doc["cartan"] = [list(r) for r in report.cartan]
        doc["cartan_type"] = [
            f"{letter}{rank}" for letter, rank in duality.classify_cartan(report.cartan)
        ]
    _emit(doc, args.format)
    return 0 if report.overall == "pass" else 1


def _cmd_verify_examples(args) -> int:
    checks = _example_corpus()
    failures = 0
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failures += 0 if ok else 1
    return 0 if failures == 0 else 1


def _example_corpus() -> list[tuple[str, bool]]:
    from .modexpr import Fund, Head, Verdict

    info = type_info("A2^1")
    facts = FusionTable.builtin(info)
    P = SigmaPoint
    datum = duality.from_q_datum(info, QDatum("A", 2, (0, 1)))
    out: list[tuple[str, bool]] = []

    seq = CuspidalSeq(datum, (1, 2, 1), facts)
    expected = [P(1, 0), P(2, 1), P(1, 2), P(2, 3), P(1, 4), P(2, 5)]
    out.append(
        (
            "cuspidal sequence of the base datum, word 1,2,1",
            seq.range(1, 6) == [Fund(x) for x in expected],
        )
    )
    seq2 = CuspidalSeq(datum, (2, 1, 2), facts)
    out.append(
        (
            "cuspidal sequence of the base datum, word 2,1,2",
            seq2.range(1, 3)
            == [Fund(P(1, 2)), Head((Fund(P(1, 2)), Fund(P(1, 0)))), Fund(P(1, 0))],
        )
    )
    s1 = duality.reflect(datum, 1, facts)
    out.append(("first reflection", s1.members == (Fund(P(2, 3)), Fund(P(2, 1)))))
    s2 = duality.reflect(datum, 2, facts)
    out.append(
        (
            "second reflection",
            s2.members == (Head((Fund(P(1, 2)), Fund(P(1, 0)))), Fund(P(2, 5))),
        )
    )
    nested = Head((Head((Fund(P(1, 2)), Fund(P(1, 0)))), Fund(P(2, 5))))
    out.append(
        ("cancellation rewrite", modexpr.normalize(info, nested) == Fund(P(1, 0)))
    )
    ok1, _ = cuspidal.refl_shift_check(datum, (1, 2, 1), facts)
    ok2, _ = cuspidal.refl_shift_check(datum, (2, 1, 2), facts)
    out.append(("reflection shifts the cuspidal sequence, word 1,2,1", ok1))
    out.append(("reflection shifts the cuspidal sequence, word 2,1,2", ok2))
    back = duality.reflect_inv(s2, 2, facts)
    out.append(
        (
            "inverse reflection restores the datum",
            duality.datum_equal(back, datum, facts) is Verdict.EQUAL,
        )
    )
    return out


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qaffpbw",
        description="label-level PBW combinatorics for quantum affine algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, q_flag=True):
        p.add_argument("--type", required=True, help="affine type, e.g. A2^1")
        p.add_argument("--format", choices=("json", "text", "dot"), default="json")
        p.add_argument("--denoms", help="denominator table JSON (inline or @file)")
        p.add_argument("--facts", help="fusion facts JSON (inline or @file)")
        if q_flag:
            p.add_argument("--q", help='Q-datum JSON, e.g. {"xi":{"1":0,"2":1}}')

    p = sub.add_parser("roots", help="beta sequences and w0 data of a finite type")
    p.add_argument("--fin", required=True, help="finite type, e.g. A3")
    p.add_argument("--word", help="comma-separated reduced word")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("adapted", help="check or enumerate adapted words")
    common(p)
    p.add_argument("--word", help="word to check; omit to enumerate")
    p.set_defaults(func=_cmd_adapted)

    p = sub.add_parser("phi", help="label map of a Q-datum along an adapted word")
    common(p)
    p.add_argument("--word", help="adapted word; omit for the canonical one")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("datum-from-q", help="canonical duality datum of a Q-datum")
    common(p)
    p.set_defaults(func=_cmd_datum_from_q)

    p = sub.add_parser("reflect", help="apply a reflection to a duality datum")
    common(p)
    p.add_argument("--datum", help="datum JSON (inline or @file)")
    p.add_argument("--node", type=int, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--times", type=int, default=1)
    p.set_defaults(func=_cmd_reflect)

    p = sub.add_parser("cuspidal", help="materialize a cuspidal sequence window")
    common(p)
    p.add_argument("--datum", help="datum JSON; overrides --q")
    p.add_argument("--word", required=True)
    p.add_argument("--range", required=True, help="e.g. 1..6")
    p.set_defaults(func=_cmd_cuspidal)

    p = sub.add_parser("invariant", help="pairing invariants between labels")
    common(p, q_flag=False)
    p.add_argument("--kind", choices=sorted(_INVARIANT_KINDS), required=True)
    p.add_argument("--x", required=True, help="label i,p")
    p.add_argument("--y", required=True, help="label i,p")
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("decompose", help="cuspidal decomposition of a multiset")
    common(p)
    p.add_argument("--word", help="adapted word; omit for the canonical one")
    p.add_argument("--multiset", required=True, help="[[i,p],...] (inline or @file)")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("compare", help="bi-lexicographic comparison")
    p.add_argument("--a", required=True, help="exponent vector JSON")
    p.add_argument("--b", required=True, help="exponent vector JSON")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("sigma-quiver", help="the quiver on sigma0 in a window")
    common(p, q_flag=False)
    p.add_argument("--window", required=True, help="e.g. 0..6")
    p.set_defaults(func=_cmd_sigma_quiver)

    p = sub.add_parser("check-strong", help="verify the strong-datum axioms")
    common(p, q_flag=False)
    p.add_argument("--datum", required=True, help="datum JSON (inline or @file)")
    p.set_defaults(func=_cmd_check_strong)

    p = sub.add_parser("verify-examples", help="run the built-in example corpus")
    p.set_defaults(func=_cmd_verify_examples)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (
        affine.AffineTypeError,
        duality.DualityError,
        qdata.QDatumError,
        rootsys.RootSystemError,
        ValueError,
        KeyError,
        OSError,
    ) as err:
        print(json.dumps({"error": str(err)}), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
