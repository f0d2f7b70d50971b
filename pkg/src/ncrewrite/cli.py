"""Command-line interface (`ncrewrite`).

Exit codes: 0 on success or match, 1 on divergence/violation/unknown,
2 on usage errors (argparse default).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .encodings import (
    encode_config,
    format_presentation,
    make_presentation,
    parse_presentation,
)
from .groebner import audit_order, find_ambiguities
from .harness import (
    annihilate_bounded,
    cancellation_probe,
    lockstep,
    nilpotent_bounded,
    zerodivisor_witness_bounded,
)
from .orders import NILPOTENCY, ZERO_DIVISOR, nilpotency_order, zerodivisor_order
from .rewrite import Polynomial, format_polynomial, normalize
from .turing import format_config, minsky_utm, parse_config, parse_tm_spec, tm_run
from .words import parse_word, word_to_str

DEFAULT_AUDIT_ALPHABETS = {
    NILPOTENCY: ("t", "a0", "R"),
    ZERO_DIVISOR: ("t", "s", "a0", "L", "R"),
}


def _load_tm(path: str | None):
    if path is None:
        return minsky_utm()
    return parse_tm_spec(Path(path).read_text())


def _load_config(path: str):
    return parse_config(Path(path).read_text())


def cmd_normalize(args) -> int:
    p = parse_presentation(Path(args.presentation).read_text())
    w = parse_word(args.word)
    nf, steps = normalize(Polynomial.from_word(w), p, budget=args.budget)
    print(f"normal form: {format_polynomial(nf)}")
    print(f"steps: {steps}")
    return 0


def cmd_overlaps(args) -> int:
    p = parse_presentation(Path(args.presentation).read_text())
    ambiguities = find_ambiguities(p)
    for a in ambiguities:
        print(f"{a.kind.upper()} r{a.rule1} r{a.rule2} witness: {word_to_str(a.witness)}")
    print(f"{len(ambiguities)} ambiguities")
    return 0 if not ambiguities else 1


def cmd_verify_order(args) -> int:
    if args.order == NILPOTENCY:
        order = nilpotency_order()
    else:
        order = zerodivisor_order()
    alphabet = tuple(args.alphabet.split()) if args.alphabet else DEFAULT_AUDIT_ALPHABETS[args.order]
    report = audit_order(order, alphabet, args.max_len)
    print(f"alphabet: {' '.join(report.alphabet)}")
    print(f"max length: {report.max_len}")
    print(f"checks: {report.checks}")
    print(f"violations: {len(report.violations)}")
    for v in report.violations[:20]:
        print(f"  {v}")
    return 0 if report.ok else 1


def cmd_gen_presentation(args) -> int:
    spec = _load_tm(args.tm)
    p = make_presentation(spec, args.construction)
    text = format_presentation(p)
    if args.out:
        Path(args.out).write_text(text)
        print(f"{len(p.rules)} rules written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_tm_run(args) -> int:
    spec = _load_tm(args.tm)
    c0 = _load_config(args.config)
    result = tm_run(spec, c0, args.budget)
    if result.halted:
        print(f"halted after {result.steps} steps")
    else:
        print(f"still running after {result.steps} steps")
    sys.stdout.write(format_config(result.config))
    return 0


def cmd_lockstep(args) -> int:
    spec = _load_tm(args.tm)
    c0 = _load_config(args.config)
    report = lockstep(spec, c0, args.steps, args.construction)
    for n, rec in enumerate(report.records):
        status = "ok" if rec.matched else "DIVERGED"
        print(f"step {n}: {word_to_str(rec.word)} [{status}]")
    if report.halted:
        print("machine halted")
    if report.ok:
        print(f"{len(report.records)} steps matched")
        return 0
    print(f"divergence at step {report.divergence}")
    return 1


def _print_outcome(kind: str, outcome) -> int:
    if outcome.witnessed:
        print(f"{kind}: witnessed at {outcome.value}")
        return 0
    print(f"{kind}: unknown up to {outcome.value}")
    return 1


def cmd_nilpotent(args) -> int:
    spec = _load_tm(args.tm)
    c0 = _load_config(args.config)
    return _print_outcome("nilpotency", nilpotent_bounded(spec, c0, args.nmax))


def cmd_annihilate(args) -> int:
    spec = _load_tm(args.tm)
    c0 = _load_config(args.config)
    outcome = annihilate_bounded(spec, c0, args.nmax, NILPOTENCY)
    return _print_outcome("left annihilation by t^N", outcome)


def cmd_zerodivisor(args) -> int:
    spec = _load_tm(args.tm)
    c0 = _load_config(args.config)
    outcome = zerodivisor_witness_bounded(spec, c0, args.nmax)
    word = encode_config(c0, ZERO_DIVISOR)
    if outcome.witnessed:
        print(f"zero divisor: t^{outcome.value} annihilates {word_to_str(word)} from the left")
        return 0
    print(f"zero divisor: unknown up to {outcome.value}")
    return 1


def cmd_cancellation_probe(args) -> int:
    violations = cancellation_probe(args.samples, args.max_len, seed=args.seed)
    print(f"samples: {args.samples}")
    print(f"violations: {len(violations)}")
    for w, side, n in violations[:20]:
        print(f"  {side} n={n}: {word_to_str(w)}")
    return 0 if not violations else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncrewrite",
        description="Free-algebra rewriting engine with Turing-machine encodings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(func=func)
        return sp

    sp = add("normalize", cmd_normalize, help="normalize a word under a presentation")
    sp.add_argument("--presentation", required=True)
    sp.add_argument("--word", required=True)
    sp.add_argument("--budget", type=int, default=10**6)

    sp = add("overlaps", cmd_overlaps, help="list ambiguities among rule lhs words")
    sp.add_argument("--presentation", required=True)

    sp = add("verify-order", cmd_verify_order, help="audit order axioms exhaustively")
    sp.add_argument("--order", choices=[NILPOTENCY, ZERO_DIVISOR], required=True)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--alphabet", help="space-separated letters (default: small sub-alphabet)")

    sp = add("gen-presentation", cmd_gen_presentation, help="compile a TM into rules")
    sp.add_argument("--tm", help="TM spec file (default: built-in Minsky UTM)")
    sp.add_argument("--construction", choices=[NILPOTENCY, ZERO_DIVISOR], required=True)
    sp.add_argument("--out")

    sp = add("tm-run", cmd_tm_run, help="run a Turing machine")
    sp.add_argument("--tm")
    sp.add_argument("--config", required=True)
    sp.add_argument("--budget", type=int, required=True)

    sp = add("lockstep", cmd_lockstep, help="machine vs rewriting, step by step")
    sp.add_argument("--tm")
    sp.add_argument("--config", required=True)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--construction", choices=[NILPOTENCY, ZERO_DIVISOR], required=True)

    for name, func in [("nilpotent", cmd_nilpotent), ("annihilate", cmd_annihilate),
                       ("zerodivisor", cmd_zerodivisor)]:
        sp = add(name, func, help=f"bounded {name} decider")
        sp.add_argument("--tm")
        sp.add_argument("--config", required=True)
        sp.add_argument("--nmax", type=int, required=True)

    sp = add("cancellation-probe", cmd_cancellation_probe,
             help="randomized right-t / left-s cancellation check")
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
