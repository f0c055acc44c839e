"""
Command line interface.

Exit codes: 0 ok/equal, 1 error, 2 unequal, 3 unknown.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field

from .closure import DEFAULT_RESOLUTION_CAP, closure_json
from .errors import PseudoBraidError
from .garside import nf_to_word, normal_form
from .markov import apply_move, markov_search, parse_move
from .oracle import Verdict, derivation, relation_set
from .ring import DEFAULT_CAP, eta, equal_pm, pm2_canonical, ring_mul
from .words import Kind, Letter, Word, concat, parse, render, stats

EXIT_CODES = {"ok": 0, "error": 1, "unequal": 2, "unknown": 3}


@dataclass
class CommandResult:
    status: str
    payload: str = ""
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default, which means "unequal" here.
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _word_json(w: Word) -> dict:
    return {"strands": w.strands, "word": render(w)}


def _cmd_parse(args) -> CommandResult:
    w = parse(args.word, args.n, keep_tau=args.singular)
    if args.json:
        exp, pre = stats(w)
        data = _word_json(w) | {"length": len(w), "exponent_sum": exp, "pre_count": pre}
        return CommandResult("ok", json.dumps(data, sort_keys=True))
    return CommandResult("ok", render(w))


def _cmd_nf(args) -> CommandResult:
    nf = normal_form(parse(args.word, args.n))
    if args.json:
        data = {"strands": nf.strands, "key": nf.key(), "inf": nf.inf,
                "factors": [list(p.images) for p in nf.factor_permutations()],
                "word": render(nf_to_word(nf))}
        return CommandResult("ok", json.dumps(data, sort_keys=True))
    return CommandResult("ok", nf.key())


def _cmd_eta(args) -> CommandResult:
    e = eta(parse(args.word, args.n), cap=args.cap)
    return CommandResult("ok", e.to_json() if args.json else e.render())


def _cmd_eq(args) -> CommandResult:
    u, v = parse(args.lhs, args.n), parse(args.rhs, args.n)
    same = equal_pm(u, v, cap=args.cap)
    verdict = "equal" if same else "unequal"
    if args.json:
        data = {
            "verdict": verdict,
            "lhs": json.loads(eta(u, args.cap).to_json()),
            "rhs": json.loads(eta(v, args.cap).to_json()),
        }
        return CommandResult("ok" if same else "unequal", json.dumps(data, sort_keys=True))
    return CommandResult("ok" if same else "unequal", verdict)


def _cmd_oracle_eq(args) -> CommandResult:
    u, v = parse(args.lhs, args.n), parse(args.rhs, args.n)
    maxlen = args.maxlen if args.maxlen is not None else max(len(u), len(v)) + 4
    chain = derivation(u, v, args.depth, maxlen)
    verdict = Verdict.EQUAL if chain is not None else Verdict.UNKNOWN
    lines = [verdict.value]
    if args.show and chain is not None:
        lines += [render(w) or "1" for w in chain]
    return CommandResult("ok" if chain is not None else "unknown", "\n".join(lines))


def _cmd_pm2(args) -> CommandResult:
    a, b = pm2_canonical(parse(args.word, args.n))
    if args.json:
        return CommandResult("ok", json.dumps({"exponent_sum": a, "pre_count": b}))
    return CommandResult("ok", f"{a} {b}")


def _cmd_markov_apply(args) -> CommandResult:
    w = parse(args.word, args.n)
    for spec in args.moves:
        w = apply_move(w, parse_move(spec, w.strands))
    if args.json:
        return CommandResult("ok", json.dumps(_word_json(w), sort_keys=True))
    return CommandResult("ok", f"{w.strands}: {render(w)}")


def _cmd_markov_search(args) -> CommandResult:
    beta = parse(args.word, args.n)
    target = parse(args.target, args.m)
    moves = markov_search(beta, target, args.budget, args.cap)
    if moves is None:
        return CommandResult("unknown", "not found")
    specs = [m.spec() for m in moves]
    if args.json:
        return CommandResult("ok", json.dumps({"moves": specs}))
    return CommandResult("ok", " ".join(specs) if specs else "(no moves)")


def _cmd_closure_inv(args) -> CommandResult:
    return CommandResult("ok", closure_json(parse(args.word, args.n), args.cap))


def _random_word(rng: random.Random, n: int, length: int, max_pre: int) -> Word:
    letters = []
    pres = 0
    for _ in range(length):
        kinds = [Kind.SIGMA_POS, Kind.SIGMA_NEG] + ([Kind.PRE] if pres < max_pre else [])
        k = rng.choice(kinds)
        pres += k is Kind.PRE
        letters.append(Letter(k, rng.randrange(1, n)))
    return Word(n, tuple(letters))


def _cmd_selftest(args) -> CommandResult:
    lines = [f"seed {args.seed}"]
    failures = 0
    t0 = time.perf_counter()
    count = 0
    for n in range(2, args.max_n + 1):
        for rel in relation_set(n):
            count += 1
            if not equal_pm(rel.lhs, rel.rhs):
                failures += 1
                lines.append(f"FAIL n={n} {rel}")
    lines.append(f"relations: {count} instances for n=2..{args.max_n}, {failures} failures "
                 f"({time.perf_counter() - t0:.2f}s)")
    rng = random.Random(args.seed)
    hom_fail = 0
    for _ in range(args.trials):
        n = rng.randint(2, 4)
        u = _random_word(rng, n, rng.randint(0, 6), 3)
        v = _random_word(rng, n, rng.randint(0, 6), 3 - u.pre_count)
        if eta(concat(u, v)) != ring_mul(eta(u), eta(v)):
            hom_fail += 1
            lines.append(f"FAIL homomorphism n={n} u={render(u)!r} v={render(v)!r}")
    lines.append(f"homomorphism: {args.trials} random pairs, {hom_fail} failures")
    failures += hom_fail
    return CommandResult("ok" if not failures else "error", "\n".join(lines),
                         [] if not failures else [f"selftest: {failures} failures"])


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pseudobraid", description="Pseudo braid monoid toolkit.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def strands(sp, flag="-n", dest="n"):
        sp.add_argument(flag, dest=dest, type=int, required=True, help="strand count")

    sp = sub.add_parser("parse", help="parse and re-render a word")
    strands(sp)
    sp.add_argument("word")
    sp.add_argument("--singular", action="store_true", help="keep t letters as tau")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_parse)

    sp = sub.add_parser("nf", help="Garside normal form of a classical braid word")
    strands(sp)
    sp.add_argument("word")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_nf)

    sp = sub.add_parser("eta", help="desingularization into Z[B_n]")
    strands(sp)
    sp.add_argument("word")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_eta)

    sp = sub.add_parser("eq", help="decide equality in PM_n")
    strands(sp)
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_eq)

    sp = sub.add_parser("oracle-eq", help="bounded rewriting proof of equality")
    strands(sp)
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    sp.add_argument("--depth", type=int, default=6)
    sp.add_argument("--maxlen", type=int, default=None, help="default: longer input + 4")
    sp.add_argument("--show", action="store_true", help="print the derivation")
    sp.set_defaults(func=_cmd_oracle_eq)

    sp = sub.add_parser("pm2", help="canonical pair of a PM_2 word")
    sp.add_argument("-n", dest="n", type=int, default=2)
    sp.add_argument("word")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_pm2)

    mk = sub.add_parser("markov", help="Markov moves")
    msub = mk.add_subparsers(dest="markov_command", parser_class=_Parser)
    msub.required = True
    sp = msub.add_parser("apply", help="apply moves in order")
    strands(sp)
    sp.add_argument("word")
    sp.add_argument("moves", nargs="*", help="M1:s1  M2:3  M3:+  M3:-d  M4  M4:d")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_markov_apply)
    sp = msub.add_parser("search", help="bounded search for a move sequence")
    strands(sp)
    sp.add_argument("word")
    sp.add_argument("-m", dest="m", type=int, required=True, help="strand count of the target")
    sp.add_argument("target")
    sp.add_argument("--budget", type=int, default=5)
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_markov_search)

    cl = sub.add_parser("closure", help="closure invariants")
    csub = cl.add_subparsers(dest="closure_command", parser_class=_Parser)
    csub.required = True
    sp = csub.add_parser("inv", help="component count and linking profile as JSON")
    strands(sp)
    sp.add_argument("word")
    sp.add_argument("--cap", type=int, default=DEFAULT_RESOLUTION_CAP)
    sp.set_defaults(func=_cmd_closure_inv)

    sp = sub.add_parser("selftest", help="check every defining relation and random homomorphism pairs")
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=lambda s: int(s, 0) & (2**64 - 1), default=0)
    sp.set_defaults(func=_cmd_selftest)
    return p


def run(argv: list[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as e:
        return CommandResult("error", diagnostics=[str(e)])
    except PseudoBraidError as e:
        return CommandResult("error", diagnostics=[f"error: {type(e).__name__}: {e}"])


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.payload:
        print(result.payload)
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
