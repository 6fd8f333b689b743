"""Command-line front end.

Exit codes: 0 success, 1 mathematical negative (NOT_MEMBER, NOT_AUTOMORPHISM,
a failed certificate check), 2 usage or parse error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any

from .algebra import BudgetExceeded, Polynomial, leading, term_budget
from .automorphisms import GENERATORS, Endo2, decompose_tame, random_tame
from .notation import (
    ParseError,
    format_rational,
    format_word,
    parse,
    parse_product,
    parse_terms,
    parse_word,
    serialize,
)
from .onerelator import Certificate, OneRelatorIdeal
from .subalgebras import Outcome, reduce_pair
from .words import MARK, NormalWord, alphabet, as_normal, compare, enumerate_marked, enumerate_normal

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Context:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.letters = args.alphabet.split(",") if args.alphabet else None
        self.unicode = args.unicode

    def poly(self, text: str) -> Polynomial:
        return parse(text, self.letters)

    def text(self, f: Polynomial) -> str:
        return serialize(f, self.unicode)

    def word(self, w: NormalWord) -> str:
        return format_word(w, self.unicode)


def _certificate_lines(cert: Certificate, ctx: Context) -> list[str]:
    return [f"{format_rational(c)} * {ctx.word(u)}" for c, u in cert]


def read_certificate(text: str) -> Certificate:
    """Parse newline-delimited ``coefficient * marked-word`` lines; ``#`` starts a comment."""
    steps = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        terms = parse_terms(line)
        if len(terms) != 1 or terms[0][1] is None:
            raise ParseError("expected one 'coefficient * word' per line", line, 0)
        c, w = terms[0]
        u = as_normal(w)
        if u is None:
            raise ParseError("certificate words must be normal", line, 0)
        steps.append((c, u))
    return Certificate(tuple(steps))


def write_certificate(cert: Certificate) -> str:
    return "".join(f"{format_rational(c)} * {u}\n" for c, u in cert)


# -- commands: each returns (exit code, human lines, json result, json steps) --


def cmd_normalize(ctx, a):
    f = ctx.poly(a.expr)
    return EXIT_OK, [ctx.text(f)], ctx.text(f), None


def cmd_mul(ctx, a):
    f = parse_product(a.expr, ctx.letters)
    return EXIT_OK, [ctx.text(f)], ctx.text(f), None


def cmd_compare(ctx, a):
    r = compare(parse_word(a.w1, ctx.letters), parse_word(a.w2, ctx.letters))
    return EXIT_OK, [r], r, None


def cmd_lead(ctx, a):
    f = ctx.poly(a.expr)
    if not f:
        raise UsageError("the zero polynomial has no leading term")
    w, c = leading(f)
    result = {"word": ctx.word(w), "coefficient": format_rational(c)}
    return EXIT_OK, [f"{ctx.word(w)}", f"coefficient {format_rational(c)}"], result, None


def cmd_enum(ctx, a):
    letters = ctx.letters or a.letters
    if a.mark_y:
        words = enumerate_marked(letters, a.degree)
    else:
        words = enumerate_normal(letters, a.degree)
    shown = [ctx.word(w) for w in words]
    return EXIT_OK, shown + [f"count {len(words)}"], {"count": len(words), "words": shown}, None


def _ideal_for(ctx, a) -> tuple[OneRelatorIdeal, Polynomial]:
    f = ctx.poly(a.relator)
    h = ctx.poly(a.elem)
    if not f:
        raise UsageError("the relator must be nonzero")
    names = set(ctx.letters or ()) | f.letters() | h.letters()
    if MARK in names:
        raise UsageError(f"{MARK!r} is reserved for the marker letter")
    return OneRelatorIdeal(f, alphabet(names)), h


def cmd_member(ctx, a):
    ideal, h = _ideal_for(ctx, a)
    verdict = ideal.decide(h)
    if not verdict.member:
        return EXIT_NEGATIVE, ["NOT_MEMBER"], "NOT_MEMBER", None
    lines = ["MEMBER"]
    steps = _certificate_lines(verdict.certificate, ctx)
    if a.certificate:
        if ideal.scale != 1:
            lines.append(f"# steps use the monic relator; original leading coefficient {format_rational(ideal.scale)}")
        lines.extend(steps)
    return EXIT_OK, lines, "MEMBER", steps


def cmd_verify(ctx, a):
    ideal, h = _ideal_for(ctx, a)
    with open(a.cert, encoding="utf-8") as fh:
        cert = read_certificate(fh.read())
    ok = ideal.verify(h, cert)
    return (EXIT_OK if ok else EXIT_NEGATIVE), ["OK" if ok else "FAIL"], "OK" if ok else "FAIL", None


def _pair_steps(report, ctx) -> list[str]:
    names = ("f1", "f2")
    out = []
    for s in report.steps:
        q = ctx.word(s.q)
        out.append(f"{names[s.which]} -= {format_rational(s.coefficient)} * {q}[y := {names[s.other]}]")
    return out


def cmd_subalg(ctx, a):
    report = reduce_pair(ctx.poly(a.f1), ctx.poly(a.f2))
    gens = [ctx.text(g) for g in report.generators]
    steps = _pair_steps(report, ctx)
    lines = [report.outcome.value] + [f"generator {g}" for g in gens] + steps
    return EXIT_OK, lines, {"outcome": report.outcome.value, "generators": gens}, steps


def _factor_text(e, ctx) -> str:
    text = str(e)
    return text.replace("<", "⟨").replace(">", "⟩").replace("-⟩", "->") if ctx.unicode else text


def cmd_auto(ctx, a):
    letters = set(GENERATORS)
    phi = Endo2.of(parse(a.f1, letters), parse(a.f2, letters))
    d = decompose_tame(phi)
    if not d.tame:
        return EXIT_NEGATIVE, ["NOT_AUTOMORPHISM"], "NOT_AUTOMORPHISM", None
    factors = [_factor_text(e, ctx) for e in d.factors]
    lines = ["TAME", "# factors apply left to right starting from (x1, x2)"]
    lines += [f"{i}: {t}" for i, t in enumerate(factors, 1)]
    return EXIT_OK, lines, "TAME", factors


def cmd_sample_tame(ctx, a):
    phi, factors = random_tame(ctx.args.seed or 0, a.steps, a.max_deg, a.max_total_degree)
    images = [ctx.text(phi.f1), ctx.text(phi.f2)]
    shown = [_factor_text(e, ctx) for e in factors]
    lines = [f"f1 = {images[0]}", f"f2 = {images[1]}"] + [f"{i}: {t}" for i, t in enumerate(shown, 1)]
    return EXIT_OK, lines, {"f1": images[0], "f2": images[1]}, shown


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="intermediate term budget")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized commands")
    common.add_argument("--unicode", action="store_true", default=argparse.SUPPRESS, help="print angle brackets")
    common.add_argument("--alphabet", default=argparse.SUPPRESS, help="comma-separated allowed letters")

    p = argparse.ArgumentParser(prog="bracealg", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", parents=[common], help="canonical form of an expression")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_normalize)

    s = sub.add_parser("mul", parents=[common], help='brace product "A1,A2,...;T"')
    s.add_argument("expr")
    s.set_defaults(fn=cmd_mul)

    s = sub.add_parser("compare", parents=[common], help="order two normal words")
    s.add_argument("w1")
    s.add_argument("w2")
    s.set_defaults(fn=cmd_compare)

    s = sub.add_parser("lead", parents=[common], help="leading word and coefficient")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_lead)

    s = sub.add_parser("enum", parents=[common], help="normal words of one degree")
    s.add_argument("--letters", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--mark-y", action="store_true", help="words with exactly one marker y")
    s.set_defaults(fn=cmd_enum)

    s = sub.add_parser("member", parents=[common], help="decide membership in a one-relator ideal")
    s.add_argument("--relator", required=True)
    s.add_argument("--elem", required=True)
    s.add_argument("--certificate", action="store_true")
    s.set_defaults(fn=cmd_member)

    s = sub.add_parser("verify", parents=[common], help="check a membership certificate")
    s.add_argument("--relator", required=True)
    s.add_argument("--elem", required=True)
    s.add_argument("--cert", required=True)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("subalg", parents=[common], help="reduce a pair of generators")
    s.add_argument("f1")
    s.add_argument("f2")
    s.set_defaults(fn=cmd_subalg)

    s = sub.add_parser("auto", parents=[common], help="decompose an endomorphism of Br(x1,x2)")
    s.add_argument("f1")
    s.add_argument("f2")
    s.set_defaults(fn=cmd_auto)

    s = sub.add_parser("sample-tame", parents=[common], help="random composite of elementary automorphisms")
    s.add_argument("--steps", type=int, default=3)
    s.add_argument("--max-deg", type=int, default=3)
    s.add_argument("--max-total-degree", type=int, default=9)
    s.set_defaults(fn=cmd_sample_tame)
    return p


_DEFAULTS = {"json": False, "budget": None, "seed": None, "unicode": False, "alphabet": None}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for k, v in _DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    ctx = Context(args)
    skip = {"fn", "command", "json", "unicode"}
    inputs = {k: v for k, v in vars(args).items() if k not in skip and v is not None}
    start = time.perf_counter()
    limit = args.budget if args.budget is not None else 10**6
    try:
        with term_budget(limit) as budget:
            code, lines, result, steps = args.fn(ctx, args)
    except BudgetExceeded as exc:
        code, lines, result, steps = EXIT_BUDGET, [f"BUDGET_EXCEEDED: {exc}"], "BUDGET_EXCEEDED", None
        budget = None
    except (ParseError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        payload: dict[str, Any] = {"command": args.command, "inputs": inputs, "result": result}
        if steps is not None:
            payload["steps"] = steps
        payload["stats"] = {"terms": budget.spent if budget else limit, "time_ms": round(elapsed, 3)}
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
