"""Command-line front end.

Exit codes: 0 success (for ``verify`` this means the report was produced,
not that the checked claim held), 2 usage error or unknown subcommand,
3 unparsable term, 4 missing ``--ai`` declaration.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import band, freeband, generalize, refute, sqgen, terms

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_NO_AI = 4


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class Output:
    """Collects records; prints human lines or one JSON object per line."""

    def __init__(self, mode, stream):
        self.mode = mode
        self.stream = stream

    def emit(self, human: str, **record):
        if self.mode == "json-lines":
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            self.stream.write(human + "\n")


def _parse(text, ai):
    try:
        return terms.parse_term(text, ai=ai)
    except terms.TermSyntaxError as exc:
        raise CliError(EXIT_PARSE, f"cannot parse term {text!r}: {exc}") from None
    except terms.MalformedTermError as exc:
        raise CliError(EXIT_PARSE, f"malformed term {text!r}: {exc}") from None


def _require_ai(args):
    if not args.ai:
        raise CliError(EXIT_NO_AI, f"{args.command}: declare at least one AI symbol with --ai")
    return args.ai


def cmd_normalize(args, out):
    ai = _require_ai(args)
    for text in args.terms:
        n = terms.ai_flat_normalize(_parse(text, ai))
        out.emit(str(n), command="normalize", input=text, normal_form=str(n))


def cmd_equiv(args, out):
    ai = _require_ai(args)
    s, t = _parse(args.left, ai), _parse(args.right, ai)
    ok = terms.ai_equiv_terms(s, t)
    out.emit("EQUIV" if ok else "NOT-EQUIV", command="equiv", left=args.left,
             right=args.right, equivalent=ok)


def cmd_band_enum(args, out):
    letters = args.alphabet.split(",") if "," in args.alphabet else list(args.alphabet)
    table = freeband.enumerate_band(letters)
    for key_id, word, length in table.records():
        out.emit(f"{key_id}\t{band.format_word(word)}\t{length}", record="class",
                 key_id=key_id, min_word=band.format_word(word), min_length=length)
    m = freeband.max_min_length(table)
    out.emit(f"classes={len(table)} max_min_length={m}", record="summary",
             classes=len(table), max_min_length=m)


def cmd_gen_check(args, out):
    ai = _require_ai(args)
    r, t = _parse(args.general, ai), _parse(args.specific, ai)
    try:
        ok, sigma = generalize.more_general(r, t)
    except generalize.UnsupportedFragmentError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    human = f"GENERALIZES {sigma}" if ok else "NOT"
    out.emit(human, command="gen-check", general=args.general, specific=args.specific,
             generalizes=ok, witness=str(sigma) if ok else None)


def cmd_sqgen(args, out):
    if args.n < 1:
        raise CliError(EXIT_USAGE, "sqgen: n must be >= 1")
    t = sqgen.sq_gen(args.n)
    word = "".join(sqgen.sq_gen_word(args.n))
    human = word if args.word else str(t)
    rec = {"command": "sqgen", "n": args.n, "term": str(t), "word": word}
    if args.check_squarefree:
        rep = sqgen.squarefree_report(args.n)
        human += f" square_free={rep['square_free']}"
        rec["square_free"] = rep["square_free"]
    out.emit(human, **rec)


def _verify_lemma1(args, out):
    rep = generalize.verify_lemma1(args.max_interior)
    out.emit(f"lemma1 max_interior={args.max_interior} candidates={rep.details['candidates']} "
             f"checks={rep.checked} failures={len(rep.failures)} {'PASS' if rep.passed else 'FAIL'}",
             check="lemma1", max_interior=args.max_interior,
             candidates=rep.details["candidates"], checks=rep.checked,
             failures=len(rep.failures), passed=rep.passed)
    for t, s in rep.failures:
        out.emit(f"  counterexample {t} with x -> {s}", check="lemma1", counterexample=t, target=s)


def _verify_lemma2(args, out):
    rep = generalize.verify_lemma2(args.max_size)
    out.emit(f"lemma2 max_size={args.max_size} checks={rep.checked} "
             f"failures={len(rep.failures)} {'PASS' if rep.passed else 'FAIL'}",
             check="lemma2", max_size=args.max_size, checks=rep.checked,
             failures=len(rep.failures), passed=rep.passed)
    for t in rep.failures:
        out.emit(f"  counterexample {t}", check="lemma2", counterexample=t)


def _verify_thm3(args, out):
    cx = refute.refute_theorem3(args.limit)
    if cx is None:
        out.emit(f"thm3 k<={args.limit}: no counterexample found (claim |g3| >= |g2| not refuted)",
                 check="thm3", limit=args.limit, claim_holds=True)
        return
    g3, g2 = cx.sizes
    out.emit(f"thm3 claim |g3| >= |g2|: FAIL at k={cx.k}: g1={cx.g1} sigma={cx.sigma} "
             f"g3={cx.g3} |g3|={g3} < |g2|={g2}",
             check="thm3", limit=args.limit, claim_holds=False, k=cx.k, g1=str(cx.g1),
             g2=str(cx.g2), g3=str(cx.g3), g3_size=g3, g2_size=g2,
             g3_simple=str(cx.g3_simple) if cx.g3_simple is not None else None)


def _verify_collision(args, out):
    rep = refute.find_collision(args.limit)
    if rep is None:
        out.emit(f"collision limit={args.limit}: none", check="collision", limit=args.limit,
                 found=False)
        return
    recheck = refute.recheck_collision(rep)
    out.emit(f"collision limit={args.limit}: sqGen({rep.i}) ~ sqGen({rep.j}) "
             f"word lengths {rep.word_lengths[0]} and {rep.word_lengths[1]}, shortest "
             f"{band.format_word(rep.min_representative)}; strict chain claim: "
             f"{'FAIL' if recheck['mutual'] else 'PASS'}",
             check="collision", limit=args.limit, found=True, i=rep.i, j=rep.j,
             word_length_i=rep.word_lengths[0], word_length_j=rep.word_lengths[1],
             min_representative=band.format_word(rep.min_representative),
             band_key_equal=recheck["band_key_equal"],
             table_class_equal=recheck["table_class_equal"], mutual=recheck["mutual"])
    census = refute.chain_census(args.limit)
    out.emit(f"census limit={args.limit}: distinct classes={census.distinct} "
             f"saturation at n={census.saturation}",
             check="census", limit=args.limit, distinct=census.distinct,
             saturation=census.saturation)


VERIFIERS = {
    "lemma1": _verify_lemma1,
    "lemma2": _verify_lemma2,
    "thm3": _verify_thm3,
    "collision": _verify_collision,
}


def cmd_verify(args, out):
    names = list(VERIFIERS) if args.what == "all" else [args.what]
    for name in names:
        VERIFIERS[name](args, out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ai", action="append", default=[], metavar="SYM",
                        help="declare an associative-idempotent symbol (repeatable)")
    common.add_argument("--output", choices=("human", "json-lines"), default="human")

    p = argparse.ArgumentParser(prog="aiband", description=__doc__.splitlines()[0],
                                epilog="exit codes: 0 ok, 2 usage, 3 term parse error, 4 missing --ai")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", parents=[common], help="idempotent flat normal form")
    s.add_argument("terms", nargs="+")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("equiv", parents=[common], help="decide AI-equivalence of two terms")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("band-enum", parents=[common], help="enumerate a free band")
    s.add_argument("--alphabet", default="abx",
                   help="letters, as a string of single characters or comma separated")
    s.set_defaults(func=cmd_band_enum)

    s = sub.add_parser("gen-check", parents=[common],
                       help="does GENERAL map onto SPECIFIC modulo AI (word fragment)")
    s.add_argument("general")
    s.add_argument("specific")
    s.set_defaults(func=cmd_gen_check)

    s = sub.add_parser("sqgen", parents=[common], help="print sqGen(n)")
    s.add_argument("n", type=int)
    s.add_argument("--word", action="store_true", help="print the raw letter string")
    s.add_argument("--check-squarefree", action="store_true",
                   help="append the square-freeness measurement")
    s.set_defaults(func=cmd_sqgen)

    s = sub.add_parser("verify", parents=[common], help="run an exhaustive check or refutation")
    s.add_argument("what", choices=("lemma1", "lemma2", "thm3", "collision", "all"))
    s.add_argument("--limit", type=int, default=200)
    s.add_argument("--max-interior", type=int, default=8)
    s.add_argument("--max-size", type=int, default=6)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.output, stdout)
    try:
        args.func(args, out)
    except CliError as exc:
        stderr.write(f"aiband: {exc}\n")
        return exc.code
    except ValueError as exc:
        stderr.write(f"aiband: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
