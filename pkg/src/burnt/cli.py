"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 infeasible request (unreachable
length, resource cap), 3 validation failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import base_cycles, corpus, graph, octa, oracle, synthesis
from .errors import (
    BurntError,
    ConstructionError,
    CorpusError,
    NotCanonical,
    ParseError,
    ResourceLimit,
    UnreachableLength,
)
from .perm import cycle_facts, format_perm, format_word, identity, parse_word

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_INVALID = 3

CHUNK = 1 << 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _emit(out, record):
    out.write(json.dumps(record, sort_keys=True) + "\n")


def _word_text(letters, n, list_form):
    return format_word(letters, n, list_form=list_form)


def _stream_word(out, letters, n, list_form):
    # write long words in chunks instead of building one huge string
    sep = " " if list_form or n > 9 else ""
    for i in range(0, len(letters), CHUNK):
        piece = sep.join(map(str, letters[i : i + CHUNK]))
        if i and sep:
            out.write(sep)
        out.write(piece)
    out.write("\n")


def cmd_synth(args, out):
    res = synthesis.synthesize(
        args.n, args.length, use_corpus=not args.no_corpus, plus_one_via_case1=args.plus_one_via_case1
    )
    w = res.witness
    if args.validate:
        rep = oracle.is_simple_cycle(w.n, w.start.window, w.word.letters)
        if not (rep.ok and rep.visited == args.length):
            raise ConstructionError(f"independent check rejected the word: {rep.reason}")
    if args.json:
        rec = {
            "n": w.n,
            "length": w.length,
            "start": format_perm(w.start),
            "word": _word_text(w.word.letters, w.n, args.list_form),
        }
        if args.trace:
            rec["plan"] = res.plan.to_dict()
        if args.validate:
            rec["validated"] = True
        _emit(out, rec)
        return EXIT_OK
    if args.trace:
        for line in res.plan.lines():
            out.write(f"# {line}\n")
    if args.validate:
        out.write(f"# validated closed simple length={w.length}\n")
    _stream_word(out, w.word.letters, w.n, args.list_form)
    return EXIT_OK


def _parse_verify_line(line, n):
    if line.startswith("{"):
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON record: {exc}") from None
        m = int(rec.get("n", n or 0))
        return parse_word(str(rec["word"]), m) if m else None, rec.get("length")
    if n is None:
        tokens = line.replace(",", " ").split()
        if len(tokens) == 1 and tokens[0].isdigit():
            m = max(int(ch) for ch in tokens[0])
        else:
            m = max(int(tok) for tok in tokens)
        return parse_word(line, max(m, 1)), None
    return parse_word(line, n), None


def cmd_verify(args, out):
    stream = open(args.file) if args.file else sys.stdin
    failures = 0
    checked = 0
    try:
        for lineno, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            checked += 1
            try:
                word, declared = _parse_verify_line(line, args.n)
                if word is None:
                    raise ParseError("record has no dimension; pass n")
                closed, simple, pos = cycle_facts(identity(word.n), word.letters)
                ok = simple and (declared is None or int(declared) == len(word))
                reason = "" if ok else ("length mismatch" if simple else "not closed" if pos is None else f"revisit at letter {pos}")
            except (ParseError, ValueError) as exc:
                word, ok, reason = None, False, str(exc)
            failures += not ok
            if args.json:
                rec = {"line": lineno, "ok": ok}
                if word is not None:
                    rec.update(n=word.n, length=len(word))
                if reason:
                    rec["reason"] = reason
                _emit(out, rec)
            elif word is None:
                out.write(f"line {lineno}: FAIL {reason}\n")
            else:
                status = "ok" if ok else f"FAIL {reason}"
                out.write(f"line {lineno}: n={word.n} length={len(word)} {status}\n")
    finally:
        if args.file:
            stream.close()
    if checked == 0:
        out.write("no words to verify\n")
        return EXIT_INVALID
    return EXIT_INVALID if failures else EXIT_OK


def cmd_base_cycle(args, out):
    spec = base_cycles.base_cycle(args.n, args.k)
    prof = base_cycles.copy_profile(spec)
    counts = " ".join(f"{q}:{c}" for q, c in prof.counts.items())
    singles = ",".join(map(str, prof.single_edge_positions))
    if args.json:
        _emit(out, {
            "n": spec.n, "k": spec.k, "word": _word_text(spec.word.letters, spec.n, args.list_form),
            "length": spec.length, "case_tag": spec.case_tag, "formula": spec.formula,
            "copies": [[q, c] for q, c in prof.counts.items()],
            "single_edge_positions": list(prof.single_edge_positions),
        })
        return EXIT_OK
    out.write(_word_text(spec.word.letters, spec.n, args.list_form) + "\n")
    out.write(f"length={spec.length} case_tag={spec.case_tag} formula={spec.formula}\n")
    out.write(f"copies={prof.copies_visited} intra-copy edges {counts}\n")
    out.write(f"single r_{spec.n - 1} edge at positions {singles}\n")
    return EXIT_OK


def cmd_eight_cycles(args, out):
    n = args.n
    if args.forms:
        rows = octa.forms_table(n)
        for row in rows:
            if args.json:
                _emit(out, {"family": row.family, "pattern": row.pattern, "ranges": row.ranges,
                            "instances": row.instances, "canonical_words": row.canonical_words})
            else:
                out.write(f"{row.family}  {row.pattern}  [{row.ranges}]  instances={row.instances} "
                          f"canonical={row.canonical_words}\n")
        return EXIT_OK
    if args.list:
        for cyc in octa.enumerate_8cycles(n, args.cap):
            word = _word_text(cyc.word.letters, n, args.list_form)
            if args.json:
                _emit(out, {"word": word, "start": format_perm(cyc.start), "fingerprint": list(cyc.fingerprint)})
            else:
                out.write(f"{word} {format_perm(cyc.start)}\n")
        return EXIT_OK
    through = octa.count_through_vertex(n)
    total = octa.count_8cycles(n)
    if args.json:
        _emit(out, {"n": n, "through_vertex": through, "total": total})
    else:
        out.write(f"n={n} through_vertex={through} total={total}\n")
    return EXIT_OK


def cmd_oracle(args, out):
    if args.oracle_cmd == "find":
        found = oracle.find_cycle_dfs(args.n, args.length)
        if found is None:
            out.write(f"no {args.length}-cycle in BP_{args.n}\n")
            return EXIT_INFEASIBLE
        word = _word_text(found.word.letters, args.n, args.list_form)
        if args.json:
            _emit(out, {"n": args.n, "length": args.length, "word": word})
        else:
            out.write(word + "\n")
        return EXIT_OK
    if args.oracle_cmd == "girth":
        g = oracle.build_graph(args.n, signed=not args.unsigned, cap=args.cap)
        value = oracle.girth(g)
        if args.json:
            _emit(out, {"n": args.n, "unsigned": args.unsigned, "girth": value})
        else:
            out.write(f"{value}\n")
        return EXIT_OK
    if args.oracle_cmd == "count":
        g = oracle.build_graph(args.n, signed=not args.unsigned, cap=args.cap)
        anchor = None if args.total else 0
        value = oracle.enumerate_cycles_of_length(g, args.length, anchor)
        if args.json:
            _emit(out, {"n": args.n, "length": args.length, "unsigned": args.unsigned,
                        "scope": "total" if args.total else "through-identity", "count": value})
        else:
            out.write(f"{value}\n")
        return EXIT_OK
    checks = oracle.check_lemma_properties(args.n, samples=args.samples, seed=args.seed)
    for c in checks:
        if args.json:
            _emit(out, {"name": c.name, "statement": c.statement, "checked": c.checked,
                        "violations": c.violations, "holds": c.holds})
        else:
            out.write(f"{c.name}: {'holds' if c.holds else 'FAILS'} checked={c.checked} violations={c.violations}\n")
    return EXIT_OK if all(c.holds for c in checks) else EXIT_INVALID


def cmd_corpus(args, out):
    if args.file:
        c = corpus.load_corpus(args.file, validate=False)
    else:
        c = corpus.parse_corpus(corpus.default_corpus_text(), "packaged")
    rep = corpus.validate_corpus(c)
    if args.json:
        _emit(out, {"checked": rep.checked, "failures": list(rep.failures),
                    "gaps": {str(k): v for k, v in rep.gaps.items()}, "ok": rep.ok})
    else:
        out.write(f"checked={rep.checked} failures={len(rep.failures)}\n")
        for f in rep.failures:
            out.write(f"  {f}\n")
        for n, gaps in rep.gaps.items():
            out.write(f"n={n} lengths={len(c.lengths(n))} gaps={','.join(map(str, gaps)) or 'none'}\n")
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_export(args, out):
    if args.format == "dot":
        out.write(graph.export_dot(args.n, args.cap))
    else:
        out.write(graph.export_edges(args.n, args.cap))
    return EXIT_OK


def cmd_stats(args, out):
    s = graph.stats(args.n)
    if args.json:
        _emit(out, {"n": s.n, "vertices": s.vertices, "edges": s.edges, "density": str(s.density)})
    else:
        out.write(f"{s}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="line-delimited JSON output")
    common.add_argument("--list-form", action="store_true", help="print words as space-separated indices")
    common.add_argument("--cap", type=int, default=None, help="override the explicit-graph size cap")

    p = _Parser(prog="burnt", description="Cycles in burnt pancake graphs.")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("synth", parents=[common], help="build a cycle of a given length")
    s.add_argument("n", type=int)
    s.add_argument("length", type=int)
    s.add_argument("--trace", action="store_true", help="print the synthesis plan as '#' lines")
    s.add_argument("--validate", action="store_true", help="re-check the word with the brute-force validator")
    s.add_argument("--no-corpus", action="store_true", help="search small dimensions by DFS instead")
    s.add_argument("--plus-one-via-case1", action="store_true", help="use the general case for 2^(n-1)(n-1)!+1")
    s.set_defaults(func=cmd_synth)

    v = sub.add_parser("verify", parents=[common], help="check words read from stdin")
    v.add_argument("n", type=int, nargs="?", help="dimension (default: largest letter)")
    v.add_argument("--file", help="read words from this file instead of stdin")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("base-cycle", parents=[common], help="show the base cycle C_k")
    b.add_argument("n", type=int)
    b.add_argument("k", type=int)
    b.set_defaults(func=cmd_base_cycle)

    e = sub.add_parser("eight-cycles", parents=[common], help="count, list or describe 8-cycles")
    e.add_argument("n", type=int)
    mode = e.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="counts (default)")
    mode.add_argument("--list", action="store_true", help="list every 8-cycle")
    mode.add_argument("--forms", action="store_true", help="family table")
    e.set_defaults(func=cmd_eight_cycles)

    o = sub.add_parser("oracle", help="brute-force checks on small graphs")
    osub = o.add_subparsers(dest="oracle_cmd", metavar="check", parser_class=_Parser)
    osub.required = True
    of = osub.add_parser("find", parents=[common])
    of.add_argument("n", type=int)
    of.add_argument("length", type=int)
    og = osub.add_parser("girth", parents=[common])
    og.add_argument("n", type=int)
    og.add_argument("--unsigned", action="store_true", help="use the pancake graph P_n")
    oc = osub.add_parser("count", parents=[common])
    oc.add_argument("n", type=int)
    oc.add_argument("length", type=int)
    oc.add_argument("--unsigned", action="store_true", help="use the pancake graph P_n")
    oc.add_argument("--total", action="store_true", help="count all cycles, not only those through the identity")
    ol = osub.add_parser("lemmas", parents=[common])
    ol.add_argument("n", type=int)
    ol.add_argument("--samples", type=int, default=10_000)
    ol.add_argument("--seed", type=int, default=0)
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("corpus", help="stored small-dimension cycles")
    csub = c.add_subparsers(dest="corpus_cmd", metavar="action", parser_class=_Parser)
    csub.required = True
    cv = csub.add_parser("validate", parents=[common])
    cv.add_argument("file", nargs="?", help="corpus file (default: packaged data)")
    c.set_defaults(func=cmd_corpus)

    x = sub.add_parser("export", parents=[common], help="write BP_n as DOT or an edge list")
    x.add_argument("n", type=int)
    x.add_argument("--format", choices=("dot", "edges"), default="edges")
    x.set_defaults(func=cmd_export)

    st = sub.add_parser("stats", parents=[common], help="vertex, edge and density counts")
    st.add_argument("n", type=int)
    st.set_defaults(func=cmd_stats)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UnreachableLength, ResourceLimit) as exc:
        sys.stderr.write(f"burnt: {exc}\n")
        return EXIT_INFEASIBLE
    except (ConstructionError, CorpusError, NotCanonical) as exc:
        sys.stderr.write(f"burnt: {exc}\n")
        return EXIT_INVALID
    except BrokenPipeError:
        return EXIT_OK
    except (BurntError, ValueError, OSError) as exc:
        sys.stderr.write(f"burnt: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
