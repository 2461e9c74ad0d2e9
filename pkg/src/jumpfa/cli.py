"""Command-line front end.

Exit codes: 0 accept (or success), 1 reject (or differences found), 2 error.
All output is deterministic for fixed inputs. The empty word is written
``<eps>`` on the command line and in printed output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .core import EMPTY_WORD, Automaton, JumpfaError, parse_automaton, serialize_automaton
from .engine import enumerate_language, format_trace, member
from .lba import lba_run
from .oracles import CORPUS_CLAIMS, ORACLES, load_bundled, oracle_difference, oracle_eval
from .transforms import language_difference, reverse_automaton


def _load_automaton(ref: str) -> Automaton:
    """Read an automaton from a file path, falling back to bundled names."""
    path = Path(ref)
    if path.exists():
        return parse_automaton(path.read_text("utf-8"))
    name = ref[:-4] if ref.endswith(".jfa") else ref
    if name in CORPUS_CLAIMS:
        return load_bundled(name)
    raise JumpfaError(f"no such file or bundled automaton: {ref}")


def _word(arg: str) -> str:
    return "" if arg == EMPTY_WORD else arg


def _print_word(word: str) -> None:
    print(word or EMPTY_WORD)


def _verdict(accepted: bool) -> int:
    print("accept" if accepted else "reject")
    return 0 if accepted else 1


def _cmd_validate(args) -> int:
    _load_automaton(args.file)
    print("ok")
    return 0


def _cmd_member(args) -> int:
    accepted, _ = member(_load_automaton(args.file), _word(args.word))
    return _verdict(accepted)


def _cmd_trace(args) -> int:
    accepted, trace = member(_load_automaton(args.file), _word(args.word))
    if not accepted:
        print("reject")
        return 1
    print(format_trace(trace))
    return 0


def _cmd_enumerate(args) -> int:
    for word in enumerate_language(_load_automaton(args.file), args.max_len):
        _print_word(word)
    return 0


def _cmd_reverse(args) -> int:
    print(serialize_automaton(reverse_automaton(_load_automaton(args.file))), end="")
    return 0


def _cmd_lba(args) -> int:
    accepted, report = lba_run(_load_automaton(args.file), _word(args.word))
    code = _verdict(accepted)
    print(f"cells={report.max_cells_used} compactions={report.compactions} steps={report.steps}")
    return code


def _cmd_compare(args) -> int:
    first = _load_automaton(args.file)
    if (args.other is None) == (args.oracle is None):
        print("error: compare needs either a second file or --oracle NAME", file=sys.stderr)
        return 2
    if args.oracle is not None:
        diffs = oracle_difference(first, args.oracle, args.max_len)
    else:
        diffs = language_difference(first, _load_automaton(args.other), args.max_len)
    for word, in_first, in_second in diffs:
        print(
            f"{word or EMPTY_WORD} "
            f"left={'accept' if in_first else 'reject'} "
            f"right={'accept' if in_second else 'reject'}"
        )
    if not diffs:
        print(f"no differences up to length {args.max_len}")
        return 0
    return 1


def _cmd_oracle(args) -> int:
    return _verdict(oracle_eval(args.name, _word(args.word)))


def _cmd_examples(args) -> int:
    for name in CORPUS_CLAIMS:
        print(name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jumpfa",
        description="Membership, traces, enumeration, reversal, and marked-tape runs "
        "for generalized one-way jumping finite automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate an automaton file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("member", help="decide whether a word is accepted")
    p.add_argument("file")
    p.add_argument("word", help=f"input word; {EMPTY_WORD} for the empty word")
    p.set_defaults(handler=_cmd_member)

    p = sub.add_parser("trace", help="print a shortest accepting run")
    p.add_argument("file")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser("enumerate", help="list accepted words up to a length bound")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("reverse", help="print the kind-flipped, word-reversed automaton")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_reverse)

    p = sub.add_parser("lba", help="run the marked-tape machine on a word")
    p.add_argument("file")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_lba)

    p = sub.add_parser("compare", help="diff two automata, or an automaton against an oracle")
    p.add_argument("file")
    p.add_argument("other", nargs="?")
    p.add_argument("--oracle", choices=sorted(ORACLES))
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("oracle", help="evaluate a ground-truth predicate on a word")
    p.add_argument("name", choices=sorted(ORACLES))
    p.add_argument("word")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("examples", help="list the bundled automata")
    p.set_defaults(handler=_cmd_examples)

    return parser


def run_cli(argv: list[str]) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (JumpfaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
