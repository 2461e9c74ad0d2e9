"""One-step semantics, membership search, traces, and enumeration.

A configuration splits the remaining input around the current state: for a
right-linear automaton the head deletes words from the right buffer and text
it jumps over piles up in the left buffer; a left-linear automaton is the
mirror image. Two move shapes exist:

* consume: delete the nearest occurrence of a rule word, provided the gap
  jumped over contains no word readable in the current state;
* return: when nothing ahead is readable, wrap the head back past the text
  jumped over so far, making it readable again.

Several rule words may be deletable at once (e.g. words ``a`` and ``aa``
ahead of the same position), so acceptance is existential over branches and
:func:`member` performs a breadth-first search of the configuration graph.
Every consume strictly shrinks the input and returns never repeat, so the
graph is acyclic and the search terminates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .core import (
    EMPTY_WORD,
    Automaton,
    JumpfaError,
    Kind,
    Rule,
    check_word,
)

# Hard cap on search size; generously above anything a desk-scale input can
# produce, since the configuration graph is acyclic.
DEFAULT_MAX_EXPANSIONS = 1_000_000


class SearchLimitError(JumpfaError):
    """The membership search exceeded its expansion budget."""


class Configuration(NamedTuple):
    """Text already jumped over, current state, text still ahead."""

    left: str
    state: str
    right: str


@dataclass(frozen=True)
class Consume:
    """Application of ``rule`` after jumping over ``skip``."""

    rule: Rule
    skip: str


@dataclass(frozen=True)
class Return:
    """The wrap-around jump back to the far end of the remaining input."""


RETURN = Return()

Move = Consume | Return


@dataclass(frozen=True)
class Trace:
    """An accepting run: ``configs[0]`` is initial, ``moves[i]`` links
    ``configs[i]`` to ``configs[i + 1]``, and the last configuration is a
    bare final state."""

    configs: tuple[Configuration, ...]
    moves: tuple[Move, ...]


class _Tables(NamedTuple):
    rules_from: dict[str, tuple[Rule, ...]]
    readable: dict[str, tuple[str, ...]]
    finals: frozenset[str]


@lru_cache(maxsize=None)
def _tables(aut: Automaton) -> _Tables:
    rules_from = {q: tuple(r for r in aut.rules if r.src == q) for q in aut.states}
    readable = {q: tuple(dict.fromkeys(r.word for r in rules_from[q])) for q in aut.states}
    return _Tables(rules_from, readable, frozenset(aut.finals))


def initial_config(aut: Automaton, word: str) -> Configuration:
    """Starting configuration: the whole input ahead of the head."""
    check_word(aut, word)
    if aut.kind is Kind.RIGHT:
        return Configuration("", aut.start, word)
    return Configuration(word, aut.start, "")


def is_accepting(aut: Automaton, config: Configuration) -> bool:
    """True when the input is fully consumed in a final state."""
    return not config.left and not config.right and config.state in aut.finals


def leftmost_occurrence(haystack: str, needle: str) -> int | None:
    """Index of the first occurrence of ``needle``, or None. ``needle`` nonempty."""
    pos = haystack.find(needle)
    return pos if pos >= 0 else None


def contains_factor(word: str, words: Sequence[str]) -> bool:
    """True if any of ``words`` (all nonempty) occurs as a factor of ``word``."""
    return any(w in word for w in words)


def _successors(
    kind: Kind,
    rules_from: dict[str, tuple[Rule, ...]],
    readable: dict[str, tuple[str, ...]],
    config: Configuration,
) -> list[tuple[Move, Configuration]]:
    left, state, right = config
    words = readable.get(state, ())
    out: list[tuple[Move, Configuration]] = []
    if kind is Kind.RIGHT:
        # Only the leftmost occurrence of a rule word can fire: any later
        # occurrence leaves an earlier one inside the gap (or straddling its
        # boundary), which the jump conditions forbid.
        for rule in rules_from.get(state, ()):
            pos = right.find(rule.word)
            if pos < 0:
                continue
            gap = right[:pos]
            if gap and contains_factor(gap, words):
                continue
            after = Configuration(left + gap, rule.dst, right[pos + len(rule.word):])
            out.append((Consume(rule, gap), after))
        if left and not contains_factor(right, words):
            out.append((RETURN, Configuration("", state, left + right)))
    else:
        # Mirror image: scan the left buffer from its right end.
        for rule in rules_from.get(state, ()):
            pos = left.rfind(rule.word)
            if pos < 0:
                continue
            gap = left[pos + len(rule.word):]
            if gap and contains_factor(gap, words):
                continue
            after = Configuration(left[:pos], rule.dst, gap + right)
            out.append((Consume(rule, gap), after))
        if right and not contains_factor(left, words):
            out.append((RETURN, Configuration(left + right, state, "")))
    return out


def consume_successors(aut: Automaton, config: Configuration) -> list[tuple[Move, Configuration]]:
    """All enabled word deletions from ``config``, in rule declaration order."""
    tables = _tables(aut)
    return [
        step
        for step in _successors(aut.kind, tables.rules_from, tables.readable, config)
        if isinstance(step[0], Consume)
    ]


def return_successor(aut: Automaton, config: Configuration) -> tuple[Move, Configuration] | None:
    """The wrap-around move, if enabled from ``config``."""
    tables = _tables(aut)
    for step in _successors(aut.kind, tables.rules_from, tables.readable, config):
        if isinstance(step[0], Return):
            return step
    return None


def successors(aut: Automaton, config: Configuration) -> list[tuple[Move, Configuration]]:
    """Every one-step successor: deletions in rule order, then the return jump."""
    tables = _tables(aut)
    return _successors(aut.kind, tables.rules_from, tables.readable, config)


def naive_consume_successors(
    aut: Automaton, config: Configuration
) -> list[tuple[Move, Configuration]]:
    """Reference implementation of the deletion step, kept deliberately naive.

    Enumerates every occurrence of every rule word and filters by the literal
    side conditions: the gap must not contain any readable word, and the fired
    word must not also appear straddling the gap boundary (no nonempty gap
    suffix extends to the fired word with one of its own nonempty prefixes).
    The fast path above must agree with this on every configuration; the test
    suite compares the two exhaustively.
    """
    tables = _tables(aut)
    words = tables.readable.get(config.state, ())
    out: list[tuple[Move, Configuration]] = []
    if aut.kind is Kind.RIGHT:
        text = config.right
        for rule in tables.rules_from.get(config.state, ()):
            x = rule.word
            pos = text.find(x)
            while pos >= 0:
                gap, rest = text[:pos], text[pos + len(x):]
                straddle = any(
                    gap[-k:] + x[: len(x) - k] == x
                    for k in range(1, min(len(gap), len(x) - 1) + 1)
                )
                if not contains_factor(gap, words) and not straddle:
                    after = Configuration(config.left + gap, rule.dst, rest)
                    out.append((Consume(rule, gap), after))
                pos = text.find(x, pos + 1)
    else:
        text = config.left
        for rule in tables.rules_from.get(config.state, ()):
            x = rule.word
            pos = text.find(x)
            while pos >= 0:
                kept, gap = text[:pos], text[pos + len(x):]
                straddle = any(
                    x[k:] + gap[:k] == x
                    for k in range(1, min(len(gap), len(x) - 1) + 1)
                )
                if not contains_factor(gap, words) and not straddle:
                    after = Configuration(kept, rule.dst, gap + config.right)
                    out.append((Consume(rule, gap), after))
                pos = text.find(x, pos + 1)
    return out


def member(
    aut: Automaton, word: str, *, max_expansions: int = DEFAULT_MAX_EXPANSIONS
) -> tuple[bool, Trace | None]:
    """Decide membership; on acceptance also return a shortest trace.

    Breadth-first search over exact configurations. Ties between equal-depth
    branches resolve in rule declaration order with the return jump last, so
    the returned trace is reproducible.
    """
    start = initial_config(aut, word)
    kind = aut.kind
    rules_from, readable, finals = _tables(aut)
    if not start.left and not start.right and start.state in finals:
        return True, Trace((start,), ())
    paths: dict[Configuration, tuple[Configuration, Move] | None] = {start: None}
    queue: deque[Configuration] = deque((start,))
    expansions = 0
    while queue:
        config = queue.popleft()
        expansions += 1
        if expansions > max_expansions:
            raise SearchLimitError(
                f"gave up after {max_expansions} expansions on input of length {len(word)}"
            )
        for move, nxt in _successors(kind, rules_from, readable, config):
            if nxt in paths:
                continue
            paths[nxt] = (config, move)
            if not nxt.left and not nxt.right and nxt.state in finals:
                return True, _backtrack(paths, nxt)
            queue.append(nxt)
    return False, None


def _backtrack(
    paths: dict[Configuration, tuple[Configuration, Move] | None], last: Configuration
) -> Trace:
    configs = [last]
    moves: list[Move] = []
    step = paths[last]
    while step is not None:
        prev, move = step
        configs.append(prev)
        moves.append(move)
        step = paths[prev]
    configs.reverse()
    moves.reverse()
    return Trace(tuple(configs), tuple(moves))


def accepts(aut: Automaton, word: str, *, max_expansions: int = DEFAULT_MAX_EXPANSIONS) -> bool:
    """Membership verdict only."""
    return member(aut, word, max_expansions=max_expansions)[0]


def iter_words(alphabet: Sequence[str], max_len: int) -> Iterator[str]:
    """All words of length <= max_len in length-then-lexicographic order,
    using the declaration order of ``alphabet``."""
    for length in range(max_len + 1):
        for letters in product(alphabet, repeat=length):
            yield "".join(letters)


def enumerate_language(
    aut: Automaton, max_len: int, *, max_expansions: int = DEFAULT_MAX_EXPANSIONS
) -> list[str]:
    """All accepted words of length <= max_len, length-lexicographic."""
    return [
        w for w in iter_words(aut.alphabet, max_len) if member(aut, w, max_expansions=max_expansions)[0]
    ]


def format_configuration(config: Configuration) -> str:
    left = config.left or EMPTY_WORD
    right = config.right or EMPTY_WORD
    return f"{left} | {config.state} | {right}"


def format_move(move: Move) -> str:
    if isinstance(move, Return):
        return "return"
    rule = move.rule
    return f"consume({rule.src},{rule.word},{rule.dst} skip={move.skip or EMPTY_WORD})"


def format_trace(trace: Trace) -> str:
    """One configuration per line; each produced configuration carries the
    move that reached it as a suffix annotation."""
    lines = [format_configuration(trace.configs[0])]
    for move, config in zip(trace.moves, trace.configs[1:]):
        lines.append(f"{format_configuration(config)}  -- {format_move(move)}")
    return "\n".join(lines)
