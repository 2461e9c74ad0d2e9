"""Marked-tape linear-bounded realization of the right-linear engine.

The machine works on the input word between two end markers and never
allocates beyond it. A deletion is performed in two stages: the cells of the
consumed word are first marked in place, and marked cells are physically
removed (the surviving cells shift left, markers pulled in) only when the
head would run past the right marker or when nothing ahead of the head is
readable. The second case also realizes the engine's wrap-around move: after
compaction the head stands on the first surviving cell.

Nondeterministic rule choice is resolved by breadth-first search over machine
configurations. The only possible repeat is the idle compaction of a stuck
machine (nothing marked, head already leftmost), which the visited set cuts.

Gap checking uses every word readable in the current state, exactly like the
one-step engine; checking only the word being fired would admit runs the
engine forbids and break the equivalence the bounded cross-check verifies.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .core import Automaton, JumpfaError, Kind, check_word
from .engine import DEFAULT_MAX_EXPANSIONS, SearchLimitError, contains_factor, iter_words, member, _tables


class WrongKindError(JumpfaError):
    pass


class TapeConfig(NamedTuple):
    """Machine configuration: tape between the end markers plus control."""

    state: str
    cells: str
    marks: int  # bitmask over cells; bit i set = cells[i] marked for removal
    head: int


@dataclass(frozen=True)
class SpaceReport:
    """Measured resource use of a run.

    ``max_cells_used`` counts tape cells including both end markers;
    ``compactions`` and ``steps`` are worst-case counts along any single
    explored branch.
    """

    max_cells_used: int
    compactions: int
    steps: int


def _compact(cells: str, marks: int) -> str:
    if not marks:
        return cells
    return "".join(ch for i, ch in enumerate(cells) if not marks >> i & 1)


def _machine_successors(
    rules_from, readable, config: TapeConfig, compact_when_stuck: bool
) -> list[tuple[bool, TapeConfig]]:
    """Macro-steps from ``config`` as (compacted, successor) pairs."""
    state, cells, marks, head = config
    if not cells:
        return []
    ahead = cells[head:]  # cells at or right of the head are never marked
    out: list[tuple[bool, TapeConfig]] = []
    for rule in rules_from.get(state, ()):
        pos = ahead.find(rule.word)
        if pos < 0:
            continue
        gap = ahead[:pos]
        if gap and contains_factor(gap, readable[state]):
            continue
        lo, hi = head + pos, head + pos + len(rule.word)
        marked = marks | ((1 << (hi - lo)) - 1) << lo
        if hi < len(cells):
            # Unread cells remain: park the head just past the marked word.
            out.append((False, TapeConfig(rule.dst, cells, marked, hi)))
        else:
            # The marked word touches the right marker: remove marked cells
            # and restart the head at the left end of what survives.
            out.append((True, TapeConfig(rule.dst, _compact(cells, marked), 0, 0)))
    if out:
        return out
    if not compact_when_stuck:
        # Fault-injection hook for the test suite: a machine that cannot
        # compact when stuck loses every run that needs a wrap-around.
        return []
    return [(True, TapeConfig(state, _compact(cells, marks), 0, 0))]


def _explore(
    aut: Automaton,
    word: str,
    *,
    max_expansions: int = DEFAULT_MAX_EXPANSIONS,
    compact_when_stuck: bool = True,
) -> tuple[bool, SpaceReport, list[tuple[TapeConfig, bool, TapeConfig]]]:
    """Run the machine and also report the discovery edges, for inspection."""
    if aut.kind is not Kind.RIGHT:
        raise WrongKindError("the marked-tape machine is defined for right-linear automata")
    check_word(aut, word)
    rules_from, readable, finals = _tables(aut)

    start = TapeConfig(aut.start, word, 0, 0)
    max_cells = len(word) + 2  # the initial tape is the high-water mark; it only shrinks
    edges: list[tuple[TapeConfig, bool, TapeConfig]] = []
    if not start.cells and start.state in finals:
        return True, SpaceReport(max_cells, 0, 0), edges

    accepted = False
    worst_steps = worst_compactions = 0
    visited = {start}
    queue: deque[tuple[TapeConfig, int, int]] = deque(((start, 0, 0),))
    expansions = 0
    while queue and not accepted:
        config, depth, compactions = queue.popleft()
        expansions += 1
        if expansions > max_expansions:
            raise SearchLimitError(
                f"gave up after {max_expansions} machine steps on input of length {len(word)}"
            )
        for compacted, nxt in _machine_successors(rules_from, readable, config, compact_when_stuck):
            if nxt in visited:
                continue
            visited.add(nxt)
            edges.append((config, compacted, nxt))
            nxt_depth = depth + 1
            nxt_compactions = compactions + compacted
            worst_steps = max(worst_steps, nxt_depth)
            worst_compactions = max(worst_compactions, nxt_compactions)
            if not nxt.cells and nxt.state in finals:
                accepted = True
                break
            queue.append((nxt, nxt_depth, nxt_compactions))
    return accepted, SpaceReport(max_cells, worst_compactions, worst_steps), edges


def lba_run(
    aut: Automaton,
    word: str,
    *,
    max_expansions: int = DEFAULT_MAX_EXPANSIONS,
    compact_when_stuck: bool = True,
) -> tuple[bool, SpaceReport]:
    """Decide membership on the marked tape and report resource use."""
    verdict, report, _ = _explore(
        aut, word, max_expansions=max_expansions, compact_when_stuck=compact_when_stuck
    )
    return verdict, report


def lba_equivalence(
    aut: Automaton, max_len: int, *, max_expansions: int = DEFAULT_MAX_EXPANSIONS
) -> list[str]:
    """Words of length <= max_len where the machine and the engine disagree.

    Empty certifies bounded equivalence of the two implementations.
    """
    out = []
    for w in iter_words(aut.alphabet, max_len):
        if lba_run(aut, w, max_expansions=max_expansions)[0] != member(
            aut, w, max_expansions=max_expansions
        )[0]:
            out.append(w)
    return out
