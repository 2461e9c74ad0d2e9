"""Core domain types, validation, and the textual automaton format.

Symbols are single printable ASCII characters and words are plain ``str``
values, so rule words and tape buffers can use ordinary string operations.
An :class:`Automaton` is immutable once validated and may be shared freely
between threads; every other module builds on the guarantees enforced by
:func:`validate_automaton`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

EMPTY_WORD = "<eps>"

# Violation codes reported by validate_automaton.
UNKNOWN_STATE = "unknown-state"
SYMBOL_OUTSIDE_ALPHABET = "symbol-outside-alphabet"
EMPTY_RULE_WORD = "empty-rule-word"
DUPLICATE_RULE_KEY = "duplicate-rule-key"
MISSING_START = "missing-start"


class Kind(enum.Enum):
    """Sweep direction of the deletion head over the input."""

    RIGHT = "grl"
    LEFT = "gll"


class JumpfaError(Exception):
    """Base class for every error raised by this package."""


class UnknownStateError(JumpfaError):
    pass


class SymbolOutsideAlphabetError(JumpfaError):
    pass


class FormatError(JumpfaError):
    """Malformed automaton text; carries the offending line when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class ValidationError(JumpfaError):
    """One or more structural invariants failed; see :attr:`violations`."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class Rule:
    """In state ``src``, delete ``word`` from the input and enter ``dst``.

    This orientation is used for both automaton kinds; the kind only decides
    from which side of the input the word is removed.
    """

    src: str
    word: str
    dst: str


@dataclass(frozen=True)
class Automaton:
    """A validated jumping automaton.

    ``alphabet``, ``states``, ``finals`` and ``rules`` keep declaration
    order, which fixes canonical serialization and enumeration order.
    """

    kind: Kind
    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    start: str
    finals: tuple[str, ...]
    rules: tuple[Rule, ...]


@dataclass
class RawAutomaton:
    """An unchecked automaton description, as produced by the parser."""

    kind: Kind | str | None = None
    alphabet: Sequence[str] | None = None
    states: Sequence[str] = ()
    start: str | None = None
    finals: Sequence[str] = ()
    rules: Sequence[tuple[str, str, str] | Rule] = ()


def validate_automaton(raw: RawAutomaton) -> Automaton:
    """Check every structural invariant and return the frozen automaton.

    All problems are collected before raising, so a single
    :class:`ValidationError` reports the complete list of violations.
    """
    try:
        kind = raw.kind if isinstance(raw.kind, Kind) else Kind(raw.kind)
    except ValueError:
        raise FormatError(
            f"kind must be one of {sorted(k.value for k in Kind)}, got {raw.kind!r}"
        ) from None

    alphabet = tuple(dict.fromkeys(raw.alphabet or ()))
    states = tuple(dict.fromkeys(raw.states))
    finals = tuple(dict.fromkeys(raw.finals))
    known = set(states)
    symbols = set(alphabet)
    problems: list[Violation] = []

    if raw.start is None:
        problems.append(Violation(MISSING_START, "no start state declared"))
    elif raw.start not in known:
        problems.append(Violation(UNKNOWN_STATE, f"start state {raw.start!r} is not declared"))
    for q in finals:
        if q not in known:
            problems.append(Violation(UNKNOWN_STATE, f"final state {q!r} is not declared"))

    rules: list[Rule] = []
    seen_keys: set[tuple[str, str]] = set()
    for entry in raw.rules:
        src, word, dst = (entry.src, entry.word, entry.dst) if isinstance(entry, Rule) else entry
        for q in (src, dst):
            if q not in known:
                problems.append(Violation(UNKNOWN_STATE, f"rule state {q!r} is not declared"))
        if not word:
            problems.append(
                Violation(EMPTY_RULE_WORD, f"rule {src!r} -> {dst!r} must delete a nonempty word")
            )
        stray = sorted(set(word) - symbols)
        if stray:
            problems.append(
                Violation(
                    SYMBOL_OUTSIDE_ALPHABET,
                    f"rule word {word!r} uses undeclared symbol(s) {', '.join(map(repr, stray))}",
                )
            )
        if (src, word) in seen_keys:
            problems.append(
                Violation(DUPLICATE_RULE_KEY, f"state {src!r} reads the word {word!r} twice")
            )
        seen_keys.add((src, word))
        rules.append(Rule(src, word, dst))

    if problems:
        raise ValidationError(problems)
    return Automaton(kind, alphabet, states, raw.start, finals, tuple(rules))


def make_automaton(
    kind: Kind | str,
    alphabet: Sequence[str],
    states: Sequence[str],
    start: str,
    finals: Sequence[str] = (),
    rules: Sequence[tuple[str, str, str] | Rule] = (),
) -> Automaton:
    """Build and validate an automaton from plain Python values."""
    return validate_automaton(RawAutomaton(kind, alphabet, states, start, finals, rules))


def readable_words(aut: Automaton, state: str) -> frozenset[str]:
    """The set of rule words the automaton can delete while in ``state``.

    This set controls both which deletions are enabled and which text the
    head may jump over: skipped text must not contain any of these words.
    """
    if state not in aut.states:
        raise UnknownStateError(f"state {state!r} is not declared")
    return frozenset(rule.word for rule in aut.rules if rule.src == state)


def check_word(aut: Automaton, word: str) -> None:
    """Raise unless every symbol of ``word`` belongs to the alphabet."""
    for ch in word:
        if ch not in aut.alphabet:
            raise SymbolOutsideAlphabetError(
                f"symbol {ch!r} is not in the alphabet {''.join(aut.alphabet)!r}"
            )


_HEADER_KEYS = ("kind", "alphabet", "states", "start", "final")


def _symbol_ok(ch: str) -> bool:
    return ch.isascii() and ch.isprintable() and ch not in " #"


def parse_automaton(text: str) -> Automaton:
    """Parse the line-based automaton format and validate the result.

    The format is::

        kind: grl | gll
        alphabet: ab            # concatenated symbols, no separators
        states: q0 q1 q2        # whitespace-separated identifiers
        start: q0
        final: q1 q2            # may be an empty list
        rule: q0 ab q1          # FROM WORD TO

    ``#`` starts a comment, blank lines are ignored, and header lines may
    appear in any order as long as they precede the first ``rule:`` line.
    """
    raw = RawAutomaton()
    rules: list[tuple[str, str, str]] = []
    seen: set[str] = set()
    in_rules = False
    for lineno, source_line in enumerate(text.splitlines(), 1):
        line = source_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if not sep:
            raise FormatError("expected 'key: value'", lineno)
        if key == "rule":
            in_rules = True
            fields = value.split()
            if len(fields) != 3:
                raise FormatError("rule takes exactly FROM WORD TO", lineno)
            rules.append((fields[0], fields[1], fields[2]))
            continue
        if key not in _HEADER_KEYS:
            raise FormatError(f"unknown directive {key!r}", lineno)
        if in_rules:
            raise FormatError(f"header {key!r} must come before the first rule", lineno)
        if key in seen:
            raise FormatError(f"duplicate header {key!r}", lineno)
        seen.add(key)
        if key == "kind":
            if value not in (k.value for k in Kind):
                raise FormatError("kind must be 'grl' or 'gll'", lineno)
            raw.kind = value
        elif key == "alphabet":
            if not value:
                raise FormatError("alphabet must not be empty", lineno)
            for ch in value:
                if not _symbol_ok(ch):
                    raise FormatError(f"symbol {ch!r} is not printable non-blank ASCII", lineno)
            if len(set(value)) != len(value):
                raise FormatError("alphabet repeats a symbol", lineno)
            raw.alphabet = value
        elif key == "states":
            ids = value.split()
            if len(set(ids)) != len(ids):
                raise FormatError("state declared twice", lineno)
            raw.states = tuple(ids)
        elif key == "start":
            if len(value.split()) != 1:
                raise FormatError("start takes exactly one state", lineno)
            raw.start = value
        else:  # final
            ids = value.split()
            if len(set(ids)) != len(ids):
                raise FormatError("final state listed twice", lineno)
            raw.finals = tuple(ids)
    for key in ("kind", "alphabet", "states", "final"):
        if key not in seen:
            raise FormatError(f"missing header {key!r}")
    raw.rules = tuple(rules)
    return validate_automaton(raw)


def serialize_automaton(aut: Automaton) -> str:
    """Emit the canonical text form: headers first, rules in declaration order."""
    lines = [
        f"kind: {aut.kind.value}",
        f"alphabet: {''.join(aut.alphabet)}",
        f"states: {' '.join(aut.states)}",
        f"start: {aut.start}",
        ("final: " + " ".join(aut.finals)).rstrip(),
    ]
    lines.extend(f"rule: {r.src} {r.word} {r.dst}" for r in aut.rules)
    return "\n".join(lines) + "\n"
