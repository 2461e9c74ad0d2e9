"""Toolkit for generalized linear one-way jumping finite automata.

These machines delete whole words from the input, may jump over text that
contains nothing readable, and wrap the head around when stuck. The package
provides the executable one-step semantics, membership with traces, bounded
language enumeration, the kind-flipping reversal construction, a classic
single-symbol reference simulator, a marked-tape linear-bounded realization,
and brute-force language oracles with a corpus of worked example machines.
"""

from .core import (
    EMPTY_WORD,
    Automaton,
    FormatError,
    JumpfaError,
    Kind,
    RawAutomaton,
    Rule,
    SymbolOutsideAlphabetError,
    UnknownStateError,
    ValidationError,
    Violation,
    check_word,
    make_automaton,
    parse_automaton,
    readable_words,
    serialize_automaton,
    validate_automaton,
)
from .engine import (
    Configuration,
    Consume,
    Move,
    RETURN,
    Return,
    SearchLimitError,
    Trace,
    accepts,
    consume_successors,
    contains_factor,
    enumerate_language,
    format_trace,
    initial_config,
    is_accepting,
    iter_words,
    leftmost_occurrence,
    member,
    naive_consume_successors,
    return_successor,
    successors,
)
from .lba import SpaceReport, TapeConfig, WrongKindError, lba_equivalence, lba_run
from .oracles import (
    CORPUS_CLAIMS,
    ORACLES,
    NamedPredicate,
    UnknownOracleError,
    bundled_corpus,
    load_bundled,
    oracle_difference,
    oracle_eval,
)
from .transforms import (
    AlphabetMismatchError,
    NotUnitRuleError,
    OneWayConfig,
    is_unit_rule,
    language_difference,
    one_way_reference_member,
    one_way_reference_trace,
    reverse_automaton,
)

__version__ = "0.1.0"
