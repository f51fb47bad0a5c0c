"""Ground-truth path enumeration, independent of every closed form.

Words are strings over the step letters "U" (up), "D" (black down) and "R"
(red down).  Two independent recognizers are kept in lock-step:

* a declarative validator applying the path rules directly (never below the
  x-axis; no up-red or red-up adjacency in the skew variant; every maximal
  descent run that reaches the x-axis has odd length; red is not a standard
  step), and
* a walk over the layered state graph whose forward counting relation is the
  dynamic program of :func:`dp_counts`.

The two must agree on every word; any disagreement raises, it is never
reported as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .series import DomainError

UP = "U"
DOWN = "D"
RED = "R"

_LAYER_ORDER = {"E": 0, "F": 1, "G": 2, "H": 3, "K": 4}

DEFAULT_EXHAUSTIVE_CAPS = {"std": 16, "skew": 14}


class LimitExceededError(ValueError):
    """Exhaustive enumeration was asked to exceed its configured cap."""


class State(NamedTuple):
    layer: str
    level: int


def state_sort_key(state: State) -> tuple[int, int]:
    return (_LAYER_ORDER[state.layer], state.level)


def _require_variant(variant: str) -> None:
    if variant not in ("std", "skew"):
        raise DomainError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class Automaton:
    """Transition structure of one variant's layered state graph.

    Deterministic: each (state, letter) pair has at most one successor.
    Layer G sits after up-steps; F/H track descents by the parity their
    completed return to the axis would have (even runs cannot finish, the
    F layer has no level-0 state); E/K are the red-tinted twins of F/H in
    the skew variant.
    """

    variant: str

    def __post_init__(self) -> None:
        _require_variant(self.variant)

    @property
    def alphabet(self) -> str:
        return "UD" if self.variant == "std" else "UDR"

    @property
    def layers(self) -> tuple[str, ...]:
        return ("F", "G", "H") if self.variant == "std" else ("E", "F", "G", "H", "K")

    @property
    def start(self) -> State:
        return State("G", 0)

    def transitions(self, state: State) -> tuple[tuple[str, State], ...]:
        layer, lvl = state
        if layer not in self.layers:
            raise DomainError(f"layer {layer!r} does not exist in variant {self.variant}")
        if lvl < 0 or (layer in ("E", "F") and lvl < 1):
            raise DomainError(f"state {layer}:{lvl} does not exist")
        skew = self.variant == "skew"
        out: list[tuple[str, State]] = []
        if layer == "G":
            out.append((UP, State("G", lvl + 1)))
            if lvl >= 1:
                target = "F" if (lvl - 1) % 2 == 1 else "H"
                out.append((DOWN, State(target, lvl - 1)))
        elif layer == "F":
            out.append((UP, State("G", lvl + 1)))
            if lvl >= 2:
                out.append((DOWN, State("F", lvl - 1)))
                if skew:
                    out.append((RED, State("E", lvl - 1)))
        elif layer == "H":
            out.append((UP, State("G", lvl + 1)))
            if lvl >= 1:
                out.append((DOWN, State("H", lvl - 1)))
                if skew:
                    out.append((RED, State("K", lvl - 1)))
        elif layer == "E":
            if lvl >= 2:
                out.append((DOWN, State("F", lvl - 1)))
                out.append((RED, State("E", lvl - 1)))
        elif layer == "K":
            if lvl >= 1:
                out.append((DOWN, State("H", lvl - 1)))
                out.append((RED, State("K", lvl - 1)))
        return tuple(out)

    def step(self, state: State, letter: str) -> State | None:
        for step_letter, target in self.transitions(state):
            if step_letter == letter:
                return target
        return None

    def is_dead_end(self, state: State) -> bool:
        return not self.transitions(state)


_AUTOMATA = {"std": Automaton("std"), "skew": Automaton("skew")}


def automaton(variant: str) -> Automaton:
    _require_variant(variant)
    return _AUTOMATA[variant]


@dataclass
class StateCountTable:
    """Exact counts of words from the start state, by length and end state."""

    variant: str
    max_len: int
    rows: list[dict[State, int]]

    def row(self, n: int) -> dict[State, int]:
        return self.rows[n]

    def count(self, n: int, state: State) -> int:
        return self.rows[n].get(state, 0)

    def total(self, n: int) -> int:
        return sum(self.rows[n].values())


def dp_counts(variant: str, max_len: int) -> StateCountTable:
    """Forward dynamic program over the state graph.

    rows[n+1][target] = sum of rows[n][source] over all edges source->target,
    starting from a single word of length 0 at (G, 0).
    """
    _require_variant(variant)
    if max_len < 0:
        raise DomainError("max_len must be non-negative")
    auto = automaton(variant)
    rows: list[dict[State, int]] = [{auto.start: 1}]
    for _ in range(max_len):
        nxt: dict[State, int] = {}
        for state, count in rows[-1].items():
            for _letter, target in auto.transitions(state):
                nxt[target] = nxt.get(target, 0) + count
        rows.append(dict(sorted(nxt.items(), key=lambda kv: state_sort_key(kv[0]))))
    return StateCountTable(variant=variant, max_len=max_len, rows=rows)


def parse_word(text: str) -> str:
    """Normalize user input to a canonical step word.

    Letters may be upper or lower case, contiguous or whitespace-separated.
    """
    word = "".join(text.split()).upper()
    for ch in word:
        if ch not in (UP, DOWN, RED):
            raise DomainError(f"unknown step letter {ch!r} (expected U, D or R)")
    return word


def _rule_step(
    variant: str, level: int, run_len: int, prev: str | None, letter: str
) -> tuple[int, int] | str:
    """Advance the declarative validator by one step.

    Returns the new (level, descent-run length), or a violation reason.
    All three rules are prefix-monotone: once violated, no continuation can
    repair the word.
    """
    if letter == UP:
        if prev == RED:
            return "up-step immediately after a red step"
        return level + 1, 0
    if letter == RED:
        if variant == "std":
            return "red steps are not part of the standard step set"
        if prev == UP:
            return "red step immediately after an up-step"
    if level == 0:
        return "descent below the x-axis"
    level -= 1
    run_len += 1
    if level == 0 and run_len % 2 == 0:
        return "even-length descent run reaching the x-axis"
    return level, run_len


@dataclass(frozen=True)
class ValidationResult:
    valid: bool
    end_state: State | None
    first_violation: int | None
    reason: str | None


def validate_word(variant: str, word: str) -> ValidationResult:
    """Judge a word by the declarative rules, cross-checked against the graph.

    Violations are data, not errors: the result carries the index of the
    first offending step.  The declarative verdict and the state-graph walk
    must agree on both the verdict and the position; a mismatch would be an
    internal bug and raises RuntimeError.
    """
    _require_variant(variant)
    for ch in word:
        if ch not in (UP, DOWN, RED):
            raise DomainError(f"unknown step letter {ch!r} (expected U, D or R)")

    level, run_len = 0, 0
    prev: str | None = None
    violation: tuple[int, str] | None = None
    for i, letter in enumerate(word):
        outcome = _rule_step(variant, level, run_len, prev, letter)
        if isinstance(outcome, str):
            violation = (i, outcome)
            break
        level, run_len = outcome
        prev = letter

    auto = automaton(variant)
    state = auto.start
    stuck: int | None = None
    for i, letter in enumerate(word):
        nxt = auto.step(state, letter)
        if nxt is None:
            stuck = i
            break
        state = nxt

    if (violation is None) != (stuck is None) or (
        violation is not None and violation[0] != stuck
    ):
        raise RuntimeError(
            f"internal: declarative rules and state graph disagree on {word!r}"
        )
    if violation is not None:
        return ValidationResult(False, None, violation[0], violation[1])
    if state.level != level:
        raise RuntimeError(f"internal: level mismatch walking {word!r}")
    return ValidationResult(True, state, None, None)


@dataclass
class EnumerationResult:
    """Valid words of one length, grouped by end state."""

    variant: str
    length: int
    counts: dict[State, int]
    words: dict[State, list[str]] | None

    def total(self) -> int:
        return sum(self.counts.values())


def enumerate_words(
    variant: str,
    length: int,
    list_mode: bool = False,
    cap: int | None = None,
) -> EnumerationResult:
    """Brute-force oracle: walk the word tree under the declarative rules.

    The tree over the variant's alphabet is pruned at the first declarative
    violation; since all rules are prefix-monotone this yields exactly the
    words that a full generate-then-filter pass would keep.  The state-graph
    walk runs in parallel and must allow a step exactly when the rules do.
    Every surviving word is additionally re-checked with validate_word.
    """
    _require_variant(variant)
    if length < 0:
        raise DomainError("length must be non-negative")
    limit = DEFAULT_EXHAUSTIVE_CAPS[variant] if cap is None else cap
    if length > limit:
        raise LimitExceededError(
            f"length {length} exceeds the exhaustive cap {limit} for {variant}"
        )
    auto = automaton(variant)
    letters = auto.alphabet
    counts: dict[State, int] = {}
    words: dict[State, list[str]] | None = {} if list_mode else None

    def walk(depth: int, level: int, run_len: int, prev: str | None,
             state: State, prefix: str) -> None:
        if depth == length:
            check = validate_word(variant, prefix)
            if not check.valid or check.end_state != state:
                raise RuntimeError(f"internal: enumeration emitted bad word {prefix!r}")
            counts[state] = counts.get(state, 0) + 1
            if words is not None:
                words.setdefault(state, []).append(prefix)
            return
        for letter in letters:
            outcome = _rule_step(variant, level, run_len, prev, letter)
            nxt = auto.step(state, letter)
            if isinstance(outcome, str):
                if nxt is not None:
                    raise RuntimeError(
                        f"internal: graph allows {prefix + letter!r}, rules do not"
                    )
                continue
            if nxt is None:
                raise RuntimeError(
                    f"internal: rules allow {prefix + letter!r}, graph does not"
                )
            walk(depth + 1, outcome[0], outcome[1], letter, nxt, prefix + letter)

    walk(0, 0, 0, None, auto.start, "")
    ordered = dict(sorted(counts.items(), key=lambda kv: state_sort_key(kv[0])))
    ordered_words = None
    if words is not None:
        ordered_words = {
            state: sorted(words.get(state, ())) for state in ordered
        }
    return EnumerationResult(
        variant=variant, length=length, counts=ordered, words=ordered_words
    )


def iter_states(table: StateCountTable, n: int) -> Iterator[tuple[State, int]]:
    """Row n of a count table in canonical state order."""
    for state in sorted(table.row(n), key=state_sort_key):
        yield state, table.row(n)[state]
