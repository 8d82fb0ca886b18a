"""Word rewriting under the elementary tangle relations.

Every rule replaces a window of two (or, for braid moves, three) adjacent
generators.  Each application carries a grading ``delta``:

* KinkAbsorb: +1 for an over-crossing kink, -1 for an under-crossing kink
* ZigZag: -1
* everything else: 0

The deltas are shifts of the correspondences attached to the generators.  On
graded groups a correspondence shift of ``d`` moves degrees by ``-d``, which is
how ``evaluate_closed`` consumes the ledger total.
"""

from __future__ import annotations

import enum
import json
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import (
    ArityMismatch,
    Generator,
    Kind,
    TangleWord,
    check_arities,
    linking_numbers,
    trace_connectivity,
)

__all__ = [
    "Rule",
    "RuleApplication",
    "ReductionTrace",
    "Irreducible",
    "DEFAULT_BUDGET",
    "SHRINKING",
    "applicable_rules",
    "all_applications",
    "apply_rule",
    "replay",
    "reduce_word",
    "equivalent",
    "trace_to_json",
]

DEFAULT_BUDGET = 100_000

CAP, CUP, OVER, UNDER = Kind.CAP, Kind.CUP, Kind.OVER, Kind.UNDER


class Irreducible(Exception):
    """The search budget ran out (or the search space did) with crossings left."""

    def __init__(self, message: str, residual: TangleWord | None = None, nodes: int = 0):
        super().__init__(message)
        self.residual = residual
        self.nodes = nodes


class Rule(enum.IntEnum):
    # declaration order is the tie-break order
    FAR_COMMUTE = 0
    CAP_CUP_COMMUTE = 1
    CAP_SIGMA_COMMUTE = 2
    KINK_ABSORB = 3
    CROSS_CANCEL = 4
    BRAID_MOVE = 5
    ZIG_ZAG = 6
    CROSS_SLIDE = 7
    CIRCLE_REMOVE = 8

    @property
    def label(self) -> str:
        return "".join(part.capitalize() for part in self.name.split("_"))

    @classmethod
    def from_label(cls, label: str) -> Rule:
        for r in cls:
            if r.label == label:
                return r
        raise ValueError(f"unknown rule {label!r}")


SHRINKING = frozenset({Rule.CIRCLE_REMOVE, Rule.ZIG_ZAG, Rule.CROSS_CANCEL, Rule.KINK_ABSORB})


@dataclass(frozen=True)
class RuleApplication:
    rule: Rule
    position: int  # 1-based index of the first generator of the window
    width: int
    replacement: tuple[Generator, ...]
    delta: int = 0
    direction: str = "forward"

    @property
    def circle(self) -> bool:
        return self.rule is Rule.CIRCLE_REMOVE

    @property
    def shrinking(self) -> bool:
        return self.rule in SHRINKING

    def to_json(self) -> dict:
        return {"rule": self.rule.label, "position": self.position, "delta": self.delta}


# --------------------------------------------------------------------------
# local rules

def _top_footprint(g: Generator) -> tuple[float, float]:
    if g.kind is CUP:
        return (g.index - 0.5, g.index - 0.5)
    return (g.index, g.index + 1)


def _bottom_footprint(g: Generator) -> tuple[float, float]:
    if g.kind is CAP:
        return (g.index - 0.5, g.index - 0.5)
    return (g.index, g.index + 1)


def _commute_rule(g: Generator, h: Generator) -> Rule:
    kinds = {g.kind, h.kind}
    if kinds == {CAP, CUP}:
        return Rule.CAP_CUP_COMMUTE
    if (CAP in kinds or CUP in kinds) and (OVER in kinds or UNDER in kinds):
        return Rule.CAP_SIGMA_COMMUTE
    return Rule.FAR_COMMUTE


def _far_commutes(g: Generator, h: Generator) -> list[tuple[Generator, Generator]]:
    """Ways to swap ``g`` (below) and ``h`` (above) when their supports are disjoint."""
    glo, ghi = _top_footprint(g)
    hlo, hhi = _bottom_footprint(h)
    # a cup closing at the very gap where a cap opens: the cap may pass either side
    touching_gaps = g.kind is CUP and h.kind is CAP and glo == hlo
    out = []
    if hhi < glo or touching_gaps:
        out.append((h, Generator(g.kind, g.index + h.kind.arity_change)))
    if hlo > ghi or touching_gaps:
        out.append((Generator(h.kind, h.index - g.kind.arity_change), g))
    return out


def _pair_rules(g: Generator, h: Generator) -> list[tuple[Rule, tuple[Generator, ...], int, str]]:
    out: list[tuple[Rule, tuple[Generator, ...], int, str]] = []
    gk, hk, i, j = g.kind, h.kind, g.index, h.index
    for new in _far_commutes(g, h):
        out.append((_commute_rule(g, h), new, 0, "forward"))
    if gk is CAP and hk is CUP:
        if i == j:
            out.append((Rule.CIRCLE_REMOVE, (), 0, "forward"))
        elif j == i + 1 or i == j + 1:
            out.append((Rule.ZIG_ZAG, (), -1, "forward"))
    if gk.is_crossing:
        if hk is CUP and j == i:
            out.append((Rule.KINK_ABSORB, (h,), 1 if gk is OVER else -1, "forward"))
        elif hk.is_crossing and j == i and hk is not gk:
            out.append((Rule.CROSS_CANCEL, (), 0, "forward"))
        elif hk is CUP and j == i + 1:
            out.append((Rule.CROSS_SLIDE, (Generator(gk.mirror(), i + 1), Generator(CUP, i)), 0, "forward"))
        elif hk is CUP and i == j + 1:
            out.append((Rule.CROSS_SLIDE, (Generator(gk.mirror(), j), Generator(CUP, j + 1)), 0, "backward"))
    if gk is CAP and hk.is_crossing:
        if j == i:
            out.append((Rule.KINK_ABSORB, (g,), 1 if hk is OVER else -1, "forward"))
        elif j == i - 1:
            out.append((Rule.CROSS_SLIDE, (Generator(CAP, i - 1), Generator(hk.mirror(), i)), 0, "forward"))
        elif j == i + 1:
            out.append((Rule.CROSS_SLIDE, (Generator(CAP, i + 1), Generator(hk.mirror(), i)), 0, "backward"))
    return out


def _braid_rule(a: Generator, b: Generator, c: Generator):
    if not (a.kind.is_crossing and b.kind.is_crossing and c.kind.is_crossing):
        return None
    if a.index != c.index or abs(a.index - b.index) != 1:
        return None
    # over/under pattern must stack the three strands consistently
    if a.kind is c.kind and b.kind is not a.kind:
        return None
    i, k = a.index, b.index
    direction = "forward" if k == i + 1 else "backward"
    return (Generator(c.kind, k), Generator(b.kind, i), Generator(a.kind, k)), direction


def _applications_at(gens: Sequence[Generator], p: int) -> list[RuleApplication]:
    """All rule applications whose window starts at 0-based position ``p``."""
    out = []
    if p + 1 < len(gens):
        for rule, repl, delta, direction in _pair_rules(gens[p], gens[p + 1]):
            out.append(RuleApplication(rule, p + 1, 2, repl, delta, direction))
    if p + 2 < len(gens):
        br = _braid_rule(gens[p], gens[p + 1], gens[p + 2])
        if br is not None:
            out.append(RuleApplication(Rule.BRAID_MOVE, p + 1, 3, br[0], 0, br[1]))
    out.sort(key=lambda a: a.rule)
    return out


def applicable_rules(word: TangleWord, position: int) -> list[RuleApplication]:
    """Rule applications whose window starts at the 1-based ``position``, ordered by rule."""
    if not 1 <= position <= len(word.gens):
        return []
    return _applications_at(word.gens, position - 1)


def all_applications(word: TangleWord | Sequence[Generator]) -> list[RuleApplication]:
    gens = word.gens if isinstance(word, TangleWord) else word
    out = []
    for p in range(len(gens)):
        out.extend(_applications_at(gens, p))
    out.sort(key=lambda a: (a.rule, a.position))
    return out


def _apply(gens: tuple[Generator, ...], app: RuleApplication) -> tuple[Generator, ...]:
    p = app.position - 1
    return gens[:p] + app.replacement + gens[p + app.width:]


def apply_rule(word: TangleWord, app: RuleApplication) -> TangleWord:
    if app not in _applications_at(word.gens, app.position - 1):
        raise ValueError(f"{app.rule.label} does not apply at position {app.position} of {word}")
    return TangleWord(word.input_arity, _apply(word.gens, app))


# --------------------------------------------------------------------------
# reduction of closed words

@dataclass(frozen=True)
class ReductionTrace:
    start: TangleWord
    steps: tuple[RuleApplication, ...]
    ledger_total: int
    circles_extracted: int
    residual: TangleWord
    nodes: int = 0

    def to_json(self) -> list[dict]:
        return trace_to_json(self.steps)


def trace_to_json(steps: Iterable[RuleApplication]) -> list[dict]:
    return [s.to_json() for s in steps]


def replay(word: TangleWord, steps: Iterable[RuleApplication]) -> TangleWord:
    for s in steps:
        word = apply_rule(word, s)
    return word


def _shrinks(gens: Sequence[Generator]) -> list[RuleApplication]:
    return [a for a in all_applications(gens) if a.shrinking]


def _moves(gens: Sequence[Generator]) -> list[RuleApplication]:
    return [a for a in all_applications(gens) if not a.shrinking]


def _flat_step(gens: tuple[Generator, ...], rng: random.Random | None) -> RuleApplication:
    """Move a cup below an adjacent disjoint cap (crossing-free words only)."""
    options = []
    for p in range(len(gens) - 1):
        if gens[p].kind is CAP and gens[p + 1].kind is CUP:
            options.extend(a for a in _applications_at(gens, p) if a.rule is Rule.CAP_CUP_COMMUTE)
            if rng is None and options:
                return options[0]
    if not options:
        raise AssertionError("crossing-free closed word with no cap/cup commute")
    return rng.choice(options)


def _search(gens: tuple[Generator, ...], budget: int, rng: random.Random | None):
    """Breadth-first search over delta-0 moves for a word admitting a shrinking rule.

    Returns (path, nodes) with path None when nothing is found.
    """
    parent: dict[tuple[Generator, ...], tuple] = {gens: None}
    queue = deque([gens])
    nodes = 0
    while queue:
        state = queue.popleft()
        nodes += 1
        if state is not gens and _shrinks(state):
            path = []
            while parent[state] is not None:
                prev, app = parent[state]
                path.append(app)
                state = prev
            return path[::-1], nodes
        if nodes >= budget:
            return None, nodes
        moves = _moves(state)
        if rng is not None:
            rng.shuffle(moves)
        for app in moves:
            nxt = _apply(state, app)
            if nxt not in parent:
                parent[nxt] = (state, app)
                queue.append(nxt)
    return None, nodes


def reduce_word(word: TangleWord, budget: int = DEFAULT_BUDGET, rng: random.Random | None = None) -> ReductionTrace:
    """Reduce a closed word to the empty word, extracting circles.

    Shrinking rules (circle removal, zig-zag, crossing cancellation, kink
    absorption) are applied greedily at the least (rule, position); with
    crossings left and nothing to shrink, a breadth-first search over the
    length-preserving moves looks for a shrinkable word; crossing-free words
    are finished by commuting cups below caps.  With ``rng`` given, every
    choice is randomised instead.

    Raises Irreducible when the budget (search nodes) runs out, the search
    space is exhausted, or two components have nonzero linking number.
    """
    if not word.is_closed:
        raise ArityMismatch(f"reduce needs a closed word, got {word.input_arity} -> {word.output_arity}")
    linked = {k: v for k, v in linking_numbers(word).items() if v}
    if linked:
        raise Irreducible(f"components with nonzero linking numbers {linked}", word, 0)
    gens = word.gens
    steps: list[RuleApplication] = []
    nodes = 0
    while gens:
        shrinks = _shrinks(gens)
        if shrinks:
            path = [rng.choice(shrinks) if rng is not None else shrinks[0]]
        elif not any(g.kind.is_crossing for g in gens):
            path = [_flat_step(gens, rng)]
        else:
            path, used = _search(gens, budget - nodes, rng)
            nodes += used
            if path is None:
                raise Irreducible(
                    f"no shrinking move reachable after {nodes} search nodes",
                    TangleWord(0, gens),
                    nodes,
                )
        for app in path:
            steps.append(app)
            gens = _apply(gens, app)
    return ReductionTrace(
        start=word,
        steps=tuple(steps),
        ledger_total=sum(s.delta for s in steps),
        circles_extracted=sum(1 for s in steps if s.circle),
        residual=TangleWord(0, gens),
        nodes=nodes,
    )


# --------------------------------------------------------------------------
# equivalence

def _isotopy_moves(gens: tuple[Generator, ...]) -> list[RuleApplication]:
    # circle removal drops a component, so it is not an isotopy
    return [a for a in all_applications(gens) if a.rule is not Rule.CIRCLE_REMOVE]


def _explore(start: tuple[Generator, ...], budget: int) -> set[tuple[Generator, ...]]:
    seen = {start}
    queue = deque([start])
    while queue and len(seen) < budget:
        state = queue.popleft()
        for app in _isotopy_moves(state):
            nxt = _apply(state, app)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def equivalent(a: TangleWord, b: TangleWord, budget: int = DEFAULT_BUDGET) -> str:
    """Decide whether two words present the same tangle: "yes", "no" or "unknown".

    "yes" when a common word is reachable from both through the relations;
    "no" when boundary pairing, closed-component count or the invariant table
    tells them apart; "unknown" otherwise.
    """
    if (a.input_arity, a.output_arity) != (b.input_arity, b.output_arity):
        raise ArityMismatch(
            f"{a.input_arity}->{a.output_arity} vs {b.input_arity}->{b.output_arity}"
        )
    ca, cb = trace_connectivity(a), trace_connectivity(b)
    if ca.boundary_pairing != cb.boundary_pairing or ca.closed_components != cb.closed_components:
        return "no"
    if a.gens == b.gens:
        return "yes"
    seen_a = _explore(a.gens, budget // 2)
    if b.gens in seen_a:
        return "yes"
    seen_b = _explore(b.gens, budget // 2)
    if seen_a & seen_b:
        return "yes"
    from .invariant import MAX_TABLE_N, tables_differ

    if max(a.input_arity, a.output_arity) <= 2 * MAX_TABLE_N and tables_differ(a, b, budget):
        return "no"
    return "unknown"
