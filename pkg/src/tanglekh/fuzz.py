"""Random words and exhaustive relation instances for property checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .rewrite import RuleApplication, _applications_at, _apply
from .words import Generator, Kind, TangleWord, linking_numbers

__all__ = ["generators_at", "relation_instances", "random_word", "random_closed_word", "FuzzReport", "confluence_fuzz"]


def generators_at(c: int, max_arity: int | None = None) -> list[Generator]:
    """Every generator that can act on ``c`` strands (caps only if the result fits in ``max_arity``)."""
    out = []
    if max_arity is None or c + 2 <= max_arity:
        out += [Generator(Kind.CAP, i) for i in range(1, c + 2)]
    out += [Generator(Kind.CUP, i) for i in range(1, c)]
    out += [Generator(k, i) for k in (Kind.OVER, Kind.UNDER) for i in range(1, c)]
    return out


def _words(c: int, length: int, max_arity: int, only_crossings: bool = False) -> Iterator[tuple[int, tuple[Generator, ...]]]:
    if length == 0:
        yield c, ()
        return
    for g in generators_at(c, max_arity):
        if only_crossings and not g.kind.is_crossing:
            continue
        for end, rest in _words(c + g.kind.arity_change, length - 1, max_arity, only_crossings):
            yield end, (g,) + rest


def relation_instances(max_arity: int = 6) -> Iterator[tuple[TangleWord, TangleWord, RuleApplication]]:
    """All (lhs, rhs, application) where a rule rewrites a whole 2- or 3-generator word.

    Every intermediate arity stays within ``max_arity``.
    """
    for c in range(0, max_arity + 1, 2):
        for _, gens in _words(c, 2, max_arity):
            for app in _applications_at(gens, 0):
                if app.width == 2:
                    yield TangleWord(c, gens), TangleWord(c, _apply(gens, app)), app
        for _, gens in _words(c, 3, max_arity, only_crossings=True):
            for app in _applications_at(gens, 0):
                if app.width == 3:
                    yield TangleWord(c, gens), TangleWord(c, _apply(gens, app)), app


def random_word(rng: random.Random, input_arity: int, length: int, max_arity: int = 8,
                max_crossings: int | None = None) -> TangleWord:
    c = input_arity
    crossings = 0
    gens = []
    for _ in range(length):
        options = generators_at(c, max_arity)
        if max_crossings is not None and crossings >= max_crossings:
            options = [g for g in options if not g.kind.is_crossing]
        g = rng.choice(options)
        crossings += g.kind.is_crossing
        gens.append(g)
        c += g.kind.arity_change
    return TangleWord(input_arity, tuple(gens))


def random_closed_word(rng: random.Random, max_len: int = 20, max_crossings: int = 2,
                       max_arity: int = 8) -> TangleWord:
    """A random closed word with at most ``max_len`` generators and ``max_crossings`` crossings."""
    length = rng.randint(2, max_len)
    n_cross = rng.randint(0, max_crossings)
    c = 0
    gens: list[Generator] = []
    crossings = 0
    while len(gens) < length or c > 0:
        remaining = length - len(gens)
        if c == 0:
            g = Generator(Kind.CAP, 1)
        elif remaining <= c // 2:
            g = Generator(Kind.CUP, rng.randint(1, c - 1))
        else:
            options = [Generator(Kind.CUP, i) for i in range(1, c)]
            if c + 2 <= max_arity and remaining - 1 > (c + 2) // 2:
                options += [Generator(Kind.CAP, i) for i in range(1, c + 2)]
            if crossings < n_cross and remaining - 1 >= c // 2:
                kind = rng.choice((Kind.OVER, Kind.UNDER))
                options += [Generator(kind, i) for i in range(1, c)]
            g = rng.choice(options)
        crossings += g.kind.is_crossing
        gens.append(g)
        c += g.kind.arity_change
        if len(gens) >= max_len and c > 0:
            # close off what is left
            while c > 0:
                gens.append(Generator(Kind.CUP, rng.randint(1, c - 1)))
                c -= 2
    return TangleWord(0, tuple(gens))


@dataclass
class FuzzReport:
    seed: int
    requested: int
    tried: int = 0
    checked: int = 0
    skipped_linked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked == self.requested

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "requested": self.requested,
            "tried": self.tried,
            "checked": self.checked,
            "skipped_linked": self.skipped_linked,
            "failures": self.failures,
            "passed": self.passed,
        }


def confluence_fuzz(n: int, seed: int, budget: int = 20_000, max_len: int = 20,
                    max_crossings: int = 2, jones: bool = True) -> FuzzReport:
    """Reduce ``n`` random reducible closed words along two random orders each.

    A failure is any word where the two runs disagree on (circles, ledger) or
    on the graded value, or (with ``jones``) where the Jones value at q = 1
    differs from the total rank.  Words with linked components are skipped
    and replaced.
    """
    from .invariant import value_from_trace
    from .oracle import jones_at_one
    from .rewrite import Irreducible, reduce_word
    from .words import render_word

    rng = random.Random(seed)
    report = FuzzReport(seed, n)
    while report.checked < n:
        report.tried += 1
        word = random_closed_word(rng, max_len=max_len, max_crossings=max_crossings)
        runs = []
        try:
            for k in range(2):
                runs.append(reduce_word(word, budget, random.Random(rng.getrandbits(32))))
        except Irreducible:
            if any(linking_numbers(word).values()):
                report.skipped_linked += 1
                continue
            report.failures.append({"word": render_word(word), "reason": "irreducible"})
            report.checked += 1
            continue
        report.checked += 1
        a, b = runs
        va, vb = value_from_trace(a), value_from_trace(b)
        if (a.circles_extracted, a.ledger_total) != (b.circles_extracted, b.ledger_total) or va != vb:
            report.failures.append({
                "word": render_word(word),
                "reason": "orders disagree",
                "runs": [[a.circles_extracted, a.ledger_total], [b.circles_extracted, b.ledger_total]],
            })
        elif jones and jones_at_one(word) != va.total_rank:
            report.failures.append({"word": render_word(word), "reason": "jones mismatch"})
    return report
