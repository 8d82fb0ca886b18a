"""Graded invariants of tangle words.

A closed word that reduces to ``k`` bare circles with ledger total ``l`` is
worth ``H*(S^2)^{(x)k}`` shifted by ``-cups - writhe - l``.  For an (m, n)
word ``T`` the table has one entry per pair of crossingless matchings
``(C, C')``: the value of the closure ``word(C) . T . word(C')^t``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .graded import H_S2, UNIT, V, GradedGroup, direct_sum, shift, tensor, tensor_power
from .matchings import Matching, ResourceLimit, enumerate_matchings, glue_circles, glue_cycles, matching_to_json, to_word
from .rewrite import DEFAULT_BUDGET, Irreducible, ReductionTrace, reduce_word
from .words import (
    ArityMismatch,
    Generator,
    Kind,
    TangleWord,
    circle,
    compose,
    cup_count,
    identity,
    oplus,
    transpose,
    writhe,
)

__all__ = [
    "MAX_TABLE_N",
    "IRREDUCIBLE",
    "InvariantTable",
    "PairClass",
    "KunnethReport",
    "evaluate_closed",
    "value_from_trace",
    "closure",
    "kh_symp",
    "hn",
    "unlink_value",
    "classify_pairs",
    "kh_sigma_ranks",
    "sigma_word",
    "kunneth_check",
    "tables_differ",
]

MAX_TABLE_N = 6


class _Irreducible:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "IRREDUCIBLE"


IRREDUCIBLE = _Irreducible()


def value_from_trace(trace: ReductionTrace) -> GradedGroup:
    word = trace.start
    base_shift = -cup_count(word) - writhe(word)
    return shift(tensor_power(H_S2, trace.circles_extracted), base_shift - trace.ledger_total)


@lru_cache(maxsize=65536)
def _evaluate_gens(gens: tuple[Generator, ...], budget: int) -> GradedGroup:
    return value_from_trace(reduce_word(TangleWord(0, gens), budget))


def evaluate_closed(word: TangleWord, budget: int = DEFAULT_BUDGET, rng: random.Random | None = None) -> GradedGroup:
    """Graded value of a closed word; raises Irreducible outside the reducible fragment.

    ``rng`` randomises the reduction order (the value must not depend on it).
    """
    if not word.is_closed:
        raise ArityMismatch(f"evaluate_closed needs a closed word, got {word.input_arity} -> {word.output_arity}")
    if rng is not None:
        return value_from_trace(reduce_word(word, budget, rng))
    return _evaluate_gens(word.gens, budget)


def closure(c: Matching, word: TangleWord, c_prime: Matching) -> TangleWord:
    return compose(compose(to_word(c), word), transpose(to_word(c_prime)))


@dataclass(frozen=True)
class InvariantTable:
    m: int
    n: int
    entries: dict[tuple[Matching, Matching], GradedGroup | _Irreducible]
    total: GradedGroup = field(init=False)

    def __post_init__(self):
        resolved = [v for v in self.entries.values() if isinstance(v, GradedGroup)]
        object.__setattr__(self, "total", direct_sum(*resolved))

    @property
    def irreducible(self) -> list[tuple[Matching, Matching]]:
        return [k for k, v in self.entries.items() if v is IRREDUCIBLE]

    def ranks(self) -> dict[tuple[Matching, Matching], int | None]:
        return {k: (v.total_rank if isinstance(v, GradedGroup) else None) for k, v in self.entries.items()}

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "entries": [
                {
                    "C": matching_to_json(c),
                    "Cp": matching_to_json(cp),
                    "value": v.to_json() if isinstance(v, GradedGroup) else "irreducible",
                }
                for (c, cp), v in self.entries.items()
            ],
            "total": self.total.to_json(),
        }


def kh_symp(word: TangleWord, budget: int = DEFAULT_BUDGET, max_n: int = MAX_TABLE_N) -> InvariantTable:
    m, n = word.input_arity // 2, word.output_arity // 2
    if m > max_n or n > max_n:
        raise ResourceLimit(f"table for a ({m}, {n}) tangle exceeds the bound {max_n}")
    entries = {}
    for c in enumerate_matchings(m):
        for cp in enumerate_matchings(n):
            try:
                entries[(c, cp)] = evaluate_closed(closure(c, word, cp), budget)
            except Irreducible:
                entries[(c, cp)] = IRREDUCIBLE
    return InvariantTable(m, n, entries)


def hn(n: int, budget: int = DEFAULT_BUDGET, max_n: int = MAX_TABLE_N) -> InvariantTable:
    """The table of the identity on 2n points; entry (C, C') has rank 2^(circles of C glued to C')."""
    table = kh_symp(identity(n), budget, max_n)
    for (c, cp), v in table.entries.items():
        expected = 2 ** glue_circles(c, cp)
        if not isinstance(v, GradedGroup) or v.total_rank != expected:
            raise RuntimeError(f"H^{n} entry {c} x {cp}: got {v!r}, expected rank {expected}")
    return table


def unlink_value(k: int) -> GradedGroup:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return tensor_power(V, k)


class PairClass(enum.Enum):
    BOTH_PRIME = "BothPrime"  # both matchings contain the arc (i, i+1)
    MIXED_PRIME = "MixedPrime"  # exactly one does
    PP1 = "PP1"  # neither; points i and i+1 lie on one glued circle
    PP2 = "PP2"  # neither; they lie on two different circles


def classify_pairs(m: int, i: int, max_n: int = MAX_TABLE_N) -> dict[tuple[Matching, Matching], PairClass]:
    if m > max_n:
        raise ResourceLimit(f"m = {m} exceeds the bound {max_n}")
    if not 1 <= i <= 2 * m - 1:
        raise ValueError(f"i must lie in 1..{2 * m - 1}")
    out = {}
    mats = enumerate_matchings(m)
    for a in mats:
        for b in mats:
            pa, pb = a.has_arc(i, i + 1), b.has_arc(i, i + 1)
            if pa and pb:
                cls = PairClass.BOTH_PRIME
            elif pa or pb:
                cls = PairClass.MIXED_PRIME
            else:
                same = any(i in cyc and i + 1 in cyc for cyc in glue_cycles(a, b))
                cls = PairClass.PP1 if same else PairClass.PP2
            out[(a, b)] = cls
    return out


def kh_sigma_ranks(i: int, m: int, sign: int = 1, max_n: int = MAX_TABLE_N) -> dict[tuple[Matching, Matching], int]:
    """Entry ranks of the table of a single crossing at (i, i+1) on 2m strands.

    A crossing between two different glued circles merges them (class PP2);
    in every other class the circle count is unchanged.  The ranks do not
    depend on the sign of the crossing.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    classes = classify_pairs(m, i, max_n)
    return {
        (a, b): 2 ** (glue_circles(a, b) - (1 if cls is PairClass.PP2 else 0))
        for (a, b), cls in classes.items()
    }


def sigma_word(i: int, m: int, sign: int = 1) -> TangleWord:
    """Single crossing at (i, i+1) on 2m strands: ``s i`` for sign +1, ``s i'`` for -1."""
    kind = Kind.OVER if sign > 0 else Kind.UNDER
    return TangleWord(2 * m, (Generator(kind, i),))


@dataclass(frozen=True)
class KunnethReport:
    word: TangleWord
    with_circle: GradedGroup
    tensored: GradedGroup

    @property
    def passed(self) -> bool:
        return self.with_circle == self.tensored


def kunneth_check(word: TangleWord, budget: int = DEFAULT_BUDGET) -> KunnethReport:
    """Compare the table total of ``word`` beside a circle with (total of ``word``) x V."""
    lhs = kh_symp(oplus(word, circle()), budget)
    rhs = kh_symp(word, budget)
    if lhs.irreducible or rhs.irreducible:
        raise Irreducible(f"{word}: table has irreducible entries")
    return KunnethReport(word, lhs.total, tensor(rhs.total, V))


def tables_differ(a: TangleWord, b: TangleWord, budget: int = DEFAULT_BUDGET) -> bool:
    """True when some entry resolved on both sides has different values."""
    ta, tb = kh_symp(a, budget), kh_symp(b, budget)
    for key, va in ta.entries.items():
        vb = tb.entries[key]
        if isinstance(va, GradedGroup) and isinstance(vb, GradedGroup) and va != vb:
            return True
    return False
