"""Graded free abelian groups, recorded as degree -> rank.

The shift ``g{s}`` moves rank from degree d to degree d + s, so the one-circle
group ``V = H*(S^2){-1}`` sits in degrees -1 and +1.
"""

from __future__ import annotations

import json
from functools import reduce
from typing import Iterable, Iterator, Mapping

from .laurent import LaurentPoly

__all__ = [
    "GradedGroup",
    "ZERO",
    "UNIT",
    "H_S2",
    "V",
    "shift",
    "tensor",
    "direct_sum",
    "tensor_power",
    "poincare",
    "euler",
    "total_rank",
]


class GradedGroup:
    """Immutable finitely supported map degree -> positive rank."""

    __slots__ = ("_ranks",)

    def __init__(self, ranks: Mapping[int, int] | None = None):
        clean = {}
        for d, r in (ranks or {}).items():
            r = int(r)
            if r < 0:
                raise ValueError(f"negative rank {r} in degree {d}")
            if r:
                clean[int(d)] = r
        self._ranks = dict(sorted(clean.items()))

    @property
    def ranks(self) -> dict[int, int]:
        return dict(self._ranks)

    def __getitem__(self, degree: int) -> int:
        return self._ranks.get(degree, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._ranks.items())

    @property
    def total_rank(self) -> int:
        return sum(self._ranks.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedGroup):
            return NotImplemented
        return self._ranks == other._ranks

    def __hash__(self) -> int:
        return hash(tuple(self._ranks.items()))

    def __repr__(self) -> str:
        return f"GradedGroup({self._ranks})"

    def __str__(self) -> str:
        return str(poincare(self))

    # operator sugar
    def __add__(self, other: GradedGroup) -> GradedGroup:
        return direct_sum(self, other)

    def __matmul__(self, other: GradedGroup) -> GradedGroup:
        return tensor(self, other)

    def to_json(self) -> dict:
        return {"ranks": {str(d): r for d, r in self._ranks.items()}}

    @classmethod
    def from_json(cls, data: Mapping | str) -> GradedGroup:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(d): r for d, r in data["ranks"].items()})


ZERO = GradedGroup()
UNIT = GradedGroup({0: 1})
H_S2 = GradedGroup({0: 1, 2: 1})


def shift(g: GradedGroup, s: int) -> GradedGroup:
    return GradedGroup({d + s: r for d, r in g})


def tensor(g: GradedGroup, h: GradedGroup) -> GradedGroup:
    out: dict[int, int] = {}
    for a, ra in g:
        for b, rb in h:
            out[a + b] = out.get(a + b, 0) + ra * rb
    return GradedGroup(out)


def direct_sum(*groups: GradedGroup) -> GradedGroup:
    out: dict[int, int] = {}
    for g in groups:
        for d, r in g:
            out[d] = out.get(d, 0) + r
    return GradedGroup(out)


def tensor_power(g: GradedGroup, k: int) -> GradedGroup:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return reduce(tensor, [g] * k, UNIT)


def sum_all(groups: Iterable[GradedGroup]) -> GradedGroup:
    return direct_sum(*groups)


def poincare(g: GradedGroup) -> LaurentPoly:
    return LaurentPoly(dict(g), var="q")


def euler(g: GradedGroup) -> int:
    return sum((-1) ** (d % 2) * r for d, r in g)


def total_rank(g: GradedGroup) -> int:
    return g.total_rank


V = shift(H_S2, -1)
