"""Crossingless matchings of 2n points and their cap words."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from .words import ArityMismatch, TangleWord, cap

__all__ = [
    "Matching",
    "ResourceLimit",
    "MAX_N",
    "catalan",
    "enumerate_matchings",
    "to_word",
    "glue_circles",
    "glue_cycles",
    "matching_to_json",
    "matching_from_json",
]

MAX_N = 10


class ResourceLimit(ValueError):
    pass


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True, order=True)
class Matching:
    """A non-crossing perfect matching of {1..2n}; ``arcs`` is sorted, each arc (a, b) with a < b."""

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple(sorted(tuple(sorted(a)) for a in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        points = sorted(p for a in arcs for p in a)
        if points != list(range(1, 2 * len(arcs) + 1)):
            raise ValueError(f"not a perfect matching of 1..{2 * len(arcs)}: {arcs}")
        for a, b in arcs:
            for c, d in arcs:
                if a < c < b < d:
                    raise ValueError(f"arcs {(a, b)} and {(c, d)} cross")

    @property
    def n(self) -> int:
        return len(self.arcs)

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.arcs:
            out[a] = b
            out[b] = a
        return out

    def has_arc(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.arcs

    def __str__(self) -> str:
        return json.dumps([list(a) for a in self.arcs])


def _generate(points: tuple[int, ...]) -> Iterable[tuple[tuple[int, int], ...]]:
    if not points:
        yield ()
        return
    first = points[0]
    # first pairs with a point leaving an even number of points on each side
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1:]
        for m_in in _generate(inside):
            for m_out in _generate(outside):
                yield ((first, points[k]),) + m_in + m_out


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Matching, ...]:
    return tuple(sorted(Matching(arcs) for arcs in _generate(tuple(range(1, 2 * n + 1)))))


def enumerate_matchings(n: int, max_n: int = MAX_N) -> list[Matching]:
    """All crossingless matchings of 2n points, sorted lexicographically by arc list."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_n:
        raise ResourceLimit(f"n = {n} exceeds the bound {max_n}")
    return list(_enumerate(n))


def to_word(m: Matching) -> TangleWord:
    """The (0, 2n) cap word whose top endpoints are paired by ``m``.

    Arcs are emitted by increasing left endpoint; each cap is inserted after
    the endpoints already placed to its left.
    """
    placed: list[int] = []
    gens = []
    for a, b in m.arcs:
        idx = 1 + sum(1 for p in placed if p < a)
        gens.append(cap(idx))
        placed += [a, b]
    return TangleWord(0, tuple(gens))


def glue_cycles(a: Matching, b: Matching) -> list[list[int]]:
    """Cycles of points obtained by alternately following arcs of ``a`` and ``b``."""
    if a.n != b.n:
        raise ArityMismatch(f"matchings on {2 * a.n} and {2 * b.n} points")
    pa, pb = a.partner(), b.partner()
    seen: set[int] = set()
    cycles = []
    for start in range(1, 2 * a.n + 1):
        if start in seen:
            continue
        cyc = []
        p = start
        while True:
            cyc.append(p)
            seen.add(p)
            q = pa[p]
            cyc.append(q)
            seen.add(q)
            p = pb[q]
            if p == start:
                break
        cycles.append(cyc)
    return cycles


def glue_circles(a: Matching, b: Matching) -> int:
    """Number of circles formed by gluing ``a`` to the mirror of ``b``."""
    return len(glue_cycles(a, b))


def matching_to_json(m: Matching) -> list[list[int]]:
    return [list(arc) for arc in m.arcs]


def matching_from_json(data) -> Matching:
    if isinstance(data, str):
        data = json.loads(data)
    return Matching(tuple(tuple(arc) for arc in data))
