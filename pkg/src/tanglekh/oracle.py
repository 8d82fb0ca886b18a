"""Independent checks: a level-by-level circle counter and a Kauffman bracket state sum."""

from __future__ import annotations

from itertools import product

from .laurent import LaurentPoly
from .words import Generator, Kind, TangleWord, writhe

__all__ = [
    "HasCrossings",
    "TooManyCrossings",
    "MAX_CROSSINGS",
    "circle_count_bruteforce",
    "kauffman_bracket",
    "unreduced_jones",
    "jones_at_one",
]

MAX_CROSSINGS = 12


class HasCrossings(ValueError):
    pass


class TooManyCrossings(ValueError):
    pass


def _count_loops(gens, input_arity: int = 0) -> int:
    # partner[p] = the position that p is joined to through the part below
    partner: list[int] = []
    if input_arity:
        raise ValueError("only closed words")
    loops = 0
    for g in gens:
        i = g.index - 1
        if g.kind is Kind.CAP:
            partner = [q if q < i else q + 2 for q in partner]
            partner[i:i] = [i + 1, i]
        elif g.kind is Kind.CUP:
            a, b = partner[i], partner[i + 1]
            if a == i + 1:
                loops += 1
            else:
                partner[a], partner[b] = b, a
            del partner[i:i + 2]
            partner = [q if q < i else q - 2 for q in partner]
        else:
            raise HasCrossings(f"crossing {g} in a word passed to the circle counter")
    return loops


def circle_count_bruteforce(word: TangleWord) -> int:
    """Closed components of a crossing-free closed word, tracking partner positions row by row."""
    if not word.is_closed:
        raise ValueError("circle counting needs a closed word")
    return _count_loops(word.gens)


def _smoothings(g: Generator) -> tuple[tuple[Generator, ...], tuple[Generator, ...]]:
    """(A-smoothing, B-smoothing) of a crossing, as flat generator sequences."""
    vertical: tuple[Generator, ...] = ()
    horizontal = (Generator(Kind.CUP, g.index), Generator(Kind.CAP, g.index))
    if g.kind is Kind.OVER:
        return vertical, horizontal
    return horizontal, vertical


def kauffman_bracket(word: TangleWord) -> LaurentPoly:
    """State sum over both smoothings of every crossing, loop value -A^2 - A^-2.

    The empty diagram has bracket 1, so the crossingless unknot has bracket
    -A^2 - A^-2.
    """
    if not word.is_closed:
        raise ValueError("the bracket needs a closed word")
    crossings = [k for k, g in enumerate(word.gens) if g.kind.is_crossing]
    if len(crossings) > MAX_CROSSINGS:
        raise TooManyCrossings(f"{len(crossings)} crossings > {MAX_CROSSINGS}")
    d = LaurentPoly({2: -1, -2: -1}, var="A")
    total = LaurentPoly(var="A")
    for state in product((0, 1), repeat=len(crossings)):
        gens: list[Generator] = []
        choice = dict(zip(crossings, state))
        a_count = 0
        for k, g in enumerate(word.gens):
            if k in choice:
                s = choice[k]
                gens.extend(_smoothings(g)[s])
                a_count += 1 - s
            else:
                gens.append(g)
        loops = _count_loops(gens)
        total = total + LaurentPoly.monomial(a_count - (len(crossings) - a_count), var="A") * d**loops
    return total


def unreduced_jones(word: TangleWord) -> LaurentPoly:
    """``(-A^3)^(-w) <D>`` as a Laurent polynomial in A."""
    w = writhe(word)
    sign = -1 if w % 2 else 1
    return LaurentPoly.monomial(-3 * w, sign, var="A") * kauffman_bracket(word)


def jones_at_one(word: TangleWord) -> int:
    """Unreduced Jones polynomial at q = 1, i.e. at A = i; an unlink of k circles gives 2^k."""
    re = im = 0
    for e, c in unreduced_jones(word):
        r = e % 4
        if r == 0:
            re += c
        elif r == 1:
            im += c
        elif r == 2:
            re -= c
        else:
            im -= c
    if im:
        raise ArithmeticError(f"non-real value {re} + {im}i at A = i")
    return re
