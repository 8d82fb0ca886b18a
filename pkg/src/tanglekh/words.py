"""Tangle words over elementary generators.

A word is read bottom to top.  Each generator acts on the current row of
strand endpoints (numbered 1..c from the left):

* ``cap i``   creates two new endpoints at positions i, i+1   (c -> c+2)
* ``cup i``   joins the endpoints at positions i, i+1         (c -> c-2)
* ``s i``     crosses strands i and i+1, the strand entering at i passes over
* ``s i'``    the same crossing with the other strand on top

The text form is ``"<input arity>: gen . gen . ..."``, e.g. ``"0: cap1 . cup1"``
for a single circle and ``"4:"`` for the identity on four endpoints.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "Kind",
    "Generator",
    "Endpoint",
    "TangleWord",
    "Connectivity",
    "OrientedWord",
    "WordSyntaxError",
    "ArityError",
    "ArityMismatch",
    "MissingOrientation",
    "cap",
    "cup",
    "over",
    "under",
    "check_arities",
    "validate",
    "parse_word",
    "render_word",
    "word_to_json",
    "word_from_json",
    "identity",
    "circle",
    "compose",
    "oplus",
    "transpose",
    "trace_connectivity",
    "orient_default",
    "writhe",
    "cup_count",
    "cap_count",
    "crossing_count",
    "linking_numbers",
]


class WordSyntaxError(ValueError):
    """Malformed word text.  ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at character {position})")
        self.position = position


class ArityError(ValueError):
    """Invalid arity chain.  ``position`` is the 1-based generator index (0 for the input arity)."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at generator {position})")
        self.position = position


class ArityMismatch(ValueError):
    pass


class MissingOrientation(ValueError):
    pass


class Kind(str, enum.Enum):
    CAP = "cap"
    CUP = "cup"
    OVER = "over"
    UNDER = "under"

    @property
    def is_crossing(self) -> bool:
        return self is Kind.OVER or self is Kind.UNDER

    @property
    def arity_change(self) -> int:
        return _ARITY_CHANGE[self]

    def mirror(self) -> Kind:
        return _MIRROR[self]


_ARITY_CHANGE = {Kind.CAP: 2, Kind.CUP: -2, Kind.OVER: 0, Kind.UNDER: 0}
_MIRROR = {Kind.CAP: Kind.CUP, Kind.CUP: Kind.CAP, Kind.OVER: Kind.UNDER, Kind.UNDER: Kind.OVER}


class Generator(NamedTuple):
    kind: Kind
    index: int

    def __str__(self) -> str:
        if self.kind is Kind.OVER:
            return f"s{self.index}"
        if self.kind is Kind.UNDER:
            return f"s{self.index}'"
        return f"{self.kind.value}{self.index}"


def cap(i: int) -> Generator:
    return Generator(Kind.CAP, i)


def cup(i: int) -> Generator:
    return Generator(Kind.CUP, i)


def over(i: int) -> Generator:
    return Generator(Kind.OVER, i)


def under(i: int) -> Generator:
    return Generator(Kind.UNDER, i)


class Endpoint(NamedTuple):
    side: str  # "bottom" or "top"
    position: int


def check_arities(input_arity: int, gens: Iterable[Generator]) -> list[int]:
    """Return the arity chain ``[input_arity, ..., output_arity]`` or raise ArityError."""
    if input_arity < 0 or input_arity % 2:
        raise ArityError(f"input arity must be even and nonnegative, got {input_arity}", 0)
    chain = [input_arity]
    c = input_arity
    for pos, g in enumerate(gens, start=1):
        i = g.index
        if g.kind is Kind.CAP:
            ok = 1 <= i <= c + 1
            bound = c + 1
        else:
            ok = 1 <= i <= c - 1
            bound = c - 1
        if not ok:
            if bound < 1:
                raise ArityError(f"{g} cannot act on {c} strands", pos)
            raise ArityError(f"{g} needs index in 1..{bound} on {c} strands", pos)
        c += g.kind.arity_change
        chain.append(c)
    return chain


@dataclass(frozen=True)
class TangleWord:
    """A validated sequence of generators starting from ``input_arity`` endpoints."""

    input_arity: int
    gens: tuple[Generator, ...] = ()
    arities: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(g if isinstance(g, Generator) else Generator(Kind(g[0]), int(g[1])) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "arities", tuple(check_arities(self.input_arity, gens)))

    @property
    def output_arity(self) -> int:
        return self.arities[-1]

    @property
    def is_closed(self) -> bool:
        return self.input_arity == 0 and self.output_arity == 0

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return render_word(self)

    def __matmul__(self, other: TangleWord) -> TangleWord:
        return oplus(self, other)

    def __mul__(self, other: TangleWord) -> TangleWord:
        return compose(self, other)

    @cached_property
    def _graph(self) -> _StrandGraph:
        return _StrandGraph(self)


def validate(word: TangleWord) -> None:
    """Re-check the arity chain of ``word``; raises ArityError on the first bad generator."""
    check_arities(word.input_arity, word.gens)


# --------------------------------------------------------------------------
# text and JSON formats

_GEN_RE = re.compile(r"\s*(cap|cup|s)\s*('?)\s*(\d+)\s*('?)\s*")
_HEAD_RE = re.compile(r"\s*(-?\d+)\s*:\s*")


def parse_word(text: str) -> TangleWord:
    """Parse ``"4: s1 . s1'"``-style text.  Both ``s1'`` and ``s'1`` denote the under-crossing."""
    m = _HEAD_RE.match(text)
    if not m:
        raise WordSyntaxError("expected '<input arity>:'", 0)
    input_arity = int(m.group(1))
    pos = m.end()
    gens: list[Generator] = []
    if pos < len(text):
        while True:
            g = _GEN_RE.match(text, pos)
            if not g:
                raise WordSyntaxError(f"malformed generator {text[pos:pos + 8]!r}", pos)
            name, prime_before, idx, prime_after = g.groups()
            if name != "s" and (prime_before or prime_after):
                raise WordSyntaxError("prime only allowed on crossings", g.start())
            if prime_before and prime_after:
                raise WordSyntaxError("double prime", g.start())
            if name == "cap":
                kind = Kind.CAP
            elif name == "cup":
                kind = Kind.CUP
            else:
                kind = Kind.UNDER if (prime_before or prime_after) else Kind.OVER
            gens.append(Generator(kind, int(idx)))
            pos = g.end()
            if pos == len(text):
                break
            if text[pos] != ".":
                raise WordSyntaxError(f"expected '.', got {text[pos]!r}", pos)
            pos += 1
    return TangleWord(input_arity, tuple(gens))


def render_word(word: TangleWord) -> str:
    if not word.gens:
        return f"{word.input_arity}:"
    return f"{word.input_arity}: " + " . ".join(str(g) for g in word.gens)


def word_to_json(word: TangleWord) -> dict:
    return {
        "input_arity": word.input_arity,
        "gens": [{"kind": g.kind.value, "index": g.index} for g in word.gens],
    }


def word_from_json(data: Mapping | str) -> TangleWord:
    if isinstance(data, str):
        data = json.loads(data)
    gens = tuple(Generator(Kind(g["kind"]), int(g["index"])) for g in data["gens"])
    return TangleWord(int(data["input_arity"]), gens)


# --------------------------------------------------------------------------
# constructions

def identity(m: int) -> TangleWord:
    """``id_m``: the empty word on 2m endpoints."""
    return TangleWord(2 * m)


def circle() -> TangleWord:
    return TangleWord(0, (cap(1), cup(1)))


def compose(a: TangleWord, b: TangleWord) -> TangleWord:
    """``a`` then ``b`` (``b`` stacked on top)."""
    if a.output_arity != b.input_arity:
        raise ArityMismatch(f"cannot compose: {a.output_arity} endpoints on top, {b.input_arity} expected")
    return TangleWord(a.input_arity, a.gens + b.gens)


def oplus(a: TangleWord, b: TangleWord) -> TangleWord:
    """Side-by-side juxtaposition, ``a`` on the left."""
    shift = a.output_arity
    gens = a.gens + tuple(Generator(g.kind, g.index + shift) for g in b.gens)
    return TangleWord(a.input_arity + b.input_arity, gens)


def transpose(word: TangleWord) -> TangleWord:
    """Mirror image top-to-bottom: reversed order, cap<->cup, over<->under."""
    gens = tuple(Generator(g.kind.mirror(), g.index) for g in reversed(word.gens))
    return TangleWord(word.output_arity, gens)


def cup_count(word: TangleWord) -> int:
    return sum(1 for g in word.gens if g.kind is Kind.CUP)


def cap_count(word: TangleWord) -> int:
    return sum(1 for g in word.gens if g.kind is Kind.CAP)


def crossing_count(word: TangleWord) -> int:
    return sum(1 for g in word.gens if g.kind.is_crossing)


# --------------------------------------------------------------------------
# strand following

class _StrandGraph:
    """Strand points ``(level, position)`` and the arcs joining them.

    Level 0 is the bottom boundary and level L the top; generator l sits
    between levels l-1 and l.  Every interior point has one neighbour through
    the generator above it and one through the generator below it.
    """

    def __init__(self, word: TangleWord):
        ar = word.arities
        self.word = word
        self.L = len(word.gens)
        up: list[list[tuple[int, int] | None]] = [[None] * (c + 1) for c in ar]
        down: list[list[tuple[int, int] | None]] = [[None] * (c + 1) for c in ar]
        for lev, g in enumerate(word.gens, start=1):
            c = ar[lev - 1]
            i = g.index
            if g.kind is Kind.CAP:
                down[lev][i] = (lev, i + 1)
                down[lev][i + 1] = (lev, i)
                for p in range(1, c + 1):
                    q = p if p < i else p + 2
                    up[lev - 1][p] = (lev, q)
                    down[lev][q] = (lev - 1, p)
            elif g.kind is Kind.CUP:
                up[lev - 1][i] = (lev - 1, i + 1)
                up[lev - 1][i + 1] = (lev - 1, i)
                for p in range(1, c + 1):
                    if p in (i, i + 1):
                        continue
                    q = p if p < i else p - 2
                    up[lev - 1][p] = (lev, q)
                    down[lev][q] = (lev - 1, p)
            else:
                for p in range(1, c + 1):
                    q = i + 1 if p == i else i if p == i + 1 else p
                    up[lev - 1][p] = (lev, q)
                    down[lev][q] = (lev - 1, p)
        self.up = up
        self.down = down
        self._trace()

    def _walk(self, lev: int, p: int, heading: int, comp: int) -> tuple[int, int, int] | None:
        """Follow a strand from (lev, p) moving up (+1) or down (-1).

        Marks points with ``comp`` and records crossing directions.  Returns the
        final (level, position, heading) at a boundary, or None if the walk
        closed up on itself.
        """
        start = (lev, p, heading)
        gens = self.word.gens
        while True:
            self.component_of[(lev, p)] = comp
            if heading > 0:
                nxt = self.up[lev][p] if lev < self.L else None
                if nxt is None:
                    return (lev, p, heading)
                nlev, np_ = nxt
                if nlev == lev:  # cup: turn around
                    heading = -1
                else:
                    g = gens[nlev - 1]
                    if g.kind.is_crossing and g.index <= p <= g.index + 1:
                        strand = p - g.index
                        self.cross_dir[nlev][strand] = 1
                        self.cross_comp[nlev][strand] = comp
            else:
                nxt = self.down[lev][p] if lev > 0 else None
                if nxt is None:
                    return (lev, p, heading)
                nlev, np_ = nxt
                if nlev == lev:  # cap: turn around
                    heading = 1
                else:
                    g = gens[lev - 1]
                    if g.kind.is_crossing and g.index <= np_ <= g.index + 1:
                        strand = np_ - g.index
                        self.cross_dir[lev][strand] = -1
                        self.cross_comp[lev][strand] = comp
            lev, p = nlev, np_
            if (lev, p, heading) == start:
                return None

    def _trace(self) -> None:
        word = self.word
        self.component_of: dict[tuple[int, int], int] = {}
        # crossing level -> [direction, direction] of strand A (enters at i) and B (enters at i+1)
        self.cross_dir = {lev: [0, 0] for lev, g in enumerate(word.gens, 1) if g.kind.is_crossing}
        self.cross_comp = {lev: [-1, -1] for lev in self.cross_dir}
        self.pairing: dict[Endpoint, Endpoint] = {}
        comp = 0
        for p in range(1, word.input_arity + 1):
            if (0, p) in self.component_of:
                continue
            end = self._walk(0, p, 1, comp)
            self._pair(Endpoint("bottom", p), end)
            comp += 1
        top = self.L
        for p in range(1, word.output_arity + 1):
            if (top, p) in self.component_of:
                continue
            end = self._walk(top, p, -1, comp)
            self._pair(Endpoint("top", p), end)
            comp += 1
        self.open_components = comp
        for lev, g in enumerate(word.gens, start=1):
            if g.kind is Kind.CAP and (lev, g.index) not in self.component_of:
                self._walk(lev, g.index, 1, comp)
                comp += 1
        self.n_components = comp

    def _pair(self, start: Endpoint, end) -> None:
        _, p, heading = end
        other = Endpoint("top" if heading > 0 else "bottom", p)
        self.pairing[start] = other
        self.pairing[other] = start


@dataclass(frozen=True)
class Connectivity:
    boundary_pairing: dict[Endpoint, Endpoint]
    closed_components: int
    component_of: dict[tuple[int, int], int]
    n_components: int


def trace_connectivity(word: TangleWord) -> Connectivity:
    """Boundary pairing and closed-component count, by following strands.

    Components are numbered in the default scan order: bottom endpoints left to
    right, then top endpoints, then closed loops by their earliest cap.
    ``component_of`` maps each strand point ``(level, position)`` to its component.
    """
    g = word._graph
    return Connectivity(
        boundary_pairing=dict(g.pairing),
        closed_components=g.n_components - g.open_components,
        component_of=dict(g.component_of),
        n_components=g.n_components,
    )


@dataclass(frozen=True)
class OrientedWord:
    word: TangleWord
    orientation_of_component: dict[int, int]
    crossing_signs: dict[int, int]


def _crossing_sign(kind: Kind, dir_a: int, dir_b: int) -> int:
    # With the over strand's direction vector u and the under strand's v, the
    # sign is that of u x v; both strands upward at an over-crossing gives +1.
    s = dir_a * dir_b
    return s if kind is Kind.OVER else -s


def _orient(word: TangleWord, flags: Mapping[int, int]) -> OrientedWord:
    g = word._graph
    missing = [c for c in range(g.n_components) if c not in flags]
    if missing:
        raise MissingOrientation(f"no orientation for components {missing}")
    signs = {}
    for lev, (da, db) in g.cross_dir.items():
        ca, cb = g.cross_comp[lev]
        signs[lev] = _crossing_sign(word.gens[lev - 1].kind, da * flags[ca], db * flags[cb])
    return OrientedWord(word, dict(flags), signs)


def orient_default(word: TangleWord) -> OrientedWord:
    """Each component directed out of its least endpoint; loops run up the left leg of their earliest cap."""
    return _orient(word, {c: 1 for c in range(word._graph.n_components)})


def orient(word: TangleWord, flags: Mapping[int, int]) -> OrientedWord:
    """Orientation from explicit flags (+1 keeps the default direction, -1 reverses it)."""
    return _orient(word, flags)


def writhe(oriented: OrientedWord | TangleWord) -> int:
    if isinstance(oriented, TangleWord):
        oriented = orient_default(oriented)
    g = oriented.word._graph
    if any(c not in oriented.orientation_of_component for c in range(g.n_components)):
        raise MissingOrientation("orientation flags do not cover every component")
    return sum(oriented.crossing_signs.values())


def linking_numbers(word: TangleWord) -> dict[tuple[int, int], int]:
    """Pairwise linking numbers (default orientation) of components that cross each other.

    Only meaningful as an invariant for closed words.
    """
    g = word._graph
    ow = orient_default(word)
    twice: dict[tuple[int, int], int] = {}
    for lev, (ca, cb) in g.cross_comp.items():
        if ca != cb:
            key = (min(ca, cb), max(ca, cb))
            twice[key] = twice.get(key, 0) + ow.crossing_signs[lev]
    return {k: v // 2 for k, v in twice.items()}


def from_gens(input_arity: int, gens: Sequence[Generator]) -> TangleWord:
    return TangleWord(input_arity, tuple(gens))
