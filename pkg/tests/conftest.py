from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tanglekh.fuzz import generators_at
from tanglekh.words import Generator, Kind, TangleWord

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def words(draw, input_arity=None, max_len=8, max_arity=8, crossings=True):
    """Valid words: each generator is drawn from those legal at the current arity."""
    if input_arity is None:
        input_arity = draw(st.sampled_from([0, 2, 4, 6]))
    c = input_arity
    gens = []
    for _ in range(draw(st.integers(0, max_len))):
        options = [g for g in generators_at(c, max_arity) if crossings or not g.kind.is_crossing]
        if not options:
            break
        g = draw(st.sampled_from(options))
        gens.append(g)
        c += g.kind.arity_change
    return TangleWord(input_arity, tuple(gens))


@st.composite
def closed_words(draw, max_len=12, max_arity=8, crossings=True):
    """Closed words: random body then cups until the arity returns to 0."""
    body = draw(words(input_arity=0, max_len=max_len, max_arity=max_arity, crossings=crossings))
    c = body.output_arity
    gens = list(body.gens)
    while c:
        gens.append(Generator(Kind.CUP, draw(st.integers(1, c - 1))))
        c -= 2
    return TangleWord(0, tuple(gens))
