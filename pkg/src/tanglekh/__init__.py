"""Combinatorial tangle invariants: words in elementary tangles, crossingless
matchings, graded groups, a relation-driven rewriter and a Kauffman bracket
oracle."""

from __future__ import annotations

from .graded import H_S2, UNIT, V, ZERO, GradedGroup, direct_sum, euler, poincare, shift, tensor, tensor_power
from .invariant import (
    IRREDUCIBLE,
    InvariantTable,
    PairClass,
    classify_pairs,
    closure,
    evaluate_closed,
    hn,
    kh_sigma_ranks,
    kh_symp,
    kunneth_check,
    sigma_word,
    unlink_value,
)
from .laurent import LaurentPoly
from .matchings import Matching, ResourceLimit, catalan, enumerate_matchings, glue_circles, glue_cycles, to_word
from .oracle import circle_count_bruteforce, jones_at_one, kauffman_bracket
from .rewrite import Irreducible, Rule, RuleApplication, ReductionTrace, apply_rule, equivalent, reduce_word
from .words import (
    ArityError,
    ArityMismatch,
    Generator,
    Kind,
    TangleWord,
    WordSyntaxError,
    circle,
    compose,
    identity,
    oplus,
    parse_word,
    render_word,
    trace_connectivity,
    transpose,
    writhe,
)

ENGINE_VERSION = "1"

__version__ = "0.1.0"
