"""Closed-form absorbing-structure oracles, no chain construction needed.

Every state falls into exactly one of six classes by its pattern of equal
and unequal edges; whether it is absorbing depends only on that class and
on which stability family contains the rule set (the absorbing module's
predicates mirror the stability families in the rules module).

The chain-level verdict also has a closed form: for the nine
parity-sensitive rule sets the chain is absorbing exactly when the graph
has no odd cycle; for every other rule set the verdict does not depend on
the graph at all.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import PreconditionError
from .graphs import Graph, has_odd_cycle, is_connected
from .rules import (
    NEIGHBOR_COPY,
    ONE_STABLE,
    OP_DIFF,
    OP_FIRST,
    OP_IMPLIED_BY,
    SPLIT_STABLE,
    ZERO_STABLE,
    is_parity_family,
)


class StateClass(Enum):
    ALL_ZERO = "all-zero"
    ALL_ONE = "all-one"
    PROPER = "proper-coloring"  # every edge has unequal endpoints
    ZERO_PAIR_ONLY = "zero-pair-only"  # some 0-0 edge, no 1-1 edge, some 1
    ONE_PAIR_ONLY = "one-pair-only"  # some 1-1 edge, no 0-0 edge, some 0
    BOTH_PAIRS = "both-pairs"  # a 0-0 edge and a 1-1 edge


# Rule families under which each state class is frozen.
_STABLE_FAMILY = {
    StateClass.ALL_ZERO: ZERO_STABLE,
    StateClass.ALL_ONE: ONE_STABLE,
    StateClass.PROPER: SPLIT_STABLE,
    StateClass.ZERO_PAIR_ONLY: frozenset({OP_DIFF, OP_FIRST}),
    StateClass.ONE_PAIR_ONLY: frozenset({OP_FIRST, OP_IMPLIED_BY}),
    StateClass.BOTH_PAIRS: frozenset({OP_FIRST}),
}


def classify_state(g: Graph, s: int) -> StateClass:
    """Assign the unique state class of s on a connected graph."""
    if not is_connected(g):
        raise PreconditionError("state classification needs a connected graph")
    full = (1 << g.n) - 1
    if s == 0:
        return StateClass.ALL_ZERO
    if s == full:
        return StateClass.ALL_ONE
    zero_pair = False
    one_pair = False
    for i, j in g.edges:
        bi = s >> (i - 1) & 1
        bj = s >> (j - 1) & 1
        if bi == 0 and bj == 0:
            zero_pair = True
        elif bi == 1 and bj == 1:
            one_pair = True
    if not zero_pair and not one_pair:
        return StateClass.PROPER
    if zero_pair and one_pair:
        return StateClass.BOTH_PAIRS
    if zero_pair:
        return StateClass.ZERO_PAIR_ONLY
    return StateClass.ONE_PAIR_ONLY


def is_absorbing_state(g: Graph, s: int, ops) -> bool:
    """Closed-form absorbing test: the rule set must lie inside the family
    that freezes the class of s."""
    ops = frozenset(ops)
    if not ops:
        raise ValueError("rule set must be nonempty")
    return ops <= _STABLE_FAMILY[classify_state(g, s)]


def absorbing_rows(g: Graph, ops, states: np.ndarray) -> np.ndarray:
    """Vectorized closed-form absorbing test over a (rows, n) 0/1 matrix.

    Same classification as is_absorbing_state, applied per row; used by the
    simulator for early exit.
    """
    ops = frozenset(ops)
    if not ops:
        raise ValueError("rule set must be nonempty")
    states = np.asarray(states)
    rows = states.shape[0]
    zero_pair = np.zeros(rows, dtype=bool)
    one_pair = np.zeros(rows, dtype=bool)
    for i, j in g.edges:
        a = states[:, i - 1]
        b = states[:, j - 1]
        zero_pair |= (a == 0) & (b == 0)
        one_pair |= (a == 1) & (b == 1)
    any_one = states.any(axis=1)
    all_one = states.all(axis=1)
    out = np.zeros(rows, dtype=bool)
    cases = (
        (~any_one, StateClass.ALL_ZERO),
        (all_one, StateClass.ALL_ONE),
        (any_one & ~all_one & ~zero_pair & ~one_pair, StateClass.PROPER),
        (zero_pair & ~one_pair & any_one, StateClass.ZERO_PAIR_ONLY),
        (one_pair & ~zero_pair & ~all_one, StateClass.ONE_PAIR_ONLY),
        (zero_pair & one_pair, StateClass.BOTH_PAIRS),
    )
    for mask, cls in cases:
        if ops <= _STABLE_FAMILY[cls]:
            out |= mask
    return out


def is_absorbing_chain_oracle(g: Graph, ops) -> bool:
    """Closed-form absorbing-chain decision from (graph, rule set) alone.

    Parity-sensitive rule sets: absorbing iff the graph has no odd cycle.
    All other rule sets: absorbing iff the set lies inside ZERO_STABLE or
    inside ONE_STABLE but not inside NEIGHBOR_COPY, independent of the
    graph. The NEIGHBOR_COPY exception: when every operator copies the
    neighbour on disagreement, an unequal edge can only swap, so a state
    with a single dissenting value keeps exactly one dissenter forever and
    never reaches a consensus state (the only absorbing states such sets
    admit on a connected graph).
    """
    ops = frozenset(ops)
    if not ops:
        raise ValueError("rule set must be nonempty")
    if not is_connected(g):
        raise PreconditionError("the oracle needs a connected graph")
    if is_parity_family(ops):
        return not has_odd_cycle(g)
    if ops <= NEIGHBOR_COPY:
        return False
    return ops <= ZERO_STABLE or ops <= ONE_STABLE


def check_graph_independence(g1: Graph, g2: Graph, ops) -> bool:
    """Brute-force check that the absorbing verdict agrees on two graphs.

    Only valid for rule sets outside the parity-sensitive families, where
    the verdict is claimed to be graph-independent; expected always true.
    """
    ops = frozenset(ops)
    if is_parity_family(ops):
        raise PreconditionError(
            "rule set is parity-sensitive; its verdict depends on the graph"
        )
    from . import chain
    from .rules import RuleSet

    rules = RuleSet(tuple(sorted(ops)))
    a1 = chain.analyze(chain.ChainSpec(g1, rules))
    a2 = chain.analyze(chain.ChainSpec(g2, rules))
    return a1.is_absorbing_chain == a2.is_absorbing_chain
