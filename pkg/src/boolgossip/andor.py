"""Closed-form structure of the chain under the AND/OR rule pair.

With rules {AND, OR} the all-zeros and all-ones states are the only
absorbing states and the number of communication classes depends only on
the graph shape: 2n on a line, m+3 / m+2 on even / odd cycles, 5 on any
other graph without an odd cycle, and 3 otherwise.

The line and cycle cases are organized by state reductions: run-length
collapse along the path order, and the cyclic variant that also drops the
last digit when it matches the first. States on a line communicate exactly
when they share a reduction; on a cycle the class is fixed by the number
of unequal-endpoint edges.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chain import ChainSpec, absorption_probabilities
from .errors import CapacityError, PreconditionError
from .graphs import Graph, ShapeTag, bipartition, classify_shape, is_connected
from .rules import AND_OR

MAX_PARTITION_N = 16


@dataclass(frozen=True)
class ReducedState:
    """A run-length collapsed state: nonempty digits with no equal neighbors.

    Cyclic reductions additionally have unequal first/last digits and, when
    longer than one digit, even length.
    """

    digits: tuple[int, ...]
    cyclic: bool = False

    def __post_init__(self):
        if not self.digits:
            raise ValueError("reduced state must be nonempty")
        if any(d not in (0, 1) for d in self.digits):
            raise ValueError(f"digits must be bits: {self.digits}")
        for a, b in zip(self.digits, self.digits[1:]):
            if a == b:
                raise ValueError(f"consecutive equal digits in {self.digits}")
        if self.cyclic and len(self.digits) > 1:
            if self.digits[0] == self.digits[-1]:
                raise ValueError(f"cyclic reduction ends equal: {self.digits}")
            if len(self.digits) % 2 != 0:
                raise ValueError(f"cyclic reduction has odd length: {self.digits}")

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return "".join(str(d) for d in self.digits)


def _collapse(values) -> tuple[int, ...]:
    out = [values[0]]
    for v in values[1:]:
        if v != out[-1]:
            out.append(v)
    return tuple(out)


def line_reduce(s: int, n: int) -> ReducedState:
    """Run-length collapse of a state along the node order 1..n."""
    if n < 1 or not 0 <= s < 1 << n:
        raise ValueError(f"state {s} out of range for n={n}")
    values = [s >> i & 1 for i in range(n)]
    return ReducedState(_collapse(values))


def cycle_reduce(s: int, n: int) -> ReducedState:
    """Cyclic reduction: collapse along 1..n, then drop the last digit when
    it equals the first. The length equals the number of unequal-endpoint
    edges around the cycle (or 1 for constant states)."""
    digits = line_reduce(s, n).digits
    if len(digits) > 1 and digits[-1] == digits[0]:
        digits = digits[:-1]
    return ReducedState(digits, cyclic=True)


@dataclass(frozen=True)
class ClassPrediction:
    """Predicted class partition: per-class state sets and display labels."""

    chi: int
    classes: tuple[frozenset[int], ...]
    labels: tuple[str, ...]


def predict_chi(g: Graph) -> int:
    """Closed-form class count of the AND/OR chain from the graph shape."""
    if not is_connected(g):
        raise PreconditionError("class-count formula needs a connected graph")
    shape = classify_shape(g)
    if shape.tag is ShapeTag.LINE:
        return 2 * g.n
    if shape.tag is ShapeTag.CYCLE:
        return g.n // 2 + (3 if g.n % 2 == 0 else 2)
    return 3 if shape.has_odd_cycle else 5


def _line_order(g: Graph) -> list[int]:
    # Walk the path starting from the smaller-labeled endpoint.
    start = min(i for i in range(1, g.n + 1) if g.degree(i) == 1)
    order = [start]
    prev = None
    current = start
    while len(order) < g.n:
        nxt = [v for v in g.neighbors(current) if v != prev]
        prev, current = current, nxt[0]
        order.append(current)
    return order


def predict_classes(g: Graph) -> ClassPrediction:
    """Explicit predicted class partition of the AND/OR chain.

    Line: one class per reduction value. Cycle: the two constant states,
    one class per even count of unequal-endpoint edges, and on even cycles
    the two alternating states as extra singletons. Other bipartite graphs:
    the two constant states, the two proper 2-colorings, and everything
    else. Graphs with an odd cycle: the two constant states and the rest.
    """
    if not is_connected(g):
        raise PreconditionError("class prediction needs a connected graph")
    n = g.n
    if n > MAX_PARTITION_N:
        raise CapacityError(f"n={n} exceeds the partition cap of {MAX_PARTITION_N}")
    size = 1 << n
    full = size - 1
    shape = classify_shape(g)

    if shape.tag is ShapeTag.LINE:
        order = _line_order(g)
        fibers: dict[tuple[int, ...], list[int]] = {}
        for s in range(size):
            digits = _collapse([s >> (i - 1) & 1 for i in order])
            fibers.setdefault(digits, []).append(s)
        items = sorted(fibers.items(), key=lambda kv: (len(kv[0]), kv[0]))
        classes = tuple(frozenset(members) for _, members in items)
        labels = tuple(
            "reduction " + "".join(map(str, digits)) for digits, _ in items
        )
        return ClassPrediction(len(classes), classes, labels)

    if shape.tag is ShapeTag.CYCLE:
        states = np.arange(size, dtype=np.uint32)
        boundary = np.zeros(size, dtype=np.int32)
        for i, j in g.edges:
            bi = (states >> np.uint32(i - 1)) & np.uint32(1)
            bj = (states >> np.uint32(j - 1)) & np.uint32(1)
            boundary += (bi != bj).astype(np.int32)
        classes = [frozenset({0}), frozenset({full})]
        labels = ["all-zeros", "all-ones"]
        if n % 2 == 0:
            colors = bipartition(g)
            alt = sum(1 << (i - 1) for i in range(1, n + 1) if colors[i])
            classes.extend([frozenset({alt}), frozenset({full ^ alt})])
            labels.extend(["alternating", "alternating complement"])
        for d in range(2, n, 2):
            members = frozenset(int(s) for s in np.nonzero(boundary == d)[0])
            classes.append(members)
            labels.append(f"{d} unequal edges")
        return ClassPrediction(len(classes), tuple(classes), tuple(labels))

    if shape.has_odd_cycle:
        rest = frozenset(range(1, full))
        return ClassPrediction(
            3,
            (frozenset({0}), frozenset({full}), rest),
            ("all-zeros", "all-ones", "mixed"),
        )

    colors = bipartition(g)
    side = sum(1 << (i - 1) for i in range(1, n + 1) if colors[i])
    rest = frozenset(s for s in range(size) if s not in {0, full, side, full ^ side})
    return ClassPrediction(
        5,
        (
            frozenset({0}),
            frozenset({full}),
            frozenset({side}),
            frozenset({full ^ side}),
            rest,
        ),
        ("all-zeros", "all-ones", "coloring", "coloring complement", "mixed"),
    )


def consensus_probability(spec: ChainSpec, start: int) -> float:
    """Probability that the AND/OR chain absorbs at all-ones from `start`."""
    if spec.rules.op_set != AND_OR:
        raise PreconditionError("closed-form consensus needs the AND/OR rule pair")
    full = (1 << spec.graph.n) - 1
    if start in (0, full):
        raise PreconditionError("start state is already absorbing")
    dist = absorption_probabilities(spec, start)
    return dist.get(full, 0.0)
