r"""The induced Markov chain over all node-value assignments.

A state is an n-bit word; bit (i-1) holds the value of node i, and node 1 is
the leftmost character in every rendered bitstring. One gossip step selects
an edge {i,j} by the edge weights and lets each endpoint draw an operator
independently from the rule set. Both endpoints then update simultaneously
from the pre-step values, with one proviso: a step whose two draws differ
and would flip both endpoint bits at once is void and leaves the state
unchanged. Equal draws always take full effect, so a single operator can
still flip both sides (e.g. XOR turns an agreeing pair into zeros).

Communication classes are the strongly connected components of the
positive-probability transition digraph. The digraph support is computed
exactly: an arc s -> t exists iff some (edge, op, op) draw maps s to t, so
no float threshold is ever involved. Absorption probabilities solve
(I - Q) B = R for the requested start row by fixed-point iteration, where Q
and R are the transient-to-transient and transient-to-absorbing blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .errors import CapacityError, ParseError, PreconditionError, SolverError
from .graphs import Graph, is_connected
from .rules import RuleSet, evaluate

MAX_CLASSES_N = 24  # analyze / class partition
MAX_SOLVE_N = 16  # absorption probabilities and CSV tables
MAX_SWEEP_N = 12  # all-rule-sets sweep
MAX_DOT_N = 8  # chain diagrams

WEIGHT_TOL = 1e-12
SOLVE_TOL = 1e-12
RESIDUAL_TOL = 1e-10
MAX_SOLVE_ITER = 10_000_000
_EXACT_DENOM = 10**6


def format_state(s: int, n: int) -> str:
    """Render a state word as a bitstring with node 1 leftmost."""
    if not 0 <= s < 1 << n:
        raise ValueError(f"state {s} out of range for n={n}")
    return "".join("1" if s >> i & 1 else "0" for i in range(n))


def parse_state(text: str, n: int) -> int:
    """Parse a bitstring (node 1 leftmost) into a state word."""
    if len(text) != n or any(c not in "01" for c in text):
        raise ParseError(f"bitstring {text!r} must be {n} characters of 0/1")
    s = 0
    for idx, c in enumerate(text):
        if c == "1":
            s |= 1 << idx
    return s


@dataclass(frozen=True)
class ChainSpec:
    """A connected graph, a rule set, and per-edge selection weights.

    edge_weights follows the order of graph.edges and defaults to uniform
    1/|E|. Weights must be positive and sum to 1 within 1e-12.
    """

    graph: Graph
    rules: RuleSet
    edge_weights: tuple = ()

    def __post_init__(self):
        if not is_connected(self.graph):
            raise PreconditionError("interaction graph must be connected")
        m = len(self.graph.edges)
        weights = tuple(self.edge_weights)
        if not weights:
            weights = (Fraction(1, m),) * m
        if len(weights) != m:
            raise ValueError(f"{m} edges but {len(weights)} edge weights")
        if any(w <= 0 for w in weights):
            raise ValueError(f"edge weights must be positive: {weights}")
        if not math.isclose(sum(map(float, weights)), 1.0, abs_tol=WEIGHT_TOL):
            raise ValueError(f"edge weights must sum to 1: {weights}")
        object.__setattr__(self, "edge_weights", weights)


@dataclass(frozen=True)
class TransitionRow:
    """One row of the transition matrix: distinct targets with probabilities."""

    source: int
    targets: tuple[tuple[int, float], ...]


@dataclass(eq=False)
class ChainAnalysis:
    """Communication classes, absorbing structure, and transience masks.

    class_of[s] is the SCC id of state s; absorbing and transient are boolean
    masks over the 2^n state words. A state is transient exactly when its
    class is not closed (some arc leaves the class).
    """

    n: int
    class_of: np.ndarray
    class_count: int
    absorbing: np.ndarray
    transient: np.ndarray
    is_absorbing_chain: bool

    @property
    def absorbing_states(self) -> frozenset[int]:
        return frozenset(int(s) for s in np.nonzero(self.absorbing)[0])

    @property
    def transient_states(self) -> frozenset[int]:
        return frozenset(int(s) for s in np.nonzero(self.transient)[0])

    def classes(self) -> tuple[frozenset[int], ...]:
        """The class partition as frozensets, sorted by smallest member."""
        groups: dict[int, list[int]] = {}
        for s, lab in enumerate(self.class_of):
            groups.setdefault(int(lab), []).append(s)
        parts = [frozenset(members) for members in groups.values()]
        parts.sort(key=min)
        return tuple(parts)


def step_pair(s: int, edge: tuple[int, int], op_i: int, op_j: int) -> int:
    """Apply one pair update: both endpoints read the pre-step values.

    edge must be (i, j) with i < j; op_i is the operator drawn by the
    smaller-indexed endpoint. Bits outside the edge are unchanged. A step
    with op_i != op_j that would flip both endpoint bits is void and
    returns s itself.
    """
    i, j = edge
    if i >= j:
        raise ValueError(f"edge must be ordered (i, j) with i < j, got {edge}")
    bi = s >> (i - 1) & 1
    bj = s >> (j - 1) & 1
    new_i = evaluate(op_i, bi, bj)
    new_j = evaluate(op_j, bj, bi)
    if op_i != op_j and new_i != bi and new_j != bj:
        return s
    cleared = s & ~(1 << (i - 1)) & ~(1 << (j - 1))
    return cleared | new_i << (i - 1) | new_j << (j - 1)


def _can_table(op_set) -> np.ndarray:
    """can[a, b, v]: some operator in the set maps the ordered pair (a,b) to v."""
    can = np.zeros((2, 2, 2), dtype=bool)
    for k in op_set:
        for a in (0, 1):
            for b in (0, 1):
                can[a, b, evaluate(k, a, b)] = True
    return can


def _pair_flip_table(op_set) -> np.ndarray:
    """pair_flip[a, b]: one operator alone flips both sides of an (a,b) edge.

    Only these double flips survive the void rule, because equal draws are
    exempt from it.
    """
    pair_flip = np.zeros((2, 2), dtype=bool)
    for k in op_set:
        for a in (0, 1):
            for b in (0, 1):
                if evaluate(k, a, b) != a and evaluate(k, b, a) != b:
                    pair_flip[a, b] = True
    return pair_flip


def _support(g: Graph, can: np.ndarray, pair_flip: np.ndarray):
    """Exact positive-probability support of the chain.

    Returns (arc keys, absorbing mask): keys is a sorted unique uint64 array
    of src << n | dst pairs with src != dst; the mask flags states whose
    every achievable update is the identity. Per edge a state has at most
    three successors: flip the smaller endpoint (some draw flips it while
    some draw holds the other), flip the larger endpoint, or flip both via
    a single operator.
    """
    n = g.n
    size = 1 << n
    states = np.arange(size, dtype=np.uint32)
    absorbing = np.ones(size, dtype=bool)
    chunks = []
    for i, j in g.edges:
        bi = (states >> np.uint32(i - 1)) & np.uint32(1)
        bj = (states >> np.uint32(j - 1)) & np.uint32(1)
        arcs = (
            (can[bi, bj, 1 - bi] & can[bj, bi, bj], 1 << (i - 1)),
            (can[bi, bj, bi] & can[bj, bi, 1 - bj], 1 << (j - 1)),
            (pair_flip[bi, bj], (1 << (i - 1)) | (1 << (j - 1))),
        )
        per_edge = []
        for valid, flip in arcs:
            if not valid.any():
                continue
            absorbing &= ~valid
            src = states[valid].astype(np.uint64)
            dst = (states[valid] ^ np.uint32(flip)).astype(np.uint64)
            per_edge.append(src << np.uint64(n) | dst)
        if per_edge:
            chunks.append(np.unique(np.concatenate(per_edge)))
    if chunks:
        keys = np.unique(np.concatenate(chunks))
    else:
        keys = np.empty(0, dtype=np.uint64)
    return keys, absorbing


def _analyze_support(
    g: Graph, can: np.ndarray, pair_flip: np.ndarray
) -> ChainAnalysis:
    n = g.n
    size = 1 << n
    keys, absorbing = _support(g, can, pair_flip)
    src = (keys >> np.uint64(n)).astype(np.int64)
    dst = (keys & np.uint64(size - 1)).astype(np.int64)
    adj = sparse.csr_matrix(
        (np.ones(len(src), dtype=np.int8), (src, dst)), shape=(size, size)
    )
    class_count, labels = csgraph.connected_components(
        adj, directed=True, connection="strong"
    )
    comp_src = labels[src]
    comp_dst = labels[dst]
    cross = comp_src != comp_dst
    closed = np.ones(class_count, dtype=bool)
    closed[np.unique(comp_src[cross])] = False
    transient = ~closed[labels]

    reaches = np.zeros(class_count, dtype=bool)
    reaches[labels[absorbing]] = True
    if reaches.any() and cross.any():
        dag = np.unique(
            comp_src[cross].astype(np.uint64) * np.uint64(class_count)
            + comp_dst[cross].astype(np.uint64)
        )
        dag_src = (dag // class_count).astype(np.int64)
        dag_dst = (dag % class_count).astype(np.int64)
        while True:
            grow = reaches[dag_dst] & ~reaches[dag_src]
            if not grow.any():
                break
            reaches[dag_src[grow]] = True
    is_absorbing_chain = bool(absorbing.any()) and bool(reaches.all())
    return ChainAnalysis(
        n=n,
        class_of=labels,
        class_count=int(class_count),
        absorbing=absorbing,
        transient=transient,
        is_absorbing_chain=is_absorbing_chain,
    )


def analyze(spec: ChainSpec) -> ChainAnalysis:
    """Full structural analysis of the induced chain.

    Depends only on the support of the rule set and edge weights (all
    positive by construction), so any two positive probability assignments
    give identical results.
    """
    n = spec.graph.n
    if n > MAX_CLASSES_N:
        raise CapacityError(f"n={n} exceeds the analysis cap of {MAX_CLASSES_N}")
    op_set = spec.rules.op_set
    return _analyze_support(spec.graph, _can_table(op_set), _pair_flip_table(op_set))


def _lift_exact(values):
    """Map floats to Fractions when every value round-trips with denominator
    <= 1e6 and the lifted values sum to exactly 1; otherwise return None."""
    fracs = []
    for v in values:
        if isinstance(v, Fraction):
            fracs.append(v)
            continue
        if isinstance(v, int):
            fracs.append(Fraction(v))
            continue
        f = Fraction(v).limit_denominator(_EXACT_DENOM)
        if float(f) != v:
            return None
        fracs.append(f)
    if sum(fracs) != 1:
        return None
    return tuple(fracs)


def transition_row(spec: ChainSpec, s: int) -> TransitionRow:
    """Merged one-step distribution out of state s.

    Contributions are accumulated as exact rationals whenever all rule
    probabilities and edge weights lift to small fractions summing to 1;
    otherwise plain floats are used. Targets are sorted by state word.
    """
    n = spec.graph.n
    if not 0 <= s < 1 << n:
        raise ValueError(f"state {s} out of range for n={n}")
    weights = _lift_exact(spec.edge_weights)
    probs = _lift_exact(spec.rules.probs)
    if weights is None or probs is None:
        weights = tuple(map(float, spec.edge_weights))
        probs = tuple(map(float, spec.rules.probs))
    acc: dict[int, object] = {}
    for w, edge in zip(weights, spec.graph.edges):
        for k, pk in zip(spec.rules.ops, probs):
            wk = w * pk
            for l, pl in zip(spec.rules.ops, probs):
                t = step_pair(s, edge, k, l)
                acc[t] = acc.get(t, 0) + wk * pl
    targets = tuple((t, float(p)) for t, p in sorted(acc.items()))
    return TransitionRow(source=s, targets=targets)


def absorption_probabilities(spec: ChainSpec, start: int) -> dict[int, float]:
    r"""Probability of ending in each absorbing state from a transient start.

    Solves y = e_start + y Q to tolerance 1e-12 (sup-norm on successive
    iterates, iteration cap 1e7), checks the residual \|y - e - yQ\|_inf
    <= 1e-10, and returns y R as a map over all absorbing states.
    """
    n = spec.graph.n
    if n > MAX_SOLVE_N:
        raise CapacityError(f"n={n} exceeds the solver cap of {MAX_SOLVE_N}")
    analysis = analyze(spec)
    if not analysis.is_absorbing_chain:
        raise PreconditionError("chain is not absorbing")
    if not analysis.transient[start]:
        raise PreconditionError(
            f"start state {format_state(start, n)} is absorbing, not transient"
        )
    transient_ids = np.nonzero(analysis.transient)[0]
    absorbing_ids = np.nonzero(analysis.absorbing)[0]
    t_pos = {int(s): idx for idx, s in enumerate(transient_ids)}
    a_pos = {int(s): idx for idx, s in enumerate(absorbing_ids)}
    q_data, q_rows, q_cols = [], [], []
    r_data, r_rows, r_cols = [], [], []
    for row_idx, s in enumerate(t_pos):
        row = transition_row(spec, s)
        for t, p in row.targets:
            if t in t_pos:
                q_rows.append(row_idx)
                q_cols.append(t_pos[t])
                q_data.append(p)
            elif t in a_pos:
                r_rows.append(row_idx)
                r_cols.append(a_pos[t])
                r_data.append(p)
            # Targets that are neither transient nor absorbing would sit in a
            # closed non-absorbing class, impossible in an absorbing chain.
    nt, na = len(t_pos), len(a_pos)
    q_t = sparse.csr_matrix(
        (q_data, (q_cols, q_rows)), shape=(nt, nt), dtype=np.float64
    )
    r_mat = sparse.csr_matrix(
        (r_data, (r_rows, r_cols)), shape=(nt, na), dtype=np.float64
    )
    e = np.zeros(nt)
    e[t_pos[start]] = 1.0
    y = e.copy()
    for _ in range(MAX_SOLVE_ITER):
        y_next = e + q_t @ y
        delta = float(np.max(np.abs(y_next - y)))
        y = y_next
        if delta <= SOLVE_TOL:
            break
    else:
        raise SolverError(
            f"absorption solve did not converge: last update {delta:.3e}"
        )
    residual = float(np.max(np.abs(y - e - q_t @ y)))
    if residual > RESIDUAL_TOL:
        raise SolverError(f"absorption solve residual {residual:.3e} > {RESIDUAL_TOL}")
    probs = r_mat.T @ y
    return {int(s): float(p) for s, p in zip(absorbing_ids, probs)}


def sweep_absorbing_verdicts(g: Graph) -> np.ndarray:
    """Brute-force absorbing-chain verdict for every nonempty rule set.

    Returns a boolean array indexed by the 16-bit rule mask (entry 0 is
    meaningless). The support digraph of a rule set depends only on which
    values are achievable per ordered input pair plus whether any single
    operator swaps an unequal edge, so verdicts are computed once per such
    signature and fanned out to all 65535 masks.
    """
    if not is_connected(g):
        raise PreconditionError("interaction graph must be connected")
    if g.n > MAX_SWEEP_N:
        raise CapacityError(f"n={g.n} exceeds the sweep cap of {MAX_SWEEP_N}")
    masks = np.arange(1 << 16, dtype=np.uint32)
    # z_mask[a,b] collects ops mapping (a,b) -> 0; o_mask[a,b] the ops -> 1.
    z_mask = np.zeros((2, 2), dtype=np.uint32)
    o_mask = np.zeros((2, 2), dtype=np.uint32)
    swap_mask = np.uint32(0)
    for k in range(16):
        for a in (0, 1):
            for b in (0, 1):
                if evaluate(k, a, b):
                    o_mask[a, b] |= 1 << k
                else:
                    z_mask[a, b] |= 1 << k
        if evaluate(k, 0, 1) == 1 and evaluate(k, 1, 0) == 0:
            swap_mask |= np.uint32(1 << k)
    signature = np.zeros(1 << 16, dtype=np.uint16)
    bit = 0
    for a in (0, 1):
        for b in (0, 1):
            signature |= ((masks & z_mask[a, b]) != 0).astype(np.uint16) << bit
            signature |= ((masks & o_mask[a, b]) != 0).astype(np.uint16) << (bit + 1)
            bit += 2
    signature |= ((masks & swap_mask) != 0).astype(np.uint16) << 8
    verdict_by_sig = {}
    for sig in np.unique(signature[1:]):
        can = np.zeros((2, 2, 2), dtype=bool)
        bit = 0
        for a in (0, 1):
            for b in (0, 1):
                can[a, b, 0] = bool(sig >> bit & 1)
                can[a, b, 1] = bool(sig >> (bit + 1) & 1)
                bit += 2
        pair_flip = np.zeros((2, 2), dtype=bool)
        pair_flip[0, 0] = can[0, 0, 1]
        pair_flip[1, 1] = can[1, 1, 0]
        pair_flip[0, 1] = pair_flip[1, 0] = bool(sig >> 8 & 1)
        verdict_by_sig[int(sig)] = _analyze_support(
            g, can, pair_flip
        ).is_absorbing_chain
    verdicts = np.zeros(1 << 16, dtype=bool)
    for sig, verdict in verdict_by_sig.items():
        verdicts[signature == sig] = verdict
    verdicts[0] = False
    return verdicts


def export_dot(spec: ChainSpec, analysis: ChainAnalysis) -> str:
    """DOT digraph of the chain: bitstring labels, one fill color per class,
    absorbing states drawn as double circles. Self-loops are omitted."""
    n = spec.graph.n
    if n > MAX_DOT_N:
        raise CapacityError(f"n={n} exceeds the diagram cap of {MAX_DOT_N}")
    op_set = spec.rules.op_set
    keys, _ = _support(spec.graph, _can_table(op_set), _pair_flip_table(op_set))
    size = 1 << n
    lines = ["digraph chain {", "  node [style=filled];"]
    for s in range(size):
        label = format_state(s, n)
        hue = (int(analysis.class_of[s]) * 0.618034) % 1.0
        color = f"{hue:.3f} 0.400 0.950"
        shape = ' shape=doublecircle' if analysis.absorbing[s] else ""
        lines.append(f'  "{label}" [fillcolor="{color}"{shape}];')
    for key in keys:
        src = int(key) >> n
        dst = int(key) & (size - 1)
        lines.append(
            f'  "{format_state(src, n)}" -> "{format_state(dst, n)}";'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_csv(spec: ChainSpec, states=None) -> str:
    """CSV table of transition rows: source,target,prob with bitstring states."""
    n = spec.graph.n
    if n > MAX_SOLVE_N:
        raise CapacityError(f"n={n} exceeds the table cap of {MAX_SOLVE_N}")
    if states is None:
        states = range(1 << n)
    lines = ["source,target,prob"]
    for s in states:
        row = transition_row(spec, s)
        for t, p in row.targets:
            lines.append(f"{format_state(s, n)},{format_state(t, n)},{p!r}")
    return "\n".join(lines) + "\n"
