"""Where the AND/OR chain ends up: exact absorption odds and a spot check.

From any mixed start the AND/OR chain is absorbed at all-zeros or
all-ones. The split depends on the probability p of drawing OR; this
script solves it exactly on the 4-cycle across a range of p, confirms the
hand-computable single-edge value 9/58 at p = 0.3, and cross-checks one
point with a seeded Monte Carlo run.
"""

from fractions import Fraction

from boolgossip import andor, chain, graphs, rules, simulate

cycle = graphs.make("cycle", 4)
start = chain.parse_state("1000", 4)

print("4-cycle from [1000]: probability of all-ones as p(OR) varies")
for num in range(1, 10):
    p = Fraction(num, 10)
    spec = chain.ChainSpec(cycle, rules.RuleSet((1, 7), (1 - p, p)))
    win = andor.consensus_probability(spec, start)
    bar = "#" * round(win * 40)
    print(f"  p={float(p):.1f}  P[1111] = {win:.6f}  {bar}")

# One edge, p = 0.3, start [01]: the only competition is AND-AND against
# OR-OR, so the odds are 0.09 : 0.49 and the all-ones share is 9/58.
edge = graphs.parse_edge_list("1 2")
spec = chain.ChainSpec(edge, rules.RuleSet((1, 7), (Fraction(7, 10), Fraction(3, 10))))
win = andor.consensus_probability(spec, chain.parse_state("01", 2))
print()
print(f"single edge, p=0.3: P[11] = {win:.12f} (9/58 = {9 / 58:.12f})")

# Monte Carlo agreement at p = 1/2 on the cycle.
spec = chain.ChainSpec(cycle, rules.RuleSet((1, 7)))
exact = andor.consensus_probability(spec, start)
config = simulate.SimConfig(spec, horizon=400, rounds=20000, seed=33, start=start)
result = simulate.run(config)
estimate = result.absorption_counts.get(15, 0) / 20000
print()
print(f"p=0.5 from [1000]: exact {exact:.4f}, simulated {estimate:.4f} "
      f"({result.consensus_fraction:.0%} of rounds reached consensus)")
