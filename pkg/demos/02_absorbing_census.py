"""Census of absorbing verdicts over all 65535 nonempty rule sets.

Whether the induced chain is absorbing is decided by a closed form: nine
parity-sensitive rule sets follow the bipartiteness of the graph, rule
sets contained in the neighbor-copy family never absorb, and everything
else absorbs exactly when it keeps one of the two consensus states fixed,
regardless of the graph. This script tallies the verdicts on an even and
an odd graph and confirms the closed form against the brute-force sweep.
"""

import numpy as np

from boolgossip import absorbing, chain, graphs, rules

even = graphs.make("cycle", 4)
odd = graphs.make("cycle", 3)

for name, g in (("cycle(4)", even), ("triangle", odd)):
    verdicts = chain.sweep_absorbing_verdicts(g)
    brute_count = int(np.count_nonzero(verdicts[1:]))
    mismatches = 0
    for mask in range(1, 1 << 16):
        ops = rules.mask_ops(mask)
        if absorbing.is_absorbing_chain_oracle(g, ops) != bool(verdicts[mask]):
            mismatches += 1
    print(f"{name}: {brute_count} of 65535 rule sets absorb, "
          f"oracle mismatches: {mismatches}")

# The verdict moves with the graph only for the parity-sensitive families.
print()
print("parity-sensitive families (absorb iff the graph has no odd cycle):")
for fam in sorted(rules.PARITY_FAMILIES, key=lambda f: (len(f), sorted(f))):
    names = ",".join(format(k, "x") for k in sorted(fam))
    on_even = absorbing.is_absorbing_chain_oracle(even, fam)
    on_odd = absorbing.is_absorbing_chain_oracle(odd, fam)
    print(f"  {{{names}}}: cycle(4) {on_even}, triangle {on_odd}")

# Neighbor-copy rules adopt the other endpoint's value on disagreement, so
# an unequal edge can only swap and a lone dissenter survives forever.
print()
line4 = graphs.make("line", 4)
for ops in ({0x4}, {0x5}, {0xD}, {0x4, 0x5}, {0x5, 0xD}):
    names = ",".join(format(k, "x") for k in sorted(ops))
    verdict = absorbing.is_absorbing_chain_oracle(line4, frozenset(ops))
    analysis = chain.analyze(chain.ChainSpec(line4, rules.RuleSet(tuple(sorted(ops)))))
    print(f"neighbor-copy {{{names}}} on line(4): oracle {verdict}, "
          f"brute force {analysis.is_absorbing_chain}")

start = chain.parse_state("0100", 4)
spec = chain.ChainSpec(line4, rules.RuleSet((0x4,)))
analysis = chain.analyze(spec)
members = [s for s in range(16) if analysis.class_of[s] == analysis.class_of[start]]
words = " ".join(chain.format_state(s, 4) for s in members)
print(f"the dissenter from [0100] under {{4}} circulates over: {words}")
