"""Monte Carlo simulator: determinism, schedule invariance, and calibration."""

from __future__ import annotations

import math

import pytest

from boolgossip import chain, graphs, rules, simulate
from boolgossip.errors import PreconditionError


def _spec(g=None, ops=(1, 7), probs=()):
    if g is None:
        g = graphs.make("cycle", 4)
    return chain.ChainSpec(g, rules.RuleSet(ops, probs))


def test_config_validation():
    spec = _spec()
    with pytest.raises(PreconditionError):
        simulate.SimConfig(spec, 10, 5, 1)  # neither start nor delta0
    with pytest.raises(PreconditionError):
        simulate.SimConfig(spec, 10, 5, 1, start=3, delta0=0.5)
    with pytest.raises(PreconditionError):
        simulate.SimConfig(spec, 10, 5, 1, start=16)
    with pytest.raises(PreconditionError):
        simulate.SimConfig(spec, 10, 5, 1, delta0=1.5)
    with pytest.raises(PreconditionError):
        simulate.SimConfig(spec, 0, 5, 1, start=3)
    with pytest.raises(PreconditionError):
        simulate.SimConfig(spec, 10, 0, 1, start=3)
    with pytest.raises(PreconditionError):
        simulate.SimConfig(spec, 10, 5, 1, start=3, sample_every=0)


def test_deterministic_replay():
    config = simulate.SimConfig(_spec(), 60, 300, seed=9, delta0=0.5)
    a = simulate.run(config)
    b = simulate.run(config)
    assert a.density_mean == b.density_mean
    assert a.absorption_counts == b.absorption_counts
    assert a.consensus_fraction == b.consensus_fraction
    c = simulate.run(simulate.SimConfig(_spec(), 60, 300, seed=10, delta0=0.5))
    assert c.density_mean != a.density_mean


def test_sampling_schedule_invariance():
    # Counter-addressed draws make outcomes independent of batching, so only
    # the recorded grid changes with sample_every.
    base = dict(horizon=48, rounds=200, seed=4, start=chain.parse_state("1000", 4))
    fine = simulate.run(simulate.SimConfig(_spec(), **base, sample_every=2))
    coarse = simulate.run(simulate.SimConfig(_spec(), **base, sample_every=6))
    fine_at = dict(zip(fine.density_mean.steps, fine.density_mean.density))
    for t, d in zip(coarse.density_mean.steps, coarse.density_mean.density):
        assert fine_at[t] == d
    assert fine.absorption_counts == coarse.absorption_counts
    assert fine.consensus_fraction == coarse.consensus_fraction


def test_identity_rules_freeze_everything():
    start = chain.parse_state("0110", 4)
    config = simulate.SimConfig(
        _spec(ops=(rules.OP_FIRST,)), 30, 50, seed=2, start=start
    )
    result = simulate.run(config)
    assert set(result.density_mean.density) == {0.5}
    assert result.absorption_counts == {start: 50}
    assert result.consensus_fraction == 0.0


def test_all_zero_initial_density():
    config = simulate.SimConfig(_spec(), 20, 40, seed=3, delta0=0.0)
    result = simulate.run(config)
    assert set(result.density_mean.density) == {0.0}
    assert result.absorption_counts == {0: 40}
    assert result.consensus_fraction == 1.0


def test_initial_density_calibration():
    g = graphs.make("complete", 30)
    config = simulate.SimConfig(_spec(g), 1, 400, seed=11, delta0=0.3)
    result = simulate.run(config)
    d0 = result.density_mean.density[0]
    sigma = math.sqrt(0.3 * 0.7 / (30 * 400))
    assert abs(d0 - 0.3) < 5 * sigma


def test_density_bounds_and_per_step_motion():
    config = simulate.SimConfig(
        _spec(), 80, 120, seed=6, delta0=0.5, sample_every=1
    )
    result = simulate.run(config)
    dens = result.density_mean.density
    assert all(0.0 <= d <= 1.0 for d in dens)
    # One step touches at most two nodes per round.
    assert all(abs(b - a) <= 2 / 4 + 1e-12 for a, b in zip(dens, dens[1:]))


def test_estimator_matches_solver():
    g = graphs.make("cycle", 4)
    spec = _spec(g)
    start = chain.parse_state("1000", 4)
    exact = chain.absorption_probabilities(spec, start)[15]
    rounds = 4000
    config = simulate.SimConfig(spec, 400, rounds, seed=12, start=start)
    result = simulate.run(config)
    assert sum(result.absorption_counts.values()) == rounds  # all absorbed
    assert result.consensus_fraction == 1.0
    estimate = result.absorption_counts.get(15, 0) / rounds
    sigma = math.sqrt(exact * (1 - exact) / rounds)
    assert abs(estimate - exact) <= 3 * sigma


def test_balanced_start_splits_evenly():
    start = chain.parse_state("0101", 4)
    config = simulate.SimConfig(_spec(), 400, 10000, seed=13, start=start)
    result = simulate.run(config)
    estimate = result.absorption_counts.get(15, 0) / 10000
    assert abs(estimate - 0.5) <= 0.02
