import math

import pytest

import fdmac


def test_dca_gains():
    for m, gain in [(1, 4 / 3), (2, 1.4), (4, 13 / 9)]:
        assert fdmac.throughputs(fdmac.dca_config(m, m)).sum == pytest.approx(gain, abs=1e-12)
        assert fdmac.dca_gain(m, m) == pytest.approx(gain, abs=1e-12)


def test_balanced_head_fraction():
    c = fdmac.NetworkConfig(1, 1, 0.6, 0.3, 0.1)
    assert fdmac.validate(c) == []
    assert fdmac.head_fraction(c) == pytest.approx(0.75)
    r = fdmac.throughputs(c)
    assert (r.hd_down, r.hd_up, r.fd_down, r.fd_up, r.sum) == pytest.approx((0.45, 0.1, 0.45, 0.45, 1.45))


def test_fairness_preset_equalises_flows():
    r = fdmac.throughputs(fdmac.fairness_config(2, 2))
    assert r.hd_down == pytest.approx(r.hd_up) == pytest.approx(r.fd_down) == pytest.approx(1 / 6)


def test_invalid_config_raises():
    c = fdmac.NetworkConfig(1, 1, 0.5, 0.5, 0.5)
    assert [v.kind for v in fdmac.validate(c)] == ["probability_sum"]
    with pytest.raises(ValueError):
        fdmac.throughputs(c)
    with pytest.raises(ValueError):
        fdmac.dca_config(0, 0)


def test_simulation_matches_theory():
    c = fdmac.dca_config(2, 2)
    stats = fdmac.run(c, 200_000, 10_000, fdmac.default_capacity(c), 1)
    assert stats.total_slots == 200_000
    result = fdmac.compare(fdmac.throughputs(c), stats, c)
    assert result.passed, [(f.flow, f.z) for f in result.flows]
    emp = fdmac.empirical_report(stats, c)
    assert emp.sum == pytest.approx(1.4, abs=0.01)


def test_run_is_deterministic():
    c = fdmac.fairness_config(3, 1)
    a = fdmac.run(c, 50_000, 1_000, 40, 7)
    b = fdmac.run(c, 50_000, 1_000, 40, 7)
    assert a == b
    assert a != fdmac.run(c, 50_000, 1_000, 40, 8)


def test_stepwise_simulation():
    c = fdmac.dca_config(1, 1)
    sim = fdmac.Simulation(c, capacity=20, seed=3, backlog=fdmac.BacklogPolicy.fixed)
    sim.step(1000)
    assert sim.slots_played == 1000
    assert sim.queue_size == 20
    assert sim.stats.total_slots == 1000


def test_estimate():
    e = fdmac.estimate(25, 100)
    assert e.mean == 0.25
    assert e.std_error == pytest.approx(math.sqrt(0.25 * 0.75 / 100))
