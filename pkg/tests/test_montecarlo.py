import numpy as np
import pytest

from cointkit.errors import ConfigurationError
from cointkit.montecarlo import (
    HIST_EDGES,
    McConfig,
    box_muller,
    proposition1_sweep,
    replication_streams,
    run_experiment,
    simulate_random_walk_pair,
)


def test_same_seed_same_pair():
    a = simulate_random_walk_pair(48, replication_streams(5, 3))
    b = simulate_random_walk_pair(48, replication_streams(5, 3))
    assert a[0] == b[0] and a[1] == b[1]
    c = simulate_random_walk_pair(48, replication_streams(5, 4))
    assert not np.array_equal(a[0].values, c[0].values)


def test_walks_start_at_zero_and_have_length_T():
    x, y = simulate_random_walk_pair(30, replication_streams(1, 0))
    assert len(x) == len(y) == 30
    assert x.values[0] == 0.0 and y.values[0] == 0.0


def test_box_muller_formula():
    g1, _ = replication_streams(8, 0)
    g2, _ = replication_streams(8, 0)
    u = g2.random(4)
    r = np.sqrt(-2 * np.log(1 - u[[0, 2]]))
    expected = [r[0] * np.cos(2 * np.pi * u[1]), r[0] * np.sin(2 * np.pi * u[1]),
                r[1] * np.cos(2 * np.pi * u[3])]
    np.testing.assert_allclose(box_muller(g1, 3), expected, rtol=1e-15)


def test_innovation_moments():
    # law of large numbers / independence oracle over 10^6 draws
    gx, gy = replication_streams(2024, 0)
    dx, dy = box_muller(gx, 10**6), box_muller(gy, 10**6)
    assert abs(dx.mean()) < 0.01
    assert abs(dx.var() - 1) < 0.01
    assert abs(np.corrcoef(dx, dy)[0, 1]) < 0.01


def test_single_replication():
    s = run_experiment(McConfig(replications=1, seed=9))
    for arm in s.arms.values():
        assert arm.sd == 0.0
        assert arm.rejection_rate in (0.0, 1.0)


def test_summary_invariants():
    s = run_experiment(McConfig(replications=200, seed=3))
    for name, arm in s.arms.items():
        assert s.hist_counts[name].sum() == 200
        assert arm.rejection_rate == np.mean(arm.statistics < arm.critical_value)
        assert arm.mean == pytest.approx(arm.statistics.mean())
        assert arm.n_degenerate == 0
    assert s.levels.effective_T == 48 and s.diffs.effective_T == 47
    assert len(s.histogram_rows()) == len(HIST_EDGES) - 1 == 28
    assert s.histogram_rows()[0][:2] == (-12.0, -11.5)


def test_histogram_clamps_to_edge_bins():
    from cointkit.montecarlo import _histogram

    counts = _histogram(np.array([-50.0, -12.0, -11.99, 1.99, 2.0, 40.0]))
    assert counts[0] == 3 and counts[-1] == 3 and counts.sum() == 6


def test_first_difference_arm_more_negative():
    for seed in range(4):
        s = run_experiment(McConfig(replications=100, seed=seed))
        assert s.diffs.mean < s.levels.mean


def test_parallel_equals_serial():
    serial = run_experiment(McConfig(replications=60, seed=11))
    parallel = run_experiment(McConfig(replications=60, seed=11, workers=3))
    for arm in serial.arms:
        np.testing.assert_array_equal(serial.arms[arm].statistics, parallel.arms[arm].statistics)
        assert serial.arms[arm].mean == parallel.arms[arm].mean


def test_replication_results_independent_of_count():
    a = run_experiment(McConfig(replications=20, seed=4))
    b = run_experiment(McConfig(replications=40, seed=4))
    np.testing.assert_array_equal(a.levels.statistics, b.levels.statistics[:20])


@pytest.mark.parametrize("kwargs", [dict(replications=0), dict(T=9), dict(seed=-1), dict(level=0.2)])
def test_config_validation(kwargs):
    with pytest.raises(ConfigurationError):
        McConfig(**kwargs)


def test_sweep_small():
    out = proposition1_sweep([20, 60], replications=50, seed=1)
    assert [s.config.T for s in out] == [20, 60]
    assert out[1].diffs.mean < out[0].diffs.mean
