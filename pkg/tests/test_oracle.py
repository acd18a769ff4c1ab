import pytest

from logcouple.couple import psi_element
from logcouple.exceptions import UnknownSuite
from logcouple.oracle import (SUITES, GenConfig, Sampler, closure_chain,
                              gen_sfunction, gen_term, gen_vector,
                              is_psi_difference, run_suite, run_suites)
from logcouple.vector import LogVector


@pytest.mark.parametrize('name', sorted(SUITES))
def test_suite_passes(name, small_cfg):
    report = run_suite(name, small_cfg)
    assert report.cases > 0
    assert report.failures == []
    assert report.passed


def test_suite_names():
    expected = {'ordered-group', 'psi-basis', 'arch-class', 'AC1', 'AC2', 'AC3',
                'HC', 'T0', 'integral-identity', 'asymptotic-integration',
                'fixed-point', 'successor-identity', 'limit-lemma', 's0-lemma',
                'table-psi', 'table-s', 'table-p', 'image-in-psi',
                'piecewise-oracle', 'solve-oracle', 'qf-psi', 'psi-difference',
                'closure-chain'}
    assert expected <= set(SUITES)


def test_unknown_suite(small_cfg):
    with pytest.raises(UnknownSuite):
        run_suite('no-such-suite', small_cfg)


def test_run_all_combines(small_cfg):
    cfg = GenConfig(seed=1, samples=10, max_level=6)
    report = run_suite('all', cfg)
    assert report.name == 'all'
    assert report.passed
    assert len(run_suites(['all'], cfg)) == len(SUITES)


def test_runs_are_deterministic(small_cfg):
    first = run_suites(['ordered-group', 'solve-oracle'], small_cfg)
    second = run_suites(['solve-oracle', 'ordered-group'], small_cfg)
    assert [r.to_dict() for r in first] == [r.to_dict() for r in reversed(second)]


def test_report_dict(small_cfg):
    report = run_suite('T0', small_cfg)
    out = report.to_dict()
    assert out['suite'] == 'T0'
    assert out['seed'] == 42
    assert out['failed'] == 0
    assert 'elapsed' not in out
    assert 'elapsed' in report.to_dict(timings=True)


def test_generators_are_seeded(small_cfg):
    assert gen_vector(small_cfg) == gen_vector(small_cfg)
    assert gen_term(small_cfg, 4) == gen_term(small_cfg, 4)
    assert gen_sfunction(small_cfg) == gen_sfunction(small_cfg)
    a, b = Sampler(small_cfg, 'one'), Sampler(small_cfg, 'two')
    assert [a.vector() for _ in range(5)] != [b.vector() for _ in range(5)]


def test_config_from_env(clean_env):
    assert GenConfig.from_env() == GenConfig()
    clean_env.setenv('LOGCOUPLE_SEED', '7')
    clean_env.setenv('LOGCOUPLE_SAMPLES', '100')
    cfg = GenConfig.from_env(samples=3)
    assert cfg.seed == 7
    assert cfg.samples == 3
    assert cfg.heavy_samples == 1


def test_closure_chain():
    links = closure_chain(2)
    assert len(links) == 2
    first, second = links
    assert first.beta == LogVector([1])
    assert first.beta_next == psi_element(1)
    assert first.alpha_next == LogVector([0, -1])
    assert first.chi_ok is None
    assert second.chi_ok is True
    assert all(link.ok for link in links)
    assert second.to_dict(psi_names=True)['beta'] == 'psi_1'
    with pytest.raises(ValueError):
        closure_chain(0)


@pytest.mark.parametrize(
    'a, expected', [
        ([0, 1], True),
        ([0, 0, 1, 1], True),
        ([1, 1], False),
        ([0, 1, 0, 1], False),
        ([0, 2], False),
        ([], False),
    ]
)
def test_is_psi_difference(a, expected):
    assert is_psi_difference(LogVector(a)) is expected


@pytest.mark.parametrize('seed', [1, 42])
def test_identity_suites_reach_sample_count(seed):
    cfg = GenConfig(seed=seed, samples=300, max_level=10)
    report = run_suite('successor-identity', cfg)
    assert report.cases == 300
    assert report.passed
    # one extra case checks s0 itself
    assert run_suite('s0-lemma', cfg).cases == 301


def test_table_suites_share_functions(small_cfg):
    reports = run_suites(['table-psi', 'table-s', 'table-p'], small_cfg)
    assert [r.cases for r in reports] == [small_cfg.heavy_samples] * 3
    assert all(r.passed for r in reports)
