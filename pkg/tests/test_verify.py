import pytest

from cocycle_lab import verify


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        verify.run_suite('nonesuch')


def test_suite_names():
    assert set(verify.SUITES) == {'tetrahedron', 'cube', 'commutation',
                                  'contractible', 'scan-invariance', 'prop1',
                                  'ckr-oracle'}


def test_prop1_passes():
    rep = verify.run_suite('prop1')
    assert rep.passed and rep.checks >= 4


def test_ckr_oracle_passes():
    rep = verify.run_suite('ckr-oracle')
    assert rep.passed and rep.checks >= 20


def test_tetrahedron_restricted_run():
    rep = verify.run_suite('tetrahedron', params={'ns': (2,)})
    assert rep.passed and rep.checks > 0


def test_contractible_seeded_subset():
    rep = verify.run_suite('contractible', params={'seeds': range(10)})
    # each parameter value of each loop counts as one check
    assert rep.passed and rep.checks >= 10


def test_semi_regular_variant_is_deterministic():
    a = verify.semi_regular_variant([1], verify.CABLE_FIXTURES[0][2], 3)
    b = verify.semi_regular_variant([1], verify.CABLE_FIXTURES[0][2], 3)
    assert a == b


def test_report_summary_text():
    rep = verify.run_suite('prop1')
    assert 'prop1' in rep.summary()
    assert 'pass' in rep.summary()
