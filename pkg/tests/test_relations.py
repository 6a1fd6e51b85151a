from fractions import Fraction as F

import pytest

from yangianpp import Geometry, Representation
from yangianpp.errors import SignInconsistent
from yangianpp.relations import (
    OperatorSet,
    check_ee,
    check_ef_diag,
    check_ef_matches_h,
    check_ff,
    check_pole_support,
    check_psi_e_compat,
    check_serre_e,
    check_serre_f,
    check_shift,
    full_suite,
    run_suite,
)


@pytest.fixture(scope="module")
def c3_ops():
    from yangianpp import Params

    params = Params.make(F(101, 13), F(47, 7), F(7))
    return OperatorSet(Representation(Geometry("c3", params, 5)))


@pytest.fixture(scope="module")
def coni_ops():
    from yangianpp import Params

    params = Params.make(F(101, 13), F(47, 7), F(7))
    return OperatorSet(Representation(Geometry("conifold", params, 3, m=3, sector=1)))


def test_c3_ef_diag(c3_ops):
    r = check_ef_diag(c3_ops, 2)
    assert r.status == "pass" and r.domain > 0


def test_c3_ef_matches_h(c3_ops):
    r = check_ef_matches_h(c3_ops, 3)
    assert r.status == "pass" and "eps=+1" in r.detail


def test_c3_ef_matches_h_convention_flip(c3_ops):
    r = check_ef_matches_h(c3_ops, 2, infinity_sign=-1)
    assert r.status == "pass" and "eps=-1" in r.detail


def test_c3_ee_ff(c3_ops):
    assert check_ee(c3_ops, 2).status == "pass"
    assert check_ff(c3_ops, 2).status == "pass"


def test_c3_serre(c3_ops):
    assert check_serre_e(c3_ops, 1).status == "pass"
    assert check_serre_f(c3_ops, 1).status == "pass"


def test_c3_psi_compat_and_poles(c3_ops):
    assert check_psi_e_compat(c3_ops).status == "pass"
    assert check_pole_support(c3_ops.rep).status == "pass"


def test_c3_shift(c3_ops):
    params = c3_ops.rep.geometry.params
    r = check_shift(c3_ops.rep, expect=(-1, params.chi))
    assert r.status == "pass"


def test_conifold_suite(coni_ops):
    assert check_ef_diag(coni_ops, 2).status == "pass"
    assert check_ef_matches_h(coni_ops, 3).status == "pass"
    assert check_ee(coni_ops, 2).status == "pass"
    assert check_ff(coni_ops, 2).status == "pass"
    assert check_psi_e_compat(coni_ops).status == "pass"
    assert check_pole_support(coni_ops.rep).status == "pass"


def test_conifold_serre_statuses(coni_ops, params):
    # with the full sector in view the triple raise is genuinely zero (the
    # sector has no level-3 states at all), so the check passes honestly
    assert check_serre_e(coni_ops, 1).status == "pass"
    # a truncation that cuts the triple raise must report an empty domain
    shallow = OperatorSet(Representation(Geometry("conifold", params, 2, m=3, sector=1)))
    r = check_serre_e(shallow, 1)
    assert r.status == "empty-domain" and r.domain == 0


def test_c3_deeper_truncation_with_more_collisions(params):
    # level 6 sees many equal-weight box configurations; the balanced split
    # must keep the commutator exactly diagonal through all of them
    ops = OperatorSet(Representation(Geometry("c3", params, 6)))
    assert check_ef_diag(ops, 1).status == "pass"
    assert check_ef_matches_h(ops, 2).status == "pass"


def test_conifold_serre_nontrivial_in_sector_two(params):
    # sector 2 of the m=3 room has a four-level ladder, so the triple-Serre
    # relations run with genuine content there
    ops = OperatorSet(Representation(Geometry("conifold", params, 3, m=3, sector=2)))
    for chk in (check_serre_e, check_serre_f):
        r = chk(ops, 1)
        assert r.status == "pass" and r.domain > 0


def test_wrong_sigma2_sign_fails(c3_ops):
    """Negative control: the quadratic relation with the opposite sigma2 sign
    must not hold (this pins the convention)."""
    from yangianpp.relations import _quad_combo

    p = c3_ops.rep.geometry.params
    combo = _quad_combo(c3_ops.e, 0, 0, -p.sigma2, p.sigma3, +1)  # flips to +sigma2
    levels = range(0, c3_ops.top - 1)
    assert not combo.is_zero_on(levels)


def test_wrong_sigma3_sign_fails(c3_ops):
    from yangianpp.relations import _quad_combo

    p = c3_ops.rep.geometry.params
    combo = _quad_combo(c3_ops.e, 0, 0, p.sigma2, p.sigma3, -1)
    levels = range(0, c3_ops.top - 1)
    assert not combo.is_zero_on(levels)


def test_corrupted_operator_fails_ef(c3_ops):
    import copy

    bad = copy.deepcopy(c3_ops)
    e0 = bad.e(0)
    n, (i, j) = 1, next(iter(bad.e(0).blocks[1]))
    e0.blocks[1][(i, j)] = e0.blocks[1][(i, j)] + 1
    r = check_ef_diag(bad, 1)
    assert r.status == "fail"


def test_empty_domain_is_not_a_pass(params):
    g = Geometry("c3", params, 1)  # too shallow for the quadratic relation
    ops = OperatorSet(Representation(g))
    r = check_ee(ops, 0)
    assert r.status == "empty-domain"


def test_run_suite_c3(params):
    reports, shift = run_suite(Geometry("c3", params, 4), imax=1)
    assert all(r.status != "fail" for r in reports)
    assert shift == (-1, params.chi)


def test_full_suite_bundle_verdicts_agree():
    bundle = full_suite("c3", 3, imax=1, specializations=2, seed=11)
    assert bundle.all_pass
    for statuses in bundle.verdicts().values():
        assert len(set(statuses)) == 1


def test_full_suite_modes_agree():
    rational = full_suite("conifold", 2, imax=1, m=2, sector=1, specializations=1, seed=5)
    prime = full_suite(
        "conifold", 2, imax=1, m=2, sector=1, specializations=1, seed=5, mode="prime-field"
    )
    assert rational.verdicts() == prime.verdicts()
    assert rational.shift is not None and prime.shift is not None


def test_report_json_shape():
    bundle = full_suite("c3", 2, imax=1, specializations=1, seed=3)
    obj = bundle.to_json()
    assert {"geometry", "params", "relations", "shift"} <= set(obj)
    for entry in obj["relations"]:
        assert {"id", "status", "domain", "discrepancy", "time"} <= set(entry)
