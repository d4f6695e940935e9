import pytest

from mclab import fixtures
from mclab.errors import InputError, VerificationError
from mclab.fincat import identity_functor
from mclab.olschok import (
    NatTrans,
    check_nat_trans,
    check_pre_cylinder,
    compose_nt,
    corner_product,
    identity_cylinder,
    identity_nt,
    nt_is_anodyne,
    nt_is_cofibration,
    olschok_lambda,
    olschok_model,
    pair_functor,
    structured_from_premodel,
    verify_quillen_cylinder,
    weak_cylinder_theorem_harness,
)
from mclab.premodel import dualize, same_classes

IDS = frozenset({"id_a", "id_b", "id_c", "id_d"})


@pytest.fixture(scope="module")
def p0():
    return fixtures.barton_p0()


@pytest.fixture(scope="module")
def p1():
    return fixtures.barton_p1()


def test_pair_functor_on_lattice(p0):
    cat = p0.cat
    q, inl, inr, fold = pair_functor(cat)
    # binary joins are idempotent, so the pair functor collapses pointwise
    assert all(q.on_object(x) == x for x in cat.objects)
    for nt in (inl, inr, fold):
        assert check_nat_trans(nt).ok, nt.name
    assert compose_nt(fold, inl).components == identity_nt(identity_functor(cat)).components


def test_check_nat_trans_catches_bad_components(p0):
    cat = p0.cat
    ident = identity_functor(cat)
    bad = NatTrans(
        "skew", ident, ident,
        {"a": "ab", "b": "id_b", "c": "id_c", "d": "id_d"},
    )
    verdict = check_nat_trans(bad)
    assert not verdict.ok
    assert any("component at 'a'" in s for s in verdict.violations)
    missing = NatTrans("partial", ident, ident, {"a": "id_a"})
    assert not check_nat_trans(missing).ok


def test_corner_products_on_identity_cylinder(p0):
    cat = p0.cat
    cyl = identity_cylinder(cat)
    sigma0 = compose_nt(cyl.inclusion, cyl.inl)
    # the corner of a leg with any arrow degenerates to the far identity
    assert corner_product(sigma0, "ac") == "id_c"
    assert corner_product(sigma0, "ad") == "id_d"
    assert corner_product(cyl.inclusion, "cd") == "id_d"


def test_nt_class_checks(p0):
    cyl = identity_cylinder(p0.cat)
    assert nt_is_cofibration(cyl.inclusion, p0, p0).ok
    assert nt_is_anodyne(cyl.leg, p0, p0).ok


def test_identity_cylinder_verifies_everywhere(premodel_corpus):
    for p in premodel_corpus:
        cyl = identity_cylinder(p.cat)
        report = verify_quillen_cylinder(cyl, p)
        assert report.ok, (p.name, report.failures)
        assert report.strong
        dual = dualize(p)
        assert verify_quillen_cylinder(identity_cylinder(dual.cat), dual).ok


def test_weak_cylinder_theorem_harness(p0, p1):
    for p in (p0, p1):
        cyl = identity_cylinder(p.cat)
        report = weak_cylinder_theorem_harness(p, cyl)
        assert report.ok
        assert report.weak_model_ok
        assert set(report.witnesses) == {"ac", "ad", "cd", "id_a", "id_c", "id_d"}
        for w in report.witnesses.values():
            assert w.strong


def test_harness_rejects_unverified_input(p0):
    broken = p0.with_classes(anodyne_cofibrations=IDS | {"ab"})
    with pytest.raises(InputError):
        weak_cylinder_theorem_harness(broken, identity_cylinder(p0.cat))


def test_olschok_on_fully_cofibrant_chain():
    triv = fixtures.trivial_premodel(fixtures.chain3())
    structured = structured_from_premodel(triv)
    report = olschok_model(structured, identity_cylinder(triv.cat))
    assert report.lambda_set == frozenset({"id_a", "id_c", "id_d"})
    assert report.lambda_set == report.lambda_without_second
    assert not report.second_corner_matters
    assert report.all_cofibrant
    assert report.quillen_asserted
    assert not report.left_semi_asserted
    assert report.classification.summary == "Quillen model structure"
    assert same_classes(report.saturated, triv)


def test_olschok_regenerates_the_marked_structure(p0):
    structured = structured_from_premodel(p0)
    report = olschok_model(structured, identity_cylinder(p0.cat))
    assert same_classes(report.saturated, p0)
    assert not report.all_cofibrant  # b never becomes cofibrant
    assert not report.quillen_asserted
    assert report.left_semi_asserted
    assert report.classification.summary == "Quillen model structure"


def test_olschok_with_seed_localizes(p0, p1):
    structured = structured_from_premodel(p0)
    report = olschok_model(structured, identity_cylinder(p0.cat), seeds=("ac",))
    assert report.lambda_set == IDS | {"ac"}
    assert same_classes(report.premodel, p1)
    assert same_classes(report.saturated, p1)
    assert report.classification.summary == "two-sided weak model (not Quillen)"
    assert report.left_semi_asserted


def test_olschok_lambda_rejects_non_cofibration_seed(p0):
    structured = structured_from_premodel(p0)
    cyl = identity_cylinder(p0.cat)
    with pytest.raises(VerificationError, match="non-cofibration"):
        olschok_lambda(structured, cyl, seeds=("ab",), generators=())


def test_pre_cylinder_check(p0):
    structured = structured_from_premodel(p0)
    assert check_pre_cylinder(identity_cylinder(p0.cat), structured).ok
