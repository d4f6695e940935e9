import pytest

from mclab import fixtures
from mclab.errors import InputError
from mclab.fincat import validate_category
from mclab.homotopy import (
    check_cylinder_witness,
    check_path_witness,
    equivalences,
    find_cylinder,
    find_path,
    fold_cone,
    homotopic,
    homotopy_category,
    is_equivalence,
    iter_cylinder_witnesses,
    verify_weak_model,
    weak_to_strong,
)
from mclab.premodel import dualize


@pytest.fixture(scope="module")
def p0():
    return fixtures.barton_p0()


@pytest.fixture(scope="module")
def p1():
    return fixtures.barton_p1()


def test_fold_cone(p1):
    cone, codiag = fold_cone(p1, "ac")
    assert cone.apex == "c"
    assert cone.legs == ("id_c", "id_c")
    assert codiag == "id_c"
    with pytest.raises(InputError):
        fold_cone(p1, "ab")  # not a cofibration there


def test_find_cylinder_on_identity_like_data(p1):
    w = find_cylinder(p1, "ac")
    assert w is not None
    assert w.strong
    assert (w.fold_apex, w.codiagonal, w.cylinder_obj) == ("c", "id_c", "c")
    assert check_cylinder_witness(p1, w).ok
    # every enumerated witness must itself check out
    for w in iter_cylinder_witnesses(p1, "ac"):
        assert check_cylinder_witness(p1, w).ok


def test_witness_check_rejects_tampering(p1):
    w = find_cylinder(p1, "cd")
    assert w is not None
    bad = type(w)(**{**w.__dict__, "anodyne_leg": "cd"})
    assert not check_cylinder_witness(p1, bad).ok


def test_weak_to_strong(p0, p1):
    for p in (p0, p1):
        for i in p.cat.sort_morphisms(p.cofibrations):
            w = find_cylinder(p, i)
            if w is None:
                continue
            s = weak_to_strong(p, w)
            assert s.strong
            assert check_cylinder_witness(p, s).ok


def test_path_witnesses_mirror_cylinders(p1):
    g = "cd"
    w = find_path(p1, g)
    assert w is not None
    assert check_path_witness(p1, w).ok
    # the same data read in the opposite category is a cylinder witness
    dual = dualize(p1)
    assert find_cylinder(dual, g) is not None


def test_verify_weak_model_corpus(premodel_corpus):
    for p in premodel_corpus:
        report = verify_weak_model(p)
        assert report.ok, (p.name, report)
        assert report.cylinder_axiom and report.path_axiom
        assert report.alt_criterion and report.dual_alt_criterion


def test_homotopic_is_reflexive_on_cf_arrows(p1):
    assert homotopic(p1, "ac", "ac")
    assert homotopic(p1, "cd", "cd")
    with pytest.raises(InputError):
        homotopic(p1, "ac", "cd")  # not parallel


def test_homotopy_category_p0(p0):
    ho = homotopy_category(p0)
    assert validate_category(ho.category).ok
    assert ho.category.objects == ["a", "c", "d"]
    assert set(ho.category.morphisms) == {"id_a", "id_c", "id_d", "ac", "ad", "cd"}
    assert ho.category.compose("cd", "ac") == "ad"
    # b is not cofibrant, so it simply does not appear
    assert not ho.category.has_object("b")


def test_homotopy_category_p1(p1):
    ho = homotopy_category(p1)
    assert validate_category(ho.category).ok
    assert ho.category.objects == ["c", "d"]
    assert set(ho.category.morphisms) == {"id_c", "id_d", "cd"}
    assert ho.classes["cd"] == ("cd",)


def test_is_equivalence_frozen(p0, p1):
    assert is_equivalence(p0, "ab")
    assert not is_equivalence(p0, "ac")
    assert not is_equivalence(p0, "ad")
    assert is_equivalence(p1, "ac")
    assert not is_equivalence(p1, "ad")
    assert not is_equivalence(p1, "cd")


def test_is_equivalence_domain(p1):
    # b is neither cofibrant nor fibrant in the localized structure, so
    # arrows touching it fall outside the decidable domain
    for m in ("ab", "id_b", "bd"):
        with pytest.raises(InputError):
            is_equivalence(p1, m)


def test_equivalences_frozen(p0, p1):
    assert sorted(equivalences(p0)) == ["ab", "id_a", "id_b", "id_c", "id_d"]
    assert sorted(equivalences(p1)) == ["ac", "id_a", "id_c", "id_d"]


def test_equivalences_satisfy_two_out_of_three_where_applicable(premodel_corpus):
    for p in premodel_corpus:
        w = equivalences(p)
        cat = p.cat
        for f in w:
            for g in w:
                if cat.target[f] == cat.source[g]:
                    h = cat.compose_table[(g, f)]
                    if h in equivalences(p):
                        continue
                    # composites of equivalences stay equivalences whenever
                    # the composite is itself in the testable domain
                    pytest.fail("%s ∘ %s fails closure in %s" % (g, f, p.name))


def test_anodyne_classes_are_equivalences(premodel_corpus):
    for p in premodel_corpus:
        w = equivalences(p)
        domain_objects = {
            x
            for x in p.cat.objects
            if any(m in w for m in (p.cat.identity(x),))
        }
        for m in p.anodyne_cofibrations | p.anodyne_fibrations:
            src, tgt = p.cat.source[m], p.cat.target[m]
            if src in domain_objects and tgt in domain_objects:
                assert m in w, (p.name, m)
