import pytest

from mclab import fixtures
from mclab.errors import InputError
from mclab.premodel import (
    cofibrant_objects,
    core_acyclic_cofibrations,
    core_acyclic_fibrations,
    fibrant_objects,
    same_classes,
    saturation_flags,
    verify_premodel,
)
from mclab.saturate import MODES, bi_saturate, saturate


def test_mode_validation():
    p = fixtures.barton_p0()
    with pytest.raises(InputError):
        saturate(p, "both")


@pytest.mark.parametrize("mode", MODES)
def test_saturate_contracts(premodel_corpus, mode):
    for p in premodel_corpus:
        q = saturate(p, mode)
        assert verify_premodel(q).ok, (p.name, mode)
        # the bifibrant core is untouched
        assert cofibrant_objects(q) == cofibrant_objects(p)
        assert fibrant_objects(q) == fibrant_objects(p)
        assert core_acyclic_cofibrations(q) == core_acyclic_cofibrations(p)
        assert core_acyclic_fibrations(q) == core_acyclic_fibrations(p)
        # target flag holds and a second pass changes nothing
        flags = saturation_flags(q).as_dict()
        key = {
            "L": "left_saturated",
            "Lc": "core_left_saturated",
            "R": "right_saturated",
            "Rc": "core_right_saturated",
        }[mode]
        assert flags[key], (p.name, mode)
        assert same_classes(saturate(q, mode), q), (p.name, mode)


def test_saturate_fixes_already_saturated(premodel_corpus):
    # the shipped fixtures are all bi-saturated, so every mode is a no-op
    for p in premodel_corpus:
        for mode in MODES:
            assert same_classes(saturate(p, mode), p), (p.name, mode)


def test_bi_saturate_reports_both_orders(premodel_corpus):
    for p in premodel_corpus:
        report = bi_saturate(p)
        assert verify_premodel(report.structure).ok
        assert verify_premodel(report.reversed_structure).ok
        assert saturation_flags(report.structure).bi_saturated
        assert report.orders_agree == same_classes(
            report.structure, report.reversed_structure
        )
        # on these fixtures the two orders do in fact agree
        assert report.orders_agree, p.name


def test_saturate_moves_an_unsaturated_structure():
    # only d stays fibrant here, so every cofibration lifts against the
    # remaining core fibrations and Lc must sweep them all in
    bart = fixtures.barton()
    ids = frozenset(bart.identities.values())
    p = fixtures.trivial_premodel(bart).with_classes(
        anodyne_cofibrations=ids | {"ad", "bd", "cd"},
        fibrations=ids | {"ab", "ac"},
    )
    assert verify_premodel(p).ok
    assert not saturation_flags(p).core_left_saturated
    q = saturate(p, "Lc")
    assert q.anodyne_cofibrations == frozenset(bart.morphisms)
    assert q.fibrations == ids
    assert verify_premodel(q).ok
    assert saturation_flags(q).core_left_saturated
