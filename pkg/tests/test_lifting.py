import pytest

from mclab import fixtures
from mclab.errors import InputError
from mclab.lifting import (
    ArrowClass,
    WeakFactorizationSystem,
    cell_closure,
    complement_llp,
    complement_rlp,
    factor,
    generate_wfs,
    has_lift,
    llp,
    retract_closure,
    squares_between,
    verify_wfs,
)


@pytest.fixture(scope="module")
def barton():
    return fixtures.barton()


def test_squares_between(barton):
    squares = list(squares_between(barton, "ab", "cd"))
    assert squares == [("ac", "bd")]
    assert list(squares_between(barton, "cd", "ab")) == []


def test_has_lift_basics(barton):
    # the only square ab -> cd has no diagonal b -> c in the lattice
    assert has_lift(barton, "ab", "cd", "ac", "bd") is None
    assert has_lift(barton, "ab", "bd", "ab", "bd") == "id_b"
    with pytest.raises(InputError):
        has_lift(barton, "ab", "cd", "ac", "id_d")


def test_llp_on_thin_category_is_hom_emptiness(barton):
    # f has llp against g iff the (unique) square, when it exists, lifts
    assert llp(barton, "id_a", "ab")
    assert not llp(barton, "ab", "ab")  # would force ab to be invertible
    assert not llp(barton, "ab", "cd")
    assert llp(barton, "ac", "ab")  # no square at all between them


def test_complements_are_galois(barton):
    s = frozenset({"ab"})
    right = complement_rlp(barton, s)
    left = complement_llp(barton, right)
    assert s <= left
    assert complement_rlp(barton, left) == right
    # frozen values, checked by hand against the lattice
    assert barton.sort_morphisms(right) == [
        "id_a", "id_b", "id_c", "id_d", "ac", "bd",
    ]
    assert barton.sort_morphisms(left) == ["id_a", "id_b", "id_c", "id_d", "ab", "cd"]


def test_retract_closure_frozen(barton):
    # in a poset every morphism parallel to a retract diagram is the arrow
    # itself, so closure only ever adds isomorphism-conjugates: nothing here
    base = frozenset({"ab", "cd"})
    assert retract_closure(barton, base) == base
    ids = frozenset(barton.identities.values())
    assert retract_closure(barton, frozenset()) == frozenset()
    assert retract_closure(barton, ids) == ids


def test_cell_closure_frozen(barton):
    got = cell_closure(barton, frozenset({"ab"}))
    # the only cobase change of ab that lands anywhere new is along ac,
    # which yields cd; no composite of {ab, cd} creates more
    assert barton.sort_morphisms(got) == [
        "id_a", "id_b", "id_c", "id_d", "ab", "cd",
    ]
    assert cell_closure(barton, frozenset()) == frozenset(
        barton.identities.values()
    )


def test_factor_deterministic(barton):
    left = frozenset(barton.morphisms)
    right = frozenset(barton.morphisms)
    assert factor(barton, left, right, "ad") == ("id_a", "ad")
    assert factor(barton, frozenset({"id_a"}), frozenset({"ad"}), "ad") == ("id_a", "ad")
    assert factor(barton, frozenset({"ab"}), frozenset({"cd"}), "ad") is None


def test_verify_wfs_accepts_trivial_system(barton):
    everything = frozenset(barton.morphisms)
    ids = frozenset(barton.identities.values())
    report = verify_wfs(WeakFactorizationSystem(barton, everything, ids))
    assert report.ok, report.failures
    report = verify_wfs(WeakFactorizationSystem(barton, ids, everything))
    assert report.ok, report.failures


def test_verify_wfs_reports_each_failure_kind(barton):
    ids = frozenset(barton.identities.values())
    # left class too small: factorization of ab fails, complements disagree
    report = verify_wfs(WeakFactorizationSystem(barton, ids, ids))
    assert not report.ok
    assert not report.factorization_ok
    assert not report.right_is_complement
    assert report.failures
    # lifting itself can fail: ab against cd has an unliftable square
    bad = WeakFactorizationSystem(
        barton, frozenset({"ab"}) | ids, frozenset({"cd"}) | ids
    )
    report = verify_wfs(bad)
    assert not report.lifting_ok


def test_generate_wfs_round_trips(barton):
    wfs = generate_wfs(barton, frozenset({"ab"}))
    assert verify_wfs(wfs).ok
    assert "ab" in wfs.left
    assert wfs.right == complement_rlp(barton, wfs.left)
    # generating from the generated left class is idempotent
    again = generate_wfs(barton, wfs.left)
    assert again == wfs


def test_arrow_class_helpers(barton):
    cls = ArrowClass(barton, frozenset({"ab", "bd"}))
    assert "ab" in cls
    assert not cls.contains_identities()
    assert not cls.closed_under_composition()  # bd ∘ ab = ad missing
    full = ArrowClass(barton, frozenset(barton.morphisms))
    assert full.contains_identities()
    assert full.closed_under_composition()
    assert full.closed_under_retracts()
    with pytest.raises(InputError):
        ArrowClass(barton, frozenset({"nope"}))
