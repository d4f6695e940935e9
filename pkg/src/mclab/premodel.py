"""Premodel structures: two interleaved weak factorization systems.

A premodel structure marks four classes on one finite category —
cofibrations C, anodyne fibrations AF, anodyne cofibrations AC, fibrations F
— such that (C, AF) and (AC, F) are weak factorization systems and
AC ⊆ C (equivalently AF ⊆ F).  The category must have an initial and a
terminal object so that cofibrant/fibrant make sense.

Naming: "anodyne" marks the classes coming from the *other* system's side —
anodyne cofibrations lift against all fibrations, anodyne fibrations against
all cofibrations.  "Acyclic" is reserved for the derived classes computed
against the bifibrant core, see ``acyclic_cofibrations``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import ConstructionError, InputError
from .fincat import (
    FiniteCategory,
    Verdict,
    initial_object,
    opposite,
    terminal_object,
)
from .lifting import (
    WeakFactorizationSystem,
    complement_llp,
    complement_rlp,
    factor,
    llp,
    verify_wfs,
)


@dataclass(eq=False)
class PremodelStructure:
    cat: FiniteCategory
    cofibrations: frozenset
    anodyne_fibrations: frozenset
    anodyne_cofibrations: frozenset
    fibrations: frozenset
    name: str = ""

    def __post_init__(self):
        self.cofibrations = frozenset(self.cofibrations)
        self.anodyne_fibrations = frozenset(self.anodyne_fibrations)
        self.anodyne_cofibrations = frozenset(self.anodyne_cofibrations)
        self.fibrations = frozenset(self.fibrations)

    @property
    def cof_system(self):
        return WeakFactorizationSystem(self.cat, self.cofibrations, self.anodyne_fibrations)

    @property
    def fib_system(self):
        return WeakFactorizationSystem(self.cat, self.anodyne_cofibrations, self.fibrations)

    def classes(self):
        return {
            "cofibrations": self.cofibrations,
            "anodyne_fibrations": self.anodyne_fibrations,
            "anodyne_cofibrations": self.anodyne_cofibrations,
            "fibrations": self.fibrations,
        }

    def with_classes(self, **kw):
        return replace(self, **kw)


def same_classes(p, q):
    """Equality of the four marked classes (categories assumed shared)."""
    return p.classes() == q.classes()


def initial_of(p):
    x = initial_object(p.cat)
    if x is None:
        raise ConstructionError("category %s has no initial object" % p.cat.name)
    return x


def terminal_of(p):
    x = terminal_object(p.cat)
    if x is None:
        raise ConstructionError("category %s has no terminal object" % p.cat.name)
    return x


def arrow_from_initial(p, x):
    """The unique morphism from the initial object to x."""
    if not p.cat.has_object(x):
        raise InputError("unknown object %r in %s" % (x, p.cat.name))
    hom = p.cat.hom(initial_of(p), x)
    if len(hom) != 1:
        raise ConstructionError("initial object is not strict enough at %r" % x)
    return hom[0]


def arrow_to_terminal(p, x):
    if not p.cat.has_object(x):
        raise InputError("unknown object %r in %s" % (x, p.cat.name))
    hom = p.cat.hom(x, terminal_of(p))
    if len(hom) != 1:
        raise ConstructionError("terminal object is not strict enough at %r" % x)
    return hom[0]


def is_cofibrant(p, x):
    return arrow_from_initial(p, x) in p.cofibrations


def is_fibrant(p, x):
    return arrow_to_terminal(p, x) in p.fibrations


@dataclass(frozen=True)
class ObjectStatus:
    obj: str
    cofibrant: bool
    fibrant: bool


def object_status(p, x):
    if not p.cat.has_object(x):
        raise InputError("unknown object %r in %s" % (x, p.cat.name))
    return ObjectStatus(x, is_cofibrant(p, x), is_fibrant(p, x))


def cofibrant_objects(p):
    return tuple(x for x in p.cat.objects if is_cofibrant(p, x))


def fibrant_objects(p):
    return tuple(x for x in p.cat.objects if is_fibrant(p, x))


def core_cofibrations(p):
    """Cofibrations whose source is cofibrant (their target then is too)."""
    return frozenset(
        f for f in p.cofibrations if is_cofibrant(p, p.cat.source[f])
    )


def core_fibrations(p):
    """Fibrations whose target is fibrant."""
    return frozenset(f for f in p.fibrations if is_fibrant(p, p.cat.target[f]))


def _fibrations_with_fibrant_ends(p, strict):
    """Fibrations between fibrant objects.

    The default reads "between" as both endpoints; ``strict=True`` only asks
    for a fibrant target.  On a verified premodel the two coincide because
    fibrations compose, and the suite checks that coincidence on fixtures.
    """
    out = []
    for g in p.fibrations:
        if not is_fibrant(p, p.cat.target[g]):
            continue
        if not strict and not is_fibrant(p, p.cat.source[g]):
            continue
        out.append(g)
    return out


def acyclic_cofibrations(p, strict=False):
    """Cofibrations lifting against every fibration between fibrant objects.

    This class contains the anodyne cofibrations and is the left-hand
    yardstick of acyclicity for everything downstream.
    """
    key = ("_acyclic_cof", strict)
    cached = p.__dict__.get(key)
    if cached is None:
        gates = _fibrations_with_fibrant_ends(p, strict)
        cached = frozenset(
            f for f in p.cofibrations if all(llp(p.cat, f, g) for g in gates)
        )
        p.__dict__[key] = cached
    return cached


def acyclic_fibrations(p, strict=False):
    """Fibrations lifting against every cofibration between cofibrant objects.

    ``strict=True`` only asks the gate cofibrations for a cofibrant source;
    in a verified premodel that already forces a cofibrant target, so the two
    readings agree there (checked on fixtures, like the dual flag above).
    """
    key = ("_acyclic_fib", strict)
    cached = p.__dict__.get(key)
    if cached is None:
        gates = []
        for f in p.cofibrations:
            if not is_cofibrant(p, p.cat.source[f]):
                continue
            if not strict and not is_cofibrant(p, p.cat.target[f]):
                continue
            gates.append(f)
        cached = frozenset(
            g for g in p.fibrations if all(llp(p.cat, f, g) for f in gates)
        )
        p.__dict__[key] = cached
    return cached


def core_acyclic_cofibrations(p):
    return frozenset(
        f for f in acyclic_cofibrations(p) if is_cofibrant(p, p.cat.source[f])
    )


def core_acyclic_fibrations(p):
    return frozenset(
        g for g in acyclic_fibrations(p) if is_fibrant(p, p.cat.target[g])
    )


@dataclass(frozen=True)
class SaturationFlags:
    left_saturated: bool
    core_left_saturated: bool
    right_saturated: bool
    core_right_saturated: bool

    @property
    def bi_saturated(self):
        return self.left_saturated and self.right_saturated

    def as_dict(self):
        return {
            "left_saturated": self.left_saturated,
            "core_left_saturated": self.core_left_saturated,
            "right_saturated": self.right_saturated,
            "core_right_saturated": self.core_right_saturated,
            "bi_saturated": self.bi_saturated,
        }


def saturation_flags(p):
    """Whether the anodyne classes already swallow their acyclic classes.

    Left-saturated:       AC = acyclic cofibrations.
    Core-left-saturated:  AC ⊇ acyclic cofibrations with cofibrant source.
    (and the duals on the right).  AC ⊆ acyclic always holds in a verified
    premodel, so equality and containment agree on the left flags; the core
    flags are genuine containments.
    """
    ac = acyclic_cofibrations(p)
    af = acyclic_fibrations(p)
    return SaturationFlags(
        left_saturated=p.anodyne_cofibrations == ac,
        core_left_saturated=core_acyclic_cofibrations(p) <= p.anodyne_cofibrations,
        right_saturated=p.anodyne_fibrations == af,
        core_right_saturated=core_acyclic_fibrations(p) <= p.anodyne_fibrations,
    )


@dataclass(frozen=True)
class PremodelReport:
    ok: bool
    category_ok: bool
    cof_system_ok: bool
    fib_system_ok: bool
    nesting_ok: bool
    endpoints_ok: bool
    failures: tuple[str, ...]


def verify_premodel(p):
    """Both systems verified, AC ⊆ C and AF ⊆ F, initial and terminal exist."""
    from .fincat import validate_category

    failures = []
    cat_verdict = validate_category(p.cat)
    if not cat_verdict.ok:
        failures.extend("category: %s" % x for x in cat_verdict.violations)

    cof_report = verify_wfs(p.cof_system)
    fib_report = verify_wfs(p.fib_system)
    failures.extend("(C, AF): %s" % x for x in cof_report.failures)
    failures.extend("(AC, F): %s" % x for x in fib_report.failures)

    nesting_ok = True
    bad_ac = p.cat.sort_morphisms(p.anodyne_cofibrations - p.cofibrations)
    if bad_ac:
        nesting_ok = False
        failures.append("anodyne cofibrations outside cofibrations: %s" % ", ".join(bad_ac))
    bad_af = p.cat.sort_morphisms(p.anodyne_fibrations - p.fibrations)
    if bad_af:
        nesting_ok = False
        failures.append("anodyne fibrations outside fibrations: %s" % ", ".join(bad_af))

    endpoints_ok = True
    if initial_object(p.cat) is None:
        endpoints_ok = False
        failures.append("no initial object")
    if terminal_object(p.cat) is None:
        endpoints_ok = False
        failures.append("no terminal object")

    ok = cat_verdict.ok and cof_report.ok and fib_report.ok and nesting_ok and endpoints_ok
    return PremodelReport(
        ok, cat_verdict.ok, cof_report.ok, fib_report.ok, nesting_ok, endpoints_ok, tuple(failures)
    )


def dualize(p):
    """The opposite premodel: swap the two systems across the opposite category.

    Cofibrations become fibrations and vice versa; involutive on the nose.
    """
    return PremodelStructure(
        cat=opposite(p.cat),
        cofibrations=p.fibrations,
        anodyne_fibrations=p.anodyne_cofibrations,
        anodyne_cofibrations=p.anodyne_fibrations,
        fibrations=p.cofibrations,
        name=p.name,
    )


def factor_cof_afib(p, h):
    """h = (anodyne fibration) ∘ (cofibration); first choice in order."""
    hit = factor(p.cat, p.cofibrations, p.anodyne_fibrations, h)
    if hit is None:
        raise ConstructionError("no (cofibration, anodyne fibration) factorization of %s" % h, witness=h)
    return hit


def factor_acof_fib(p, h):
    """h = (fibration) ∘ (anodyne cofibration); first choice in order."""
    hit = factor(p.cat, p.anodyne_cofibrations, p.fibrations, h)
    if hit is None:
        raise ConstructionError("no (anodyne cofibration, fibration) factorization of %s" % h, witness=h)
    return hit


def cofibrant_replacement(p, x):
    """(x', r) with x' cofibrant and r: x' -> x an anodyne fibration.

    When x is already cofibrant this is the identity; otherwise factor the
    arrow from the initial object.
    """
    if is_cofibrant(p, x):
        return x, p.cat.identity(x)
    l, r = factor_cof_afib(p, arrow_from_initial(p, x))
    return p.cat.target[l], r


def fibrant_replacement(p, x):
    """(x', j) with x' fibrant and j: x -> x' an anodyne cofibration."""
    if is_fibrant(p, x):
        return x, p.cat.identity(x)
    l, r = factor_acof_fib(p, arrow_to_terminal(p, x))
    return p.cat.target[l], l


@dataclass(frozen=True)
class QuillenAdjunctionReport:
    ok: bool
    left_preserves_cofibrations: bool
    right_preserves_fibrations: bool
    # informational only; both follow from ok for verified premodels,
    # and the suite checks that they do.
    left_preserves_anodyne_cofibrations: bool
    left_preserves_acyclic_cofibrations: bool
    failures: tuple[str, ...]


def check_quillen_adjunction(adj, p_src, p_tgt):
    """Is adj.left ⊣ adj.right a Quillen adjunction p_src -> p_tgt?

    adj.left must run p_src.cat -> p_tgt.cat.  Decision: left preserves
    cofibrations and right preserves fibrations.
    """
    from .fincat import check_adjunction

    base = check_adjunction(adj)
    failures = list(base.violations)
    if adj.left.source != p_src.cat or adj.left.target != p_tgt.cat:
        failures.append("left adjoint does not run between the given premodel categories")
    if failures:
        return QuillenAdjunctionReport(False, False, False, False, False, tuple(failures))

    left_cof = True
    for f in p_src.cat.sort_morphisms(p_src.cofibrations):
        if adj.left.on_morphism(f) not in p_tgt.cofibrations:
            left_cof = False
            failures.append("left adjoint sends cofibration %s outside cofibrations" % f)
    right_fib = True
    for g in p_tgt.cat.sort_morphisms(p_tgt.fibrations):
        if adj.right.on_morphism(g) not in p_src.fibrations:
            right_fib = False
            failures.append("right adjoint sends fibration %s outside fibrations" % g)

    left_anodyne = all(
        adj.left.on_morphism(f) in p_tgt.anodyne_cofibrations
        for f in p_src.anodyne_cofibrations
    )
    left_acyclic = all(
        adj.left.on_morphism(f) in acyclic_cofibrations(p_tgt)
        for f in acyclic_cofibrations(p_src)
    )
    ok = left_cof and right_fib
    return QuillenAdjunctionReport(
        ok, left_cof, right_fib, left_anodyne, left_acyclic, tuple(failures)
    )
