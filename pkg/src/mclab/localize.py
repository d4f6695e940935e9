"""Bousfield-style localizations of weak model structures.

Left localization at a set of arrows S: replace each s by a cofibration
between well-behaved objects, close the replacements under the cylinder
inclusion operator ∇, enlarge the anodyne cofibrations by the closure, and
saturate.  Cofibrations never move; fibrant objects shrink to the local
ones.  Right localization is the mirror image, driven by a right Quillen
functor into another verified structure instead of a set of arrows.

The operator ∇ sends a cofibration i to the cylinder inclusion
B ⊔_A B -> Z of its first weak cylinder witness; iterating it is what makes
the localized lifting problems solvable, so the closure is computed as an
honest fixpoint with cycle tracking available for inspection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionError, InputError, VerificationError
from .homotopy import find_cylinder, is_equivalence, iter_cylinder_witnesses, verify_weak_model
from .lifting import complement_llp, complement_rlp, factor, llp
from .saturate import saturate
from .premodel import (
    PremodelStructure,
    acyclic_fibrations,
    check_quillen_adjunction,
    cofibrant_replacement,
    core_fibrations,
    factor_cof_afib,
    fibrant_replacement,
    is_cofibrant,
    is_fibrant,
    saturation_flags,
    verify_premodel,
)


@dataclass(frozen=True)
class NablaChain:
    """Iterates of ∇ starting from a cofibration.

    ``steps[k]`` is the k-th iterate; ``cycle_start`` is the index the last
    computed entry loops back to, or None; ``stopped`` carries the reason
    when an iterate has no weak cylinder witness.
    """

    steps: tuple[str, ...]
    cycle_start: int | None
    stopped: str | None


def nabla(p, i):
    """Cylinder inclusion of the first weak witness of i."""
    w = find_cylinder(p, i, "weak")
    if w is None:
        raise ConstructionError("no weak cylinder witness for %s" % i, witness=i)
    return w.cylinder_cof


def nabla_chain(p, i, k):
    """Iterate ∇ up to k times, stopping early on a revisit or a dead end."""
    if k < 0:
        raise InputError("chain length must be non-negative")
    steps = [i]
    seen = {i: 0}
    stopped = None
    cycle_start = None
    for _ in range(k):
        try:
            nxt = nabla(p, steps[-1])
        except ConstructionError as exc:
            stopped = str(exc)
            break
        if nxt in seen:
            steps.append(nxt)
            cycle_start = seen[nxt]
            break
        seen[nxt] = len(steps)
        steps.append(nxt)
    return NablaChain(tuple(steps), cycle_start, stopped)


def _nabla_closure(p, seeds):
    members = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = nabla(p, frontier.pop())
        if nxt not in members:
            members.add(nxt)
            frontier.append(nxt)
    return frozenset(members)


def core_cofibration_representative(p, s):
    """A cofibration between a cofibrant source and a sturdy target standing
    in for an arbitrary arrow s.

    Cofibrant-replace the source, fibrant-replace the target, factor the
    composite as cofibration ∘ anodyne fibration... backwards: the composite
    factors as (cofibration, anodyne fibration) and the left part is the
    representative.
    """
    cat = p.cat
    if not cat.has_morphism(s):
        raise InputError("unknown morphism %r" % s)
    _, r = cofibrant_replacement(p, cat.source[s])
    _, j = fibrant_replacement(p, cat.target[s])
    composite = cat.compose_table[(j, cat.compose_table[(s, r)])]
    l, _ = factor_cof_afib(p, composite)
    return l


def _require_weak_model(p, what):
    if not verify_weak_model(p).ok:
        raise InputError("%s requires a verified weak model structure" % what)


def _check_factorizations(cat, left, right, context):
    for h in cat.morphisms:
        if factor(cat, left, right, h) is None:
            raise ConstructionError("%s loses factorization of %s" % (context, h), witness=h)


def _assert_premodel(q, context):
    report = verify_premodel(q)
    if not report.ok:
        raise VerificationError("%s is not a premodel: %s" % (context, "; ".join(report.failures)))


@dataclass(frozen=True)
class LeftLocalization:
    structure: PremodelStructure
    representatives: dict          # s -> core cofibration standing in for it
    nabla_closure: frozenset       # the ∇-closure J of the representatives
    intermediate: PremodelStructure  # before saturation


def left_bousfield(p, arrows, mode="Lc"):
    """Left localization at ``arrows``; keeps (C, AF), rebuilds (AC, F).

    Asserted afterwards: cofibrations unchanged, fibrations between locally
    fibrant objects unchanged, every representative anodyne and an
    equivalence of the localized structure, and the localized structure
    verifies the weak model axioms again.
    """
    if mode not in ("L", "Lc"):
        raise InputError("left localization mode must be 'L' or 'Lc', got %r" % mode)
    _require_weak_model(p, "left localization")
    cat = p.cat

    reps = {s: core_cofibration_representative(p, s) for s in arrows}
    closure = _nabla_closure(p, reps.values())

    new_fib = complement_rlp(cat, p.anodyne_cofibrations | closure)
    new_ac = complement_llp(cat, new_fib)
    _check_factorizations(cat, new_ac, new_fib, "left localization")
    intermediate = p.with_classes(anodyne_cofibrations=new_ac, fibrations=new_fib)
    intermediate.name = "%s_loc" % (p.name or cat.name)
    _assert_premodel(intermediate, "left localization intermediate")

    result = saturate(intermediate, mode)

    if result.cofibrations != p.cofibrations:
        raise VerificationError("left localization moved the cofibrations")
    local_fibrant = {x for x in cat.objects if is_fibrant(result, x)}
    before = {
        g
        for g in p.fibrations
        if cat.source[g] in local_fibrant and cat.target[g] in local_fibrant
    }
    after = {
        g
        for g in result.fibrations
        if cat.source[g] in local_fibrant and cat.target[g] in local_fibrant
    }
    if before != after:
        raise VerificationError(
            "left localization changed fibrations between locally fibrant objects"
        )
    for s, rep in reps.items():
        if rep not in result.anodyne_cofibrations:
            raise VerificationError("representative %s of %s is not locally anodyne" % (rep, s))
    if not verify_weak_model(result).ok:
        raise VerificationError("left localization does not verify the weak model axioms")
    for s, rep in reps.items():
        if not is_equivalence(result, rep):
            raise VerificationError("representative %s of %s is not a local equivalence" % (rep, s))
    return LeftLocalization(result, reps, closure, intermediate)


@dataclass(frozen=True)
class RightLocalization:
    structure: PremodelStructure
    localizer: frozenset           # the core fibrations made anodyne-worthy
    intermediate: PremodelStructure


def right_bousfield(p, adj, target, mode="Rc"):
    """Right localization along a right Quillen functor into ``target``.

    ``adj.right`` must run p.cat -> target.cat and be right Quillen (its left
    adjoint preserves cofibrations, itself preserves fibrations).  The new
    cofibrations are those lifting against every core fibration that the
    right adjoint sends to an acyclic fibration of the target.
    """
    if mode not in ("R", "Rc"):
        raise InputError("right localization mode must be 'R' or 'Rc', got %r" % mode)
    _require_weak_model(p, "right localization")
    _require_weak_model(target, "right localization target")
    quillen = check_quillen_adjunction(adj, target, p)
    if not quillen.ok:
        raise InputError(
            "right localization needs a right Quillen functor: %s" % "; ".join(quillen.failures)
        )

    cat = p.cat
    target_acyclic = acyclic_fibrations(target)
    localizer = frozenset(
        q for q in core_fibrations(p) if adj.right.on_morphism(q) in target_acyclic
    )
    new_cof = frozenset(
        f for f in p.cofibrations if all(llp(cat, f, q) for q in localizer)
    )
    new_af = complement_rlp(cat, new_cof)
    _check_factorizations(cat, new_cof, new_af, "right localization")
    intermediate = p.with_classes(cofibrations=new_cof, anodyne_fibrations=new_af)
    intermediate.name = "%s_rloc" % (p.name or cat.name)
    _assert_premodel(intermediate, "right localization intermediate")

    result = saturate(intermediate, mode)

    if result.fibrations != p.fibrations:
        raise VerificationError("right localization moved the fibrations")
    local_cofibrant = {x for x in cat.objects if is_cofibrant(result, x)}
    before = {
        f
        for f in p.cofibrations
        if cat.source[f] in local_cofibrant and cat.target[f] in local_cofibrant
    }
    after = {
        f
        for f in result.cofibrations
        if cat.source[f] in local_cofibrant and cat.target[f] in local_cofibrant
    }
    if before != after:
        raise VerificationError(
            "right localization changed cofibrations between locally cofibrant objects"
        )
    if not verify_weak_model(result).ok:
        raise VerificationError("right localization does not verify the weak model axioms")
    return RightLocalization(result, localizer, intermediate)


@dataclass(frozen=True)
class PreRightLocalization:
    structure: PremodelStructure
    generators: frozenset
    witnesses: dict                # generator -> accepted cylinder witness


def pre_right_localization(p, arrows):
    """Enlarge the cofibrations by a generating set, keeping (AC, F).

    New cofibrations G = llp(rlp(I ∪ AC)); admissible only when every
    generator has a weak cylinder witness whose cylinder inclusion lies in
    G (otherwise ConstructionError).  The result is verified as a weak model
    and must come out right-saturated.
    """
    arrows = list(arrows)
    _require_weak_model(p, "pre-right localization")
    cat = p.cat
    for i in arrows:
        if i not in p.cofibrations:
            raise InputError("generator %s is not a cofibration" % i)

    new_af = complement_rlp(cat, frozenset(arrows) | p.anodyne_cofibrations)
    new_cof = complement_llp(cat, new_af)

    witnesses = {}
    for i in arrows:
        found = None
        for w in iter_cylinder_witnesses(p, i, "weak"):
            if w.cylinder_cof in new_cof:
                found = w
                break
        if found is None:
            raise ConstructionError(
                "no weak cylinder witness for %s lands in the enlarged cofibrations" % i,
                witness=i,
            )
        witnesses[i] = found

    _check_factorizations(cat, new_cof, new_af, "pre-right localization")
    structure = p.with_classes(cofibrations=new_cof, anodyne_fibrations=new_af)
    structure.name = "%s_pre_rloc" % (p.name or cat.name)
    _assert_premodel(structure, "pre-right localization")
    if not verify_weak_model(structure).ok:
        raise VerificationError("pre-right localization does not verify the weak model axioms")
    if not saturation_flags(structure).right_saturated:
        raise VerificationError("pre-right localization is not right saturated")
    return PreRightLocalization(structure, frozenset(arrows), witnesses)
