"""Cylinders, path objects, the weak model axioms, and equivalences.

The central object is a *relative weak cylinder witness* for a cofibration
i: A -> B.  Write Q for the pushout B ⊔_A B with coprojections q0, q1 and
codiagonal ∇: Q -> B.  A witness consists of

    c: Q -> Z      a cofibration (the cylinder inclusion),
    l: B -> D      an acyclic cofibration (the anodyne leg),
    e: Z -> D      a comparison morphism,

such that e∘c = l∘∇ and the first leg c∘q0: B -> Z is an acyclic
cofibration.  The witness is *strong* when D = B and l is the identity, in
which case e∘c = ∇ on the nose.  Path witnesses are the same thing run in
the opposite structure and translated back.

"Acyclic" always means: lifts against every fibration between fibrant
objects (or dually), computed fresh from the marked classes — see the
premodel module.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ConstructionError, InputError, VerificationError
from .fincat import Cone, FiniteCategory, mediating_out, pushout, validate_category
from .premodel import (
    acyclic_cofibrations,
    arrow_from_initial,
    arrow_to_terminal,
    dualize,
    factor_cof_afib,
    fibrant_replacement,
    cofibrant_replacement,
    is_cofibrant,
    is_fibrant,
    verify_premodel,
)
from .lifting import has_lift


@dataclass(frozen=True)
class CylinderWitness:
    base: str            # the cofibration i: A -> B
    fold_apex: str       # Q = B ⊔_A B
    coproj0: str         # q0: B -> Q
    coproj1: str         # q1: B -> Q
    codiagonal: str      # ∇: Q -> B
    cylinder_obj: str    # Z
    cylinder_cof: str    # c: Q -> Z, a cofibration
    weak_target: str     # D
    anodyne_leg: str     # l: B -> D, an acyclic cofibration
    comparison: str      # e: Z -> D with e∘c = l∘∇
    strong: bool


@dataclass(frozen=True)
class PathWitness:
    """The dual witness for a fibration, in original-category terms."""

    base: str            # the fibration p: X -> Y
    pair_apex: str       # W = X ×_Y X
    proj0: str           # W -> X
    proj1: str           # W -> X
    diagonal: str        # Δ: X -> W
    path_obj: str        # Z
    path_fib: str        # Z -> W, a fibration
    weak_source: str     # D
    anodyne_leg: str     # D -> X, an acyclic fibration
    comparison: str      # D -> Z with path_fib∘comparison = Δ∘anodyne_leg
    strong: bool


def fold_cone(p, i):
    """The pushout B ⊔_A B of a cofibration along itself, plus ∇.

    Returns (Cone, codiagonal).  Raises ConstructionError when the pushout is
    absent — no cylinder can exist then.
    """
    if i not in p.cofibrations:
        raise InputError("%s is not a cofibration of %s" % (i, p.name or p.cat.name))
    cone = pushout(p.cat, i, i)
    if cone is None:
        raise ConstructionError("pushout of %s along itself is absent" % i, witness=i)
    b = p.cat.target[i]
    ident = p.cat.identity(b)
    codiag = mediating_out(p.cat, cone, (ident, ident))
    return cone, codiag


def iter_cylinder_witnesses(p, i, mode="weak"):
    """All witnesses for i, searching candidates in enumeration order."""
    if mode not in ("weak", "strong"):
        raise InputError("cylinder mode must be 'weak' or 'strong', got %r" % mode)
    cat = p.cat
    cone, codiag = fold_cone(p, i)
    q = cone.apex
    q0, q1 = cone.legs
    b = cat.target[i]
    ident_b = cat.identity(b)
    acyclic = acyclic_cofibrations(p)

    for c in cat.morphisms:
        if cat.source[c] != q or c not in p.cofibrations:
            continue
        if cat.compose_table[(c, q0)] not in acyclic:
            continue
        z = cat.target[c]
        if mode == "strong":
            for e in cat.hom(z, b):
                if cat.compose_table[(e, c)] == codiag:
                    yield CylinderWitness(
                        base=i, fold_apex=q, coproj0=q0, coproj1=q1, codiagonal=codiag,
                        cylinder_obj=z, cylinder_cof=c, weak_target=b,
                        anodyne_leg=ident_b, comparison=e, strong=True,
                    )
        else:
            for l in cat.morphisms:
                if cat.source[l] != b or l not in acyclic:
                    continue
                d = cat.target[l]
                rhs = cat.compose_table[(l, codiag)]
                for e in cat.hom(z, d):
                    if cat.compose_table[(e, c)] == rhs:
                        yield CylinderWitness(
                            base=i, fold_apex=q, coproj0=q0, coproj1=q1, codiagonal=codiag,
                            cylinder_obj=z, cylinder_cof=c, weak_target=d,
                            anodyne_leg=l, comparison=e, strong=(l == ident_b),
                        )


def find_cylinder(p, i, mode="weak"):
    """First witness in search order, or None."""
    for w in iter_cylinder_witnesses(p, i, mode):
        return w
    return None


def check_cylinder_witness(p, w):
    """Recheck every defining condition of a witness against the tables.

    The fold data must match the canonical pushout (all witnesses built by
    this package do).
    """
    cat = p.cat
    v = []
    for m in (w.base, w.coproj0, w.coproj1, w.codiagonal, w.cylinder_cof, w.anodyne_leg, w.comparison):
        if not cat.has_morphism(m):
            v.append("unknown morphism %r" % m)
    if v:
        return _verdict(v)

    if w.base not in p.cofibrations:
        v.append("base %s is not a cofibration" % w.base)
        return _verdict(v)
    cone, codiag = fold_cone(p, w.base)
    if (w.fold_apex, w.coproj0, w.coproj1, w.codiagonal) != (cone.apex, cone.legs[0], cone.legs[1], codiag):
        v.append("fold data does not match the canonical pushout")
        return _verdict(v)

    b = cat.target[w.base]
    acyclic = acyclic_cofibrations(p)
    if w.cylinder_cof not in p.cofibrations:
        v.append("cylinder inclusion %s is not a cofibration" % w.cylinder_cof)
    if cat.source.get(w.cylinder_cof) != w.fold_apex or cat.target.get(w.cylinder_cof) != w.cylinder_obj:
        v.append("cylinder inclusion endpoints are wrong")
    first_leg = cat.compose_table.get((w.cylinder_cof, w.coproj0))
    if first_leg not in acyclic:
        v.append("first leg %s is not an acyclic cofibration" % first_leg)
    if w.anodyne_leg not in acyclic:
        v.append("anodyne leg %s is not an acyclic cofibration" % w.anodyne_leg)
    if cat.source.get(w.anodyne_leg) != b or cat.target.get(w.anodyne_leg) != w.weak_target:
        v.append("anodyne leg endpoints are wrong")
    if cat.source.get(w.comparison) != w.cylinder_obj or cat.target.get(w.comparison) != w.weak_target:
        v.append("comparison endpoints are wrong")
    if not v:
        lhs = cat.compose_table[(w.comparison, w.cylinder_cof)]
        rhs = cat.compose_table[(w.anodyne_leg, w.codiagonal)]
        if lhs != rhs:
            v.append("square fails: e∘c = %s but l∘∇ = %s" % (lhs, rhs))
    if w.strong:
        if w.weak_target != b:
            v.append("strong witness must target the base's codomain")
        if w.anodyne_leg != cat.identity(b):
            v.append("strong witness must have an identity anodyne leg")
    return _verdict(v)


def _verdict(violations):
    from .fincat import Verdict

    return Verdict.from_violations(violations)


def weak_to_strong(p, w):
    """Upgrade a weak witness over a fibrant base codomain.

    Lifting the identity through the anodyne leg against B -> 1 yields a
    retraction r of l; composing the comparison with r gives a strong
    witness with the same cylinder object.
    """
    if w.strong:
        return w
    cat = p.cat
    b = cat.target[w.base]
    if not is_fibrant(p, b):
        raise ConstructionError(
            "cannot strengthen: %s is not fibrant" % b, witness=w.base
        )
    r = has_lift(
        cat,
        w.anodyne_leg,
        arrow_to_terminal(p, b),
        cat.identity(b),
        arrow_to_terminal(p, w.weak_target),
    )
    if r is None:
        # The anodyne leg is acyclic and B -> 1 is a fibration between
        # fibrant objects, so this lift is guaranteed; reaching here means
        # the input was not a valid witness.
        raise VerificationError("no retraction of the anodyne leg %s" % w.anodyne_leg)
    upgraded = replace(
        w,
        comparison=cat.compose_table[(r, w.comparison)],
        weak_target=b,
        anodyne_leg=cat.identity(b),
        strong=True,
    )
    verdict = check_cylinder_witness(p, upgraded)
    if not verdict.ok:
        raise VerificationError(
            "strengthened witness fails validation: %s" % "; ".join(verdict.violations)
        )
    return upgraded


def find_path(p, g, mode="weak"):
    """First path witness for a fibration g, via the opposite structure."""
    w = find_cylinder(dualize(p), g, mode)
    return None if w is None else _path_from_cylinder(w)


def iter_path_witnesses(p, g, mode="weak"):
    for w in iter_cylinder_witnesses(dualize(p), g, mode):
        yield _path_from_cylinder(w)


def _path_from_cylinder(w):
    return PathWitness(
        base=w.base,
        pair_apex=w.fold_apex,
        proj0=w.coproj0,
        proj1=w.coproj1,
        diagonal=w.codiagonal,
        path_obj=w.cylinder_obj,
        path_fib=w.cylinder_cof,
        weak_source=w.weak_target,
        anodyne_leg=w.anodyne_leg,
        comparison=w.comparison,
        strong=w.strong,
    )


def _cylinder_from_path(w):
    return CylinderWitness(
        base=w.base,
        fold_apex=w.pair_apex,
        coproj0=w.proj0,
        coproj1=w.proj1,
        codiagonal=w.diagonal,
        cylinder_obj=w.path_obj,
        cylinder_cof=w.path_fib,
        weak_target=w.weak_source,
        anodyne_leg=w.anodyne_leg,
        comparison=w.comparison,
        strong=w.strong,
    )


def check_path_witness(p, w):
    """Validate a path witness by checking its mirror on the opposite."""
    return check_cylinder_witness(dualize(p), _cylinder_from_path(w))


@dataclass(frozen=True)
class WeakModelReport:
    ok: bool
    cylinder_axiom: bool
    path_axiom: bool
    alt_criterion: bool
    dual_alt_criterion: bool
    cylinder_failures: tuple[str, ...]
    path_failures: tuple[str, ...]
    alt_failures: tuple[str, ...]
    dual_alt_failures: tuple[str, ...]


def _cylinder_axiom(p):
    """Strong cylinders for every cofibration from cofibrant to fibrant."""
    failures = []
    for i in p.cat.sort_morphisms(p.cofibrations):
        if not is_cofibrant(p, p.cat.source[i]):
            continue
        if not is_fibrant(p, p.cat.target[i]):
            continue
        if find_cylinder(p, i, "strong") is None:
            failures.append("no strong cylinder for %s" % i)
    return not failures, tuple(failures)


def _alt_criterion(p):
    """Weak cylinders on the core plus right cancellation of acyclicity.

    Core cofibration = cofibration with cofibrant source.  Right
    cancellation: for composable core cofibrations j then i, if j and i∘j
    are acyclic then so is i.
    """
    cat = p.cat
    failures = []
    core = [
        f
        for f in cat.sort_morphisms(p.cofibrations)
        if is_cofibrant(p, cat.source[f])
    ]
    for i in core:
        if find_cylinder(p, i, "weak") is None:
            failures.append("no weak cylinder for %s" % i)
    acyclic = acyclic_cofibrations(p)
    for j in core:
        for i in core:
            if cat.target[j] != cat.source[i]:
                continue
            if j in acyclic and cat.compose_table[(i, j)] in acyclic and i not in acyclic:
                failures.append("right cancellation fails at %s after %s" % (i, j))
    return not failures, tuple(failures)


def verify_weak_model(p):
    """The two axioms, their core-criterion reformulations, and agreement.

    ok = cylinder axiom ∧ path axiom.  On a structure that verifies as a
    premodel the reformulation must agree with the axioms; disagreement
    raises, because that would falsify a theorem this package relies on.
    """
    dual = dualize(p)
    cyl_ok, cyl_failures = _cylinder_axiom(p)
    path_ok, path_failures = _cylinder_axiom(dual)
    alt_ok, alt_failures = _alt_criterion(p)
    dual_alt_ok, dual_alt_failures = _alt_criterion(dual)

    main = cyl_ok and path_ok
    alt = alt_ok and dual_alt_ok
    if main != alt and verify_premodel(p).ok:
        raise VerificationError(
            "axioms (%s) and core criterion (%s) disagree on %s"
            % (main, alt, p.name or p.cat.name)
        )
    return WeakModelReport(
        ok=main,
        cylinder_axiom=cyl_ok,
        path_axiom=path_ok,
        alt_criterion=alt_ok,
        dual_alt_criterion=dual_alt_ok,
        cylinder_failures=cyl_failures,
        path_failures=path_failures,
        alt_failures=alt_failures,
        dual_alt_failures=dual_alt_failures,
    )


def homotopic(p, f, g):
    """Left homotopy through the first weak cylinder on the shared source.

    Defined for parallel morphisms from a cofibrant object to a fibrant one.
    The verdict does not depend on which witness is used (the suite checks
    this by exhausting witnesses).
    """
    cat = p.cat
    for m in (f, g):
        if not cat.has_morphism(m):
            raise InputError("unknown morphism %r" % m)
    x, y = cat.source[f], cat.target[f]
    if (cat.source[g], cat.target[g]) != (x, y):
        raise InputError("%s and %s are not parallel" % (f, g))
    if not is_cofibrant(p, x):
        raise InputError("source %s is not cofibrant" % x)
    if not is_fibrant(p, y):
        raise InputError("target %s is not fibrant" % y)

    w = find_cylinder(p, arrow_from_initial(p, x), "weak")
    if w is None:
        raise ConstructionError("no weak cylinder on %s" % x, witness=x)
    return _homotopic_via(p, w, f, g)


def _homotopic_via(p, w, f, g):
    cat = p.cat
    e0 = cat.compose_table[(w.cylinder_cof, w.coproj0)]
    e1 = cat.compose_table[(w.cylinder_cof, w.coproj1)]
    y = cat.target[f]
    return any(
        cat.compose_table[(h, e0)] == f and cat.compose_table[(h, e1)] == g
        for h in cat.hom(w.cylinder_obj, y)
    )


@dataclass(frozen=True)
class HomotopyCategory:
    category: FiniteCategory
    class_of: dict      # morphism id (bifibrant endpoints) -> representative id
    classes: dict       # representative id -> tuple of members


def homotopy_category(p):
    """Bifibrant objects, hom-sets modulo homotopy, induced composition.

    Every well-definedness obligation is checked explicitly; a failure
    raises (the caller is expected to have verified the weak model axioms).
    """
    cat = p.cat
    objs = [x for x in cat.objects if is_cofibrant(p, x) and is_fibrant(p, x)]
    class_of = {}
    classes = {}
    for x in objs:
        for y in objs:
            arrows = cat.hom(x, y)
            rel = {
                (f, g): homotopic(p, f, g) for f in arrows for g in arrows
            }
            for f in arrows:
                if not rel[(f, f)]:
                    raise VerificationError("homotopy not reflexive at %s" % f)
                for g in arrows:
                    if rel[(f, g)] != rel[(g, f)]:
                        raise VerificationError("homotopy not symmetric at %s, %s" % (f, g))
                    for h in arrows:
                        if rel[(f, g)] and rel[(g, h)] and not rel[(f, h)]:
                            raise VerificationError(
                                "homotopy not transitive at %s, %s, %s" % (f, g, h)
                            )
            for f in arrows:
                rep = next(m for m in arrows if rel[(f, m)])
                class_of[f] = rep
                classes.setdefault(rep, []).append(f)

    reps = [m for m in cat.morphisms if class_of.get(m) == m]
    morphisms = [(m, cat.source[m], cat.target[m]) for m in reps]
    identities = {x: class_of[cat.identity(x)] for x in objs}
    compose = {}
    for f in reps:
        for g in reps:
            if cat.target[f] != cat.source[g]:
                continue
            rep = class_of[cat.compose_table[(g, f)]]
            for f2 in classes[f]:
                for g2 in classes[g]:
                    if class_of[cat.compose_table[(g2, f2)]] != rep:
                        raise VerificationError(
                            "composition not homotopy-invariant at %s ∘ %s" % (g, f)
                        )
            compose[(g, f)] = rep
    quotient = FiniteCategory(
        "Ho(%s)" % (p.name or cat.name), objs, morphisms, identities, compose
    )
    verdict = validate_category(quotient)
    if not verdict.ok:
        raise VerificationError("homotopy category is not a category: %s" % (verdict.violations,))
    return HomotopyCategory(
        quotient, class_of, {r: tuple(ms) for r, ms in classes.items()}
    )


def cf_arrows(p):
    """Arrows whose endpoints are each cofibrant or fibrant."""
    out = []
    for m in p.cat.morphisms:
        ends_ok = True
        for x in (p.cat.source[m], p.cat.target[m]):
            if not (is_cofibrant(p, x) or is_fibrant(p, x)):
                ends_ok = False
        if ends_ok:
            out.append(m)
    return tuple(out)


def is_equivalence(p, f):
    """Replace endpoints only when needed, factor, test the left part.

    f must join objects that are each cofibrant or fibrant.  The verdict is
    independent of the replacement and factorization choices; the oracle in
    the test suite recomputes it over *all* choices.
    """
    cat = p.cat
    if not cat.has_morphism(f):
        raise InputError("unknown morphism %r" % f)
    x, y = cat.source[f], cat.target[f]
    for z in (x, y):
        if not (is_cofibrant(p, z) or is_fibrant(p, z)):
            raise InputError(
                "equivalence undefined: %s is neither cofibrant nor fibrant" % z
            )
    _, r = cofibrant_replacement(p, x)
    _, j = fibrant_replacement(p, y)
    composite = cat.compose_table[(j, cat.compose_table[(f, r)])]
    l, _ = factor_cof_afib(p, composite)
    return l in acyclic_cofibrations(p)


def equivalences(p):
    """All equivalences among the arrows where the notion is defined."""
    return frozenset(f for f in cf_arrows(p) if is_equivalence(p, f))
