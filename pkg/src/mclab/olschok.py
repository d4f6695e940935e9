"""Cylinder functors, corner products, and generated model structures.

The corner (pushout-product) of a natural transformation λ: F -> G with a
morphism v: X -> Y is the mediating map

    F(Y) ⊔_{F(X)} G(X)  ->  G(Y)

out of the pushout of F(v) against λ_X.  A transformation is a *cofibration*
when all its corners with cofibrations are cofibrations and all its corners
with anodyne cofibrations are anodyne; it is *anodyne* when all its corners
with cofibrations are anodyne.

A weak Quillen cylinder is a functorial factorization of the fold map:
Id ⊔ Id --i--> I --e--> D <--j-- Id with e∘i = j∘fold, i a cofibration
transformation, j and i∘inl anodyne ones.  Strong means D = Id and j the
identity.  Such a cylinder forces relative weak cylinders on every core
cofibration — the harness below materializes them and checks each one — and
a whole model structure can be generated from a localizer through the Λ
construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionError, InputError, VerificationError
from .classify import classify_full
from .fincat import (
    FiniteCategory,
    FunctorData,
    Verdict,
    check_functor,
    coproduct,
    identity_functor,
    mediating_out,
    pushout,
)
from .homotopy import CylinderWitness, check_cylinder_witness, fold_cone, verify_weak_model
from .lifting import complement_llp, complement_rlp, factor, verify_wfs, WeakFactorizationSystem
from .premodel import PremodelStructure, cofibrant_objects, is_cofibrant, verify_premodel
from .saturate import saturate


@dataclass
class NatTrans:
    name: str
    source: FunctorData
    target: FunctorData
    components: dict   # object -> morphism of the target category

    def at(self, x):
        return self.components[x]


def check_nat_trans(nt):
    v = []
    F, G = nt.source, nt.target
    if F.source != G.source or F.target != G.target:
        v.append("source and target functors are not parallel")
        return Verdict.from_violations(v)
    cat, dst = F.source, F.target
    for x in cat.objects:
        comp = nt.components.get(x)
        if comp is None or not dst.has_morphism(comp):
            v.append("component at %r missing or unknown" % x)
            continue
        if dst.source[comp] != F.on_object(x) or dst.target[comp] != G.on_object(x):
            v.append("component at %r is not F(%r) -> G(%r)" % (x, x, x))
    if v:
        return Verdict.from_violations(v)
    for f in cat.morphisms:
        x, y = cat.source[f], cat.target[f]
        lhs = dst.compose_table[(G.on_morphism(f), nt.components[x])]
        rhs = dst.compose_table[(nt.components[y], F.on_morphism(f))]
        if lhs != rhs:
            v.append("naturality fails at %s" % f)
    return Verdict.from_violations(v)


def compose_nt(outer, inner):
    """Vertical composition (outer after inner)."""
    dst = inner.source.target
    return NatTrans(
        "%s∘%s" % (outer.name, inner.name),
        inner.source,
        outer.target,
        {
            x: dst.compose_table[(outer.components[x], inner.components[x])]
            for x in inner.source.source.objects
        },
    )


def identity_nt(fun):
    return NatTrans(
        "id_%s" % fun.name,
        fun,
        fun,
        {x: fun.target.identity(fun.on_object(x)) for x in fun.source.objects},
    )


def pair_functor(cat):
    """X ↦ X ⊔ X with its two inclusions and the fold transformation.

    Raises ConstructionError when some binary coproduct is absent.
    """
    cones = {}
    for x in cat.objects:
        cone = coproduct(cat, x, x)
        if cone is None:
            raise ConstructionError("coproduct of %r with itself is absent" % x, witness=x)
        cones[x] = cone
    object_map = {x: cones[x].apex for x in cat.objects}
    morphism_map = {}
    for v in cat.morphisms:
        x, y = cat.source[v], cat.target[v]
        q0y, q1y = cones[y].legs
        morphism_map[v] = mediating_out(
            cat, cones[x], (cat.compose_table[(q0y, v)], cat.compose_table[(q1y, v)])
        )
    fun = FunctorData("pair_%s" % cat.name, cat, cat, object_map, morphism_map)
    ident = identity_functor(cat)
    inl = NatTrans("inl", ident, fun, {x: cones[x].legs[0] for x in cat.objects})
    inr = NatTrans("inr", ident, fun, {x: cones[x].legs[1] for x in cat.objects})
    fold = NatTrans(
        "fold",
        fun,
        ident,
        {x: mediating_out(cat, cones[x], (cat.identity(x), cat.identity(x))) for x in cat.objects},
    )
    return fun, inl, inr, fold


def corner_product(lam, v):
    """The corner of a transformation with a morphism of its source category."""
    F, G = lam.source, lam.target
    cat = F.source
    dst = F.target
    if not cat.has_morphism(v):
        raise InputError("unknown morphism %r in %s" % (v, cat.name))
    x, y = cat.source[v], cat.target[v]
    cone = pushout(dst, F.on_morphism(v), lam.components[x])
    if cone is None:
        raise ConstructionError(
            "corner pushout of %s with %s is absent" % (lam.name, v), witness=v
        )
    return mediating_out(dst, cone, (lam.components[y], G.on_morphism(v)))


def nt_is_cofibration(lam, p_src, p_tgt):
    """Corners with cofibrations are cofibrations, with anodyne anodyne."""
    failures = []
    for i in p_src.cat.sort_morphisms(p_src.cofibrations):
        if corner_product(lam, i) not in p_tgt.cofibrations:
            failures.append("corner with cofibration %s is not a cofibration" % i)
    for j in p_src.cat.sort_morphisms(p_src.anodyne_cofibrations):
        if corner_product(lam, j) not in p_tgt.anodyne_cofibrations:
            failures.append("corner with anodyne %s is not anodyne" % j)
    return Verdict.from_violations(failures)


def nt_is_anodyne(lam, p_src, p_tgt):
    """Corners with all cofibrations are anodyne cofibrations."""
    failures = []
    for i in p_src.cat.sort_morphisms(p_src.cofibrations):
        if corner_product(lam, i) not in p_tgt.anodyne_cofibrations:
            failures.append("corner with cofibration %s is not anodyne" % i)
    return Verdict.from_violations(failures)


@dataclass
class QuillenCylinderData:
    name: str
    pair: FunctorData
    inl: NatTrans
    inr: NatTrans
    fold: NatTrans
    cylinder: FunctorData       # I
    weak_target: FunctorData    # D
    inclusion: NatTrans         # i: pair -> I
    leg: NatTrans               # j: Id -> D
    comparison: NatTrans        # e: I -> D


def identity_cylinder(cat):
    """I = D = Id: the inclusion is the fold itself, leg and comparison are
    identities.  On thin categories every corner collapses to an identity,
    so this is a strong Quillen cylinder for any marked structure there.
    """
    fun, inl, inr, fold = pair_functor(cat)
    ident = identity_functor(cat)
    return QuillenCylinderData(
        name="identity",
        pair=fun,
        inl=inl,
        inr=inr,
        fold=fold,
        cylinder=ident,
        weak_target=ident,
        inclusion=NatTrans("i", fun, ident, dict(fold.components)),
        leg=identity_nt(ident),
        comparison=identity_nt(ident),
    )


@dataclass(frozen=True)
class CylinderReport:
    ok: bool
    strong: bool
    failures: tuple[str, ...]


def _structural_cylinder_check(cyl, cat):
    v = []
    for fun in (cyl.pair, cyl.cylinder, cyl.weak_target):
        verdict = check_functor(fun)
        v.extend("functor %s: %s" % (fun.name, x) for x in verdict.violations)
    for nt in (cyl.inl, cyl.inr, cyl.fold, cyl.inclusion, cyl.leg, cyl.comparison):
        verdict = check_nat_trans(nt)
        v.extend("transformation %s: %s" % (nt.name, x) for x in verdict.violations)
    if v:
        return v
    for x in cat.objects:
        lhs = cat.compose_table[(cyl.comparison.at(x), cyl.inclusion.at(x))]
        rhs = cat.compose_table[(cyl.leg.at(x), cyl.fold.at(x))]
        if lhs != rhs:
            v.append("factorization square fails at %r" % x)
    return v


def _cylinder_is_strong(cyl, cat):
    ident = identity_functor(cat)
    return (
        cyl.weak_target.object_map == ident.object_map
        and cyl.weak_target.morphism_map == ident.morphism_map
        and all(cat.is_identity(cyl.leg.at(x)) for x in cat.objects)
    )


def verify_quillen_cylinder(cyl, p):
    """Full check against a premodel: structure, classes, and the square."""
    cat = p.cat
    failures = _structural_cylinder_check(cyl, cat)
    if not failures:
        failures.extend(
            "inclusion: %s" % x for x in nt_is_cofibration(cyl.inclusion, p, p).violations
        )
        failures.extend("leg: %s" % x for x in nt_is_anodyne(cyl.leg, p, p).violations)
        first = compose_nt(cyl.inclusion, cyl.inl)
        failures.extend(
            "first inclusion: %s" % x for x in nt_is_anodyne(first, p, p).violations
        )
    ok = not failures
    return CylinderReport(ok, ok and _cylinder_is_strong(cyl, cat), tuple(failures))


@dataclass(frozen=True)
class HarnessReport:
    ok: bool
    witnesses: dict           # core cofibration -> CylinderWitness
    weak_model_ok: bool
    failures: tuple[str, ...]


def weak_cylinder_theorem_harness(p, cyl):
    """Materialize a relative weak cylinder for every core cofibration.

    For f: A -> B the cylinder object is the pushout I(B) ⊔_{I(A)} D(A); the
    inclusion from B ⊔_A B and the comparison to D(B) are mediating maps.
    Each witness is rechecked from scratch, and the premodel must then pass
    the weak model axioms — a failure of either raises, since this is the
    package's executable form of the cylinder-to-weak-model implication.
    """
    if not verify_premodel(p).ok:
        raise InputError("harness needs a verified premodel")
    cyl_report = verify_quillen_cylinder(cyl, p)
    if not cyl_report.ok:
        raise InputError(
            "harness needs a verified Quillen cylinder: %s" % "; ".join(cyl_report.failures)
        )
    cat = p.cat
    ident_of = cat.identity
    witnesses = {}
    failures = []
    for f in cat.sort_morphisms(p.cofibrations):
        a, b = cat.source[f], cat.target[f]
        if not is_cofibrant(p, a):
            continue
        cone, codiag = fold_cone(p, f)
        i_f = cyl.cylinder.on_morphism(f)
        e_a = cyl.comparison.at(a)
        side = pushout(cat, i_f, e_a)
        if side is None:
            raise ConstructionError(
                "cylinder pushout for %s is absent" % f, witness=f
            )
        z_ib, z_da = side.legs
        through_ib = cat.compose_table[(z_ib, cyl.inclusion.at(b))]
        c0 = cat.compose_table[(through_ib, cyl.inl.at(b))]
        c1 = cat.compose_table[(through_ib, cyl.inr.at(b))]
        m = mediating_out(cat, cone, (c0, c1))
        r = mediating_out(
            cat, side, (cyl.comparison.at(b), cyl.weak_target.on_morphism(f))
        )
        d_b = cyl.weak_target.on_object(b)
        witness = CylinderWitness(
            base=f,
            fold_apex=cone.apex,
            coproj0=cone.legs[0],
            coproj1=cone.legs[1],
            codiagonal=codiag,
            cylinder_obj=side.apex,
            cylinder_cof=m,
            weak_target=d_b,
            anodyne_leg=cyl.leg.at(b),
            comparison=r,
            strong=(d_b == b and cyl.leg.at(b) == ident_of(b)),
        )
        verdict = check_cylinder_witness(p, witness)
        if not verdict.ok:
            failures.append("witness for %s: %s" % (f, "; ".join(verdict.violations)))
        witnesses[f] = witness

    weak_ok = verify_weak_model(p).ok
    ok = not failures and weak_ok
    if not ok:
        raise VerificationError(
            "cylinder-to-weak-model implication failed on %s: %s"
            % (p.name or cat.name, failures or "weak model axioms fail")
        )
    return HarnessReport(ok, witnesses, weak_ok, tuple(failures))


@dataclass
class StructuredCategory:
    """A category with one marked weak factorization system (C, AF)."""

    cat: FiniteCategory
    cofibrations: frozenset
    anodyne_fibrations: frozenset
    name: str = ""

    def system(self):
        return WeakFactorizationSystem(self.cat, self.cofibrations, self.anodyne_fibrations)


def structured_from_premodel(p, name=""):
    return StructuredCategory(
        p.cat, p.cofibrations, p.anodyne_fibrations, name or (p.name or p.cat.name)
    )


def check_pre_cylinder(cyl, structured):
    """The single-system cylinder condition: corners of the inclusion with
    cofibrations are cofibrations (plus all structural checks)."""
    failures = _structural_cylinder_check(cyl, structured.cat)
    if not failures:
        for i in structured.cat.sort_morphisms(structured.cofibrations):
            if corner_product(cyl.inclusion, i) not in structured.cofibrations:
                failures.append("corner of inclusion with %s leaves the cofibrations" % i)
    return Verdict.from_violations(failures)


def olschok_lambda(structured, cyl, seeds, generators, include_second=True):
    """Λ: close the localizer under the cylinder's corner operators.

    Λ contains the seeds and the corners σ0 ⌢ i (optionally also σ1 ⌢ i)
    for every generator i, and is closed under j ↦ σ ⌢ j.  Every member
    must be a cofibration; a stray member raises, because the closure is
    only meaningful below the marked system.
    """
    cat = structured.cat
    sigma = cyl.inclusion
    sigma0 = compose_nt(cyl.inclusion, cyl.inl)
    sigma1 = compose_nt(cyl.inclusion, cyl.inr)

    members = set(seeds)
    for i in generators:
        members.add(corner_product(sigma0, i))
        if include_second:
            members.add(corner_product(sigma1, i))
    frontier = list(members)
    while frontier:
        j = frontier.pop()
        nxt = corner_product(sigma, j)
        if nxt not in members:
            members.add(nxt)
            frontier.append(nxt)
    stray = cat.sort_morphisms(members - structured.cofibrations)
    if stray:
        raise VerificationError("Λ contains non-cofibrations: %s" % ", ".join(stray))
    return frozenset(members)


@dataclass(frozen=True)
class OlschokReport:
    lambda_set: frozenset
    lambda_without_second: frozenset
    second_corner_matters: bool
    premodel: PremodelStructure
    saturated: PremodelStructure
    classification: object
    all_cofibrant: bool
    quillen_asserted: bool
    left_semi_asserted: bool


def olschok_model(structured, cyl, seeds=(), generators=None):
    """Generate a premodel structure from a cylinder and a localizer.

    The anodyne side is generated by Λ: anodyne cofibrations llp(rlp(Λ)),
    fibrations rlp(Λ), on top of the marked (C, AF).  The result is
    saturated (core-left) and classified.  When every object is cofibrant
    the classification must come out Quillen; otherwise, when the cylinder
    still verifies on the saturated structure, the left semi-model verdict
    must hold.  Both implications are enforced, not assumed.
    """
    cat = structured.cat
    system_report = verify_wfs(structured.system())
    if not system_report.ok:
        raise InputError(
            "olschok needs a verified marked system: %s" % "; ".join(system_report.failures)
        )
    pre = check_pre_cylinder(cyl, structured)
    if not pre.ok:
        raise InputError("olschok needs a verified cylinder: %s" % "; ".join(pre.violations))
    if generators is None:
        generators = structured.cofibrations

    lam = olschok_lambda(structured, cyl, seeds, generators, include_second=True)
    lam_first_only = olschok_lambda(structured, cyl, seeds, generators, include_second=False)

    new_fib = complement_rlp(cat, lam)
    new_ac = complement_llp(cat, new_fib)
    for h in cat.morphisms:
        if factor(cat, new_ac, new_fib, h) is None:
            raise ConstructionError("generated system loses factorization of %s" % h, witness=h)
    p = PremodelStructure(
        cat=cat,
        cofibrations=structured.cofibrations,
        anodyne_fibrations=structured.anodyne_fibrations,
        anodyne_cofibrations=new_ac,
        fibrations=new_fib,
        name="%s_olschok" % (structured.name or cat.name),
    )
    premodel_report = verify_premodel(p)
    if not premodel_report.ok:
        raise VerificationError(
            "generated structure is not a premodel: %s" % "; ".join(premodel_report.failures)
        )
    saturated = saturate(p, "Lc")
    classification = classify_full(saturated)
    all_cofibrant = len(cofibrant_objects(saturated)) == len(cat.objects)

    quillen_asserted = False
    left_semi_asserted = False
    if all_cofibrant:
        if classification.quillen is None or not classification.quillen.ok:
            raise VerificationError(
                "all objects cofibrant but the generated structure is not Quillen"
            )
        quillen_asserted = True
    elif verify_quillen_cylinder(cyl, saturated).ok:
        if not classification.left_semi.fresse:
            raise VerificationError(
                "cylinder verifies but the generated structure is not left semi"
            )
        left_semi_asserted = True
    return OlschokReport(
        lambda_set=lam,
        lambda_without_second=lam_first_only,
        second_corner_matters=lam != lam_first_only,
        premodel=p,
        saturated=saturated,
        classification=classification,
        all_cofibrant=all_cofibrant,
        quillen_asserted=quillen_asserted,
        left_semi_asserted=left_semi_asserted,
    )
