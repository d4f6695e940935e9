"""Finite categories presented by explicit composition tables.

A category here is a finite list of objects, a finite list of morphisms with
source/target maps, a chosen identity per object, and a composition table
that is total on composable pairs.  Everything downstream — lifting problems,
factorization systems, cylinders — runs by exhaustive search over these
tables, so determinism comes for free from the enumeration order: whenever a
construction has to pick a representative (a colimit apex, a diagonal, a
factorization) it picks the first candidate in enumeration order.

Conventions
-----------
* Objects and morphisms are referred to by their string ids everywhere.
* ``compose(g, f)`` is "g after f" and requires target(f) == source(g).
* ``opposite`` keeps every id and reverses source/target; applying it twice
  gives back identical tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ConstructionError, InputError


@dataclass(frozen=True)
class Verdict:
    """Outcome of a structural check: ok, or a list of violations."""

    ok: bool
    violations: tuple[str, ...] = ()

    @staticmethod
    def from_violations(violations):
        violations = tuple(violations)
        return Verdict(not violations, violations)


class FiniteCategory:
    """A finite category given by explicit tables.

    Parameters
    ----------
    name:       label used in reports.
    objects:    iterable of object ids, in enumeration order.
    morphisms:  iterable of ``(id, source, target)`` triples, in order.
    identities: mapping object id -> morphism id of its identity.
    compose:    mapping ``(g, f) -> g∘f`` for every composable pair.

    The constructor tolerates malformed data (``validate_category`` is the
    judge of well-formedness); operations assume a validated category.
    """

    def __init__(self, name, objects, morphisms, identities, compose):
        self.name = name
        self.objects = list(objects)
        self.morphisms = [m for m, _, _ in morphisms]
        self.source = {m: s for m, s, _ in morphisms}
        self.target = {m: t for m, _, t in morphisms}
        self.identities = dict(identities)
        self.compose_table = dict(compose)

        self._object_index = {x: i for i, x in enumerate(self.objects)}
        self._morphism_index = {m: i for i, m in enumerate(self.morphisms)}
        self._identity_ids = set(self.identities.values())
        self._hom = {}
        for m in self.morphisms:
            self._hom.setdefault((self.source[m], self.target[m]), []).append(m)

    # -- basic queries ----------------------------------------------------

    def hom(self, x, y):
        """Morphisms x -> y, in enumeration order."""
        return self._hom.get((x, y), [])

    def compose(self, g, f):
        if self.target[f] != self.source[g]:
            raise InputError(
                "cannot compose %s after %s: target/source mismatch" % (g, f)
            )
        return self.compose_table[(g, f)]

    def identity(self, x):
        return self.identities[x]

    def is_identity(self, m):
        return m in self._identity_ids

    def has_object(self, x):
        return x in self._object_index

    def has_morphism(self, m):
        return m in self._morphism_index

    def morphism_index(self, m):
        return self._morphism_index[m]

    def arrows_from(self, x):
        return [m for m in self.morphisms if self.source[m] == x]

    def arrows_to(self, y):
        return [m for m in self.morphisms if self.target[m] == y]

    def parallel_pairs(self):
        """All ordered pairs (f, g) with the same source and target."""
        for f in self.morphisms:
            for g in self.morphisms:
                if self.source[f] == self.source[g] and self.target[f] == self.target[g]:
                    yield f, g

    def sort_morphisms(self, ms):
        return sorted(ms, key=self._morphism_index.__getitem__)

    def sort_objects(self, xs):
        return sorted(xs, key=self._object_index.__getitem__)

    def __eq__(self, other):
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return (
            self.name == other.name
            and self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.source == other.source
            and self.target == other.target
            and self.identities == other.identities
            and self.compose_table == other.compose_table
        )

    def __repr__(self):
        return "FiniteCategory(%r, %d objects, %d morphisms)" % (
            self.name,
            len(self.objects),
            len(self.morphisms),
        )


def same_presentation(a, b):
    """Equality of categories up to enumeration order (names ignored)."""
    return (
        sorted(a.objects) == sorted(b.objects)
        and sorted(a.morphisms) == sorted(b.morphisms)
        and a.source == b.source
        and a.target == b.target
        and a.identities == b.identities
        and a.compose_table == b.compose_table
    )


def validate_category(cat):
    """Check the category axioms on the raw tables.

    Returns a Verdict; every violation is reported, none raises.
    """
    v = []
    seen = set()
    for x in cat.objects:
        if x in seen:
            v.append("duplicate object id %r" % x)
        seen.add(x)
    seen = set()
    for m in cat.morphisms:
        if m in seen:
            v.append("duplicate morphism id %r" % m)
        seen.add(m)

    for m in cat.morphisms:
        if cat.source.get(m) not in cat._object_index:
            v.append("morphism %r has unknown source %r" % (m, cat.source.get(m)))
        if cat.target.get(m) not in cat._object_index:
            v.append("morphism %r has unknown target %r" % (m, cat.target.get(m)))

    for x in cat.objects:
        i = cat.identities.get(x)
        if i is None:
            v.append("object %r has no identity" % x)
        elif i not in cat._morphism_index:
            v.append("identity %r of %r is not a morphism" % (i, x))
        elif not (cat.source[i] == x and cat.target[i] == x):
            v.append("identity %r of %r is not an endomorphism of %r" % (i, x, x))
    for x in cat.identities:
        if x not in cat._object_index:
            v.append("identity table mentions unknown object %r" % x)

    if v:
        # With dangling references the composition checks below would only
        # pile up noise; report the structural problems first.
        return Verdict.from_violations(v)

    composable = set()
    for f in cat.morphisms:
        for g in cat.morphisms:
            if cat.target[f] == cat.source[g]:
                composable.add((g, f))
    for pair in composable:
        if pair not in cat.compose_table:
            v.append("missing composite %s ∘ %s" % pair)
    for pair, h in cat.compose_table.items():
        g, f = pair
        if pair not in composable:
            v.append("composition table has non-composable entry %s ∘ %s" % (g, f))
            continue
        if h not in cat._morphism_index:
            v.append("composite %s ∘ %s is unknown morphism %r" % (g, f, h))
        elif cat.source[h] != cat.source[f] or cat.target[h] != cat.target[g]:
            v.append("composite %s ∘ %s = %s has wrong endpoints" % (g, f, h))
    if v:
        return Verdict.from_violations(v)

    for f in cat.morphisms:
        if cat.compose_table[(cat.identity(cat.target[f]), f)] != f:
            v.append("left identity law fails at %s" % f)
        if cat.compose_table[(f, cat.identity(cat.source[f]))] != f:
            v.append("right identity law fails at %s" % f)

    for f in cat.morphisms:
        for g in cat.morphisms:
            if cat.target[f] != cat.source[g]:
                continue
            gf = cat.compose_table[(g, f)]
            for h in cat.morphisms:
                if cat.target[g] != cat.source[h]:
                    continue
                left = cat.compose_table[(cat.compose_table[(h, g)], f)]
                right = cat.compose_table[(h, gf)]
                if left != right:
                    v.append(
                        "associativity fails: (%s∘%s)∘%s = %s but %s∘(%s∘%s) = %s"
                        % (h, g, f, left, h, g, f, right)
                    )
    return Verdict.from_violations(v)


def opposite(cat):
    """Reverse every morphism.  Involutive on the nose."""
    morphisms = [(m, cat.target[m], cat.source[m]) for m in cat.morphisms]
    compose = {(f, g): h for (g, f), h in cat.compose_table.items()}
    return FiniteCategory(cat.name, cat.objects, morphisms, cat.identities, compose)


def reverse_enumeration(cat):
    """Same category, object and morphism lists reversed.

    Used to check that nothing downstream depends on enumeration order.
    """
    morphisms = [(m, cat.source[m], cat.target[m]) for m in reversed(cat.morphisms)]
    return FiniteCategory(
        cat.name, list(reversed(cat.objects)), morphisms, cat.identities, cat.compose_table
    )


def isomorphisms(cat):
    """All isos: m with a two-sided inverse."""
    out = set()
    for m in cat.morphisms:
        x, y = cat.source[m], cat.target[m]
        for n in cat.hom(y, x):
            if (
                cat.compose_table[(n, m)] == cat.identity(x)
                and cat.compose_table[(m, n)] == cat.identity(y)
            ):
                out.add(m)
                break
    return frozenset(out)


# -- diagram shapes and (co)limits ----------------------------------------

SHAPE_KINDS = ("span", "cospan", "pair", "empty")


@dataclass(frozen=True)
class DiagramShape:
    """A tiny diagram named by its morphisms.

    kind ∈ {span, cospan, pair, empty}.  ``pair`` is the discrete two-object
    diagram; its legs must be the identities of the two objects.
    """

    kind: str
    legs: tuple[str, ...] = ()


@dataclass(frozen=True)
class Cone:
    """Apex plus structure morphisms, one per foot of the diagram.

    For a colimit the legs run foot -> apex, for a limit apex -> foot.
    """

    apex: str
    legs: tuple[str, ...] = ()


def _check_shape(cat, shape, allowed):
    if shape.kind not in SHAPE_KINDS:
        raise InputError("unknown shape kind %r" % shape.kind)
    if shape.kind not in allowed:
        raise InputError("shape kind %r not supported here" % shape.kind)
    for leg in shape.legs:
        if not cat.has_morphism(leg):
            raise InputError("shape leg %r is not a morphism of %s" % (leg, cat.name))
    if shape.kind == "empty":
        if shape.legs:
            raise InputError("empty shape takes no legs")
    elif len(shape.legs) != 2:
        raise InputError("%s shape needs exactly two legs" % shape.kind)
    if shape.kind == "span":
        f, g = shape.legs
        if cat.source[f] != cat.source[g]:
            raise InputError("span legs %s, %s must share their source" % (f, g))
    elif shape.kind == "cospan":
        f, g = shape.legs
        if cat.target[f] != cat.target[g]:
            raise InputError("cospan legs %s, %s must share their target" % (f, g))
    elif shape.kind == "pair":
        for leg in shape.legs:
            if not cat.is_identity(leg):
                raise InputError(
                    "pair shape designates objects by identity legs; %r is not an identity" % leg
                )


def _colimit_feet(cat, shape):
    """Feet (where cocone legs attach) and cocone equations."""
    if shape.kind == "empty":
        return (), ()
    if shape.kind == "span":
        f, g = shape.legs
        return (cat.target[f], cat.target[g]), ((0, f, 1, g),)
    if shape.kind == "pair":
        f, g = shape.legs
        return (cat.source[f], cat.source[g]), ()
    raise InputError("no colimits for shape kind %r" % shape.kind)


def _is_cocone(cat, legs, equations):
    for i, f, j, g in equations:
        if cat.compose_table[(legs[i], f)] != cat.compose_table[(legs[j], g)]:
            return False
    return True


def _cocones(cat, feet, equations, apex):
    for legs in itertools.product(*[cat.hom(foot, apex) for foot in feet]):
        if _is_cocone(cat, legs, equations):
            yield legs


def colimit(cat, shape):
    """First universal cocone in enumeration order, or None if absent.

    Universality is checked literally: against *every* competing cocone
    there must be exactly one mediating morphism.
    """
    _check_shape(cat, shape, ("span", "pair", "empty"))
    feet, equations = _colimit_feet(cat, shape)
    for apex in cat.objects:
        for legs in _cocones(cat, feet, equations, apex):
            if _is_colimit(cat, feet, equations, apex, legs):
                return Cone(apex, tuple(legs))
    return None


def _is_colimit(cat, feet, equations, apex, legs):
    for other_apex in cat.objects:
        for other in _cocones(cat, feet, equations, other_apex):
            n = 0
            for m in cat.hom(apex, other_apex):
                if all(
                    cat.compose_table[(m, legs[i])] == other[i] for i in range(len(feet))
                ):
                    n += 1
            if n != 1:
                return False
    return True


def limit(cat, shape):
    """Dual search, run as a colimit in the opposite category."""
    _check_shape(cat, shape, ("cospan", "pair", "empty"))
    dual_kind = {"cospan": "span", "pair": "pair", "empty": "empty"}[shape.kind]
    return colimit(opposite(cat), DiagramShape(dual_kind, shape.legs))


def mediating_out(cat, cone, target_legs):
    """The unique morphism out of a colimit apex hitting the given cocone.

    Raises ConstructionError when no morphism matches (the target legs do not
    form a cocone) and VerificationError-grade RuntimeError on ambiguity,
    which a genuine colimit rules out.
    """
    if not target_legs:
        raise InputError("mediating_out needs at least one target leg")
    tgt = cat.target[target_legs[0]]
    hits = [
        m
        for m in cat.hom(cone.apex, tgt)
        if all(
            cat.compose_table[(m, cone.legs[i])] == target_legs[i]
            for i in range(len(cone.legs))
        )
    ]
    if not hits:
        raise ConstructionError(
            "no mediating morphism %s -> %s" % (cone.apex, tgt), witness=cone.apex
        )
    if len(hits) > 1:
        raise RuntimeError("mediating morphism not unique; cone is not a colimit")
    return hits[0]


def pushout(cat, f, g):
    """Pushout cone of the span f, g (shared source); None if absent."""
    return colimit(cat, DiagramShape("span", (f, g)))


def pullback(cat, f, g):
    return limit(cat, DiagramShape("cospan", (f, g)))


def coproduct(cat, x, y):
    return colimit(cat, DiagramShape("pair", (cat.identity(x), cat.identity(y))))


def product(cat, x, y):
    return limit(cat, DiagramShape("pair", (cat.identity(x), cat.identity(y))))


def initial_object(cat):
    cone = colimit(cat, DiagramShape("empty"))
    return None if cone is None else cone.apex


def terminal_object(cat):
    cone = limit(cat, DiagramShape("empty"))
    return None if cone is None else cone.apex


# -- functors and adjunctions ----------------------------------------------


@dataclass
class FunctorData:
    name: str
    source: FiniteCategory
    target: FiniteCategory
    object_map: dict
    morphism_map: dict

    def on_object(self, x):
        return self.object_map[x]

    def on_morphism(self, m):
        return self.morphism_map[m]


def identity_functor(cat):
    return FunctorData(
        "id_%s" % cat.name,
        cat,
        cat,
        {x: x for x in cat.objects},
        {m: m for m in cat.morphisms},
    )


def constant_functor(cat, target, obj):
    if not target.has_object(obj):
        raise InputError("unknown object %r in %s" % (obj, target.name))
    return FunctorData(
        "const_%s" % obj,
        cat,
        target,
        {x: obj for x in cat.objects},
        {m: target.identity(obj) for m in cat.morphisms},
    )


def check_functor(fun):
    """Totality plus preservation of endpoints, identities and composition."""
    v = []
    src, tgt = fun.source, fun.target
    for x in src.objects:
        if x not in fun.object_map:
            v.append("object %r not mapped" % x)
        elif not tgt.has_object(fun.object_map[x]):
            v.append("object %r mapped to unknown %r" % (x, fun.object_map[x]))
    for m in src.morphisms:
        if m not in fun.morphism_map:
            v.append("morphism %r not mapped" % m)
        elif not tgt.has_morphism(fun.morphism_map[m]):
            v.append("morphism %r mapped to unknown %r" % (m, fun.morphism_map[m]))
    if v:
        return Verdict.from_violations(v)

    for m in src.morphisms:
        fm = fun.morphism_map[m]
        if tgt.source[fm] != fun.object_map[src.source[m]]:
            v.append("F(%s) has wrong source" % m)
        if tgt.target[fm] != fun.object_map[src.target[m]]:
            v.append("F(%s) has wrong target" % m)
    if v:
        # composition below would index the target table with mismatched
        # endpoints, so stop at the shape errors
        return Verdict.from_violations(v)
    for x in src.objects:
        if fun.morphism_map[src.identity(x)] != tgt.identity(fun.object_map[x]):
            v.append("identity of %r not preserved" % x)
    for f in src.morphisms:
        for g in src.morphisms:
            if src.target[f] != src.source[g]:
                continue
            lhs = fun.morphism_map[src.compose_table[(g, f)]]
            rhs = tgt.compose_table[(fun.morphism_map[g], fun.morphism_map[f])]
            if lhs != rhs:
                v.append("composition not preserved at %s ∘ %s" % (g, f))
    return Verdict.from_violations(v)


@dataclass
class AdjunctionData:
    """Left adjoint, right adjoint, and unit/counit components by object."""

    name: str
    left: FunctorData
    right: FunctorData
    unit: dict
    counit: dict


def identity_adjunction(cat):
    ident = identity_functor(cat)
    return AdjunctionData(
        "id_adj_%s" % cat.name,
        ident,
        ident,
        {x: cat.identity(x) for x in cat.objects},
        {x: cat.identity(x) for x in cat.objects},
    )


def check_adjunction(adj):
    """Functor checks, unit/counit naturality, both triangle identities."""
    v = []
    L, R = adj.left, adj.right
    fl = check_functor(L)
    fr = check_functor(R)
    v.extend("left adjoint: %s" % x for x in fl.violations)
    v.extend("right adjoint: %s" % x for x in fr.violations)
    if L.source is not R.target and L.source != R.target:
        v.append("left adjoint source differs from right adjoint target")
    if L.target is not R.source and L.target != R.source:
        v.append("left adjoint target differs from right adjoint source")
    if v:
        return Verdict.from_violations(v)

    C, D = L.source, L.target
    for x in C.objects:
        eta = adj.unit.get(x)
        if eta is None or not C.has_morphism(eta):
            v.append("unit component at %r missing or unknown" % x)
            continue
        if C.source[eta] != x or C.target[eta] != R.on_object(L.on_object(x)):
            v.append("unit component at %r is not %r -> R(L(%r))" % (x, x, x))
    for y in D.objects:
        eps = adj.counit.get(y)
        if eps is None or not D.has_morphism(eps):
            v.append("counit component at %r missing or unknown" % y)
            continue
        if D.source[eps] != L.on_object(R.on_object(y)) or D.target[eps] != y:
            v.append("counit component at %r is not L(R(%r)) -> %r" % (y, y, y))
    if v:
        return Verdict.from_violations(v)

    for f in C.morphisms:
        x, y = C.source[f], C.target[f]
        lhs = C.compose_table[(R.on_morphism(L.on_morphism(f)), adj.unit[x])]
        rhs = C.compose_table[(adj.unit[y], f)]
        if lhs != rhs:
            v.append("unit not natural at %s" % f)
    for f in D.morphisms:
        x, y = D.source[f], D.target[f]
        lhs = D.compose_table[(adj.counit[y], L.on_morphism(R.on_morphism(f)))]
        rhs = D.compose_table[(f, adj.counit[x])]
        if lhs != rhs:
            v.append("counit not natural at %s" % f)
    for x in C.objects:
        lx = L.on_object(x)
        if D.compose_table[(adj.counit[lx], L.on_morphism(adj.unit[x]))] != D.identity(lx):
            v.append("triangle identity fails at L(%r)" % x)
    for y in D.objects:
        ry = R.on_object(y)
        if C.compose_table[(R.on_morphism(adj.counit[y]), adj.unit[ry])] != C.identity(ry):
            v.append("triangle identity fails at R(%r)" % y)
    return Verdict.from_violations(v)


# -- thin categories from posets -------------------------------------------


def poset_category(name, objects, le):
    """The thin category of a finite poset.

    ``le`` is an iterable of pairs (x, y) meaning x ≤ y; the reflexive
    transitive closure is taken.  Arrows run downward: there is exactly one
    morphism X -> Y when Y ≤ X, named by concatenating the object ids, so the
    minimum (when it exists) is the terminal object and the maximum the
    initial one.  Identities are named ``id_<object>``.
    """
    objects = list(objects)
    index = {x: i for i, x in enumerate(objects)}
    for x, y in le:
        for z in (x, y):
            if z not in index:
                raise InputError("poset %s: unknown element %r" % (name, z))
    below = {x: {x} for x in objects}  # below[x] = all y with y <= x
    for x, y in le:
        below[y].add(x)
    changed = True
    while changed:
        changed = False
        for x in objects:
            extra = set()
            for y in below[x]:
                extra |= below[y]
            if not extra <= below[x]:
                below[x] |= extra
                changed = True
    for x in objects:
        for y in below[x]:
            if x != y and x in below[y]:
                raise InputError("poset %s: cycle through %r and %r" % (name, x, y))

    morphisms = []
    identities = {}
    for x in objects:
        ident = "id_%s" % x
        identities[x] = ident
        morphisms.append((ident, x, x))
    for x in objects:
        for y in objects:
            if y != x and y in below[x]:
                arrow = "%s%s" % (x, y)
                if any(arrow == m for m, _, _ in morphisms):
                    raise InputError(
                        "poset %s: generated arrow name %r collides" % (name, arrow)
                    )
                morphisms.append((arrow, x, y))

    src = {m: s for m, s, _ in morphisms}
    tgt = {m: t for m, _, t in morphisms}
    by_ends = {(src[m], tgt[m]): m for m, _, _ in morphisms}
    compose = {}
    for f, fs, ft in morphisms:
        for g, gs, gt in morphisms:
            if ft == gs:
                compose[(g, f)] = by_ends[(fs, gt)]
    return FiniteCategory(name, objects, morphisms, identities, compose)
