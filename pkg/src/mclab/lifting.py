"""Lifting problems, complements and weak factorization systems.

All searches are exhaustive over the composition tables.  Lifting queries are
memoized per category instance (the answer depends only on the tables, never
on any marked classes), which keeps the repeated whole-class complements used
by saturation and localization cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionError, InputError
from .fincat import Verdict


def _require_morphisms(cat, ms):
    for m in ms:
        if not cat.has_morphism(m):
            raise InputError("unknown morphism %r in %s" % (m, cat.name))


def squares_between(cat, f, g):
    """All commuting squares with f on the left and g on the right.

    Yields (u, v) with u: src f -> src g on top, v: tgt f -> tgt g at the
    bottom, such that g∘u = v∘f.
    """
    for u in cat.hom(cat.source[f], cat.source[g]):
        gu = cat.compose_table[(g, u)]
        for v in cat.hom(cat.target[f], cat.target[g]):
            if gu == cat.compose_table[(v, f)]:
                yield u, v


def has_lift(cat, f, g, u, v):
    """Diagonal filler of one commuting square, or None.

    Returns the first diagonal d: tgt f -> src g (in morphism order) with
    d∘f = u and g∘d = v.  Raises InputError when the square does not commute.
    """
    _require_morphisms(cat, (f, g, u, v))
    if cat.compose(g, u) != cat.compose(v, f):
        raise InputError("square (%s, %s, %s, %s) does not commute" % (u, f, g, v))
    for d in cat.hom(cat.target[f], cat.source[g]):
        if cat.compose_table[(d, f)] == u and cat.compose_table[(g, d)] == v:
            return d
    return None


def llp(cat, f, g):
    """True when every commuting square from f to g has a diagonal."""
    cache = cat.__dict__.setdefault("_llp_cache", {})
    key = (f, g)
    hit = cache.get(key)
    if hit is None:
        hit = all(
            any(
                cat.compose_table[(d, f)] == u and cat.compose_table[(g, d)] == v
                for d in cat.hom(cat.target[f], cat.source[g])
            )
            for u, v in squares_between(cat, f, g)
        )
        cache[key] = hit
    return hit


def complement_llp(cat, right):
    """Everything with the left lifting property against all of ``right``."""
    right = list(right)
    _require_morphisms(cat, right)
    return frozenset(f for f in cat.morphisms if all(llp(cat, f, g) for g in right))


def complement_rlp(cat, left):
    """Everything with the right lifting property against all of ``left``."""
    left = list(left)
    _require_morphisms(cat, left)
    return frozenset(g for g in cat.morphisms if all(llp(cat, f, g) for f in left))


def retract_closure(cat, members):
    """Close a class of morphisms under retracts (in the arrow category).

    g: A -> B is a retract of s: C -> D when there are i1: A -> C,
    r1: C -> A, i2: B -> D, r2: D -> B with r1∘i1 = id, r2∘i2 = id,
    i2∘g = s∘i1 and g∘r1 = r2∘s.
    """
    members = set(members)
    _require_morphisms(cat, members)
    out = set(members)
    for g in cat.morphisms:
        if g in out:
            continue
        a, b = cat.source[g], cat.target[g]
        if any(
            _is_retract_of(cat, g, a, b, s)
            for s in members
        ):
            out.add(g)
    return frozenset(out)


def _is_retract_of(cat, g, a, b, s):
    c, d = cat.source[s], cat.target[s]
    for i1 in cat.hom(a, c):
        si1 = cat.compose_table[(s, i1)]
        for r1 in cat.hom(c, a):
            if cat.compose_table[(r1, i1)] != cat.identity(a):
                continue
            gr1 = cat.compose_table[(g, r1)]
            for i2 in cat.hom(b, d):
                if cat.compose_table[(i2, g)] != si1:
                    continue
                for r2 in cat.hom(d, b):
                    if cat.compose_table[(r2, i2)] != cat.identity(b):
                        continue
                    if gr1 == cat.compose_table[(r2, s)]:
                        return True
    return False


def cell_closure(cat, generators):
    """Least class containing the generators and all identities, closed
    under pushout, composition and retract.

    Pushouts that do not exist simply contribute nothing.  Terminates because
    the morphism set is finite and the class only grows.
    """
    from .fincat import pushout  # local import to keep module load order simple

    _require_morphisms(cat, generators)
    members = {cat.identity(x) for x in cat.objects}
    members.update(generators)
    while True:
        before = len(members)
        for f in list(members):
            for g in cat.arrows_from(cat.source[f]):
                cone = pushout(cat, f, g)
                if cone is not None:
                    members.add(cone.legs[1])
        for f in list(members):
            for g in list(members):
                if cat.target[f] == cat.source[g]:
                    members.add(cat.compose_table[(g, f)])
        members = set(retract_closure(cat, members))
        if len(members) == before:
            return frozenset(members)


@dataclass(frozen=True)
class ArrowClass:
    """A marked class of morphisms in a fixed category."""

    cat: object
    members: frozenset

    def __post_init__(self):
        _require_morphisms(self.cat, self.members)

    def __contains__(self, m):
        return m in self.members

    def sorted(self):
        return self.cat.sort_morphisms(self.members)

    def contains_identities(self):
        return all(self.cat.identity(x) in self.members for x in self.cat.objects)

    def closed_under_composition(self):
        for f in self.members:
            for g in self.members:
                if self.cat.target[f] == self.cat.source[g]:
                    if self.cat.compose_table[(g, f)] not in self.members:
                        return False
        return True

    def closed_under_retracts(self):
        return retract_closure(self.cat, self.members) == self.members


@dataclass(frozen=True)
class WeakFactorizationSystem:
    cat: object
    left: frozenset
    right: frozenset


@dataclass(frozen=True)
class WfsReport:
    ok: bool
    lifting_ok: bool
    left_is_complement: bool
    right_is_complement: bool
    factorization_ok: bool
    failures: tuple[str, ...]


def factor(cat, left, right, h):
    """First factorization h = r ∘ l with l ∈ left, r ∈ right, or None.

    The middle object is scanned in object order, then l and r in morphism
    order, so the choice is deterministic.
    """
    for z in cat.objects:
        for l in cat.hom(cat.source[h], z):
            if l not in left:
                continue
            for r in cat.hom(z, cat.target[h]):
                if r in right and cat.compose_table[(r, l)] == h:
                    return l, r
    return None


def verify_wfs(wfs):
    """Check the three defining conditions, with counterexamples.

    1. every (left, right) pair lifts;
    2. left  = complement_llp(right);
    3. right = complement_rlp(left);
    plus: every morphism factors as right ∘ left.
    """
    cat = wfs.cat
    _require_morphisms(cat, wfs.left)
    _require_morphisms(cat, wfs.right)
    failures = []

    lifting_ok = True
    for f in cat.sort_morphisms(wfs.left):
        for g in cat.sort_morphisms(wfs.right):
            if not llp(cat, f, g):
                lifting_ok = False
                failures.append("no lift of %s against %s" % (f, g))

    expected_left = complement_llp(cat, wfs.right)
    left_ok = expected_left == wfs.left
    if not left_ok:
        extra = cat.sort_morphisms(wfs.left - expected_left)
        missing = cat.sort_morphisms(expected_left - wfs.left)
        if extra:
            failures.append("left class has non-lifting members: %s" % ", ".join(extra))
        if missing:
            failures.append("left class misses lifting members: %s" % ", ".join(missing))

    expected_right = complement_rlp(cat, wfs.left)
    right_ok = expected_right == wfs.right
    if not right_ok:
        extra = cat.sort_morphisms(wfs.right - expected_right)
        missing = cat.sort_morphisms(expected_right - wfs.right)
        if extra:
            failures.append("right class has non-lifting members: %s" % ", ".join(extra))
        if missing:
            failures.append("right class misses lifting members: %s" % ", ".join(missing))

    factorization_ok = True
    for h in cat.morphisms:
        if factor(cat, wfs.left, wfs.right, h) is None:
            factorization_ok = False
            failures.append("no factorization of %s" % h)

    ok = lifting_ok and left_ok and right_ok and factorization_ok
    return WfsReport(ok, lifting_ok, left_ok, right_ok, factorization_ok, tuple(failures))


def generate_wfs(cat, generators):
    """The system (llp(rlp(I)), rlp(I)) generated by a set of morphisms.

    The two complements satisfy the lifting and complement conditions by
    construction; what can genuinely fail at finite scale is factorization,
    in which case a ConstructionError carries the unfactorizable morphism.
    """
    _require_morphisms(cat, generators)
    right = complement_rlp(cat, generators)
    left = complement_llp(cat, right)
    wfs = WeakFactorizationSystem(cat, left, right)
    for h in cat.morphisms:
        if factor(cat, left, right, h) is None:
            raise ConstructionError("no factorization of %s" % h, witness=h)
    report = verify_wfs(wfs)
    if not report.ok:
        # Unreachable for the generated classes, kept as a loud invariant.
        raise ConstructionError("generated system fails verification: %s" % (report.failures,))
    return wfs
