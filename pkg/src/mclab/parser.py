"""Parser for the laboratory's description language.

A document is a sequence of blocks:

    category NAME [thin] {
      objects: a, b;
      arrows: f: a -> b;
      relations: g . f = h;
    }
    poset NAME { d <= b <= a; d <= c <= a; }
    premodel NAME on CAT {
      cofibrations: all | all_except {..} | generated {..} | {ids, ..};
      ...
    }
    adjunction NAME {
      left: SRC -> TGT { objects: x -> a; arrows: id_x -> id_a; }
      right: TGT -> SRC { ... }
      unit: x -> id_x;
      counit: a -> id_a;
    }
    cylinder NAME { on: CAT; kind: identity; }
    run { classify NAME; ... }

Posets expand to thin categories whose arrows descend (an arrow X -> Y
exists iff Y <= X), so the least element is terminal and the greatest is
initial.  In a premodel block one class of each factorization system is
enough; the partner is derived by complement and the derivation is
recorded on the resulting entry.  Composites of a non-thin category must
all be listed under `relations`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .fincat import FiniteCategory, FunctorData, AdjunctionData, poset_category
from .lifting import complement_llp, complement_rlp
from .olschok import QuillenCylinderData, identity_cylinder
from .premodel import PremodelStructure

_PUNCT2 = ("->", "<=")
_PUNCT1 = "{};:,.=()"

KEYWORD_MODES = ("L", "Lc", "R", "Rc")


@dataclass(frozen=True)
class Token:
    kind: str   # "name", "punct", "eof"
    value: str
    line: int
    col: int


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        two = text[i : i + 2]
        if two in _PUNCT2:
            tokens.append(Token("punct", two, line, col))
            i += 2
            col += 2
            continue
        if ch in _PUNCT1:
            tokens.append(Token("punct", ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isalnum() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError("unexpected character %r" % ch, line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass
class CategoryDecl:
    name: str
    thin: bool
    objects: list
    arrows: list        # (name, src, tgt)
    relations: list     # (g, f, h)  meaning  g . f = h
    line: int
    col: int


@dataclass
class PosetDecl:
    name: str
    chains: list        # each a list of object names, ascending
    line: int
    col: int


@dataclass
class PremodelDecl:
    name: str
    cat_name: str
    classes: dict       # field -> ("all",) | ("all_except", names) | ("generated", names) | ("set", names)
    line: int
    col: int


@dataclass
class FunctorDecl:
    src: str
    tgt: str
    objects: list       # (from, to)
    arrows: list        # (from, to)


@dataclass
class AdjunctionDecl:
    name: str
    left: FunctorDecl
    right: FunctorDecl
    unit: list          # (object, morphism)
    counit: list
    line: int
    col: int


@dataclass
class CylinderDecl:
    name: str
    cat_name: str
    kind: str
    line: int
    col: int


@dataclass
class Directive:
    kind: str
    args: dict
    line: int
    col: int

    def describe(self):
        return self.args.get("text", self.kind)


@dataclass
class Document:
    categories: list = field(default_factory=list)
    posets: list = field(default_factory=list)
    premodels: list = field(default_factory=list)
    adjunctions: list = field(default_factory=list)
    cylinders: list = field(default_factory=list)
    directives: list = field(default_factory=list)


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def fail(self, message, token=None):
        t = token or self.peek()
        raise ParseError("%s (found %r)" % (message, t.value or "end of input"), t.line, t.col)

    def expect_punct(self, value):
        t = self.next()
        if t.kind != "punct" or t.value != value:
            self.fail("expected %r" % value, t)
        return t

    def expect_name(self, what="a name"):
        t = self.next()
        if t.kind != "name":
            self.fail("expected %s" % what, t)
        return t

    def accept_punct(self, value):
        t = self.peek()
        if t.kind == "punct" and t.value == value:
            self.pos += 1
            return True
        return False

    def accept_name(self, value):
        t = self.peek()
        if t.kind == "name" and t.value == value:
            self.pos += 1
            return True
        return False

    # ---- document ----------------------------------------------------

    def parse_document(self):
        doc = Document()
        while True:
            t = self.peek()
            if t.kind == "eof":
                return doc
            if t.kind != "name":
                self.fail("expected a block keyword")
            if t.value == "category":
                doc.categories.append(self.parse_category())
            elif t.value == "poset":
                doc.posets.append(self.parse_poset())
            elif t.value == "premodel":
                doc.premodels.append(self.parse_premodel())
            elif t.value == "adjunction":
                doc.adjunctions.append(self.parse_adjunction())
            elif t.value == "cylinder":
                doc.cylinders.append(self.parse_cylinder())
            elif t.value == "run":
                self.next()
                self.expect_punct("{")
                while not self.accept_punct("}"):
                    doc.directives.append(self.parse_directive())
            else:
                self.fail("unknown block %r" % t.value)

    def parse_category(self):
        head = self.next()
        name = self.expect_name("a category name")
        thin = self.accept_name("thin")
        self.expect_punct("{")
        objects, arrows, relations = [], [], []
        while not self.accept_punct("}"):
            label = self.expect_name("a field label")
            self.expect_punct(":")
            if label.value == "objects":
                objects.extend(n.value for n in self.name_list())
            elif label.value == "arrows":
                while True:
                    arrow = self.expect_name("an arrow name")
                    self.expect_punct(":")
                    src = self.expect_name("a source object")
                    self.expect_punct("->")
                    tgt = self.expect_name("a target object")
                    arrows.append((arrow.value, src.value, tgt.value))
                    if self.accept_punct(";"):
                        break
                    self.expect_punct(",")
            elif label.value == "relations":
                while True:
                    g = self.expect_name("an arrow name")
                    self.expect_punct(".")
                    f = self.expect_name("an arrow name")
                    self.expect_punct("=")
                    h = self.expect_name("an arrow name")
                    relations.append((g.value, f.value, h.value))
                    if self.accept_punct(";"):
                        break
                    self.expect_punct(",")
            else:
                self.fail("unknown category field %r" % label.value, label)
        return CategoryDecl(name.value, thin, objects, arrows, relations, head.line, head.col)

    def name_list(self):
        names = [self.expect_name()]
        while not self.accept_punct(";"):
            self.expect_punct(",")
            names.append(self.expect_name())
        return names

    def parse_poset(self):
        head = self.next()
        name = self.expect_name("a poset name")
        self.expect_punct("{")
        chains = []
        while not self.accept_punct("}"):
            chain = [self.expect_name("an object name").value]
            while self.accept_punct("<="):
                chain.append(self.expect_name("an object name").value)
            self.expect_punct(";")
            if len(chain) < 2:
                self.fail("poset chains need at least two objects")
            chains.append(chain)
        return PosetDecl(name.value, chains, head.line, head.col)

    def parse_premodel(self):
        head = self.next()
        name = self.expect_name("a premodel name")
        if not self.accept_name("on"):
            self.fail("expected 'on CATEGORY'")
        cat_name = self.expect_name("a category name")
        self.expect_punct("{")
        classes = {}
        fields = ("cofibrations", "anodyne_cofibrations", "fibrations", "anodyne_fibrations")
        while not self.accept_punct("}"):
            label = self.expect_name("a class label")
            if label.value not in fields:
                self.fail("unknown premodel class %r" % label.value, label)
            if label.value in classes:
                self.fail("duplicate class %r" % label.value, label)
            self.expect_punct(":")
            classes[label.value] = self.parse_class_expr()
            self.expect_punct(";")
        return PremodelDecl(name.value, cat_name.value, classes, head.line, head.col)

    def parse_class_expr(self):
        t = self.peek()
        if t.kind == "name" and t.value == "all":
            self.next()
            return ("all",)
        if t.kind == "name" and t.value == "all_except":
            self.next()
            return ("all_except", self.brace_list())
        if t.kind == "name" and t.value == "generated":
            self.next()
            return ("generated", self.brace_list())
        if t.kind == "punct" and t.value == "{":
            return ("set", self.brace_list())
        self.fail("expected a class expression")

    def brace_list(self):
        self.expect_punct("{")
        names = []
        if not self.accept_punct("}"):
            names.append(self.expect_name().value)
            while not self.accept_punct("}"):
                self.expect_punct(",")
                names.append(self.expect_name().value)
        return names

    def parse_functor_body(self):
        src = self.expect_name("a source category")
        self.expect_punct("->")
        tgt = self.expect_name("a target category")
        self.expect_punct("{")
        objects, arrows = [], []
        while not self.accept_punct("}"):
            label = self.expect_name("a field label")
            self.expect_punct(":")
            if label.value not in ("objects", "arrows"):
                self.fail("unknown functor field %r" % label.value, label)
            pairs = objects if label.value == "objects" else arrows
            while True:
                a = self.expect_name()
                self.expect_punct("->")
                b = self.expect_name()
                pairs.append((a.value, b.value))
                if self.accept_punct(";"):
                    break
                self.expect_punct(",")
        return FunctorDecl(src.value, tgt.value, objects, arrows)

    def parse_adjunction(self):
        head = self.next()
        name = self.expect_name("an adjunction name")
        self.expect_punct("{")
        left = right = None
        unit, counit = [], []
        while not self.accept_punct("}"):
            label = self.expect_name("a field label")
            self.expect_punct(":")
            if label.value == "left":
                left = self.parse_functor_body()
            elif label.value == "right":
                right = self.parse_functor_body()
            elif label.value in ("unit", "counit"):
                pairs = unit if label.value == "unit" else counit
                while True:
                    a = self.expect_name()
                    self.expect_punct("->")
                    b = self.expect_name()
                    pairs.append((a.value, b.value))
                    if self.accept_punct(";"):
                        break
                    self.expect_punct(",")
            else:
                self.fail("unknown adjunction field %r" % label.value, label)
        if left is None or right is None:
            self.fail("adjunction %s needs both adjoints" % name.value, head)
        return AdjunctionDecl(name.value, left, right, unit, counit, head.line, head.col)

    def parse_cylinder(self):
        head = self.next()
        name = self.expect_name("a cylinder name")
        self.expect_punct("{")
        cat_name = kind = None
        while not self.accept_punct("}"):
            label = self.expect_name("a field label")
            self.expect_punct(":")
            if label.value == "on":
                cat_name = self.expect_name("a category name").value
            elif label.value == "kind":
                kind = self.expect_name("a cylinder kind").value
            else:
                self.fail("unknown cylinder field %r" % label.value, label)
            self.expect_punct(";")
        if cat_name is None or kind is None:
            self.fail("cylinder %s needs 'on' and 'kind'" % name.value, head)
        if kind != "identity":
            raise ParseError("unsupported cylinder kind %r" % kind, head.line, head.col)
        return CylinderDecl(name.value, cat_name, kind, head.line, head.col)

    # ---- directives ----------------------------------------------------

    def parse_directive(self):
        head = self.expect_name("a directive")
        kind = head.value
        args = {}
        if kind == "validate":
            args["target"] = self.expect_name().value
        elif kind == "check":
            what = self.expect_name("wfs, premodel, or weakmodel").value
            if what not in ("wfs", "premodel", "weakmodel"):
                self.fail("check knows wfs, premodel, weakmodel; got %r" % what)
            args["what"] = what
            args["target"] = self.expect_name().value
        elif kind == "saturate":
            args["target"] = self.expect_name().value
            if not self.accept_name("mode"):
                self.fail("expected 'mode'")
            args["mode"] = self.expect_name("a saturation mode").value
        elif kind == "localize":
            side = self.expect_name("left or right").value
            if side not in ("left", "right"):
                self.fail("localize knows left and right; got %r" % side)
            args["side"] = side
            args["target"] = self.expect_name().value
            if side == "left":
                if not self.accept_name("at"):
                    self.fail("expected 'at {arrows}'")
                args["arrows"] = self.brace_list()
            else:
                if not self.accept_name("by"):
                    self.fail("expected 'by ADJUNCTION'")
                args["adjunction"] = self.expect_name().value
                if not self.accept_name("into"):
                    self.fail("expected 'into TARGET'")
                args["into"] = self.expect_name().value
            if not self.accept_name("mode"):
                self.fail("expected 'mode'")
            args["mode"] = self.expect_name("a saturation mode").value
        elif kind == "hocat":
            args["target"] = self.expect_name().value
        elif kind == "equiv":
            args["target"] = self.expect_name().value
            args["arrow"] = self.expect_name("an arrow").value
        elif kind == "classify":
            args["target"] = self.expect_name().value
        elif kind == "dualize":
            args["target"] = self.expect_name().value
        elif kind == "olschok":
            args["target"] = self.expect_name().value
            if not self.accept_name("cylinder"):
                self.fail("expected 'cylinder NAME'")
            args["cylinder"] = self.expect_name().value
            if self.accept_name("seeds"):
                args["seeds"] = self.brace_list()
        else:
            self.fail("unknown directive %r" % kind, head)
        self.expect_punct(";")
        return Directive(kind, args, head.line, head.col)


def parse(text):
    """Parse a document; raises ParseError with line/column on bad input."""
    return _Parser(_tokenize(text)).parse_document()


# ---- semantic resolution -------------------------------------------------


def _build_category(decl):
    pos = (decl.line, decl.col)
    if len(set(decl.objects)) != len(decl.objects):
        raise ParseError("category %s repeats an object" % decl.name, *pos)
    identities = {x: "id_%s" % x for x in decl.objects}
    clash = set(identities.values()) & {a for a, _, _ in decl.arrows}
    if clash:
        raise ParseError(
            "category %s declares reserved identity names: %s"
            % (decl.name, ", ".join(sorted(clash))), *pos
        )
    morphisms = [identities[x] for x in decl.objects] + [a for a, _, _ in decl.arrows]
    if len(set(morphisms)) != len(morphisms):
        raise ParseError("category %s repeats an arrow name" % decl.name, *pos)
    source = {identities[x]: x for x in decl.objects}
    target = dict(source)
    for a, s, t in decl.arrows:
        if s not in identities or t not in identities:
            raise ParseError(
                "arrow %s of %s references an undefined object" % (a, decl.name), *pos
            )
        source[a] = s
        target[a] = t

    by_hom = {}
    for m in morphisms:
        by_hom.setdefault((source[m], target[m]), []).append(m)
    if decl.thin:
        fat = [pair for pair, ms in by_hom.items() if len(ms) > 1]
        if fat:
            raise ParseError(
                "category %s declared thin but hom(%s, %s) has %d arrows"
                % (decl.name, fat[0][0], fat[0][1], len(by_hom[fat[0]])), *pos
            )

    known = set(morphisms)
    compose = {}
    for g, f, h in decl.relations:
        for piece in (g, f, h):
            if piece not in known:
                raise ParseError(
                    "relation in %s references undefined arrow %r" % (decl.name, piece), *pos
                )
        compose[(g, f)] = h
    table = {}
    for f in morphisms:
        for g in morphisms:
            if target[f] != source[g]:
                continue
            if f in identities.values():
                table[(g, f)] = g
            elif g in identities.values():
                table[(g, f)] = f
            elif (g, f) in compose:
                table[(g, f)] = compose[(g, f)]
            elif decl.thin:
                table[(g, f)] = by_hom.get((source[f], target[g]), [None])[0]
                if table[(g, f)] is None:
                    raise ParseError(
                        "thin category %s has no composite for %s . %s"
                        % (decl.name, g, f), *pos
                    )
            else:
                raise ParseError(
                    "category %s lists no relation for %s . %s" % (decl.name, g, f), *pos
                )
    return FiniteCategory(
        decl.name,
        list(decl.objects),
        [(m, source[m], target[m]) for m in morphisms],
        identities,
        table,
    )


def _build_poset(decl):
    order = []
    pairs = set()
    for chain in decl.chains:
        for x in chain:
            if x not in order:
                order.append(x)
        for lo, hi in zip(chain, chain[1:]):
            pairs.add((lo, hi))
    try:
        return poset_category(decl.name, order, sorted(pairs))
    except Exception as exc:   # cycle / arrow-name-collision diagnostics
        raise ParseError(
            "poset %s does not define a category: %s" % (decl.name, exc),
            decl.line,
            decl.col,
        ) from None


_LEFT_FIELDS = ("cofibrations", "anodyne_cofibrations")


def _resolve_class(cat, expr, field_name, decl):
    pos = (decl.line, decl.col)
    kind = expr[0]
    if kind == "all":
        return frozenset(cat.morphisms)
    names = []
    for n in expr[1] if len(expr) > 1 else []:
        if n == "ids":
            names.extend(cat.identities.values())
        elif cat.has_morphism(n):
            names.append(n)
        else:
            raise ParseError(
                "premodel %s references undefined arrow %r" % (decl.name, n), *pos
            )
    base = frozenset(names)
    if kind == "all_except":
        return frozenset(cat.morphisms) - base
    if kind == "generated":
        if field_name in _LEFT_FIELDS:
            return complement_llp(cat, complement_rlp(cat, base))
        return complement_rlp(cat, complement_llp(cat, base))
    return base


def _build_premodel(decl, categories):
    pos = (decl.line, decl.col)
    cat = categories.get(decl.cat_name)
    if cat is None:
        raise ParseError(
            "premodel %s references undefined category %r" % (decl.name, decl.cat_name), *pos
        )
    resolved = {
        f: _resolve_class(cat, e, f, decl) for f, e in decl.classes.items()
    }
    derived = []
    if "cofibrations" not in resolved and "anodyne_fibrations" not in resolved:
        raise ParseError(
            "premodel %s gives neither cofibrations nor anodyne_fibrations" % decl.name, *pos
        )
    if "anodyne_cofibrations" not in resolved and "fibrations" not in resolved:
        raise ParseError(
            "premodel %s gives neither anodyne_cofibrations nor fibrations" % decl.name, *pos
        )
    if "cofibrations" not in resolved:
        resolved["cofibrations"] = complement_llp(cat, resolved["anodyne_fibrations"])
        derived.append("cofibrations")
    if "anodyne_fibrations" not in resolved:
        resolved["anodyne_fibrations"] = complement_rlp(cat, resolved["cofibrations"])
        derived.append("anodyne_fibrations")
    if "fibrations" not in resolved:
        resolved["fibrations"] = complement_rlp(cat, resolved["anodyne_cofibrations"])
        derived.append("fibrations")
    if "anodyne_cofibrations" not in resolved:
        resolved["anodyne_cofibrations"] = complement_llp(cat, resolved["fibrations"])
        derived.append("anodyne_cofibrations")
    p = PremodelStructure(
        cat=cat,
        cofibrations=resolved["cofibrations"],
        anodyne_fibrations=resolved["anodyne_fibrations"],
        anodyne_cofibrations=resolved["anodyne_cofibrations"],
        fibrations=resolved["fibrations"],
        name=decl.name,
    )
    return p, derived


def _build_functor(name, decl, categories, owner):
    src = categories.get(decl.src)
    tgt = categories.get(decl.tgt)
    if src is None or tgt is None:
        missing = decl.src if src is None else decl.tgt
        raise ParseError(
            "adjunction %s references undefined category %r" % (owner.name, missing),
            owner.line,
            owner.col,
        )
    return FunctorData(name, src, tgt, dict(decl.objects), dict(decl.arrows))


def _build_adjunction(decl, categories):
    left = _build_functor("%s.left" % decl.name, decl.left, categories, decl)
    right = _build_functor("%s.right" % decl.name, decl.right, categories, decl)
    return AdjunctionData(decl.name, left, right, dict(decl.unit), dict(decl.counit))


def _build_cylinder(decl, categories):
    cat = categories.get(decl.cat_name)
    if cat is None:
        raise ParseError(
            "cylinder %s references undefined category %r" % (decl.name, decl.cat_name),
            decl.line,
            decl.col,
        )
    return identity_cylinder(cat), cat


@dataclass
class Environment:
    """Resolved document: named engine objects plus bookkeeping."""

    categories: dict
    premodels: dict
    adjunctions: dict
    cylinders: dict       # name -> (QuillenCylinderData, category)
    derived_classes: dict  # premodel name -> list of derived class fields
    directives: list


def resolve(doc):
    categories = {}
    for decl in doc.categories:
        if decl.name in categories:
            raise ParseError("duplicate category %r" % decl.name, decl.line, decl.col)
        categories[decl.name] = _build_category(decl)
    for decl in doc.posets:
        if decl.name in categories:
            raise ParseError("duplicate category %r" % decl.name, decl.line, decl.col)
        categories[decl.name] = _build_poset(decl)
    premodels, derived_classes = {}, {}
    for decl in doc.premodels:
        if decl.name in premodels or decl.name in categories:
            raise ParseError("duplicate name %r" % decl.name, decl.line, decl.col)
        premodels[decl.name], derived_classes[decl.name] = _build_premodel(decl, categories)
    adjunctions = {}
    for decl in doc.adjunctions:
        adjunctions[decl.name] = _build_adjunction(decl, categories)
    cylinders = {}
    for decl in doc.cylinders:
        cylinders[decl.name] = _build_cylinder(decl, categories)
    return Environment(
        categories=categories,
        premodels=premodels,
        adjunctions=adjunctions,
        cylinders=cylinders,
        derived_classes=derived_classes,
        directives=list(doc.directives),
    )


def load(text):
    return resolve(parse(text))
