"""The calculus of left fractions over a finite category.

A symbol ``(f, t)`` with ``tgt f == tgt t`` and ``t`` in the system stands
for ``t^-1 * f``: it runs from ``src f`` to ``src t`` and its vertex is the
shared target.  Two symbols are equivalent when some common symbol lies
beyond both, where ``v`` lies beyond ``u`` if ``v`` is ``u`` with both legs
post-composed by one morphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from .core import (
    CategoryError, FiniteCategory, MorphId, MultSystem, ObjId, Report, invert,
    opposite, oppms, validate_category, validate_mult_system,
)
from .functors import Functor, functor_predicates, opposite_functor, validate_functor
from .quotient import UnionFind


@dataclass(frozen=True, order=True)
class Symbol:
    fwd: MorphId
    bwd: MorphId

    def __str__(self) -> str:
        return f"{self.fwd} / {self.bwd}"


def sym_src(c: FiniteCategory, u: Symbol) -> ObjId:
    return c.src[u.fwd]


def sym_tgt(c: FiniteCategory, u: Symbol) -> ObjId:
    return c.src[u.bwd]


def vertex(c: FiniteCategory, u: Symbol) -> ObjId:
    return c.tgt[u.bwd]


def is_symbol(s: MultSystem, u: Symbol) -> bool:
    c = s.base
    return u.fwd in c.src and u.bwd in s.members and c.tgt[u.fwd] == c.tgt[u.bwd]


def all_symbols(s: MultSystem) -> list[Symbol]:
    c = s.base
    return [Symbol(f, t) for f in c.morphisms for t in s.sorted_members()
            if c.tgt[f] == c.tgt[t]]


def lf_id_rep(c: FiniteCategory, x: ObjId) -> Symbol:
    return Symbol(c.ident[x], c.ident[x])


def taut_symbol(c: FiniteCategory, y: MorphId) -> Symbol:
    return Symbol(y, c.ident[c.tgt[y]])


def inverse_symbol(c: FiniteCategory, y: MorphId) -> Symbol:
    return Symbol(c.ident[c.tgt[y]], y)


# --------------------------------------------------------------------------
# the four clauses

@dataclass
class FractionsVerdict:
    ok: bool
    clause: int | None = None
    message: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"clause {self.clause} fails: {self.message}"


def ore_candidates(s: MultSystem, r: MorphId, g: MorphId) -> list[Symbol]:
    """Symbols ``u`` from ``tgt r`` to ``tgt g`` with ``bwd u * g == fwd u * r``."""
    c = s.base
    out = []
    for t in s.sorted_members():
        if c.src[t] != c.tgt[g]:
            continue
        for f in c.morphisms:
            if c.src[f] == c.tgt[r] and c.tgt[f] == c.tgt[t] and c.comp[t, g] == c.comp[f, r]:
                out.append(Symbol(f, t))
    return sorted(out)


def has_left_fractions_check(s: MultSystem) -> FractionsVerdict:
    c = s.base
    if not validate_category(c).ok:
        return FractionsVerdict(False, 1, "base is not a category")
    ms = validate_mult_system(s)
    if not ms.ok:
        v = ms.violations[0]
        return FractionsVerdict(False, 1, str(v), v.witness)
    for x in c.objects:
        if c.ident[x] not in s.members:
            return FractionsVerdict(False, 2, f"identity of {x} is not a member", (x,))
    members = s.sorted_members()
    for r in members:
        for g in c.morphisms:
            if c.src[r] == c.src[g] and not ore_candidates(s, r, g):
                return FractionsVerdict(False, 3, f"no Ore square for r={r}, g={g}", (r, g))
    for v in members:
        for r, t in product(c.morphisms, repeat=2):
            if (c.src[r] == c.tgt[v] and c.src[t] == c.tgt[v] and c.tgt[r] == c.tgt[t]
                    and c.comp[r, v] == c.comp[t, v]):
                if not any(c.src[w] == c.tgt[r] and c.comp[w, r] == c.comp[w, t] for w in members):
                    return FractionsVerdict(False, 4, f"no member equalizes {r}, {t} after {v}",
                                            (v, r, t))
    return FractionsVerdict(True)


def lf_choice(s: MultSystem, r: MorphId, g: MorphId) -> Symbol:
    """Least Ore filler for the span ``r, g`` (``r`` a member)."""
    c = s.base
    if r not in s.members or g not in c.src or c.src[r] != c.src[g]:
        raise CategoryError(f"lf_choice needs a member r and g with common source: {r}, {g}")
    candidates = ore_candidates(s, r, g)
    if not candidates:
        raise CategoryError(f"no Ore filler for {r}, {g}; the system has no left calculus")
    return candidates[0]


# --------------------------------------------------------------------------
# extension, beyond, under, equivalence

def lf_extend(c: FiniteCategory, p: MorphId, u: Symbol) -> Symbol:
    return Symbol(c.compose(p, u.fwd), c.compose(p, u.bwd))


def _extensions(s: MultSystem, u: Symbol, via: Iterable[MorphId]) -> set[Symbol]:
    c = s.base
    x = vertex(c, u)
    out = set()
    for p in via:
        if c.src[p] == x:
            w = lf_extend(c, p, u)
            if w.bwd in s.members:
                out.add(w)
    return out


def beyond_set(s: MultSystem, u: Symbol) -> set[Symbol]:
    """Every symbol lying beyond ``u``."""
    return _extensions(s, u, s.base.morphisms)


def under_set(s: MultSystem, u: Symbol) -> set[Symbol]:
    """Every symbol obtained from ``u`` by extending with a member."""
    return _extensions(s, u, s.sorted_members())


def lf_beyond(s: MultSystem, u: Symbol, v: Symbol) -> bool:
    return is_symbol(s, u) and is_symbol(s, v) and v in beyond_set(s, u)


def lf_under(s: MultSystem, u: Symbol, v: Symbol) -> bool:
    return is_symbol(s, u) and is_symbol(s, v) and v in under_set(s, u)


def lf_equiv_decide(s: MultSystem, u: Symbol, v: Symbol) -> bool:
    """Exact: a common extension must lie in both (finite) beyond sets."""
    for w in (u, v):
        if not is_symbol(s, w):
            raise CategoryError(f"{w} is not a symbol of the system")
    c = s.base
    if sym_src(c, u) != sym_src(c, v) or sym_tgt(c, u) != sym_tgt(c, v):
        return False
    return not beyond_set(s, u).isdisjoint(beyond_set(s, v))


# --------------------------------------------------------------------------
# composition

def fills_in(s: MultSystem, u: Symbol, v: Symbol, w: Symbol) -> bool:
    c = s.base
    return (all(is_symbol(s, x) for x in (u, v, w))
            and sym_src(c, u) == sym_tgt(c, v)
            and sym_src(c, w) == vertex(c, v) and sym_tgt(c, w) == vertex(c, u)
            and c.comp[w.fwd, v.bwd] == c.comp[w.bwd, u.fwd])


def lf_filler(s: MultSystem, u: Symbol, v: Symbol) -> Symbol:
    return lf_choice(s, v.bwd, u.fwd)


def lf_make_comp(c: FiniteCategory, u: Symbol, v: Symbol, w: Symbol) -> Symbol:
    return Symbol(c.compose(w.fwd, v.fwd), c.compose(w.bwd, u.bwd))


def lf_comp_rep(s: MultSystem, u: Symbol, v: Symbol) -> Symbol:
    """Representative of ``u`` after ``v``."""
    c = s.base
    if sym_src(c, u) != sym_tgt(c, v):
        raise CategoryError(f"cannot compose {u} after {v}")
    return lf_make_comp(c, u, v, lf_filler(s, u, v))


def fillers(s: MultSystem, u: Symbol, v: Symbol) -> list[Symbol]:
    return [w for w in all_symbols(s) if fills_in(s, u, v, w)]


def lean_to_closure(s: MultSystem, e, f, g, h, i, j) -> tuple[MorphId, MorphId]:
    """Close two squares sharing the span ``e, f`` by one pair ``(k, l)``.

    Expects ``g*e == h*f`` and ``i*e == j*f`` with ``e, h`` members; returns
    the least ``(k, l)`` with ``l`` a member, ``k*g == l*i`` and ``k*h == l*j``.
    """
    c = s.base
    ok = (
        all(m in c.src for m in (e, f, g, h, i, j)) and e in s.members and h in s.members
        and c.src[e] == c.src[f] and c.src[g] == c.tgt[e] and c.src[h] == c.tgt[f]
        and c.tgt[g] == c.tgt[h] and c.src[i] == c.tgt[e] and c.src[j] == c.tgt[f]
        and c.tgt[i] == c.tgt[j]
        and c.comp[g, e] == c.comp[h, f] and c.comp[i, e] == c.comp[j, f]
    )
    if not ok:
        raise CategoryError("not a lean-to configuration")
    for k in c.morphisms:
        if c.src[k] != c.tgt[g]:
            continue
        for l in s.sorted_members():
            if (c.src[l] == c.tgt[i] and c.tgt[k] == c.tgt[l]
                    and c.comp[k, g] == c.comp[l, i] and c.comp[k, h] == c.comp[l, j]):
                return k, l
    raise CategoryError("lean-to has no closure; the system has no left calculus")


# --------------------------------------------------------------------------
# the localized category

@dataclass(frozen=True)
class FractionCategory:
    base: MultSystem
    category: FiniteCategory
    class_of: Mapping[Symbol, MorphId]
    rep_of: Mapping[MorphId, Symbol]
    classes: Mapping[MorphId, tuple[Symbol, ...]] = field(repr=False)

    __hash__ = None  # type: ignore[assignment]

    def hom(self, x: ObjId, y: ObjId) -> list[MorphId]:
        return self.category.hom(x, y)


def class_token(u: Symbol) -> str:
    return f"{u.fwd}/{u.bwd}"


def build_left_frac_cat(s: MultSystem, verify: bool = True) -> FractionCategory:
    """Materialize the localization as a finite category.

    With ``verify`` the composition table is rechecked against every pair of
    symbols, not just class representatives.
    """
    verdict = has_left_fractions_check(s)
    if not verdict:
        raise CategoryError(f"no left calculus of fractions: {verdict}")
    c = s.base
    symbols = all_symbols(s)
    beyond = {u: beyond_set(s, u) for u in symbols}
    by_ends: dict = {}
    for u in symbols:
        by_ends.setdefault((sym_src(c, u), sym_tgt(c, u)), []).append(u)
    uf = UnionFind(symbols)
    for group in by_ends.values():
        for a_i, a in enumerate(group):
            for b in group[a_i + 1:]:
                if not beyond[a].isdisjoint(beyond[b]):
                    uf.union(a, b)
    classes = {}
    class_of = {}
    for members in uf.classes().values():
        members = sorted(members)
        cid = class_token(members[0])
        classes[cid] = tuple(members)
        for u in members:
            class_of[u] = cid
    classes = dict(sorted(classes.items()))
    rep_of = {cid: ms[0] for cid, ms in classes.items()}

    mors = {cid: (sym_src(c, u), sym_tgt(c, u)) for cid, u in rep_of.items()}
    comp = {}
    for a, u in rep_of.items():
        for b, v in rep_of.items():
            if mors[a][0] == mors[b][1]:
                comp[a, b] = class_of[lf_comp_rep(s, u, v)]
    ident = {x: class_of[lf_id_rep(c, x)] for x in c.objects}
    name = f"{c.name}[S^-1]" if c.name else ""
    cat = FiniteCategory.create(c.objects, mors, ident, comp, name=name)
    if verify:
        for u in symbols:
            for v in symbols:
                if sym_src(c, u) == sym_tgt(c, v):
                    if class_of[lf_comp_rep(s, u, v)] != comp[class_of[u], class_of[v]]:
                        raise CategoryError(f"composition depends on representatives at {u}, {v}")
        validate_category(cat).raise_if_failed()
    return FractionCategory(s, cat, class_of, rep_of, classes)


def lf_proj_functor(fc: FractionCategory) -> Functor:
    c = fc.base.base
    return Functor(c, fc.category, {x: x for x in c.objects},
                   {y: fc.class_of[taut_symbol(c, y)] for y in c.morphisms})


def lf_inverse_class(fc: FractionCategory, y: MorphId) -> MorphId:
    return fc.class_of[inverse_symbol(fc.base.base, y)]


def localizes(s: MultSystem, f: Functor) -> Report:
    """``f`` is a functor out of the base sending every member to an isomorphism."""
    report = validate_functor(f)
    report.subject = "localizing functor"
    if f.dom != s.base:
        report.add("source", "functor does not start at the base category")
    if not report.ok:
        return report
    for q in s.sorted_members():
        if invert(f.cod, f.on_morphisms[q]) is None:
            report.add("inverts", f"image of member {q} is not invertible", q)
    return report


def symbol_dot(f: Functor, u: Symbol) -> MorphId:
    """Evaluate ``bwd^-1 * fwd`` through ``f``."""
    inv = invert(f.cod, f.on_morphisms[u.bwd])
    if inv is None:
        raise CategoryError(f"image of {u.bwd} is not invertible")
    return f.cod.compose(inv, f.on_morphisms[u.fwd])


def lf_dotted(fc: FractionCategory, f: Functor) -> Functor:
    """The functor out of the localization through which ``f`` factors."""
    report = localizes(fc.base, f)
    if not report.ok:
        raise CategoryError(f"cannot factor: {report.violations[0]}")
    return Functor(fc.category, f.cod, dict(f.on_objects),
                   {cid: symbol_dot(f, u) for cid, u in fc.rep_of.items()})


# --------------------------------------------------------------------------
# fraction descriptions

def vee_pairs(s: MultSystem) -> list[tuple[MorphId, MorphId]]:
    c = s.base
    return [(p, q) for p in c.morphisms for q in s.sorted_members() if c.tgt[p] == c.tgt[q]]


def vee_image(f: Functor, p: MorphId, q: MorphId) -> MorphId:
    return symbol_dot(f, Symbol(p, q))


def vee_equivalent(s: MultSystem, p, q, r, t) -> bool:
    c = s.base
    if c.src[p] != c.src[r] or c.src[q] != c.src[t]:
        return False
    for y in c.morphisms:
        if c.src[y] != c.tgt[p]:
            continue
        yq = c.comp[y, q]
        if yq not in s.members:
            continue
        for z in c.morphisms:
            if (c.src[z] == c.tgt[r] and c.tgt[z] == c.tgt[y]
                    and c.comp[y, p] == c.comp[z, r] and yq == c.comp[z, t]):
                return True
    return False


def verify_fraction_description(fc: FractionCategory, f: Functor) -> Report:
    """Check that ``f`` presents its target by fractions of ``fc.base``."""
    s = fc.base
    report = localizes(s, f)
    report.subject = "fraction description"
    if not report.ok:
        return report
    if not functor_predicates(f).ob_iso:
        report.add("ob_iso", "functor is not bijective on objects")
    vees = vee_pairs(s)
    images: dict[MorphId, list[tuple[MorphId, MorphId]]] = {}
    for p, q in vees:
        images.setdefault(vee_image(f, p, q), []).append((p, q))
    for y in f.cod.morphisms:
        if y not in images:
            report.add("surjective", f"{y} is not a vee image", y)
    for y, pairs in sorted(images.items()):
        for (p, q), (r, t) in product(pairs, repeat=2):
            if not vee_equivalent(s, p, q, r, t):
                report.add("vee equivalence", f"({p}, {q}) and ({r}, {t}) share image {y} "
                           "but are not vee-equivalent", p, q, r, t)
    return report


# --------------------------------------------------------------------------
# right fractions, by duality

@dataclass(frozen=True)
class RightFractions:
    check: FractionsVerdict
    category: FiniteCategory | None
    projection: Functor | None
    dual: FractionCategory | None = field(default=None, repr=False)

    __hash__ = None  # type: ignore[assignment]


def right_fractions(s: MultSystem) -> RightFractions:
    dual = oppms(s)
    check = has_left_fractions_check(dual)
    if not check:
        return RightFractions(check, None, None)
    fc = build_left_frac_cat(dual)
    category = opposite(fc.category)
    projection = opposite_functor(lf_proj_functor(fc))
    return RightFractions(check, category, projection, fc)


def has_right_fractions(s: MultSystem) -> bool:
    return has_left_fractions_check(oppms(s)).ok
