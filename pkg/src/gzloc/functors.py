"""Functors between finite categories and the predicates the theory uses."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from .core import (
    CategoryError, FiniteCategory, MorphId, ObjId, Report, invert, validate_category,
)


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, bound: int):
        super().__init__(f"{what} exceeded budget of {bound}")
        self.bound = bound


@dataclass(frozen=True)
class Functor:
    dom: FiniteCategory
    cod: FiniteCategory
    on_objects: Mapping[ObjId, ObjId]
    on_morphisms: Mapping[MorphId, MorphId]

    __hash__ = None  # type: ignore[assignment]

    def ob(self, x: ObjId) -> ObjId:
        return self.on_objects[x]

    def mor(self, u: MorphId) -> MorphId:
        return self.on_morphisms[u]

    def key(self) -> tuple:
        """Hashable fingerprint of the two maps."""
        return (tuple(sorted(self.on_objects.items())), tuple(sorted(self.on_morphisms.items())))

    def same_maps(self, other: "Functor") -> bool:
        return dict(self.on_objects) == dict(other.on_objects) and \
            dict(self.on_morphisms) == dict(other.on_morphisms)


def identity_functor(c: FiniteCategory) -> Functor:
    return Functor(c, c, {x: x for x in c.objects}, {m: m for m in c.morphisms})


def validate_functor(f: Functor) -> Report:
    report = Report("functor")
    a, b = f.dom, f.cod
    for x in a.objects:
        if f.on_objects.get(x) not in b.ident:
            report.add("object map", f"{x} is not sent to an object", x)
    for u in a.morphisms:
        if f.on_morphisms.get(u) not in b.src:
            report.add("morphism map", f"{u} is not sent to a morphism", u)
    if not report.ok:
        return report
    for u in a.morphisms:
        fu = f.on_morphisms[u]
        if b.src[fu] != f.on_objects[a.src[u]] or b.tgt[fu] != f.on_objects[a.tgt[u]]:
            report.add("endpoints", f"image of {u} has wrong endpoints", u)
    for x in a.objects:
        if f.on_morphisms[a.ident[x]] != b.ident[f.on_objects[x]]:
            report.add("identity", f"identity of {x} not sent to an identity", x)
    if not report.ok:
        return report
    for (u, v), w in a.comp.items():
        if f.on_morphisms[w] != b.compose(f.on_morphisms[u], f.on_morphisms[v]):
            report.add("composition", f"F({u} * {v}) != F({u}) * F({v})", u, v)
    return report


def fcompose(g: Functor, f: Functor) -> Functor:
    """``g`` after ``f``."""
    if g.dom != f.cod:
        raise CategoryError("fcompose: source of g differs from target of f")
    return Functor(
        f.dom, g.cod,
        {x: g.on_objects[y] for x, y in f.on_objects.items()},
        {u: g.on_morphisms[v] for u, v in f.on_morphisms.items()},
    )


def opposite_functor(f: Functor) -> Functor:
    from .core import opposite
    return Functor(opposite(f.dom), opposite(f.cod), dict(f.on_objects), dict(f.on_morphisms))


def kernel_pairs(f: Functor) -> set[tuple[MorphId, MorphId]]:
    a = f.dom
    return {
        (u, v)
        for u in a.morphisms for v in a.morphisms
        if a.src[u] == a.src[v] and a.tgt[u] == a.tgt[v]
        and f.on_morphisms[u] == f.on_morphisms[v]
    }


def mor_image(f: Functor) -> set[MorphId]:
    return set(f.on_morphisms.values())


@dataclass(frozen=True)
class FunctorPredicates:
    faithful: bool
    full: bool
    ob_inj: bool
    ob_surj: bool
    ob_iso: bool
    has_finverse: bool


def functor_predicates(f: Functor) -> FunctorPredicates:
    validate_functor(f).raise_if_failed()
    a, b = f.dom, f.cod
    faithful = all(u == v for u, v in kernel_pairs(f))
    full = True
    for x, y in product(a.objects, a.objects):
        image = {f.on_morphisms[u] for u in a.hom(x, y)}
        if not set(b.hom(f.on_objects[x], f.on_objects[y])) <= image:
            full = False
            break
    values = [f.on_objects[x] for x in a.objects]
    ob_inj = len(set(values)) == len(values)
    ob_surj = set(values) == set(b.objects)
    ob_iso = ob_inj and ob_surj
    return FunctorPredicates(faithful, full, ob_inj, ob_surj, ob_iso, faithful and full and ob_iso)


def inverse_functor(f: Functor) -> Functor:
    """Explicit inverse of a functor that is faithful, full and bijective on objects."""
    if not functor_predicates(f).has_finverse:
        raise CategoryError("functor has no inverse")
    on_objects = {y: x for x, y in f.on_objects.items()}
    on_morphisms = {v: u for u, v in f.on_morphisms.items()}
    return Functor(f.cod, f.dom, on_objects, on_morphisms)


def add_inverses(c: FiniteCategory, s: Iterable[MorphId]) -> set[MorphId]:
    s = set(s)
    if not s <= set(c.morphisms):
        raise CategoryError(f"not morphisms: {sorted(s - set(c.morphisms))}")
    out = set(s)
    for y in c.morphisms:
        inv = invert(c, y)
        if inv is not None and inv in s:
            out.add(y)
    return out


def subcategory(c: FiniteCategory, objects: Iterable[ObjId], morphisms: Iterable[MorphId],
                name: str = "") -> FiniteCategory:
    objs = set(objects)
    mors = set(morphisms)
    return FiniteCategory(
        objects=tuple(sorted(objs)),
        morphisms=tuple(sorted(mors)),
        src={m: c.src[m] for m in mors},
        tgt={m: c.tgt[m] for m in mors},
        ident={x: c.ident[x] for x in objs},
        comp={k: w for k, w in c.comp.items() if k[0] in mors and k[1] in mors},
        name=name,
    )


def full_subcategory(c: FiniteCategory, objects: Iterable[ObjId]) -> FiniteCategory:
    objs = set(objects)
    mors = [m for m in c.morphisms if c.src[m] in objs and c.tgt[m] in objs]
    return subcategory(c, objs, mors)


def subcategory_inclusion(c: FiniteCategory, sub: FiniteCategory) -> Functor:
    return Functor(sub, c, {x: x for x in sub.objects}, {m: m for m in sub.morphisms})


def generated_subcategory(c: FiniteCategory, s: Iterable[MorphId]) -> FiniteCategory:
    """Least subcategory containing ``s``: endpoints' identities plus composites."""
    mors = set(s)
    objs = {c.src[m] for m in mors} | {c.tgt[m] for m in mors}
    mors |= {c.ident[x] for x in objs}
    frontier = set(mors)
    while frontier:
        new = set()
        for u in frontier:
            for v in mors:
                for w in ((c.comp.get((u, v))), c.comp.get((v, u))):
                    if w is not None and w not in mors:
                        new.add(w)
        mors |= new
        frontier = new
    return subcategory(c, objs, mors)


def generates_check(c: FiniteCategory, s: Iterable[MorphId]) -> tuple[bool, FiniteCategory]:
    s = set(s)
    if not s <= set(c.morphisms):
        raise CategoryError(f"not morphisms: {sorted(s - set(c.morphisms))}")
    sub = generated_subcategory(c, s)
    return set(sub.morphisms) == set(c.morphisms) and set(sub.objects) == set(c.objects), sub


DEFAULT_FUNCTOR_BUDGET = 2_000_000


def enumerate_functors(a: FiniteCategory, b: FiniteCategory,
                       budget: int = DEFAULT_FUNCTOR_BUDGET) -> list[Functor]:
    """Every functor ``a -> b``, in a deterministic order.

    Object maps are tried outermost; morphisms are then assigned one at a
    time with composites checked as soon as both factors are fixed.
    ``budget`` caps the number of partial assignments visited.
    """
    validate_category(a).raise_if_failed()
    validate_category(b).raise_if_failed()
    idents = set(a.ident.values())
    free = [m for m in a.morphisms if m not in idents]
    index = {m: i for i, m in enumerate(free)}
    # composites to check once the later of u, v, w is assigned
    checks: dict[int, list[tuple[MorphId, MorphId, MorphId]]] = {i: [] for i in range(len(free))}
    for (u, v), w in a.comp.items():
        pos = max(index.get(m, -1) for m in (u, v, w))
        if pos >= 0:
            checks[pos].append((u, v, w))

    found: list[Functor] = []
    visited = 0
    for images in product(b.objects, repeat=len(a.objects)):
        obmap = dict(zip(a.objects, images))
        assign = {a.ident[x]: b.ident[obmap[x]] for x in a.objects}
        candidates = [b.hom(obmap[a.src[m]], obmap[a.tgt[m]]) for m in free]
        if any(not cs for cs in candidates):
            continue

        def extend(i: int):
            nonlocal visited
            if i == len(free):
                found.append(Functor(a, b, dict(obmap), dict(assign)))
                return
            m = free[i]
            for cand in candidates[i]:
                visited += 1
                if visited > budget:
                    raise BudgetExceeded("functor enumeration", budget)
                assign[m] = cand
                if all(assign[w] == b.comp[assign[u], assign[v]] for u, v, w in checks[i]):
                    extend(i + 1)
            del assign[m]

        extend(0)
    return found


def inverts(f: Functor, members: Iterable[MorphId]) -> bool:
    return all(invert(f.cod, f.on_morphisms[q]) is not None for q in members)
