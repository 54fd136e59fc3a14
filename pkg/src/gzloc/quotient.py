"""Categorical relations, their least congruence, and quotient categories."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import CategoryError, FiniteCategory, MorphId, Report
from .functors import Functor, kernel_pairs, validate_functor


@dataclass(frozen=True)
class CatRel:
    base: FiniteCategory
    pairs: frozenset

    __hash__ = None  # type: ignore[assignment]

    def __init__(self, base: FiniteCategory, pairs: Iterable[tuple[MorphId, MorphId]]):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in pairs))


def coarse_rel(c: FiniteCategory) -> CatRel:
    """All pairs of parallel morphisms."""
    return CatRel(c, [(u, v) for u in c.morphisms for v in c.morphisms
                      if c.src[u] == c.src[v] and c.tgt[u] == c.tgt[v]])


def validate_cat_rel(r: CatRel) -> Report:
    report = Report("categorical relation")
    c = r.base
    for x, y in sorted(r.pairs):
        if x not in c.src or y not in c.src:
            report.add("membership", f"({x}, {y}) mentions a non-morphism", x, y)
        elif c.src[x] != c.src[y] or c.tgt[x] != c.tgt[y]:
            report.add("endpoints", f"({x}, {y}) relates morphisms that are not parallel", x, y)
    return report


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        # keep the smaller token as root so roots are canonical representatives
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True

    def classes(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass(frozen=True)
class CongruencePartition:
    """A congruence on the morphisms of ``base``, as a labelled partition.

    Class ids are ``[rep]`` where ``rep`` is the least token of the class.
    """

    base: FiniteCategory
    class_of: Mapping[MorphId, str]
    members: Mapping[str, tuple[MorphId, ...]]

    __hash__ = None  # type: ignore[assignment]

    def rep_of(self, cls: str) -> MorphId:
        return self.members[cls][0]

    def related(self, u: MorphId, v: MorphId) -> bool:
        return self.class_of[u] == self.class_of[v]

    def blocks(self) -> frozenset:
        return frozenset(frozenset(ms) for ms in self.members.values())

    def pairs(self) -> set[tuple[MorphId, MorphId]]:
        return {(u, v) for ms in self.members.values() for u in ms for v in ms}


def class_token(rep: MorphId) -> str:
    return f"[{rep}]"


def partition_from_blocks(c: FiniteCategory, blocks: Iterable[Iterable[MorphId]]) -> CongruencePartition:
    class_of: dict[MorphId, str] = {}
    members: dict[str, tuple[MorphId, ...]] = {}
    for block in blocks:
        ms = tuple(sorted(block))
        cid = class_token(ms[0])
        members[cid] = ms
        for m in ms:
            class_of[m] = cid
    missing = set(c.morphisms) - set(class_of)
    if missing:
        raise CategoryError(f"partition does not cover {sorted(missing)}")
    return CongruencePartition(c, class_of, dict(sorted(members.items())))


def congruence_closure(r: CatRel) -> CongruencePartition:
    """Least congruence containing ``r``.

    Every merged pair is whiskered on both sides; the equivalence generated
    by whiskered generator pairs is exactly the least congruence.
    """
    validate_cat_rel(r).raise_if_failed()
    c = r.base
    into: dict = {}  # object -> morphisms with that source
    outof: dict = {}  # object -> morphisms with that target
    for m in c.morphisms:
        into.setdefault(c.src[m], []).append(m)
        outof.setdefault(c.tgt[m], []).append(m)

    uf = UnionFind(c.morphisms)
    work = sorted(r.pairs)
    while work:
        x, y = work.pop()
        if not uf.union(x, y):
            continue
        for u in into.get(c.tgt[x], ()):
            a, b = c.comp[u, x], c.comp[u, y]
            if uf.find(a) != uf.find(b):
                work.append((a, b))
        for v in outof.get(c.src[x], ()):
            a, b = c.comp[x, v], c.comp[y, v]
            if uf.find(a) != uf.find(b):
                work.append((a, b))
    return partition_from_blocks(c, uf.classes().values())


def validate_partition(p: CongruencePartition) -> Report:
    report = Report("congruence partition")
    c = p.base
    if set(p.class_of) != set(c.morphisms):
        report.add("cover", "class map is not total on morphisms")
        return report
    for cid, ms in p.members.items():
        if any(p.class_of[m] != cid for m in ms):
            report.add("labels", f"class {cid} lists a foreign morphism", cid)
        ends = {(c.src[m], c.tgt[m]) for m in ms}
        if len(ends) > 1:
            report.add("endpoints", f"class {cid} mixes endpoints", cid)
    if not report.ok:
        return report
    reps = {cid: p.rep_of(cid) for cid in p.members}
    for (u, v), w in c.comp.items():
        if p.class_of[c.comp[reps[p.class_of[u]], reps[p.class_of[v]]]] != p.class_of[w]:
            report.add("congruence", f"class of {u} * {v} depends on representatives", u, v)
    return report


@dataclass(frozen=True)
class Quotient:
    partition: CongruencePartition
    category: FiniteCategory

    __hash__ = None  # type: ignore[assignment]


def quotient_category(p: CongruencePartition) -> Quotient:
    validate_partition(p).raise_if_failed()
    c = p.base
    mors = {cid: (c.src[p.rep_of(cid)], c.tgt[p.rep_of(cid)]) for cid in p.members}
    comp = {}
    for u in p.members:
        for v in p.members:
            if mors[u][0] == mors[v][1]:
                comp[u, v] = p.class_of[c.comp[p.rep_of(u), p.rep_of(v)]]
    ident = {x: p.class_of[c.ident[x]] for x in c.objects}
    name = f"{c.name}/~" if c.name else ""
    q = FiniteCategory.create(c.objects, mors, ident, comp, name=name)
    return Quotient(p, q)


def projection_functor(q: Quotient) -> Functor:
    c = q.partition.base
    return Functor(c, q.category, {x: x for x in c.objects}, dict(q.partition.class_of))


def kernel_rel(f: Functor) -> CatRel:
    validate_functor(f).raise_if_failed()
    return CatRel(f.dom, kernel_pairs(f))


def factor_through_quotient(q: Quotient, f: Functor) -> Functor:
    """The unique functor ``h`` from the quotient with ``h * projection == f``."""
    p = q.partition
    if f.dom != p.base:
        raise CategoryError("functor source is not the quotiented category")
    for ms in p.members.values():
        for m in ms[1:]:
            if f.on_morphisms[m] != f.on_morphisms[ms[0]]:
                raise CategoryError(f"incompatible: ({ms[0]}, {m}) is not in the kernel")
    return Functor(
        q.category, f.cod,
        dict(f.on_objects),
        {cid: f.on_morphisms[p.rep_of(cid)] for cid in p.members},
    )


def discrete_partition(c: FiniteCategory) -> CongruencePartition:
    return partition_from_blocks(c, [[m] for m in c.morphisms])

