"""Finite graphs, finite categories and multiplicative systems.

Objects and morphisms are opaque string tokens.  A category stores its
composition as an explicit partial table keyed by ``(u, v)`` meaning
``u`` after ``v``; the entry is present exactly when ``src(u) == tgt(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Hashable, Iterable, Iterator, Mapping

ObjId = str
MorphId = str


class CategoryError(ValueError):
    """Raised when an operation receives structurally invalid input."""


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    witness: tuple = ()

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


@dataclass
class Report:
    """Outcome of a validation pass; truthy iff nothing was violated."""

    subject: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def add(self, kind: str, message: str, *witness) -> None:
        self.violations.append(Violation(kind, message, tuple(witness)))

    def raise_if_failed(self) -> None:
        if self.violations:
            raise CategoryError(f"invalid {self.subject}: {self.violations[0]}")

    def lines(self) -> list[str]:
        if self.ok:
            return [f"{self.subject}: ok"]
        return [f"{self.subject}: {v}" for v in self.violations]


# --------------------------------------------------------------------------
# graphs

@dataclass(frozen=True, order=True)
class Edge:
    id: Hashable
    src: ObjId
    tgt: ObjId


@dataclass(frozen=True)
class FiniteGraph:
    vertices: frozenset
    edges: tuple[Edge, ...]

    def __init__(self, vertices: Iterable[ObjId], edges: Iterable[Edge]):
        object.__setattr__(self, "vertices", frozenset(vertices))
        object.__setattr__(self, "edges", tuple(edges))

    def out_edges(self, x: ObjId) -> list[Edge]:
        return [e for e in self.edges if e.src == x]


def validate_graph(g: FiniteGraph) -> Report:
    report = Report("graph")
    seen: set = set()
    for e in g.edges:
        if e.id in seen:
            report.add("duplicate edge", f"edge id {e.id!r} occurs twice", e.id)
        seen.add(e.id)
        for end in ("src", "tgt"):
            if getattr(e, end) not in g.vertices:
                report.add("dangling edge",
                           f"{end} {getattr(e, end)!r} of edge {e.id!r} is not a vertex", e.id)
    return report


# --------------------------------------------------------------------------
# categories

@dataclass(frozen=True)
class FiniteCategory:
    """A finite category given by explicit tables.

    ``comp[(u, v)]`` is ``u`` after ``v``.  Construction does not check the
    axioms; call :func:`validate_category` for that.
    """

    objects: tuple[ObjId, ...]
    morphisms: tuple[MorphId, ...]
    src: Mapping[MorphId, ObjId]
    tgt: Mapping[MorphId, ObjId]
    ident: Mapping[ObjId, MorphId]
    comp: Mapping[tuple[MorphId, MorphId], MorphId]
    name: str = field(default="", compare=False)

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def create(cls, objects, morphisms, ident, comp, name=""):
        """Build from ``morphisms = {id: (src, tgt)}`` and a comp mapping."""
        morphisms = dict(morphisms)
        return cls(
            objects=tuple(sorted(objects)),
            morphisms=tuple(sorted(morphisms)),
            src={m: st[0] for m, st in morphisms.items()},
            tgt={m: st[1] for m, st in morphisms.items()},
            ident=dict(ident),
            comp=dict(comp),
            name=name,
        )

    def compose(self, u: MorphId, v: MorphId) -> MorphId:
        try:
            return self.comp[u, v]
        except KeyError:
            raise CategoryError(f"{u} * {v} is not defined in {self.name or 'category'}") from None

    def compose_all(self, *ms: MorphId) -> MorphId:
        """``compose_all(a, b, c) == a * (b * c)``."""
        result = ms[-1]
        for m in reversed(ms[:-1]):
            result = self.compose(m, result)
        return result

    def hom(self, x: ObjId, y: ObjId) -> list[MorphId]:
        return [m for m in self.morphisms if self.src[m] == x and self.tgt[m] == y]

    def composable_pairs(self) -> Iterator[tuple[MorphId, MorphId]]:
        for u in self.morphisms:
            for v in self.morphisms:
                if self.src[u] == self.tgt[v]:
                    yield u, v

    def is_identity(self, m: MorphId) -> bool:
        return self.ident.get(self.src[m]) == m

    def __len__(self) -> int:
        return len(self.morphisms)


def validate_category(c: FiniteCategory) -> Report:
    report = Report(f"category {c.name}".strip())
    objs = set(c.objects)
    mors = set(c.morphisms)
    if len(objs) != len(c.objects):
        report.add("duplicate object", "object list has repeats")
    if len(mors) != len(c.morphisms):
        report.add("duplicate morphism", "morphism list has repeats")
    for m in c.morphisms:
        if m not in c.src or m not in c.tgt:
            report.add("endpoints", f"{m} lacks a source or target", m)
        elif c.src[m] not in objs or c.tgt[m] not in objs:
            report.add("endpoints", f"endpoint of {m} is not an object", m)
    if not report.ok:
        return report
    for x in c.objects:
        i = c.ident.get(x)
        if i is None or i not in mors:
            report.add("identity", f"object {x} has no identity morphism", x)
        elif c.src[i] != x or c.tgt[i] != x:
            report.add("identity", f"identity {i} of {x} is not an endomorphism of {x}", x, i)
    for key, w in c.comp.items():
        u, v = key
        if u not in mors or v not in mors:
            report.add("composition", f"table entry {u} * {v} mentions a non-morphism", u, v)
        elif c.src[u] != c.tgt[v]:
            report.add("composition", f"table entry {u} * {v} is not composable", u, v)
    if not report.ok:
        return report
    for u, v in c.composable_pairs():
        w = c.comp.get((u, v))
        if w is None:
            report.add("composition", f"{u} * {v} is missing", u, v)
        elif w not in mors:
            report.add("composition", f"{u} * {v} = {w} is not a morphism", u, v)
        elif c.src[w] != c.src[v] or c.tgt[w] != c.tgt[u]:
            report.add("composition endpoints", f"{u} * {v} = {w} has wrong endpoints", u, v)
    if not report.ok:
        return report
    for u in c.morphisms:
        if c.comp[c.ident[c.tgt[u]], u] != u:
            report.add("left identity", f"id * {u} != {u}", u)
        if c.comp[u, c.ident[c.src[u]]] != u:
            report.add("right identity", f"{u} * id != {u}", u)
    for u, v in c.composable_pairs():
        uv = c.comp[u, v]
        for w in c.morphisms:
            if c.tgt[w] == c.src[v] and c.comp[uv, w] != c.comp[u, c.comp[v, w]]:
                report.add("associativity", f"({u} * {v}) * {w} != {u} * ({v} * {w})", u, v, w)
    return report


def opposite(c: FiniteCategory) -> FiniteCategory:
    validate_category(c).raise_if_failed()
    name = c.name[:-3] if c.name.endswith("^op") else (c.name + "^op" if c.name else "")
    return FiniteCategory(
        objects=c.objects,
        morphisms=c.morphisms,
        src=dict(c.tgt),
        tgt=dict(c.src),
        ident=dict(c.ident),
        comp={(v, u): w for (u, v), w in c.comp.items()},
        name=name,
    )


def invert(c: FiniteCategory, u: MorphId) -> MorphId | None:
    if u not in c.src:
        raise CategoryError(f"{u} is not a morphism")
    x, y = c.src[u], c.tgt[u]
    for v in c.hom(y, x):
        if c.comp[u, v] == c.ident[y] and c.comp[v, u] == c.ident[x]:
            return v
    return None


# --------------------------------------------------------------------------
# multiplicative systems

@dataclass(frozen=True)
class MultSystem:
    base: FiniteCategory
    members: frozenset

    __hash__ = None  # type: ignore[assignment]

    def __init__(self, base: FiniteCategory, members: Iterable[MorphId]):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "members", frozenset(members))

    def __contains__(self, m: MorphId) -> bool:
        return m in self.members

    def sorted_members(self) -> list[MorphId]:
        return sorted(self.members)


def validate_mult_system(s: MultSystem) -> Report:
    """Members are morphisms and the set is closed under composition."""
    report = Report("multiplicative system")
    c = s.base
    for m in sorted(s.members):
        if m not in c.src:
            report.add("localizing", f"{m} is not a morphism of the base", m)
    if not report.ok:
        return report
    members = s.sorted_members()
    for y, z in product(members, members):
        if c.src[y] == c.tgt[z] and c.comp[y, z] not in s.members:
            report.add("closure", f"{y} * {z} = {c.comp[y, z]} is not a member", y, z)
            break
    return report


def oppms(s: MultSystem) -> MultSystem:
    validate_mult_system(s).raise_if_failed()
    return MultSystem(opposite(s.base), s.members)


def identity_members(c: FiniteCategory) -> MultSystem:
    return MultSystem(c, c.ident.values())


def all_members(c: FiniteCategory) -> MultSystem:
    return MultSystem(c, c.morphisms)
