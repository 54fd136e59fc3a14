"""Arrow chains: the free category on a finite graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .core import CategoryError, Edge, FiniteCategory, FiniteGraph, MorphId, ObjId


@dataclass(frozen=True)
class Chain:
    """A path in a graph, segments listed in traversal order.

    ``segments[0]`` leaves ``src``; the last segment arrives at ``tgt``.
    """

    src: ObjId
    tgt: ObjId
    segments: tuple[Edge, ...] = ()

    def __post_init__(self):
        if not is_arrow_chain(self):
            raise CategoryError(f"segments do not form a chain {self.src} -> {self.tgt}")

    def __len__(self) -> int:
        return len(self.segments)

    def object_number(self, i: int) -> ObjId:
        """Vertex reached after ``i`` segments."""
        if i == len(self.segments):
            return self.tgt
        return self.segments[i].src


def is_arrow_chain(u: Chain) -> bool:
    segs = u.segments
    if not segs:
        return u.src == u.tgt
    if segs[0].src != u.src or segs[-1].tgt != u.tgt:
        return False
    return all(segs[i + 1].src == segs[i].tgt for i in range(len(segs) - 1))


def seg_length(u: Chain) -> int:
    return len(u.segments)


def chain_id(x: ObjId) -> Chain:
    return Chain(x, x, ())


def chain_edge(e: Edge) -> Chain:
    return Chain(e.src, e.tgt, (e,))


def chain_comp(u: Chain, v: Chain) -> Chain:
    """``u`` after ``v``."""
    if u.src != v.tgt:
        raise CategoryError(f"cannot compose chains: {u.src} != {v.tgt}")
    return Chain(v.src, u.tgt, v.segments + u.segments)


def chain_tack(e: Edge, u: Chain) -> Chain:
    return chain_comp(chain_edge(e), u)


def chain_restrict(i: int, u: Chain) -> Chain:
    if not 0 <= i <= len(u):
        raise CategoryError(f"restriction index {i} outside 0..{len(u)}")
    return Chain(u.src, u.object_number(i), u.segments[:i])


def chain_map(on_vertices: Mapping | Callable, on_edges: Mapping | Callable, u: Chain) -> Chain:
    """Relabel a chain along a graph morphism given as vertex and edge maps.

    The edge map sends an edge to an :class:`Edge` of the target graph.
    """
    fv = on_vertices if callable(on_vertices) else on_vertices.__getitem__
    fe = on_edges if callable(on_edges) else on_edges.__getitem__
    return Chain(fv(u.src), fv(u.tgt), tuple(fe(e) for e in u.segments))


def compose_chain(c: FiniteCategory, u: Chain, on_edges: Mapping | Callable,
                  on_vertices: Mapping | Callable | None = None) -> MorphId:
    """Evaluate a chain in ``c`` by folding composition left to right.

    ``on_edges`` maps an edge id to a morphism of ``c``; vertices map through
    ``on_vertices`` (identity when omitted).
    """
    fe = on_edges if callable(on_edges) else _lookup(on_edges, "edge")
    if on_vertices is None:
        fv = lambda x: x  # noqa: E731
    else:
        fv = on_vertices if callable(on_vertices) else _lookup(on_vertices, "vertex")
    start = fv(u.src)
    if start not in c.ident:
        raise CategoryError(f"vertex image {start!r} is not an object")
    result = c.ident[start]
    for e in u.segments:
        m = fe(e.id)
        if m not in c.src:
            raise CategoryError(f"edge {e.id!r} evaluates to non-morphism {m!r}")
        if c.src[m] != fv(e.src) or c.tgt[m] != fv(e.tgt):
            raise CategoryError(f"edge {e.id!r} evaluates to {m} with mismatched endpoints")
        result = c.compose(m, result)
    return result


def _lookup(mapping: Mapping, what: str):
    def get(key):
        try:
            return mapping[key]
        except KeyError:
            raise CategoryError(f"no value for {what} {key!r}") from None
    return get


@dataclass(frozen=True)
class GraphMorphismMap:
    on_vertices: Mapping[ObjId, ObjId]
    on_edges: Mapping

    __hash__ = None  # type: ignore[assignment]


def check_free_functor_property(g: FiniteGraph, c: FiniteCategory, m: GraphMorphismMap):
    """Return the first edge whose image does not commute with endpoints, else None."""
    for e in g.edges:
        if e.id not in m.on_edges:
            return e
        f = m.on_edges[e.id]
        if f not in c.src:
            return e
        if c.src[f] != m.on_vertices.get(e.src) or c.tgt[f] != m.on_vertices.get(e.tgt):
            return e
    return None


def free_functor_apply(g: FiniteGraph, c: FiniteCategory, m: GraphMorphismMap, u: Chain) -> MorphId:
    bad = check_free_functor_property(g, c, m)
    if bad is not None:
        raise CategoryError(f"edge {bad.id!r} does not map to a morphism with matching endpoints")
    return compose_chain(c, u, m.on_edges, m.on_vertices)


def enumerate_chains(g: FiniteGraph, x: ObjId, y: ObjId, max_len: int) -> list[Chain]:
    """All chains ``x -> y`` with at most ``max_len`` segments, shortest first."""
    out: list[Chain] = []
    by_src: dict[ObjId, list[Edge]] = {}
    for e in sorted(g.edges, key=lambda e: (str(e.id), e.src, e.tgt)):
        by_src.setdefault(e.src, []).append(e)

    level: list[tuple[ObjId, tuple[Edge, ...]]] = [(x, ())]
    for n in range(max_len + 1):
        out.extend(Chain(x, y, segs) for end, segs in level if end == y)
        if n == max_len:
            break
        level = [(e.tgt, segs + (e,)) for end, segs in level for e in by_src.get(end, ())]
    return out


def iter_all_chains(g: FiniteGraph, max_len: int) -> Iterator[Chain]:
    for x in sorted(g.vertices):
        for y in sorted(g.vertices):
            yield from enumerate_chains(g, x, y, max_len)


def is_acyclic(g: FiniteGraph) -> bool:
    indeg = {v: 0 for v in g.vertices}
    for e in g.edges:
        indeg[e.tgt] += 1
    ready = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for e in g.edges:
            if e.src == v:
                indeg[e.tgt] -= 1
                if indeg[e.tgt] == 0:
                    ready.append(e.tgt)
    return seen == len(g.vertices)


def hom_chains(g: FiniteGraph, x: ObjId, y: ObjId) -> list[Chain]:
    """The complete hom-set of the free category; only for acyclic graphs."""
    if not is_acyclic(g):
        raise CategoryError("free category on a cyclic graph has infinite hom-sets")
    return enumerate_chains(g, x, y, len(g.edges))
