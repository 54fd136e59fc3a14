"""Localization by generators and relations (zigzag words).

Words are chains over the zigzag graph: one forward edge per morphism and
one backward edge per system member.  The localized category itself is
never tabulated; equality of words is decided through the fraction
category when the system admits a left calculus, and otherwise searched
for by bounded rewriting.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .core import CategoryError, Edge, FiniteCategory, FiniteGraph, MorphId, MultSystem, ObjId, invert
from .freecat import Chain, chain_comp, chain_edge, chain_id, compose_chain
from .functors import Functor
from .leftfrac import FractionCategory, build_left_frac_cat, has_left_fractions_check, lf_proj_functor

FORWARD = "F"
BACKWARD = "B"


@dataclass(frozen=True, order=True)
class Step:
    direction: str
    original: MorphId

    def __str__(self) -> str:
        return f"{self.direction}({self.original})"


def forward_arrow(c: FiniteCategory, u: MorphId) -> Edge:
    return Edge(Step(FORWARD, u), c.src[u], c.tgt[u])


def backward_arrow(s: MultSystem, q: MorphId) -> Edge:
    if q not in s.members:
        raise CategoryError(f"backward step needs a system member, got {q}")
    c = s.base
    return Edge(Step(BACKWARD, q), c.tgt[q], c.src[q])


def forward_edge(c: FiniteCategory, u: MorphId) -> Chain:
    return chain_edge(forward_arrow(c, u))


def backward_edge(s: MultSystem, q: MorphId) -> Chain:
    return chain_edge(backward_arrow(s, q))


def gz_graph(s: MultSystem) -> FiniteGraph:
    c = s.base
    for m in s.members:
        if m not in c.src:
            raise CategoryError(f"system member {m} is not a morphism")
    edges = [forward_arrow(c, u) for u in c.morphisms]
    edges += [backward_arrow(s, q) for q in s.sorted_members()]
    return FiniteGraph(c.objects, edges)


def word(s: MultSystem, start: ObjId, *steps: Step) -> Chain:
    """Build a word from steps in traversal order."""
    c = s.base
    segs = []
    for st in steps:
        segs.append(forward_arrow(c, st.original) if st.direction == FORWARD
                    else backward_arrow(s, st.original))
    end = segs[-1].tgt if segs else start
    return Chain(start, end, tuple(segs))


def gz_proj_word(c: FiniteCategory, u: MorphId) -> Chain:
    return forward_edge(c, u)


def relation_generators(s: MultSystem) -> Iterator[tuple[Chain, Chain]]:
    """The four generator families, each pair with equal endpoints."""
    c = s.base
    for x in c.objects:
        yield forward_edge(c, c.ident[x]), chain_id(x)
    for q in s.sorted_members():
        yield chain_comp(forward_edge(c, q), backward_edge(s, q)), chain_id(c.tgt[q])
    for q in s.sorted_members():
        yield chain_comp(backward_edge(s, q), forward_edge(c, q)), chain_id(c.src[q])
    for u, v in sorted(c.comp):
        yield chain_comp(forward_edge(c, u), forward_edge(c, v)), forward_edge(c, c.comp[u, v])


# --------------------------------------------------------------------------
# evaluation

def check_loc_compatible(f: Functor, s: MultSystem) -> MorphId | None:
    """First member whose image is not invertible, or None."""
    if f.dom != s.base:
        raise CategoryError("functor does not start at the base category")
    for q in s.sorted_members():
        if invert(f.cod, f.on_morphisms[q]) is None:
            return q
    return None


def eval_zigzag(f: Functor, s: MultSystem, w: Chain) -> MorphId:
    bad = check_loc_compatible(f, s)
    if bad is not None:
        raise CategoryError(f"image of member {bad} is not invertible")
    inverses: dict[MorphId, MorphId] = {}

    def on_edge(step: Step) -> MorphId:
        image = f.on_morphisms[step.original]
        if step.direction == FORWARD:
            return image
        if image not in inverses:
            inverses[image] = invert(f.cod, image)
        return inverses[image]

    return compose_chain(f.cod, w, on_edge, f.on_objects)


# --------------------------------------------------------------------------
# equality

class Verdict(enum.Enum):
    EQUAL = "Equal"
    UNEQUAL = "Unequal"
    UNKNOWN = "Unknown"


class Rewriter:
    """One-step rewrites of words under the generator pairs, both directions."""

    def __init__(self, s: MultSystem):
        self.s = s
        c = self.c = s.base
        self.members = s.sorted_members()
        # F(w) -> F(v) F(u) for every factorization w = u * v
        self.factorizations: dict[MorphId, list[tuple[MorphId, MorphId]]] = {}
        for (u, v), w in sorted(c.comp.items()):
            self.factorizations.setdefault(w, []).append((u, v))
        self.inserts: dict[ObjId, list[tuple[Step, ...]]] = {}
        for x in c.objects:
            ins = [(Step(FORWARD, c.ident[x]),)]
            ins += [(Step(BACKWARD, q), Step(FORWARD, q)) for q in self.members if c.tgt[q] == x]
            ins += [(Step(FORWARD, q), Step(BACKWARD, q)) for q in self.members if c.src[q] == x]
            self.inserts[x] = ins

    def vertices(self, start: ObjId, steps: tuple[Step, ...]) -> list[ObjId]:
        c = self.c
        out = [start]
        for st in steps:
            out.append(c.tgt[st.original] if st.direction == FORWARD else c.src[st.original])
        return out

    def neighbours(self, start: ObjId, steps: tuple[Step, ...]) -> Iterator[tuple[Step, ...]]:
        c = self.c
        verts = self.vertices(start, steps)
        n = len(steps)
        for i in range(n + 1):
            for ins in self.inserts[verts[i]]:
                yield steps[:i] + ins + steps[i:]
        for i, st in enumerate(steps):
            if st.direction == FORWARD:
                if c.is_identity(st.original):
                    yield steps[:i] + steps[i + 1:]
                for u, v in self.factorizations.get(st.original, ()):
                    yield steps[:i] + (Step(FORWARD, v), Step(FORWARD, u)) + steps[i + 1:]
            if i + 1 < n:
                nxt = steps[i + 1]
                if st.original == nxt.original and st.direction != nxt.direction:
                    yield steps[:i] + steps[i + 2:]
                if st.direction == FORWARD and nxt.direction == FORWARD:
                    w = c.comp[nxt.original, st.original]
                    yield steps[:i] + (Step(FORWARD, w),) + steps[i + 2:]


def rewrite_ball(s: MultSystem, w: Chain, radius: int, rewriter: Rewriter | None = None) -> set[Chain]:
    """Every word reachable from ``w`` in at most ``radius`` rewrites."""
    rw = rewriter or Rewriter(s)
    start = w.src
    seen = {_steps(w)}
    frontier = [_steps(w)]
    for _ in range(radius):
        nxt = []
        for steps in frontier:
            for n in rw.neighbours(start, steps):
                if n not in seen:
                    seen.add(n)
                    nxt.append(n)
        frontier = nxt
    return {word(s, start, *steps) for steps in seen}


def _steps(w: Chain) -> tuple[Step, ...]:
    return tuple(e.id for e in w.segments)


def gz_search(s: MultSystem, w1: Chain, w2: Chain, bound: int,
              rewriter: Rewriter | None = None) -> Verdict:
    """Bidirectional breadth-first rewriting; Equal or Unknown, never Unequal."""
    rw = rewriter or Rewriter(s)
    a, b = _steps(w1), _steps(w2)
    if a == b:
        return Verdict.EQUAL
    start = w1.src
    seen = [{a: 0}, {b: 0}]
    frontiers = [deque([a]), deque([b])]
    depth = [0, 0]
    while depth[0] + depth[1] < bound:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        if not frontiers[side]:
            side = 1 - side
            if not frontiers[side]:
                break
        other = seen[1 - side]
        nxt: deque = deque()
        for steps in frontiers[side]:
            for n in rw.neighbours(start, steps):
                if n in other:
                    return Verdict.EQUAL
                if n not in seen[side]:
                    seen[side][n] = depth[side] + 1
                    nxt.append(n)
        frontiers[side] = nxt
        depth[side] += 1
    return Verdict.UNKNOWN


def gz_equal(s: MultSystem, w1: Chain, w2: Chain, bound: int = 4,
             fractions: FractionCategory | None = None) -> Verdict:
    """Decide equality of two words in the localization.

    Exact through the fraction category when the system has a left
    calculus; otherwise bounded rewriting, which may answer Unknown.
    """
    if (w1.src, w1.tgt) != (w2.src, w2.tgt):
        raise CategoryError("words have different endpoints")
    if fractions is None and has_left_fractions_check(s):
        fractions = build_left_frac_cat(s)
    if fractions is not None:
        proj = lf_proj_functor(fractions)
        same = eval_zigzag(proj, s, w1) == eval_zigzag(proj, s, w2)
        return Verdict.EQUAL if same else Verdict.UNEQUAL
    return gz_search(s, w1, w2, bound)


def format_word(s: MultSystem, w: Chain) -> str:
    """Render as ``x -f-> y <-q- z``."""
    parts = [w.src]
    for e in w.segments:
        st = e.id
        arrow = f"-{st.original}->" if st.direction == FORWARD else f"<-{st.original}-"
        parts += [arrow, e.tgt]
    return " ".join(str(p) for p in parts)


def parse_word(s: MultSystem, text: str) -> Chain:
    c = s.base
    toks = text.split()
    if not toks or len(toks) % 2 == 0:
        raise CategoryError(f"malformed word: {text!r}")
    start = toks[0]
    if start not in c.ident:
        raise CategoryError(f"unknown object {start!r}")
    steps = []
    here = start
    for arrow, there in zip(toks[1::2], toks[2::2]):
        if arrow.startswith("<-") and arrow.endswith("-") and len(arrow) > 3:
            st = Step(BACKWARD, arrow[2:-1])
        elif arrow.startswith("-") and arrow.endswith("->") and len(arrow) > 3:
            st = Step(FORWARD, arrow[1:-2])
        else:
            raise CategoryError(f"malformed arrow {arrow!r}")
        if st.original not in c.src:
            raise CategoryError(f"unknown morphism {st.original!r}")
        ends = (c.src[st.original], c.tgt[st.original])
        if st.direction == BACKWARD:
            ends = ends[::-1]
        if ends != (here, there):
            raise CategoryError(f"step {arrow} does not run {here} -> {there}")
        steps.append(st)
        here = there
    return word(s, start, *steps)
