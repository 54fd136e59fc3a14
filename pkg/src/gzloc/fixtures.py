"""Built-in categories: coarse categories, the beyond/under counterexample,
small named shapes, and seeded random categories for fuzzing."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .core import FiniteCategory, MultSystem, validate_category, validate_mult_system
from .functors import subcategory
from .leftfrac import (
    Symbol, all_symbols, has_left_fractions_check, is_symbol, lf_beyond, lf_under,
    under_set, vertex,
)
from .quotient import CatRel, congruence_closure, quotient_category


def null_arrow(a: str, b: str) -> str:
    return f"na{a}{b}"


def coarse_cat(z: Iterable[str], name: str = "") -> FiniteCategory:
    """Exactly one morphism between each ordered pair of objects."""
    objs = sorted(set(z))
    mors = {null_arrow(a, b): (a, b) for a in objs for b in objs}
    comp = {(null_arrow(b, c), null_arrow(a, b)): null_arrow(a, c)
            for a in objs for b in objs for c in objs}
    ident = {a: null_arrow(a, a) for a in objs}
    return FiniteCategory.create(objs, mors, ident, comp, name=name or f"coarse{len(objs)}")


CX_MORPHISMS = ("na00", "na11", "na22", "na01", "na02", "na12", "na21")
CX_SYSTEM = ("na00", "na11", "na22", "na01", "na02")


def build_cx_with_sys() -> tuple[FiniteCategory, MultSystem]:
    full = coarse_cat(["0", "1", "2"])
    cx = subcategory(full, full.objects, CX_MORPHISMS, name="cx")
    return cx, MultSystem(cx, CX_SYSTEM)


LF110 = Symbol("na11", "na01")
LF120 = Symbol("na12", "na02")


@dataclass
class CheckReport:
    title: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def lines(self) -> list[str]:
        out = []
        for name, ok, detail in self.checks:
            line = f"{'PASS' if ok else 'FAIL'} {name}"
            out.append(f"{line}: {detail}" if detail else line)
        return out


def verify_counterexample() -> CheckReport:
    """A symbol beyond another with no common symbol under both."""
    cx, s = build_cx_with_sys()
    rep = CheckReport("beyond does not imply a common under")
    rep.record("cx is a category", validate_category(cx).ok, f"{len(cx.morphisms)} morphisms")
    rep.record("cx_sys is multiplicative", validate_mult_system(s).ok, f"{len(s.members)} members")
    rep.record("has left fractions", has_left_fractions_check(s).ok)
    rep.record("lf110 is a symbol", is_symbol(s, LF110), str(LF110))
    rep.record("lf120 is a symbol", is_symbol(s, LF120), str(LF120))
    rep.record("vertex of lf110 is 1", vertex(cx, LF110) == "1")
    rep.record("vertex of lf120 is 2", vertex(cx, LF120) == "2")
    rep.record("lf110 != lf120", LF110 != LF120)
    rep.record("lf110 beyond lf120", lf_beyond(s, LF110, LF120))
    rep.record("under lf110 is only lf110", under_set(s, LF110) == {LF110})
    rep.record("under lf120 is only lf120", under_set(s, LF120) == {LF120})
    common = [w for w in all_symbols(s) if lf_under(s, LF110, w) and lf_under(s, LF120, w)]
    rep.record("no common under", not common,
               f"searched {len(all_symbols(s))} symbols, found {len(common)}")
    return rep


# --------------------------------------------------------------------------
# small named shapes

def terminal_category() -> FiniteCategory:
    return FiniteCategory.create(["x"], {"1x": ("x", "x")}, {"x": "1x"},
                                 {("1x", "1x"): "1x"}, name="terminal")


def walking_arrow() -> FiniteCategory:
    mors = {"1x": ("x", "x"), "1y": ("y", "y"), "q": ("x", "y")}
    comp = {("1x", "1x"): "1x", ("1y", "1y"): "1y", ("q", "1x"): "q", ("1y", "q"): "q"}
    return FiniteCategory.create(["x", "y"], mors, {"x": "1x", "y": "1y"}, comp,
                                 name="walking_arrow")


def walking_iso() -> FiniteCategory:
    mors = {"1x": ("x", "x"), "1y": ("y", "y"), "q": ("x", "y"), "qi": ("y", "x")}
    comp = {("1x", "1x"): "1x", ("1y", "1y"): "1y",
            ("q", "1x"): "q", ("1y", "q"): "q", ("qi", "1y"): "qi", ("1x", "qi"): "qi",
            ("qi", "q"): "1x", ("q", "qi"): "1y"}
    return FiniteCategory.create(["x", "y"], mors, {"x": "1x", "y": "1y"}, comp,
                                 name="walking_iso")


def idempotent_monoid() -> FiniteCategory:
    """One object, ``e * e == e``."""
    mors = {"1": ("o", "o"), "e": ("o", "o")}
    comp = {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "e", ("e", "e"): "e"}
    return FiniteCategory.create(["o"], mors, {"o": "1"}, comp, name="idempotent")


def path3() -> FiniteCategory:
    """The poset ``a < b < c``."""
    return poset_category(["a", "b", "c"], [("a", "b"), ("b", "c")],
                          name="path3")


def poset_category(objects, order: Iterable[tuple[str, str]], name: str = "") -> FiniteCategory:
    """Thin category of the reflexive-transitive closure of ``order``."""
    objs = sorted(objects)
    rel = {(x, x) for x in objs} | set(order)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    name_of = {(a, b): (f"id{a}" if a == b else f"{a}{b}") for a, b in rel}
    mors = {name_of[p]: p for p in rel}
    comp = {(name_of[b, c], name_of[a, b]): name_of[a, c]
            for (a, b) in rel for (b2, c) in rel if b == b2}
    return FiniteCategory.create(objs, mors, {x: name_of[x, x] for x in objs}, comp, name=name)


def fraction_fixtures() -> list[tuple[str, MultSystem]]:
    """Systems with a left calculus used throughout the tests."""
    cx, cx_sys = build_cx_with_sys()
    t = terminal_category()
    wa = walking_arrow()
    wi = walking_iso()
    em = idempotent_monoid()
    p3 = path3()
    return [
        ("terminal", MultSystem(t, t.morphisms)),
        ("walking_arrow/all", MultSystem(wa, wa.morphisms)),
        ("walking_arrow/ids", MultSystem(wa, wa.ident.values())),
        ("walking_iso/all", MultSystem(wi, wi.morphisms)),
        ("idempotent/all", MultSystem(em, em.morphisms)),
        ("path3/ab", MultSystem(p3, list(p3.ident.values()) + ["ab"])),
        ("cx/cx_sys", cx_sys),
    ]


# --------------------------------------------------------------------------
# random categories

def _concrete_category(rng: random.Random, n: int, budget: int, max_hom: int):
    """Subcategory of finite sets generated by a few random maps."""
    sizes = [rng.choice((1, 2, 2, 3)) if n == 1 else rng.choice((1, 2)) for _ in range(n)]
    objs = [str(i) for i in range(n)]
    idents = {(i, i, tuple(range(sizes[i]))) for i in range(n)}

    def close(gens):
        mors = set(idents) | set(gens)
        frontier = set(mors)
        while frontier:
            new = set()
            for (a, b, f) in frontier:
                for (c, d, g) in list(mors):
                    if b == c:
                        new.add((a, d, tuple(g[k] for k in f)))
                    if d == a:
                        new.add((c, b, tuple(f[k] for k in g)))
            new -= mors
            mors |= new
            frontier = new
            if len(mors) - n > budget:
                return None
        homs: dict = {}
        for a, b, _ in mors:
            homs[a, b] = homs.get((a, b), 0) + 1
        if max(homs.values()) > max_hom:
            return None
        return mors

    gens = []
    for _ in range(rng.randint(1, max(1, budget))):
        a, b = rng.randrange(n), rng.randrange(n)
        f = tuple(rng.randrange(sizes[b]) for _ in range(sizes[a]))
        trial = gens + [(a, b, f)]
        if close(trial) is not None:
            gens = trial
    mors = close(gens)
    ordered = sorted(mors)
    name = {}
    k = 0
    for a, b, f in ordered:
        if (a, b, f) in idents:
            name[a, b, f] = f"1{a}"
        else:
            name[a, b, f] = f"m{k}"
            k += 1
    table = {name[m]: (objs[m[0]], objs[m[1]]) for m in ordered}
    comp = {}
    for (a, b, f) in ordered:
        for (c, d, g) in ordered:
            if b == c:
                comp[name[c, d, g], name[a, b, f]] = name[a, d, tuple(g[i] for i in f)]
    ident = {objs[i]: f"1{i}" for i in range(n)}
    return FiniteCategory.create(objs, table, ident, comp)


def _preorder_category(rng: random.Random, n: int, budget: int) -> FiniteCategory:
    objs = [str(i) for i in range(n)]
    pairs = [(a, b) for a in objs for b in objs if a != b]
    rng.shuffle(pairs)
    order: list = []
    for p in pairs[: rng.randint(0, len(pairs))]:
        trial = poset_category(objs, order + [p])
        if len(trial.morphisms) - n <= budget:
            order.append(p)
    return poset_category(objs, order)


def _renamed(c: FiniteCategory, name: str) -> FiniteCategory:
    """Replace tokens by short stable names (identities ``1x``, others ``m0..``)."""
    ren = {c.ident[x]: f"1{x}" for x in c.objects}
    k = 0
    for m in c.morphisms:
        if m not in ren:
            ren[m] = f"m{k}"
            k += 1
    return FiniteCategory.create(
        c.objects,
        {ren[m]: (c.src[m], c.tgt[m]) for m in c.morphisms},
        {x: ren[i] for x, i in c.ident.items()},
        {(ren[u], ren[v]): ren[w] for (u, v), w in c.comp.items()},
        name=name,
    )


def random_category(seed: int, max_objects: int = 3, max_extra_morphisms: int = 8,
                    max_hom: int = 3, quotient_prob: float = 0.3) -> FiniteCategory:
    """Reproducible random finite category.

    Either a preorder or a category of small finite sets generated by random
    maps; sometimes further quotiented by the congruence generated by one
    random parallel pair.  At most ``max_extra_morphisms`` non-identities.
    """
    if max_objects < 1 or max_extra_morphisms < 0:
        raise ValueError("budgets must be positive")
    rng = random.Random(seed)
    n = rng.randint(1, max_objects)
    if n > 1 and rng.random() < 0.35:
        c = _preorder_category(rng, n, max_extra_morphisms)
    else:
        c = _concrete_category(rng, n, max_extra_morphisms, max_hom)
    if rng.random() < quotient_prob:
        parallel = [(u, v) for u in c.morphisms for v in c.morphisms
                    if u < v and c.src[u] == c.src[v] and c.tgt[u] == c.tgt[v]]
        if parallel:
            pair = rng.choice(parallel)
            c = quotient_category(congruence_closure(CatRel(c, [pair]))).category
    return _renamed(c, f"random{seed}")


def random_system(c: FiniteCategory, seed: int, with_identities: bool = True) -> MultSystem:
    """Composition closure of a random subset of morphisms."""
    rng = random.Random(seed)
    chosen = {m for m in c.morphisms if rng.random() < 0.4}
    if with_identities:
        chosen |= set(c.ident.values())
    changed = True
    while changed:
        changed = False
        for (u, v), w in c.comp.items():
            if u in chosen and v in chosen and w not in chosen:
                chosen.add(w)
                changed = True
    return MultSystem(c, chosen)
