"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s`` or as
``python3 -m tests.test_acceptance``.
"""

import random
import time
from itertools import product

import pytest

from gzloc.core import (
    Edge, FiniteCategory, FiniteGraph, MultSystem, opposite, oppms, validate_category,
)
from gzloc.fixtures import (
    LF110, LF120, build_cx_with_sys, coarse_cat, fraction_fixtures, idempotent_monoid, path3,
    random_category, random_system, terminal_category, verify_counterexample, walking_arrow,
    walking_iso,
)
from gzloc.freecat import Chain, GraphMorphismMap, compose_chain, free_functor_apply, iter_all_chains
from gzloc.functors import add_inverses, generates_check, mor_image
from gzloc.gz import Rewriter, Verdict, eval_zigzag, gz_equal, gz_graph, gz_search, relation_generators, rewrite_ball
from gzloc.leftfrac import (
    all_symbols, build_left_frac_cat, has_left_fractions_check, has_right_fractions,
    lf_beyond, lf_comp_rep, lf_equiv_decide, lf_id_rep, lf_proj_functor, lf_under, sym_src,
    sym_tgt, verify_fraction_description,
)
from gzloc.quotient import CatRel, congruence_closure
from gzloc.universal import check_universal_property

from .oracles import has_left_fractions_direct, has_right_fractions_direct, least_congruence

FIXTURES = fraction_fixtures()
RESULTS: dict[int, tuple[bool, str]] = {}


def emit(n, ok, detail, capsys=None):
    RESULTS[n] = (ok, detail)
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


# --------------------------------------------------------------------------
# criterion bodies; each returns (ok, detail)

def counterexample():
    start = time.perf_counter()
    cx, s = build_cx_with_sys()
    ok = (verify_counterexample().ok
          and len(cx.morphisms) == 7 and len(s.members) == 5
          and validate_category(cx).ok
          and has_left_fractions_check(s).ok
          and lf_beyond(s, LF110, LF120)
          and LF110 != LF120)
    symbols = all_symbols(s)
    common = [w for w in symbols if lf_under(s, LF110, w) and lf_under(s, LF120, w)]
    elapsed = time.perf_counter() - start
    ok = ok and not common and elapsed < 1.0
    return ok, f"{len(symbols)} symbols searched, {len(common)} common under, {elapsed:.3f}s"


def congruence_oracle(n=150):
    start = time.perf_counter()
    bad = []
    merged = 0
    for seed in range(n):
        c = random_category(seed)
        assert len(c.morphisms) <= 12
        rng = random.Random(seed)
        parallel = [(u, v) for u in c.morphisms for v in c.morphisms
                    if u != v and c.src[u] == c.src[v] and c.tgt[u] == c.tgt[v]]
        parallel = parallel or [(m, m) for m in c.morphisms]
        pairs = [rng.choice(parallel) for _ in range(rng.randint(1, 3))]
        closure = congruence_closure(CatRel(c, pairs)).blocks()
        if closure != least_congruence(c, pairs):
            bad.append(seed)
        merged += any(len(b) > 1 for b in closure)
    elapsed = time.perf_counter() - start
    return (not bad and elapsed < 60,
            f"{n} categories ({merged} with a non-trivial closure), "
            f"mismatched seeds {bad}, {elapsed:.3f}s")


def fraction_laws():
    start = time.perf_counter()
    failures = []
    for name, s in FIXTURES:
        c = s.base
        syms = all_symbols(s)
        eq = {(u, v): lf_equiv_decide(s, u, v) for u in syms for v in syms}
        if not all(eq[u, u] for u in syms):
            failures.append(f"{name}: reflexivity")
        if any(eq[u, v] != eq[v, u] for u, v in eq):
            failures.append(f"{name}: symmetry")
        if any(eq[u, v] and eq[v, w] and not eq[u, w] for u, v, w in product(syms, repeat=3)):
            failures.append(f"{name}: transitivity")
        comp = {}
        for u, v in product(syms, repeat=2):
            if sym_src(c, u) == sym_tgt(c, v):
                comp[u, v] = lf_comp_rep(s, u, v)
        for (u, v), r in comp.items():
            for u2, v2 in product(syms, repeat=2):
                if eq[u, u2] and eq[v, v2] and not eq[r, comp[u2, v2]]:
                    failures.append(f"{name}: comp_indep at {u}, {v}")
                    break
        for (u, v), uv in comp.items():
            for w in syms:
                if sym_src(c, v) == sym_tgt(c, w):
                    if not eq[comp[uv, w], comp[u, comp[v, w]]]:
                        failures.append(f"{name}: assoc at {u}, {v}, {w}")
        for u in syms:
            if not eq[comp[lf_id_rep(c, sym_tgt(c, u)), u], u]:
                failures.append(f"{name}: left id at {u}")
            if not eq[comp[u, lf_id_rep(c, sym_src(c, u))], u]:
                failures.append(f"{name}: right id at {u}")
        if not validate_category(build_left_frac_cat(s).category).ok:
            failures.append(f"{name}: fraction category invalid")
    elapsed = time.perf_counter() - start
    return (not failures and elapsed < 60,
            f"{len(FIXTURES)} fixtures, failures {failures[:3]}, {elapsed:.3f}s")


def _z2():
    mors = {"1": ("o", "o"), "g": ("o", "o")}
    comp = {("1", "1"): "1", ("1", "g"): "g", ("g", "1"): "g", ("g", "g"): "1"}
    return FiniteCategory.create(["o"], mors, {"o": "1"}, comp, name="Z2")


def universal_targets(n_random=12):
    cx, _ = build_cx_with_sys()
    targets = [terminal_category(), walking_arrow(), walking_iso(), idempotent_monoid(),
               path3(), cx, coarse_cat("01"), _z2()]
    seed = 0
    while len(targets) < 8 + n_random:
        c = random_category(seed, max_objects=3, max_extra_morphisms=5)
        if len(c.morphisms) <= 8:
            targets.append(c)
        seed += 1
    assert all(len(t.objects) <= 3 and len(t.morphisms) <= 8 for t in targets)
    return targets


def universal_property():
    start = time.perf_counter()
    targets = universal_targets()
    failures = []
    factored = 0
    for name, s in FIXTURES:
        fc = build_left_frac_cat(s)
        for t in targets:
            rep = check_universal_property(fc, t)
            factored += rep.factorizations
            if not rep.ok:
                failures.append(f"{name} -> {t.name}: {rep.failures[0]}")
    elapsed = time.perf_counter() - start
    return (not failures and elapsed < 300,
            f"{len(FIXTURES)} fixtures x {len(targets)} targets, {factored} unique factorizations, "
            f"failures {failures[:3]}, {elapsed:.3f}s")


def gz_comparison(max_len=5):
    start = time.perf_counter()
    failures = []
    checked = 0
    for name, s in FIXTURES:
        fc = build_left_frac_cat(s)
        proj = lf_proj_functor(fc)
        for lhs, rhs in relation_generators(s):
            if eval_zigzag(proj, s, lhs) != eval_zigzag(proj, s, rhs):
                failures.append(f"{name}: generator {lhs} ~ {rhs}")
        rw = Rewriter(s)
        value = {}
        words = list(iter_all_chains(gz_graph(s), max_len))
        for w in words:
            value[w] = eval_zigzag(proj, s, w)
        for w in words:
            for n in rewrite_ball(s, w, 2 if len(w) <= 3 else 1, rw):
                checked += 1
                v = value.get(n)
                if v is None:
                    v = eval_zigzag(proj, s, n)
                if v != value[w]:
                    failures.append(f"{name}: {w} vs {n}")
        # spot-check the search and the fraction route directly
        rng = random.Random(0)
        for w in rng.sample(words, min(40, len(words))):
            for n in sorted(rewrite_ball(s, w, 1, rw), key=len)[:3]:
                if gz_search(s, w, n, 2, rw) is Verdict.EQUAL and \
                        gz_equal(s, w, n, fractions=fc) is not Verdict.EQUAL:
                    failures.append(f"{name}: search says equal, fractions disagree at {w}")
    elapsed = time.perf_counter() - start
    return (not failures and elapsed < 120,
            f"{checked} search-equal pairs over words of length <= {max_len}, "
            f"failures {failures[:3]}, {elapsed:.1f}s")


def duality(n=60):
    bad = []
    for seed in range(n):
        c = random_category(seed)
        s = random_system(c, seed, with_identities=seed % 4 != 0)
        via_dual = has_right_fractions(s)
        direct_left = has_left_fractions_check(MultSystem(opposite(c), s.members)).ok
        oracle = has_right_fractions_direct(c, s.members)
        if not (via_dual == direct_left == oracle) or oppms(oppms(s)) != s:
            bad.append(seed)
        if has_left_fractions_check(s).ok != has_left_fractions_direct(c, s.members):
            bad.append(seed)
    return not bad, f"{n} systems, mismatched seeds {bad}"


def fraction_description():
    bad = []
    for name, s in FIXTURES:
        fc = build_left_frac_cat(s)
        if not verify_fraction_description(fc, lf_proj_functor(fc)).ok:
            bad.append(name)
    return not bad, f"{len(FIXTURES)} fixtures, failing {bad}"


def generation():
    bad = []
    for name, s in FIXTURES:
        fc = build_left_frac_cat(s)
        loc = fc.category
        ok, _ = generates_check(loc, add_inverses(loc, mor_image(lf_proj_functor(fc))))
        if not ok:
            bad.append(name)
    return not bad, f"{len(FIXTURES)} fixtures, failing {bad}"


def _graph_into(c, seed):
    """Random graph with at most 4 vertices and an endpoint-commuting map into ``c``."""
    rng = random.Random(seed)
    vs = [f"v{i}" for i in range(rng.randint(1, 4))]
    on_v = {v: rng.choice(c.objects) for v in vs}
    edges, on_e = [], {}
    for k in range(rng.randint(1, 6)):
        a, b = rng.choice(vs), rng.choice(vs)
        hom = c.hom(on_v[a], on_v[b])
        if hom:
            edges.append(Edge(f"e{k}", a, b))
            on_e[f"e{k}"] = rng.choice(hom)
    return FiniteGraph(vs, edges), GraphMorphismMap(on_v, on_e)


def _right_fold(c, m, u: Chain):
    # independent evaluation: peel the last segment and recurse
    if not u.segments:
        return c.ident[m.on_vertices[u.src]]
    *init, last = u.segments
    rest = Chain(u.src, last.src, tuple(init))
    return c.compose(m.on_edges[last.id], _right_fold(c, m, rest))


def free_functor_uniqueness(n=15):
    bad = []
    chains = 0
    for seed in range(n):
        c = random_category(seed + 1000)
        g, m = _graph_into(c, seed)
        for u in iter_all_chains(g, 4):
            chains += 1
            a = free_functor_apply(g, c, m, u)
            b = _right_fold(c, m, u)
            if a != b or a != compose_chain(c, u, dict(m.on_edges), dict(m.on_vertices)):
                bad.append(seed)
                break
    return not bad, f"{n} graphs, {chains} chains of length <= 4, mismatched seeds {bad}"


CRITERIA = {
    1: counterexample,
    2: congruence_oracle,
    3: fraction_laws,
    4: universal_property,
    5: gz_comparison,
    6: duality,
    7: fraction_description,
    8: generation,
    9: free_functor_uniqueness,
}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n]()
    assert emit(n, ok, detail, capsys), detail


if __name__ == "__main__":
    results = [emit(n, *CRITERIA[n]()) for n in sorted(CRITERIA)]
    raise SystemExit(0 if all(results) else 1)
