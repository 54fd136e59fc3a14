import pytest
from hypothesis import given, settings, strategies as st

from gzloc.core import CategoryError, FiniteCategory, MultSystem
from gzloc.fixtures import (
    build_cx_with_sys, idempotent_monoid, random_category, random_system, terminal_category,
    walking_arrow,
)
from gzloc.freecat import chain_comp, chain_id, iter_all_chains
from gzloc.functors import identity_functor
from gzloc.gz import (
    BACKWARD, FORWARD, Rewriter, Step, Verdict, backward_arrow, eval_zigzag, format_word,
    gz_equal, gz_graph, gz_proj_word, gz_search, parse_word, relation_generators, rewrite_ball,
    word,
)
from gzloc.leftfrac import build_left_frac_cat, has_left_fractions_check, lf_proj_functor

F = lambda m: Step(FORWARD, m)  # noqa: E731
B = lambda m: Step(BACKWARD, m)  # noqa: E731


def test_graph_shape():
    cx, s = build_cx_with_sys()
    g = gz_graph(s)
    assert len(g.edges) == 7 + 5
    assert backward_arrow(s, "na01").src == "1"
    with pytest.raises(CategoryError):
        backward_arrow(s, "na12")


def test_one_object_generators():
    t = terminal_category()
    gens = list(relation_generators(MultSystem(t, t.morphisms)))
    assert len(gens) == 4
    assert all((a.src, a.tgt) == (b.src, b.tgt) for a, b in gens)


def test_generator_counts_cx():
    _, s = build_cx_with_sys()
    gens = list(relation_generators(s))
    assert len(gens) == 3 + 5 + 5 + len(s.base.comp)


def test_format_and_parse_round_trip():
    _, s = build_cx_with_sys()
    w = word(s, "0", F("na01"), F("na12"), B("na02"))
    text = format_word(s, w)
    assert text == "0 -na01-> 1 -na12-> 2 <-na02- 0"
    assert parse_word(s, text) == w
    for bad in ("", "0 -na01->", "0 -na01-> 2", "0 <-na12- 2", "9", "0 =na01=> 1"):
        with pytest.raises(CategoryError):
            parse_word(s, bad)


def test_eval_requires_inverting_functor():
    wa = walking_arrow()
    s = MultSystem(wa, wa.morphisms)
    with pytest.raises(CategoryError):
        eval_zigzag(identity_functor(wa), s, word(s, "x", F("q")))


def test_equal_through_fractions():
    wa = walking_arrow()
    s = MultSystem(wa, wa.morphisms)
    zig = word(s, "x", F("q"), B("q"))
    assert gz_equal(s, zig, chain_id("x")) is Verdict.EQUAL
    assert gz_equal(s, word(s, "x", F("q")), gz_proj_word(wa, "q")) is Verdict.EQUAL
    ids = MultSystem(wa, wa.ident.values())
    assert gz_equal(ids, word(ids, "x", F("1x")), chain_id("x")) is Verdict.EQUAL
    with pytest.raises(CategoryError):
        gz_equal(s, zig, word(s, "x", F("q")))


def test_unequal_when_nothing_is_inverted():
    # two constant maps on a two-element set stay distinct
    mors = {"1": ("o", "o"), "c0": ("o", "o"), "c1": ("o", "o")}
    comp = {(u, v): (v if u == "1" else u) for u in mors for v in mors}
    c = FiniteCategory.create(["o"], mors, {"o": "1"}, comp)
    s = MultSystem(c, ["1"])
    a, b = word(s, "o", F("c0")), word(s, "o", F("c1"))
    assert gz_equal(s, a, b) is Verdict.UNEQUAL
    assert gz_equal(s, word(s, "o", F("c1"), F("c0")), a) is Verdict.EQUAL


def test_zigzag_equals_forward_in_cx():
    _, s = build_cx_with_sys()
    a = word(s, "1", F("na12"))
    b = word(s, "1", B("na01"), F("na02"))
    assert gz_equal(s, a, b) is Verdict.EQUAL  # the localization is coarse


def test_search_without_calculus():
    # members without identities: no left calculus, the search still runs
    em = idempotent_monoid()
    s = MultSystem(em, ["e"])
    assert not has_left_fractions_check(s)
    a = word(s, "o", F("e"), B("e"))
    assert gz_equal(s, a, chain_id("o")) is Verdict.EQUAL
    assert gz_search(s, word(s, "o", F("e")), chain_id("o"), 2) is Verdict.UNKNOWN


def test_rewrite_ball_contains_generators():
    _, s = build_cx_with_sys()
    for lhs, rhs in relation_generators(s):
        assert rhs in rewrite_ball(s, lhs, 1)
        assert lhs in rewrite_ball(s, rhs, 1)


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_generators_respected_by_projection(seed):
    c = random_category(seed)
    s = random_system(c, seed)
    if not has_left_fractions_check(s):
        return
    proj = lf_proj_functor(build_left_frac_cat(s))
    for lhs, rhs in relation_generators(s):
        assert eval_zigzag(proj, s, lhs) == eval_zigzag(proj, s, rhs)
    rw = Rewriter(s)
    for w in iter_all_chains(gz_graph(s), 2):
        for n in rewrite_ball(s, w, 1, rw):
            assert eval_zigzag(proj, s, n) == eval_zigzag(proj, s, w)


def test_eval_is_functorial_on_words():
    _, s = build_cx_with_sys()
    proj = lf_proj_functor(build_left_frac_cat(s))
    words = list(iter_all_chains(gz_graph(s), 2))
    loc = proj.cod
    for u in words:
        for v in words:
            if u.src == v.tgt:
                assert eval_zigzag(proj, s, chain_comp(u, v)) == \
                    loc.compose(eval_zigzag(proj, s, u), eval_zigzag(proj, s, v))
