"""Brute-force reference implementations, deliberately naive.

None of these share code paths with the package beyond reading tables.
"""

from itertools import product


def category_ok(c):
    """Enumerate every axiom instance directly."""
    mors = list(c.morphisms)
    for x in c.objects:
        i = c.ident.get(x)
        if i not in c.src or c.src[i] != x or c.tgt[i] != x:
            return False
    for u, v in product(mors, repeat=2):
        defined = (u, v) in c.comp
        if defined != (c.src[u] == c.tgt[v]):
            return False
        if defined:
            w = c.comp[u, v]
            if w not in c.src or c.src[w] != c.src[v] or c.tgt[w] != c.tgt[u]:
                return False
    for u in mors:
        if c.comp[c.ident[c.tgt[u]], u] != u or c.comp[u, c.ident[c.src[u]]] != u:
            return False
    for u, v, w in product(mors, repeat=3):
        if c.src[u] == c.tgt[v] and c.src[v] == c.tgt[w]:
            if c.comp[c.comp[u, v], w] != c.comp[u, c.comp[v, w]]:
                return False
    return True


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def is_congruence(c, label):
    """Definition check: related pairs compose to related pairs."""
    mors = c.morphisms
    for x, y in product(mors, repeat=2):
        if label[x] != label[y]:
            continue
        for u, v in product(mors, repeat=2):
            if label[u] == label[v] and c.src[x] == c.tgt[u]:
                if label[c.comp[x, u]] != label[c.comp[y, v]]:
                    return False
    return True


def least_congruence(c, pairs):
    """Intersection of every endpoint-respecting congruence containing ``pairs``."""
    homs = {}
    for m in c.morphisms:
        homs.setdefault((c.src[m], c.tgt[m]), []).append(m)
    hom_parts = [list(set_partitions(ms)) for ms in homs.values()]
    meet = None
    for choice in product(*hom_parts):
        label = {}
        for k, blocks in enumerate(choice):
            for j, block in enumerate(blocks):
                for m in block:
                    label[m] = (k, j)
        if any(label[a] != label[b] for a, b in pairs):
            continue
        if not is_congruence(c, label):
            continue
        if meet is None:
            meet = {m: (label[m],) for m in c.morphisms}
        else:
            meet = {m: meet[m] + (label[m],) for m in c.morphisms}
    blocks = {}
    for m, key in meet.items():
        blocks.setdefault(key, set()).add(m)
    return frozenset(frozenset(b) for b in blocks.values())


def two_sided_inverse(c, u):
    found = [v for v in c.morphisms
             if (u, v) in c.comp and (v, u) in c.comp
             and c.comp[u, v] == c.ident[c.tgt[u]] and c.comp[v, u] == c.ident[c.src[u]]]
    return found[0] if found else None


def all_functor_maps(a, b):
    """Every functor as a pair of dicts, by exhaustive product and filter."""
    out = []
    for obs in product(b.objects, repeat=len(a.objects)):
        fo = dict(zip(a.objects, obs))
        for ms in product(b.morphisms, repeat=len(a.morphisms)):
            fm = dict(zip(a.morphisms, ms))
            if any(b.src[fm[u]] != fo[a.src[u]] or b.tgt[fm[u]] != fo[a.tgt[u]] for u in a.morphisms):
                continue
            if any(fm[a.ident[x]] != b.ident[fo[x]] for x in a.objects):
                continue
            if any(fm[w] != b.comp[fm[u], fm[v]] for (u, v), w in a.comp.items()):
                continue
            out.append((fo, fm))
    return out


def has_right_fractions_direct(c, members):
    """The right calculus written out clause by clause, no duality."""
    s = set(members)
    mors = c.morphisms
    for y, z in product(s, repeat=2):
        if c.src[y] == c.tgt[z] and c.comp[y, z] not in s:
            return False
    if any(c.ident[x] not in s for x in c.objects):
        return False
    for r in s:
        for g in mors:
            if c.tgt[r] != c.tgt[g]:
                continue
            if not any(c.src[p] == c.src[q] and c.tgt[p] == c.src[g] and c.tgt[q] == c.src[r]
                       and c.comp[g, p] == c.comp[r, q]
                       for p in s for q in mors):
                return False
    for v in s:
        for r, t in product(mors, repeat=2):
            if (c.src[v] == c.tgt[r] and c.src[v] == c.tgt[t] and c.src[r] == c.src[t]
                    and c.comp[v, r] == c.comp[v, t]):
                if not any(c.tgt[w] == c.src[r] and c.comp[r, w] == c.comp[t, w] for w in s):
                    return False
    return True


def has_left_fractions_direct(c, members):
    s = set(members)
    mors = c.morphisms
    for y, z in product(s, repeat=2):
        if c.src[y] == c.tgt[z] and c.comp[y, z] not in s:
            return False
    if any(c.ident[x] not in s for x in c.objects):
        return False
    for r in s:
        for g in mors:
            if c.src[r] != c.src[g]:
                continue
            if not any(c.tgt[f] == c.tgt[t] and c.src[f] == c.tgt[r] and c.src[t] == c.tgt[g]
                       and c.comp[t, g] == c.comp[f, r]
                       for f in mors for t in s):
                return False
    for v in s:
        for r, t in product(mors, repeat=2):
            if (c.src[r] == c.tgt[v] and c.src[t] == c.tgt[v] and c.tgt[r] == c.tgt[t]
                    and c.comp[r, v] == c.comp[t, v]):
                if not any(c.src[w] == c.tgt[r] and c.comp[w, r] == c.comp[w, t] for w in s):
                    return False
    return True


def lf_equiv_closure(s, symbols, beyond):
    """Equivalence generated by the one-step beyond relation, by fixpoint."""
    rel = {(u, v) for u in symbols for v in symbols if v in beyond(u)}
    rel |= {(v, u) for u, v in rel} | {(u, u) for u in symbols}
    changed = True
    while changed:
        changed = False
        for (a, b), (b2, d) in product(list(rel), repeat=2):
            if b == b2 and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return rel
