"""Line-oriented category documents.

::

    category cx
    objects: 0 1 2
    mor na01: 0 -> 1
    id 0 = na00
    comp na02 = na12 * na01
    system S: na00 na01

Identities default to ``id_<object>``; composites with an identity are
implied.  Every other composable pair needs a ``comp`` line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import FiniteCategory, MultSystem, validate_category, validate_mult_system

_TOKEN = re.compile(r"\s*(?:(->)|([:=*])|([A-Za-z0-9_.'/\[\]^~+]+)|(\S))")


@dataclass(frozen=True)
class ParseError:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


class DocumentError(ValueError):
    def __init__(self, errors: list[ParseError]):
        self.errors = errors
        super().__init__("\n".join(str(e) for e in errors))


@dataclass
class CategoryDocument:
    name: str
    objects: list[str] = field(default_factory=list)
    morphisms: dict[str, tuple[str, str]] = field(default_factory=dict)
    identities: dict[str, str] = field(default_factory=dict)
    compositions: dict[tuple[str, str], str] = field(default_factory=dict)
    system_name: str | None = None
    system: list[str] | None = None
    category: FiniteCategory | None = field(default=None, repr=False, compare=False)

    def mult_system(self) -> MultSystem | None:
        if self.system is None:
            return None
        return MultSystem(self.category, self.system)


def _tokens(text: str, lineno: int, errors: list[ParseError]) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(4) is not None:
            errors.append(ParseError(lineno, m.start(4) + 1, f"unexpected character {m.group(4)!r}"))
            return []
        tok = m.group(1) or m.group(2) or m.group(3)
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(3)
        out.append((tok, start + 1))
        pos = m.end()
    return out


def _ident(tok: str) -> bool:
    return tok not in ("->", ":", "=", "*")


def _default_identity(m: str, objects) -> bool:
    return m.startswith("id_") and m[3:] in objects


def parse_document(text: str) -> CategoryDocument:
    """Parse and validate; raises :class:`DocumentError` with positions."""
    errors: list[ParseError] = []
    doc: CategoryDocument | None = None
    where: dict[str, tuple[int, int]] = {}  # declaration site of each morphism
    comp_where: dict[tuple[str, str], tuple[int, int]] = {}
    obj_where: dict[str, tuple[int, int]] = {}
    system_where = (1, 1)

    def err(line, col, msg):
        errors.append(ParseError(line, col, msg))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line, lineno, errors)
        if not toks:
            continue
        words = [t for t, _ in toks]
        cols = [c for _, c in toks]
        head = words[0]
        if head == "category":
            if len(words) != 2 or not _ident(words[1]):
                err(lineno, cols[0], "expected: category <name>")
            elif doc is not None:
                err(lineno, cols[0], "second category declaration")
            else:
                doc = CategoryDocument(words[1])
            continue
        if doc is None:
            err(lineno, cols[0], "statement before 'category' declaration")
            continue
        if head == "objects":
            if len(words) < 2 or words[1] != ":" or not all(_ident(w) for w in words[2:]):
                err(lineno, cols[0], "expected: objects: <name>...")
                continue
            for w, c in zip(words[2:], cols[2:]):
                if w in obj_where:
                    err(lineno, c, f"duplicate object {w}")
                else:
                    obj_where[w] = (lineno, c)
                    doc.objects.append(w)
        elif head == "mor":
            if (len(words) != 6 or words[2] != ":" or words[4] != "->"
                    or not all(_ident(words[i]) for i in (1, 3, 5))):
                err(lineno, cols[0], "expected: mor <id>: <src> -> <tgt>")
                continue
            m = words[1]
            if m in where:
                err(lineno, cols[1], f"duplicate morphism {m}")
                continue
            for i in (3, 5):
                if words[i] not in obj_where:
                    err(lineno, cols[i], f"undeclared object {words[i]}")
            where[m] = (lineno, cols[1])
            doc.morphisms[m] = (words[3], words[5])
        elif head == "id":
            if len(words) != 4 or words[2] != "=" or not _ident(words[1]) or not _ident(words[3]):
                err(lineno, cols[0], "expected: id <object> = <id>")
                continue
            x, m = words[1], words[3]
            if x not in obj_where:
                err(lineno, cols[1], f"undeclared object {x}")
            elif x in doc.identities:
                err(lineno, cols[1], f"duplicate identity for {x}")
            elif m in where and doc.morphisms[m] != (x, x):
                err(lineno, cols[3], f"{m} is not an endomorphism of {x}")
            else:
                doc.identities[x] = m
                if m not in where:
                    where[m] = (lineno, cols[3])
                    doc.morphisms[m] = (x, x)
        elif head == "comp":
            if (len(words) != 6 or words[2] != "=" or words[4] != "*"
                    or not all(_ident(words[i]) for i in (1, 3, 5))):
                err(lineno, cols[0], "expected: comp <h> = <g> * <f>")
                continue
            h, g, f = words[1], words[3], words[5]
            bad = False
            for w, c in ((h, cols[1]), (g, cols[3]), (f, cols[5])):
                if w not in where and not _default_identity(w, obj_where):
                    err(lineno, c, f"undeclared morphism {w}")
                    bad = True
            if bad:
                continue
            if (g, f) in doc.compositions:
                err(lineno, cols[3], f"duplicate composition {g} * {f}")
                continue
            doc.compositions[g, f] = h
            comp_where[g, f] = (lineno, cols[1])
        elif head == "system":
            if len(words) < 3 or words[2] != ":" or not all(_ident(w) for w in words[1:2] + words[3:]):
                err(lineno, cols[0], "expected: system <name>: <morphism>...")
                continue
            if doc.system is not None:
                err(lineno, cols[0], "second system declaration")
                continue
            members = []
            for w, c in zip(words[3:], cols[3:]):
                if w not in where and not _default_identity(w, obj_where):
                    err(lineno, c, f"undeclared morphism {w}")
                elif w in members:
                    err(lineno, c, f"duplicate member {w}")
                else:
                    members.append(w)
            system_where = (lineno, cols[0])
            doc.system_name = words[1]
            doc.system = members
        else:
            err(lineno, cols[0], f"unknown statement {head!r}")

    if doc is None:
        if not errors:
            errors.append(ParseError(1, 1, "no category declared"))
        raise DocumentError(errors)
    if errors:
        raise DocumentError(errors)

    for x in doc.objects:
        if x not in doc.identities:
            m = f"id_{x}"
            if m in doc.morphisms and doc.morphisms[m] != (x, x):
                errors.append(ParseError(*obj_where[x], f"default identity {m} clashes with a morphism"))
                continue
            doc.identities[x] = m
            doc.morphisms[m] = (x, x)
            where.setdefault(m, obj_where[x])
    for (g, f), h in doc.compositions.items():
        for m in (h, g, f):
            if m not in doc.morphisms:
                errors.append(ParseError(*comp_where[g, f], f"undeclared morphism {m}"))
    if doc.system is not None:
        for m in doc.system:
            if m not in doc.morphisms:
                errors.append(ParseError(*system_where, f"undeclared morphism {m} in system"))
    if errors:
        raise DocumentError(errors)

    src = {m: st[0] for m, st in doc.morphisms.items()}
    tgt = {m: st[1] for m, st in doc.morphisms.items()}
    ident_set = set(doc.identities.values())
    comp = {}
    for (g, f), h in doc.compositions.items():
        line, col = comp_where[g, f]
        if src[g] != tgt[f]:
            errors.append(ParseError(line, col, f"{h} = {g} * {f}: source of {g} is not target of {f}"))
        elif (src[h], tgt[h]) != (src[f], tgt[g]):
            errors.append(ParseError(line, col, f"{h} = {g} * {f}: {h} has the wrong endpoints"))
        else:
            comp[g, f] = h
    for u in doc.morphisms:
        for v in doc.morphisms:
            if src[u] != tgt[v] or (u, v) in comp:
                continue
            if v in ident_set:
                comp[u, v] = u
            elif u in ident_set:
                comp[u, v] = v
    for u in sorted(doc.morphisms):
        for v in sorted(doc.morphisms):
            if src[u] == tgt[v] and (u, v) not in comp:
                errors.append(ParseError(*where[u], f"composition {u} * {v} is not given"))
    if errors:
        raise DocumentError(errors)

    cat = FiniteCategory.create(doc.objects, doc.morphisms, doc.identities, comp, name=doc.name)
    report = validate_category(cat)
    for v in report.violations:
        pos = where.get(v.witness[0], (1, 1)) if v.witness and v.witness[0] in where else (1, 1)
        errors.append(ParseError(*pos, str(v)))
    if doc.system is not None and report.ok:
        for v in validate_mult_system(MultSystem(cat, doc.system)).violations:
            if v.kind == "localizing":
                errors.append(ParseError(1, 1, str(v)))
    if errors:
        raise DocumentError(errors)
    doc.category = cat
    doc.compositions = {k: w for k, w in comp.items()
                        if k[0] not in ident_set and k[1] not in ident_set}
    return doc


def serialize(c: FiniteCategory, system=None, name: str | None = None,
              system_name: str = "S") -> str:
    """Canonical document text; implied identity composites are omitted."""
    lines = [f"category {name or c.name or 'C'}", "objects: " + " ".join(c.objects)]
    idents = set(c.ident.values())
    for m in c.morphisms:
        if m not in idents:
            lines.append(f"mor {m}: {c.src[m]} -> {c.tgt[m]}")
    for x in c.objects:
        lines.append(f"id {x} = {c.ident[x]}")
    for (u, v), w in sorted(c.comp.items()):
        if u not in idents and v not in idents:
            lines.append(f"comp {w} = {u} * {v}")
    if system is not None:
        members = sorted(system.members if isinstance(system, MultSystem) else system)
        lines.append(f"system {system_name}: " + " ".join(members))
    return "\n".join(lines) + "\n"


def serialize_document(doc: CategoryDocument) -> str:
    return serialize(doc.category, doc.system, doc.name, doc.system_name or "S")
