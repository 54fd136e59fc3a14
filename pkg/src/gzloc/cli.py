"""Command line interface: ``gzloc <command> ...``.

Exit status: 0 success, 1 a check failed, 2 parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .core import CategoryError, MultSystem, validate_category, validate_mult_system
from .fixtures import (
    build_cx_with_sys, coarse_cat, idempotent_monoid, path3, terminal_category,
    verify_counterexample, walking_arrow, walking_iso,
)
from .functors import DEFAULT_FUNCTOR_BUDGET, BudgetExceeded
from .gz import gz_equal, gz_graph, parse_word, relation_generators, format_word
from .leftfrac import (
    build_left_frac_cat, has_left_fractions_check, right_fractions,
)
from .textformat import CategoryDocument, DocumentError, parse_document, serialize
from .universal import check_universal_property

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_MAX_REWRITES = 6


@dataclass
class Output:
    status: int = EXIT_OK
    records: list[dict] = field(default_factory=list)

    def add(self, text: str, **data) -> None:
        self.records.append({"text": text, **data})

    def render(self, as_json: bool) -> str:
        if as_json:
            return "".join(json.dumps({k: v for k, v in r.items() if k != "text"} or r,
                                      sort_keys=True) + "\n" for r in self.records)
        return "".join(r["text"] + "\n" for r in self.records)


def _system(doc: CategoryDocument) -> MultSystem:
    s = doc.mult_system()
    if s is None:
        raise CategoryError("document declares no system")
    return s


def cmd_check(doc: CategoryDocument, axioms=False, mult_system=False,
              left_fractions=False, right=False) -> Output:
    out = Output()
    if not (axioms or mult_system or left_fractions or right):
        axioms = True
        mult_system = doc.system is not None
    c = doc.category

    def verdict(name, ok, detail, witness=()):
        out.add(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""),
                check=name, ok=ok, detail=detail, witness=list(witness))
        if not ok:
            out.status = EXIT_FAIL

    if axioms:
        rep = validate_category(c)
        verdict("axioms", rep.ok, "; ".join(str(v) for v in rep.violations),
                rep.violations[0].witness if rep.violations else ())
    if mult_system:
        rep = validate_mult_system(_system(doc))
        verdict("mult-system", rep.ok, "; ".join(str(v) for v in rep.violations),
                rep.violations[0].witness if rep.violations else ())
    if left_fractions:
        v = has_left_fractions_check(_system(doc))
        verdict("left-fractions", v.ok, "" if v.ok else str(v), v.witness)
    if right:
        rf = right_fractions(_system(doc))
        verdict("right-fractions", rf.check.ok, "" if rf.check.ok else str(rf.check),
                rf.check.witness)
    return out


def _fraction_category(doc: CategoryDocument, method: str):
    s = _system(doc)
    if method == "right-fractions":
        rf = right_fractions(s)
        if not rf.check:
            raise CategoryError(f"no right calculus of fractions: {rf.check}")
        return rf.category, {cid: u for cid, u in rf.dual.rep_of.items()}
    fc = build_left_frac_cat(s)
    return fc.category, dict(fc.rep_of)


def cmd_localize(doc: CategoryDocument, method: str = "fractions") -> Output:
    out = Output()
    s = _system(doc)
    if method == "zigzag":
        g = gz_graph(s)
        out.add(f"vertices: {' '.join(sorted(g.vertices))}", section="vertices",
                vertices=sorted(g.vertices))
        out.add(f"edges: {len(g.edges)}", section="edge-count", count=len(g.edges))
        for e in g.edges:
            st = e.id
            out.add(f"edge {st}: {e.src} -> {e.tgt}", section="edge", direction=st.direction,
                    original=st.original, src=e.src, tgt=e.tgt)
        for lhs, rhs in relation_generators(s):
            out.add(f"relation {format_word(s, lhs)}  ==  {format_word(s, rhs)}",
                    section="relation", lhs=format_word(s, lhs), rhs=format_word(s, rhs))
        return out
    cat, reps = _fraction_category(doc, method)
    out.add(f"objects: {' '.join(cat.objects)}", section="objects", objects=list(cat.objects))
    for m in cat.morphisms:
        out.add(f"class {m}: {cat.src[m]} -> {cat.tgt[m]}  rep {reps[m]}", section="class",
                id=m, src=cat.src[m], tgt=cat.tgt[m], rep=str(reps[m]))
    for x in cat.objects:
        out.add(f"id {x} = {cat.ident[x]}", section="identity", object=x, id=cat.ident[x])
    for (u, v), w in sorted(cat.comp.items()):
        out.add(f"comp {w} = {u} * {v}", section="comp", result=w, left=u, right=v)
    return out


def cmd_hom(doc: CategoryDocument, x: str, y: str, count=False, method="fractions") -> Output:
    out = Output()
    for obj in (x, y):
        if obj not in doc.category.ident:
            raise CategoryError(f"unknown object {obj}")
    cat, reps = _fraction_category(doc, method)
    hom = cat.hom(x, y)
    if count:
        out.add(str(len(hom)), src=x, tgt=y, count=len(hom))
    else:
        for m in hom:
            out.add(f"{m}  rep {reps[m]}", src=x, tgt=y, id=m, rep=str(reps[m]))
    return out


def cmd_universal(doc: CategoryDocument, target: CategoryDocument,
                  budget: int = DEFAULT_FUNCTOR_BUDGET) -> Output:
    out = Output()
    fc = build_left_frac_cat(_system(doc))
    rep = check_universal_property(fc, target.category, budget)
    out.add(f"inverting functors: {rep.inverting}", key="inverting", value=rep.inverting)
    out.add(f"factorizations: {rep.factorizations}", key="factorizations", value=rep.factorizations)
    out.add(f"functors from localization: {rep.from_localization}", key="from_localization",
            value=rep.from_localization)
    for f in rep.failures:
        out.add(f"FAIL {f}", key="failure", value=f)
    out.add("PASS universal property" if rep.ok else "FAIL universal property",
            key="ok", value=rep.ok)
    if not rep.ok:
        out.status = EXIT_FAIL
    return out


def cmd_equal(doc: CategoryDocument, w1: str, w2: str, bound: int = DEFAULT_MAX_REWRITES) -> Output:
    s = _system(doc)
    a, b = parse_word(s, w1), parse_word(s, w2)
    v = gz_equal(s, a, b, bound)
    out = Output()
    out.add(v.value, verdict=v.value)
    return out


def cmd_counterexample() -> Output:
    out = Output()
    rep = verify_counterexample()
    for (name, ok, detail), line in zip(rep.checks, rep.lines()):
        out.add(line, check=name, ok=ok, detail=detail)
    if not rep.ok:
        out.status = EXIT_FAIL
    return out


FIXTURES = {
    "cx": lambda: build_cx_with_sys(),
    "terminal": lambda: (terminal_category(), terminal_category().morphisms),
    "walking-arrow": lambda: (walking_arrow(), walking_arrow().morphisms),
    "walking-iso": lambda: (walking_iso(), walking_iso().morphisms),
    "idempotent": lambda: (idempotent_monoid(), idempotent_monoid().morphisms),
    "path3": lambda: (path3(), list(path3().ident.values()) + ["ab"]),
    "coarse3": lambda: (coarse_cat("012"), coarse_cat("012").morphisms),
}


def cmd_fixture(name: str) -> Output:
    c, members = FIXTURES[name]()
    out = Output()
    members = members.members if isinstance(members, MultSystem) else members
    for line in serialize(c, members).splitlines():
        out.add(line, line=line)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gzloc", description="Localization of finite categories")
    parser.add_argument("--json", action="store_true", help="one JSON record per line")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate axioms and fraction conditions")
    p.add_argument("file")
    p.add_argument("--axioms", action="store_true")
    p.add_argument("--mult-system", action="store_true")
    p.add_argument("--left-fractions", action="store_true")
    p.add_argument("--right-fractions", action="store_true")

    p = sub.add_parser("localize", help="print the localization")
    p.add_argument("file")
    p.add_argument("--method", choices=["fractions", "right-fractions", "zigzag"],
                   default="fractions")

    p = sub.add_parser("hom", help="list morphisms x -> y of the localization")
    p.add_argument("file")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--count", action="store_true")
    p.add_argument("--method", choices=["fractions", "right-fractions"], default="fractions")

    p = sub.add_parser("universal", help="check the universal property against a target")
    p.add_argument("file")
    p.add_argument("target")
    p.add_argument("--max-functors", type=int, default=DEFAULT_FUNCTOR_BUDGET,
                   help="search-node budget for functor enumeration")

    p = sub.add_parser("equal", help="compare two zigzag words")
    p.add_argument("file")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--max-rewrites", type=int, default=DEFAULT_MAX_REWRITES)

    sub.add_parser("counterexample", help="reproduce the beyond/under counterexample")

    p = sub.add_parser("fixture", help="print a built-in fixture document")
    p.add_argument("name", choices=sorted(FIXTURES))
    return parser


def _load(path: str) -> CategoryDocument:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_document(text)


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Execute a command; returns ``(status, stdout, stderr)``."""
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            out = cmd_check(_load(args.file), args.axioms, args.mult_system,
                            args.left_fractions, args.right_fractions)
        elif args.command == "localize":
            out = cmd_localize(_load(args.file), args.method)
        elif args.command == "hom":
            out = cmd_hom(_load(args.file), args.x, args.y, args.count, args.method)
        elif args.command == "universal":
            out = cmd_universal(_load(args.file), _load(args.target), args.max_functors)
        elif args.command == "equal":
            out = cmd_equal(_load(args.file), args.word1, args.word2, args.max_rewrites)
        elif args.command == "counterexample":
            out = cmd_counterexample()
        else:
            out = cmd_fixture(args.name)
    except DocumentError as e:
        return EXIT_PARSE, "", f"{e}\n"
    except OSError as e:
        return EXIT_PARSE, "", f"{e}\n"
    except BudgetExceeded as e:
        return EXIT_BUDGET, "", f"{e}\n"
    except CategoryError as e:
        return EXIT_FAIL, "", f"error: {e}\n"
    return out.status, out.render(args.json), ""


def main(argv: list[str] | None = None) -> int:
    status, stdout, stderr = run(argv)
    sys.stdout.write(stdout)
    sys.stderr.write(stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
