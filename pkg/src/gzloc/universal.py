"""Desk-scale check of the universal property of the fraction projection."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FiniteCategory
from .functors import (
    DEFAULT_FUNCTOR_BUDGET, enumerate_functors, fcompose, inverts, validate_functor,
)
from .leftfrac import FractionCategory, lf_dotted, lf_proj_functor


@dataclass
class UniversalReport:
    target: str
    inverting: int = 0
    factorizations: int = 0
    from_localization: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_universal_property(fc: FractionCategory, target: FiniteCategory,
                             budget: int = DEFAULT_FUNCTOR_BUDGET) -> UniversalReport:
    """Every inverting functor factors through the projection, exactly once.

    Existence is witnessed by :func:`lf_dotted`; uniqueness by comparing
    against every functor out of the localization.
    """
    s = fc.base
    proj = lf_proj_functor(fc)
    report = UniversalReport(target.name or "target")
    inverting = [f for f in enumerate_functors(s.base, target, budget) if inverts(f, s.members)]
    from_loc = enumerate_functors(fc.category, target, budget)
    report.inverting = len(inverting)
    report.from_localization = len(from_loc)
    restricted = {fcompose(g, proj).key() for g in from_loc}
    by_restriction: dict = {}
    for g in from_loc:
        by_restriction.setdefault(fcompose(g, proj).key(), []).append(g)
    for f in inverting:
        h = lf_dotted(fc, f)
        if not validate_functor(h).ok or not fcompose(h, proj).same_maps(f):
            report.failures.append(f"no factorization of {f.key()}")
            continue
        matches = by_restriction.get(f.key(), [])
        if len(matches) != 1 or not matches[0].same_maps(h):
            report.failures.append(f"{len(matches)} factorizations of {f.key()}")
            continue
        report.factorizations += 1
    if len(restricted) != len(from_loc):
        report.failures.append("two functors out of the localization agree after projection")
    if len(from_loc) != len(inverting):
        report.failures.append(
            f"{len(from_loc)} functors from the localization but {len(inverting)} inverting functors")
    return report
