"""Closed-form minimum-mean b-colouring statistics for six graph families.

Two tables are kept side by side:

* ``printed_value`` evaluates the published case-split formulas exactly as
  printed, including their slips;
* ``corrected_value`` evaluates the forms certified by exhaustive search
  (naive enumeration through 14 vertices, pruned exact search beyond).

Wherever the two disagree the discrepancy is a registered erratum; sweep()
cross-checks every row against a fresh exact search so a regression in
either table is caught.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import graphs
from .graphs import Graph
from .search import SearchCapError, full_report


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    WHEEL = "wheel"
    SUNLET = "sunlet"
    CLOSED_LADDER = "closed-ladder"


# smallest n for which the printed tables define a value
FAMILY_MIN_N = {
    Family.PATH: 2,
    Family.CYCLE: 3,
    Family.COMPLETE: 1,
    Family.WHEEL: 3,       # rim size; the graph has n+1 vertices
    Family.SUNLET: 3,
    Family.CLOSED_LADDER: 3,
}

_GENERATORS = {
    Family.PATH: graphs.path,
    Family.CYCLE: graphs.cycle,
    Family.COMPLETE: graphs.complete,
    Family.WHEEL: graphs.wheel,
    Family.SUNLET: graphs.sunlet,
    Family.CLOSED_LADDER: graphs.closed_ladder,
}


def generate(family: Family, n: int) -> Graph:
    return _GENERATORS[Family(family)](n)


def _check_domain(family: Family, n: int) -> None:
    lo = FAMILY_MIN_N[family]
    if n < lo:
        raise ValueError(f"{family.value} closed forms require n >= {lo}, got {n}")


def printed_value(family, n: int) -> tuple[Fraction, Fraction]:
    """Mean and variance exactly as printed, including known slips.

    The closed-ladder variance list prints no branch for n = 6; the value
    131/144 from the misaligned n = 5 row is used there (see the errata
    registry note).
    """
    family = Family(family)
    _check_domain(family, n)
    F = Fraction
    if family is Family.PATH:
        if n == 2:
            return F(3, 2), F(1, 4)
        if n == 3:
            return F(4, 3), F(2, 9)
        if n % 2 == 0:
            return F(3 * n + 2, 2 * n), F(n * n + 8 * n - 4, 4 * n * n)
        return F(3 * n + 3, 2 * n), F(n * n + 8 * n - 9, 4 * n * n)
    if family is Family.CYCLE:
        if n == 4:
            return F(3, 2), F(1, 4)
        if n % 2 == 0:
            return F(3 * n + 6, 2 * n), F(n * n + 16 * n + 36, 4 * n * n)
        return F(3 * n + 3, 2 * n), F(n * n + 8 * n - 9, 4 * n * n)
    if family is Family.COMPLETE:
        return F(n + 1, 2), F(n * n - 1, 12)
    if family is Family.WHEEL:
        if n == 4:
            return F(9, 5), F(14, 25)
        if n % 2 == 0:
            return F(3 * n + 14, 2 * n + 2), F(n * n + 42 * n - 80, 4 * (n + 1) ** 2)
        return F(3 * n + 11, 2 * n + 2), F(n * n + 34 * n - 31, 4 * (n + 1) ** 2)
    if family is Family.SUNLET:
        if n == 3:
            return F(5, 3), F(5, 9)
        if n == 4:
            return F(5, 2), F(5, 4)
        if n == 5:
            return F(17, 10), F(61, 100)
        return F(3 * n + 7, 2 * n), F(n * n + 35 * n - 49, 4 * n * n)
    if family is Family.CLOSED_LADDER:
        if n == 3:
            return F(5), F(2)
        if n == 4:
            return F(5, 2), F(5, 4)
        if n == 5:
            return F(23, 10), F(131, 144)
        if n == 6:
            return F(23, 12), F(131, 144)
        if n % 2 == 1:
            return F(3 * n + 8, 2 * n), F(n * n + 28 * n - 64, 4 * n * n)
        return F(3 * n + 7, 2 * n), F(n * n + 24 * n - 49, 4 * n * n)
    raise AssertionError(family)


def corrected_value(family, n: int) -> tuple[Fraction, Fraction, str]:
    """Search-certified mean and variance, with a note where they differ
    from the printed forms (empty note means the row has no erratum)."""
    family = Family(family)
    _check_domain(family, n)
    F = Fraction
    if family is Family.PATH:
        if n == 4:
            return F(3, 2), F(1, 4), _NOTES["path4"]
        return (*printed_value(family, n), "")
    if family is Family.CYCLE:
        if n % 2 == 0 and n != 4:
            return F(3 * n + 6, 2 * n), F(n * n + 16 * n - 36, 4 * n * n), _NOTES["cycle_even"]
        return (*printed_value(family, n), "")
    if family is Family.COMPLETE or family is Family.WHEEL:
        return (*printed_value(family, n), "")
    if family is Family.SUNLET:
        if n == 5:
            return F(8, 5), F(11, 25), _NOTES["sunlet5"]
        if n >= 6:
            return F(3 * n + 6, 2 * n), F(n * n + 32 * n - 36, 4 * n * n), _NOTES["sunlet_big"]
        return (*printed_value(family, n), "")
    if family is Family.CLOSED_LADDER:
        if n == 3:
            return F(2), F(2, 3), _NOTES["cl3"]
        if n == 5:
            return F(23, 10), F(121, 100), _NOTES["cl5"]
        if n == 6:
            return F(25, 12), F(131, 144), _NOTES["cl6"]
        if n >= 7 and n % 2 == 1:
            return F(3 * n + 7, 2 * n), F(n * n + 24 * n - 49, 4 * n * n), _NOTES["cl_odd"]
        return (*printed_value(family, n), "")
    raise AssertionError(family)


_NOTES = {
    "path4": ("the 4-path admits no b-colouring with 3 colours (both size-1 "
              "classes would need interior b-vertices, leaving the endpoint "
              "pair without one), so the 2-colour statistics apply"),
    "cycle_even": ("constant term of the printed variance has the wrong sign; "
                   "the printed class sizes ((n-2)/2, (n-2)/2, 2) themselves "
                   "yield (n^2+16n-36)/(4n^2)"),
    "sunlet5": ("printed class sizes (5,3,2) are not mean-minimal: sizes "
                "(5,4,1) admit a b-colouring with mean 8/5"),
    "sunlet_big": ("printed class sizes (n-1, n-3, 2, 2) are not mean-minimal: "
                   "sizes (n, n-4, 2, 2) admit a b-colouring, giving mean "
                   "(3n+6)/(2n) and variance (n^2+32n-36)/(4n^2)"),
    "cl3": ("printed mean 5 exceeds the largest colour index; the uniform "
            "three-class colouring gives mean 2 and variance 2/3 (the printed "
            "variance 2 is also inconsistent with that same colouring)"),
    "cl5": ("printed variance list is misaligned: class sizes (3,3,2,2) give "
            "121/100 at n = 5"),
    "cl6": ("printed mean 23/12 corresponds to class sizes (5,4,2,1), which "
            "admit no b-colouring; the minimum uses (4,4,3,1) with mean 25/12. "
            "The printed variance list has no n = 6 branch; the misaligned "
            "value 131/144 happens to equal the corrected variance"),
    "cl_odd": ("printed class sizes (n-2, n-3, 4, 1) are not mean-minimal for "
               "odd n >= 7: sizes (n-2, n-2, 3, 1) admit a b-colouring, so the "
               "even-case formulas hold for odd n as well"),
}


@dataclass(frozen=True)
class ErratumRule:
    """One registered printed-vs-corrected discrepancy."""

    family: Family
    applies_to: str         # human-readable n-condition
    printed: str
    corrected: str
    note: str

    def matches(self, n: int) -> bool:
        return _RULE_PREDICATES[(self.family, self.applies_to)](n)


_RULE_PREDICATES = {
    (Family.PATH, "n = 4"): lambda n: n == 4,
    (Family.CYCLE, "even n >= 6"): lambda n: n >= 6 and n % 2 == 0,
    (Family.SUNLET, "n = 5"): lambda n: n == 5,
    (Family.SUNLET, "n >= 6"): lambda n: n >= 6,
    (Family.CLOSED_LADDER, "n = 3"): lambda n: n == 3,
    (Family.CLOSED_LADDER, "n = 5"): lambda n: n == 5,
    (Family.CLOSED_LADDER, "n = 6"): lambda n: n == 6,
    (Family.CLOSED_LADDER, "odd n >= 7"): lambda n: n >= 7 and n % 2 == 1,
}

ERRATA_REGISTRY: tuple[ErratumRule, ...] = (
    ErratumRule(Family.PATH, "n = 4", "mean 7/4, variance 11/16",
                "mean 3/2, variance 1/4", _NOTES["path4"]),
    ErratumRule(Family.CYCLE, "even n >= 6", "variance (n^2+16n+36)/(4n^2)",
                "variance (n^2+16n-36)/(4n^2)", _NOTES["cycle_even"]),
    ErratumRule(Family.SUNLET, "n = 5", "mean 17/10, variance 61/100",
                "mean 8/5, variance 11/25", _NOTES["sunlet5"]),
    ErratumRule(Family.SUNLET, "n >= 6",
                "mean (3n+7)/(2n), variance (n^2+35n-49)/(4n^2)",
                "mean (3n+6)/(2n), variance (n^2+32n-36)/(4n^2)",
                _NOTES["sunlet_big"]),
    ErratumRule(Family.CLOSED_LADDER, "n = 3", "mean 5, variance 2",
                "mean 2, variance 2/3", _NOTES["cl3"]),
    ErratumRule(Family.CLOSED_LADDER, "n = 5", "variance 131/144",
                "variance 121/100", _NOTES["cl5"]),
    ErratumRule(Family.CLOSED_LADDER, "n = 6", "mean 23/12 (variance branch missing)",
                "mean 25/12, variance 131/144", _NOTES["cl6"]),
    ErratumRule(Family.CLOSED_LADDER, "odd n >= 7",
                "mean (3n+8)/(2n), variance (n^2+28n-64)/(4n^2)",
                "mean (3n+7)/(2n), variance (n^2+24n-49)/(4n^2)",
                _NOTES["cl_odd"]),
)


def is_registered_erratum(family, n: int) -> bool:
    family = Family(family)
    return any(rule.family is family and rule.matches(n) for rule in ERRATA_REGISTRY)


def errata_table_csv() -> str:
    """The errata registry as a CSV table."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "applies_to", "printed", "corrected", "note"])
    for rule in ERRATA_REGISTRY:
        writer.writerow([rule.family.value, rule.applies_to, rule.printed,
                         rule.corrected, rule.note])
    return buf.getvalue()


@dataclass(frozen=True)
class ClosedFormEntry:
    """One sweep row: both table values plus the fresh search result."""

    family: Family
    n: int
    printed_mean: Fraction
    printed_variance: Fraction
    corrected_mean: Fraction
    corrected_variance: Fraction
    search_phi: int | None
    search_mean: Fraction | None
    search_variance: Fraction | None
    errata: bool
    note: str
    error: str = ""

    @property
    def consistent(self) -> bool:
        """Corrected table matches the search and every printed/corrected
        difference is a registered erratum."""
        if self.error:
            return False
        if (self.search_mean != self.corrected_mean
                or self.search_variance != self.corrected_variance):
            return False
        differs = (self.printed_mean != self.corrected_mean
                   or self.printed_variance != self.corrected_variance)
        return differs == self.errata == is_registered_erratum(self.family, self.n)


def sweep(family, ns, max_n: int | None = None) -> list[ClosedFormEntry]:
    """Evaluate both tables over a range of n and cross-check each row
    against exact search.  Cap overruns are recorded per row, not raised."""
    family = Family(family)
    entries = []
    for n in ns:
        pm, pv = printed_value(family, n)
        cm, cv, note = corrected_value(family, n)
        try:
            report = full_report(generate(family, n), max_n=max_n)
            phi, sm, sv = report.phi, report.min_stats.mean, report.min_stats.variance
            error = ""
        except SearchCapError as exc:
            phi = sm = sv = None
            error = str(exc)
        entries.append(ClosedFormEntry(
            family=family, n=n,
            printed_mean=pm, printed_variance=pv,
            corrected_mean=cm, corrected_variance=cv,
            search_phi=phi, search_mean=sm, search_variance=sv,
            errata=(pm != cm or pv != cv), note=note, error=error))
    return entries
