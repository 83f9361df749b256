"""Census of divisors with discrepancy at most 1 for one singularity."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .blowup import (BlowupCandidate, enumerate_candidates, enumeration_bound,
                     exceptional_divisor)
from .classify import SingularityInstance
from .divisor import CONE, NON_REDUCED, RATIONAL, UNDETERMINED, Component, classify_divisor
from .families import genus_bound, mutual_exclusion, named_blowups

VERIFIED = "verified"
NOT_VERIFIED = "not verified"
INCONSISTENT = "inconsistent"

# most non-rational divisors with a <= 1 each type admits
MAX_NONRATIONAL = {"cAx/4": 2, "cAx/2": 1, "cD/3-1": 0, "cD/3-2": 1, "cD/3-3": 2,
                   "cD/2-1": 0, "cD/2-2": 2, "cE/2": 2}


@dataclass
class DivisorReport:
    candidate: BlowupCandidate
    components: list
    label: str | None = None
    k: int | None = None
    bound: int | None = None

    @property
    def verdict(self) -> str:
        kinds = {c.verdict for c in self.components}
        for v in (UNDETERMINED, NON_REDUCED, CONE):
            if v in kinds:
                return v
        return RATIONAL

    @property
    def nonrational(self) -> int:
        """Number of reduced components of positive genus."""
        return sum(c.pieces for c in self.components
                   if c.verdict == CONE and c.nonrational)

    @property
    def genus(self):
        gs = [c.genus for c in self.components if c.genus is not None and c.verdict != NON_REDUCED]
        return max(gs) if gs else None

    @property
    def uncertain(self) -> bool:
        """A component whose rationality is unknown or outside the census."""
        for c in self.components:
            if c.verdict == UNDETERMINED:
                return True
            if c.verdict == NON_REDUCED and (c.genus is None or c.genus >= 1):
                return True
        return False


@dataclass
class Analysis:
    instance: SingularityInstance
    bound: tuple
    reports: list
    theorem_check: str
    nonrational_count: int
    flags: list = field(default_factory=list)


def _label(named, w):
    hit = named.get(w)
    return hit if hit else (None, None)


def report_for(inst: SingularityInstance, c: BlowupCandidate, named=None) -> DivisorReport:
    named = named if named is not None else named_blowups(inst.tag, inst.params)
    if c.screened_rational:
        comps = [Component(c.face.polynomial, 1, RATIONAL, c.screened_rational, genus=0)]
    else:
        comps = classify_divisor(exceptional_divisor(c))
    label, k = _label(named, c.weight)
    bound = None
    if label is not None and inst.tag in MAX_NONRATIONAL and MAX_NONRATIONAL[inst.tag]:
        bound = genus_bound(inst.tag, label, k)
    return DivisorReport(c, comps, label, k, bound)


def analyze(inst: SingularityInstance, include_screened: bool = False) -> Analysis:
    """Enumerate, classify and check the counting statement for ``inst``."""
    named = named_blowups(inst.tag, inst.params)
    reports = [report_for(inst, c, named)
               for c in enumerate_candidates(inst, include_screened=include_screened)]
    flags = list(inst.flags)
    problems = []
    count = sum(r.nonrational for r in reports)
    bad = [r for r in reports if r.nonrational]
    limit = MAX_NONRATIONAL.get(inst.tag, 2)
    if count > limit:
        problems.append(f"{count} non-rational divisors exceed the maximum {limit}")
    for r in bad:
        if r.label is None:
            problems.append(f"non-rational divisor at {r.candidate.label} is not a named blowup")
            continue
        if r.bound is not None and r.genus > r.bound:
            problems.append(f"genus {r.genus} at {r.candidate.label} exceeds the bound {r.bound}")
    for r in reports:
        if r.bound is not None and r.bound < 0:
            flags.append(f"{r.label} with k={r.k}: tabulated bound {r.bound} is negative, "
                         "read as: this blowup is never non-rational")
    for i, r1 in enumerate(bad):
        for r2 in bad[i + 1:]:
            if r1.label and r2.label and mutual_exclusion(inst.tag, r1.label, r2.label):
                problems.append(f"{r1.label} and {r2.label} are both non-rational but exclusive")
    if inst.tag == "cD/2-2":
        flags.append("item (1,k,2,k) of the cD/2-2 list has discrepancy 2; (1,k,1,k) is used")
    if any(r.uncertain for r in reports):
        flags.append("undetermined or non-reduced faces present")
    for r in reports:
        for c in r.components:
            for note in c.notes:
                if "generic" in note and note not in flags:
                    flags.append(note)
    flags.extend(problems)
    if problems:
        check = INCONSISTENT
    elif any(r.uncertain for r in reports):
        check = NOT_VERIFIED
    else:
        check = VERIFIED
    return Analysis(inst, enumeration_bound(inst), reports, check, count, flags)


def discrepancy_of(w, inst) -> Fraction:
    from .blowup import discrepancy
    return discrepancy(w, inst.equation)
