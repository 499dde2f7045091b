"""Exhaustive small-case verification of (cyclic) shuffle compatibility.

All searches run over standardized alphabets (left operand on ``[m]``, right
operand on ``[n] + m``) in increasing order of ``m + n``, then ``m``, then
lexicographic order of (canonical) words, so the first counterexample is
deterministic.  Parallel runs split the work by ``(m, n)`` level and keep the
earliest failing level, which reproduces the sequential answer.
"""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional, Union

from .bijections import max_removal, split
from .perm_core import Cycle, Word, all_cycles, all_words, interval
from .shuffles import _interleavings, cyclic_shuffles
from .stats import (
    distribution,
    encode_distribution,
    encode_value,
    evaluator,
    is_cyclic,
)

log = logging.getLogger(__name__)

Perm = Union[Word, Cycle]

COMPAT_METHODS = ("bc", "b", "c", "full")


def _perm_json(x: Perm) -> list[int]:
    return list(x.word) if isinstance(x, Cycle) else list(x)


@dataclass
class Counterexample:
    """Two shuffle sets whose operands agree on the statistic but whose distributions differ."""

    pi: Perm
    pi_prime: Perm
    sigma: Perm
    sigma_prime: Perm
    left: Counter
    right: Counter

    def to_dict(self) -> dict:
        return {
            "pi": _perm_json(self.pi),
            "pi_prime": _perm_json(self.pi_prime),
            "sigma": _perm_json(self.sigma),
            "sigma_prime": _perm_json(self.sigma_prime),
            "left_distribution": encode_distribution(self.left),
            "right_distribution": encode_distribution(self.right),
        }


@dataclass
class CompatReport:
    statistic: str
    mode: str
    max_total: int
    verdict: str
    pairs_checked: int
    method: str = "quadruple"
    counterexample: Optional[Counterexample] = None

    @property
    def compatible(self) -> bool:
        return self.verdict == "compatible"

    def to_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "mode": self.mode,
            "method": self.method,
            "max_total": self.max_total,
            "verdict": self.verdict,
            "pairs_checked": self.pairs_checked,
            "counterexample": None
            if self.counterexample is None
            else self.counterexample.to_dict(),
        }


def shuffle_set(a: Perm, b: Perm) -> list:
    if isinstance(a, Cycle):
        return list(cyclic_shuffles(a, b))
    return _interleavings(a, b)


def replay(report: CompatReport) -> bool:
    """Recompute a stored counterexample; True iff it reproduces exactly.

    Also checks the hypothesis side: operands agree on the statistic and
    have matching lengths.
    """
    cx = report.counterexample
    if cx is None:
        return False
    f = evaluator(report.statistic)
    if f(cx.pi) != f(cx.pi_prime) or f(cx.sigma) != f(cx.sigma_prime):
        return False
    if len(cx.pi) != len(cx.pi_prime) or len(cx.sigma) != len(cx.sigma_prime):
        return False
    left = distribution(report.statistic, shuffle_set(cx.pi, cx.sigma))
    right = distribution(report.statistic, shuffle_set(cx.pi_prime, cx.sigma_prime))
    return left == cx.left and right == cx.right and left != right


def _levels(max_total: int) -> list[tuple[int, int]]:
    return [(m, t - m) for t in range(2, max_total + 1) for m in range(1, t)]


# Each level search returns (pairs_checked, counterexample or None).
LevelResult = tuple[int, Optional[Counterexample]]


def _search_quadruple(name: str, lefts: list, rights_for: Callable) -> LevelResult:
    """Group every (pi, sigma) by (value pi, value sigma); distributions must agree per group."""
    f = evaluator(name)
    seen: dict = {}
    checked = 0
    for pi in lefts:
        fp = f(pi)
        for sigma in rights_for(pi):
            dist = Counter(f(t) for t in shuffle_set(pi, sigma))
            checked += 1
            key = (fp, f(sigma))
            prior = seen.get(key)
            if prior is None:
                seen[key] = (pi, sigma, dist)
            elif prior[2] != dist:
                return checked, Counterexample(prior[0], pi, prior[1], sigma, prior[2], dist)
    return checked, None


def _search_fixed(name: str, varying: list, fixed: list, vary_left: bool) -> LevelResult:
    """Hold one operand fixed; operands on the other side with equal value must agree."""
    f = evaluator(name)
    checked = 0
    for other in fixed:
        seen: dict = {}
        for x in varying:
            pi, sigma = (x, other) if vary_left else (other, x)
            dist = Counter(f(t) for t in shuffle_set(pi, sigma))
            checked += 1
            prior = seen.get(f(x))
            if prior is None:
                seen[f(x)] = (x, dist)
            elif prior[1] != dist:
                if vary_left:
                    cx = Counterexample(prior[0], x, other, other, prior[1], dist)
                else:
                    cx = Counterexample(other, other, prior[0], x, prior[1], dist)
                return checked, cx
    return checked, None


def _linear_level(name: str, m: int, n: int) -> LevelResult:
    lefts = list(all_words(interval(m)))
    rights = list(all_words(interval(n, m)))
    return _search_quadruple(name, lefts, lambda _: rights)


def _cyclic_level(name: str, m: int, n: int, method: str) -> LevelResult:
    if method == "full":
        total = m + n
        lefts = []
        for subset in combinations(range(1, total + 1), m):
            lefts.extend(all_cycles(subset))

        def rights_for(pi: Cycle) -> list:
            rest = sorted(set(range(1, total + 1)) - set(pi.word))
            return list(all_cycles(rest))

        return _search_quadruple(name, lefts, rights_for)

    lefts = list(all_cycles(interval(m)))
    rights = list(all_cycles(interval(n, m)))
    checked = 0
    if method in ("b", "bc"):
        k, cx = _search_fixed(name, lefts, rights, vary_left=True)
        checked += k
        if cx is not None:
            return checked, cx
    if method in ("c", "bc"):
        k, cx = _search_fixed(name, rights, lefts, vary_left=False)
        checked += k
        if cx is not None:
            return checked, cx
    return checked, None


def _run_level(args: tuple) -> LevelResult:
    name, m, n, method = args
    if method is None:
        return _linear_level(name, m, n)
    return _cyclic_level(name, m, n, method)


def _run_levels(name: str, max_total: int, method: Optional[str], jobs: int) -> LevelResult:
    tasks = [(name, m, n, method) for m, n in _levels(max_total)]
    checked = 0
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_run_level, tasks)
            for k, cx in results:
                checked += k
                if cx is not None:
                    return checked, cx
        return checked, None
    for task in tasks:
        k, cx = _run_level(task)
        checked += k
        log.debug("level m=%d n=%d: %d pairs", task[1], task[2], k)
        if cx is not None:
            return checked, cx
    return checked, None


def check_linear_compat(name: str, max_total: int = 7, jobs: int = 1) -> CompatReport:
    """Search all standardized quadruples with ``m + n <= max_total`` for a counterexample."""
    if is_cyclic(name):
        raise ValueError(f"{name} is cyclic; use check_cyclic_compat")
    if max_total < 2:
        raise ValueError("max_total must be at least 2")
    checked, cx = _run_levels(name, max_total, None, jobs)
    return CompatReport(
        statistic=name,
        mode="linear",
        max_total=max_total,
        verdict="compatible" if cx is None else "counterexample",
        pairs_checked=checked,
        method="quadruple",
        counterexample=cx,
    )


def check_cyclic_compat(
    name: str, max_total: int = 7, method: str = "bc", jobs: int = 1
) -> CompatReport:
    """Cyclic shuffle compatibility up to ``m + n <= max_total``.

    ``method`` selects the reduction: ``"b"`` holds the right operand fixed,
    ``"c"`` the left one, ``"bc"`` runs both, and ``"full"`` checks every
    quadruple whose operands partition ``[m+n]``.
    """
    if not is_cyclic(name):
        raise ValueError(f"{name} is linear; use check_linear_compat")
    if method not in COMPAT_METHODS:
        raise ValueError(f"method must be one of {COMPAT_METHODS}, got {method!r}")
    if max_total < 2:
        raise ValueError("max_total must be at least 2")
    checked, cx = _run_levels(name, max_total, method, jobs)
    return CompatReport(
        statistic=name,
        mode="cyclic",
        max_total=max_total,
        verdict="compatible" if cx is None else "counterexample",
        pairs_checked=checked,
        method=method,
        counterexample=cx,
    )


def check_compat(name: str, max_total: int = 7, jobs: int = 1) -> CompatReport:
    if is_cyclic(name):
        return check_cyclic_compat(name, max_total, jobs=jobs)
    return check_linear_compat(name, max_total, jobs=jobs)


# -- lifting hypotheses -------------------------------------------------------


@dataclass
class LiftingViolation:
    """Two cycles on ``[n]`` breaking a lifting hypothesis.

    For condition ``a``: the linear values of ``M[tau]``, ``M[tau']`` agree
    but the cyclic values differ.  For condition ``b``: the cyclic values
    agree but the multisets of linear values over all splittings differ.
    """

    condition: str
    tau: Cycle
    tau_prime: Cycle
    linear_values: tuple
    cyclic_values: tuple

    def to_dict(self) -> dict:
        if self.condition == "a":
            lin = [encode_value(v) for v in self.linear_values]
        else:
            lin = [encode_distribution(v) for v in self.linear_values]
        return {
            "tau": _perm_json(self.tau),
            "tau_prime": _perm_json(self.tau_prime),
            "linear_values": lin,
            "cyclic_values": [encode_value(v) for v in self.cyclic_values],
        }


@dataclass
class LiftingReport:
    cyclic_statistic: str
    linear_statistic: str
    condition: str
    bound: int
    verdict: str
    cases_checked: int
    violation: Optional[LiftingViolation] = field(default=None)

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def to_dict(self) -> dict:
        return {
            "cyclic_statistic": self.cyclic_statistic,
            "linear_statistic": self.linear_statistic,
            "condition": self.condition,
            "bound": self.bound,
            "verdict": self.verdict,
            "cases_checked": self.cases_checked,
            "violation": None if self.violation is None else self.violation.to_dict(),
        }


def _check_pair(cid: str, lid: str) -> None:
    if not is_cyclic(cid):
        raise ValueError(f"{cid} is not a cyclic statistic")
    if is_cyclic(lid):
        raise ValueError(f"{lid} is not a linear statistic")


def splitting_profile(c: Cycle, lid: str) -> Counter:
    """Multiset of ``lid`` values over every splitting of ``c``."""
    f = evaluator(lid)
    return Counter(f(split(c, i)) for i in c.word)


def check_lifting_a(cid: str, lid: str, max_n: int = 6) -> LiftingReport:
    """Equal ``lid`` on maximum removals forces equal ``cid``, for cycles on ``[n]``, ``n <= max_n``."""
    _check_pair(cid, lid)
    fc, fl = evaluator(cid), evaluator(lid)
    checked = 0
    for n in range(1, max_n + 1):
        seen: dict = {}
        for tau in all_cycles(interval(n)):
            checked += 1
            lv, cv = fl(max_removal(tau)), fc(tau)
            prior = seen.setdefault(lv, (tau, cv))
            if prior[1] != cv:
                v = LiftingViolation("a", prior[0], tau, (lv, lv), (prior[1], cv))
                return LiftingReport(cid, lid, "a", max_n, "violation", checked, v)
    return LiftingReport(cid, lid, "a", max_n, "holds", checked)


def check_lifting_b(cid: str, lid: str, max_m: int = 6) -> LiftingReport:
    """Equal ``cid`` forces equal multisets of ``lid`` over splittings, for ``m <= max_m``.

    Multiset equality is exactly the existence of a bijection ``f`` with
    ``lid(S_i pi) == lid(S_f(i) pi')``.
    """
    _check_pair(cid, lid)
    fc = evaluator(cid)
    checked = 0
    for m in range(1, max_m + 1):
        seen: dict = {}
        for pi in all_cycles(interval(m)):
            checked += 1
            cv, prof = fc(pi), splitting_profile(pi, lid)
            prior = seen.setdefault(cv, (pi, prof))
            if prior[1] != prof:
                v = LiftingViolation("b", prior[0], pi, (prior[1], prof), (cv, cv))
                return LiftingReport(cid, lid, "b", max_m, "violation", checked, v)
    return LiftingReport(cid, lid, "b", max_m, "holds", checked)


def check_lifting(cid: str, lid: str, condition: str, bound: int = 6) -> LiftingReport:
    if condition == "a":
        return check_lifting_a(cid, lid, bound)
    if condition == "b":
        return check_lifting_b(cid, lid, bound)
    raise ValueError(f"condition must be 'a' or 'b', got {condition!r}")


def replay_lifting(report: LiftingReport) -> bool:
    """Recompute a stored violation through the statistics module."""
    v = report.violation
    if v is None or len(v.tau) != len(v.tau_prime):
        return False
    fc, fl = evaluator(report.cyclic_statistic), evaluator(report.linear_statistic)
    if v.condition == "a":
        lin = (fl(max_removal(v.tau)), fl(max_removal(v.tau_prime)))
        cyc = (fc(v.tau), fc(v.tau_prime))
        return lin == v.linear_values and cyc == v.cyclic_values and cyc[0] != cyc[1] and lin[0] == lin[1]
    prof = (
        splitting_profile(v.tau, report.linear_statistic),
        splitting_profile(v.tau_prime, report.linear_statistic),
    )
    cyc = (fc(v.tau), fc(v.tau_prime))
    return prof == v.linear_values and cyc == v.cyclic_values and cyc[0] == cyc[1] and prof[0] != prof[1]


LIFTING_PAIRS: tuple[tuple[str, str], ...] = (
    ("cDes", "Des"),
    ("cdes", "des"),
    ("cPk", "Pk"),
    ("cpk", "pk"),
)
