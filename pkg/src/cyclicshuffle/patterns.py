"""Cyclic pattern containment and avoidance.

A cycle ``[s]`` contains the pattern ``[p]`` (with ``p`` on ``[k]``) when
some ``k`` of its entries, read in the induced cyclic order, standardize to
``[p]``.  Subsequences of the canonical word are enough: rotating the host
only rotates each subsequence.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .perm_core import Cycle, all_cycles, interval, standardize
from .qpoly import QPoly
from .stats import cdes_set_linear


def is_standard(p: Cycle) -> bool:
    return sorted(p.word) == list(range(1, len(p) + 1))


def pattern_set(patterns: Iterable[Cycle]) -> frozenset[Cycle]:
    ps = frozenset(patterns)
    for p in ps:
        if not is_standard(p):
            raise ValueError(
                f"pattern {p} is not standardized; use {Cycle(standardize(p.word))}"
            )
    return ps


def cyclic_patterns_of(s: Cycle, k: int) -> set[Cycle]:
    """Standardized cycles of every size-``k`` circular subword of ``s``."""
    return {Cycle._unchecked(standardize(sub)) for sub in combinations(s.word, k)}


def cyclic_contains(s: Cycle, p: Cycle) -> bool:
    if not is_standard(p):
        raise ValueError(f"pattern {p} is not standardized")
    k = len(p)
    if k > len(s):
        return False
    for sub in combinations(s.word, k):
        if Cycle._unchecked(standardize(sub)) == p:
            return True
    return False


def avoiders(n: int, patterns: Iterable[Cycle] = ()) -> set[Cycle]:
    """Cycles on ``[n]`` avoiding every pattern."""
    if n < 1:
        raise ValueError("n must be positive")
    ps = pattern_set(patterns)
    by_size: dict[int, set[Cycle]] = {}
    for p in ps:
        by_size.setdefault(len(p), set()).add(p)
    out = set()
    for c in all_cycles(interval(n)):
        if all(
            k > n or not (group & cyclic_patterns_of(c, k))
            for k, group in by_size.items()
        ):
            out.add(c)
    return out


def avoidance_poly(n: int, patterns: Iterable[Cycle] = ()) -> QPoly:
    """Generating polynomial of the avoiders by cyclic descent number."""
    return QPoly.from_exponents(len(cdes_set_linear(c.word)) for c in avoiders(n, patterns))
