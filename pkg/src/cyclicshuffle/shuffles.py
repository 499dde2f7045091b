"""Linear and cyclic shuffle sets, and the counting identities around them."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .perm_core import Cycle, Word, as_word, rotations
from .qpoly import QPoly
from .stats import major_index


def _check_disjoint(a: Sequence[int], b: Sequence[int]) -> None:
    common = set(a) & set(b)
    if common:
        raise ValueError(f"shuffle operands share entries {sorted(common)}")


def _interleavings(p: Word, s: Word) -> list[Word]:
    m, total = len(p), len(p) + len(s)
    out = []
    for slots in combinations(range(total), m):
        word = [0] * total
        taken = set(slots)
        for k, pos in enumerate(slots):
            word[pos] = p[k]
        it = iter(s)
        for pos in range(total):
            if pos not in taken:
                word[pos] = next(it)
        out.append(tuple(word))
    return out


def linear_shuffles(p: Sequence[int], s: Sequence[int]) -> set[Word]:
    """All interleavings of ``p`` and ``s`` keeping both internal orders.

    >>> sorted(linear_shuffles((2, 5), (7, 3)))[:3]
    [(2, 5, 7, 3), (2, 7, 3, 5), (2, 7, 5, 3)]
    """
    p, s = as_word(p), as_word(s)
    _check_disjoint(p, s)
    return set(_interleavings(p, s))


def cyclic_shuffles(p: Cycle, s: Cycle) -> set[Cycle]:
    """The cyclic shuffle set of two cycles on disjoint alphabets.

    Every shuffle is written starting at the first canonical entry of ``p``;
    the remaining entries of ``p`` occupy ``m - 1`` of the following slots in
    order, and the others take a rotation of ``s``.  No two choices give the
    same cycle, so nothing is deduplicated here.
    """
    _check_disjoint(p.word, s.word)
    head, rest = p.word[0], p.word[1:]
    out = set()
    for rot in rotations(s.word):
        for tail in _interleavings(rest, rot):
            out.add(Cycle._unchecked((head,) + tail))
    return out


def _check_standard_operands(p: Cycle, s: Cycle) -> tuple[int, int]:
    m, n = len(p), len(s)
    if sorted(p.word) != list(range(1, m + 1)):
        raise ValueError(f"left operand {p} must be on [1..{m}]")
    if sorted(s.word) != list(range(m + 1, m + n + 1)):
        raise ValueError(f"right operand {s} must be on [{m + 1}..{m + n}]")
    return m, n


def first_left_after_max(t: Cycle, m: int) -> int:
    """First entry ``<= m`` met cyclically after the maximum of ``t``."""
    w = t.word
    k = w.index(max(w))
    for x in w[k + 1:] + w[:k]:
        if x <= m:
            return x
    raise ValueError(f"{t} has no entry <= {m}")


def cyclic_shuffles_at(p: Cycle, i: int, s: Cycle) -> set[Cycle]:
    """Shuffles in which only entries of ``s`` lie cyclically between ``m+n`` and ``i``.

    ``p`` must be on ``[m]`` and ``s`` on ``[n] + m``.  Over ``i`` in ``[m]``
    these sets partition :func:`cyclic_shuffles`.
    """
    m, _ = _check_standard_operands(p, s)
    if not 1 <= i <= m:
        raise ValueError(f"i={i} outside [1, {m}]")
    return {t for t in cyclic_shuffles(p, s) if first_left_after_max(t, m) == i}


def cyclic_shuffle_count(m: int, n: int) -> int:
    """``(m+n-1) * C(m+n-2, m-1)``, the size of a cyclic shuffle set."""
    if m < 1 or n < 1:
        raise ValueError("cycle lengths must be positive")
    return (m + n - 1) * comb(m + n - 2, m - 1)


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QPoly:
    """Gaussian binomial coefficient via the q-Pascal rule.

    >>> q_binomial(4, 2).coeffs
    (1, 1, 2, 1, 1)
    """
    if not 0 <= b <= a:
        raise ValueError(f"q_binomial needs 0 <= b <= a, got a={a}, b={b}")
    if b == 0 or b == a:
        return QPoly([1])
    return q_binomial(a - 1, b - 1) + q_binomial(a - 1, b).shift(b)


def maj_shuffle_poly(p: Sequence[int], s: Sequence[int]) -> QPoly:
    """Sum of ``q**maj(t)`` over the linear shuffles ``t`` of ``p`` and ``s``."""
    return QPoly.from_exponents(major_index(t) for t in linear_shuffles(p, s))


def maj_shuffle_closed_form(p: Sequence[int], s: Sequence[int]) -> QPoly:
    """``q**(maj p + maj s)`` times the q-binomial ``[m+n, m]``."""
    return q_binomial(len(p) + len(s), len(p)).shift(major_index(p) + major_index(s))
