"""Linear and cyclic permutation statistics and their distributions.

Statistic values use a canonical, hashable, orderable encoding:

* counts (``des``, ``pk``, ``maj``, ``bru``, ``cdes``, ``cpk``, ``cbru``) are ints;
* position sets (``Des``, ``Pk``) are sorted tuples of 1-based positions;
* multisets of position sets (``cDes``, ``cPk``) are sorted tuples of sorted
  tuples, repeats adjacent.

A distribution is a :class:`collections.Counter` of such values.
"""
from __future__ import annotations

from collections import Counter
from typing import Callable, Iterable, Sequence, Union

from .perm_core import Cycle, Word, rotations

Positions = tuple[int, ...]
StatValue = Union[int, Positions, tuple[Positions, ...]]


def descent_set(w: Sequence[int]) -> Positions:
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def peak_set(w: Sequence[int]) -> Positions:
    return tuple(
        i + 1 for i in range(1, len(w) - 1) if w[i - 1] < w[i] > w[i + 1]
    )


def major_index(w: Sequence[int]) -> int:
    return sum(descent_set(w))


def birun_count(w: Sequence[int]) -> int:
    """Number of maximal monotone factors; 0 for the empty word, 1 for a letter."""
    n = len(w)
    if n <= 1:
        return n
    turns = sum(
        1
        for i in range(1, n - 1)
        if (w[i - 1] < w[i]) != (w[i] < w[i + 1])
    )
    return turns + 1


def cdes_set_linear(w: Sequence[int]) -> Positions:
    """Cyclic descent positions of a word, the last position comparing to the first."""
    n = len(w)
    if n == 0:
        raise ValueError("cyclic descent set is undefined for the empty word")
    return tuple(i + 1 for i in range(n) if w[i] > w[(i + 1) % n])


def cpk_set_linear(w: Sequence[int]) -> Positions:
    """Cyclic peak positions; both neighbours are taken modulo ``n``."""
    n = len(w)
    if n == 0:
        raise ValueError("cyclic peak set is undefined for the empty word")
    return tuple(
        i + 1 for i in range(n) if w[i - 1] < w[i] > w[(i + 1) % n]
    )


def _cyclic_turns(w: Sequence[int]) -> int:
    n = len(w)
    return sum(
        1 for i in range(n) if (w[i - 1] < w[i]) != (w[i] < w[(i + 1) % n])
    )


def _cdes_multiset(c: Cycle) -> tuple[Positions, ...]:
    return tuple(sorted(cdes_set_linear(r) for r in rotations(c.word)))


def _cpk_multiset(c: Cycle) -> tuple[Positions, ...]:
    return tuple(sorted(cpk_set_linear(r) for r in rotations(c.word)))


def _cbru(c: Cycle) -> int:
    # a single letter is one circular factor; otherwise biruns run turn to turn
    if len(c) == 1:
        return 1
    return _cyclic_turns(c.word)


LINEAR_STATS: dict[str, Callable[[Sequence[int]], StatValue]] = {
    "Des": descent_set,
    "des": lambda w: len(descent_set(w)),
    "Pk": peak_set,
    "pk": lambda w: len(peak_set(w)),
    "maj": major_index,
    "bru": birun_count,
}

CYCLIC_STATS: dict[str, Callable[[Cycle], StatValue]] = {
    "cDes": _cdes_multiset,
    "cdes": lambda c: len(cdes_set_linear(c.word)),
    "cPk": _cpk_multiset,
    "cpk": lambda c: len(cpk_set_linear(c.word)),
    "cbru": _cbru,
}

ALL_STATS = tuple(LINEAR_STATS) + tuple(CYCLIC_STATS)


def is_cyclic(name: str) -> bool:
    if name in CYCLIC_STATS:
        return True
    if name in LINEAR_STATS:
        return False
    raise ValueError(f"unknown statistic {name!r}; expected one of {', '.join(ALL_STATS)}")


def linear_stat(name: str, w: Sequence[int]) -> StatValue:
    """Evaluate the linear statistic ``name`` on the word ``w``.

    >>> linear_stat("Des", (4, 2, 1, 8, 5, 9, 6))
    (1, 2, 4, 6)
    """
    if is_cyclic(name):
        raise ValueError(f"{name} is a cyclic statistic; use cyclic_stat")
    return LINEAR_STATS[name](tuple(w))


def cyclic_stat(name: str, c: Cycle) -> StatValue:
    if not is_cyclic(name):
        raise ValueError(f"{name} is a linear statistic; use linear_stat")
    if not isinstance(c, Cycle):
        raise TypeError(f"cyclic statistic {name} needs a Cycle, got {type(c).__name__}")
    return CYCLIC_STATS[name](c)


def evaluator(name: str) -> Callable:
    """The raw function computing ``name`` (no argument checking)."""
    return CYCLIC_STATS[name] if is_cyclic(name) else LINEAR_STATS[name]


def stat(name: str, x: Word | Cycle) -> StatValue:
    """Dispatch to :func:`linear_stat` or :func:`cyclic_stat` by the statistic's kind."""
    return cyclic_stat(name, x) if is_cyclic(name) else linear_stat(name, x)


def distribution(name: str, coll: Iterable[Word | Cycle]) -> Counter:
    """Multiset of values of ``name`` over ``coll``."""
    cyclic = is_cyclic(name)
    f = evaluator(name)
    dist: Counter = Counter()
    for x in coll:
        if isinstance(x, Cycle) != cyclic:
            kind = "cyclic" if cyclic else "linear"
            raise ValueError(f"{kind} statistic {name} applied to {x!r}")
        dist[f(x)] += 1
    return dist


def encode_value(v: StatValue):
    """JSON-ready form of a statistic value (ints and nested lists)."""
    if isinstance(v, tuple):
        return [encode_value(x) for x in v]
    return v


def encode_distribution(dist: Counter) -> list:
    """Sorted list of values with repeats written out."""
    return [encode_value(v) for v in sorted(dist.elements())]


def format_value(v: StatValue) -> str:
    if isinstance(v, int):
        return str(v)
    if v and isinstance(v[0], tuple):
        return format_multiset(Counter(v))
    return "{" + ",".join(map(str, v)) + "}"


def format_multiset(dist: Counter) -> str:
    """Render a multiset as ``{{a^2, b}}``, exponents for multiplicities."""
    parts = []
    for v in sorted(dist):
        k = dist[v]
        s = format_value(v)
        parts.append(s if k == 1 else f"{s}^{k}")
    return "{{" + ", ".join(parts) + "}}"
