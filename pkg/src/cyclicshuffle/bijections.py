"""Splitting, maximum removal, the adjacent-swap map, and the lifted bijections.

Bijections are returned as :class:`BijectionWitness` objects holding explicit
pairs, so they can be checked and serialized.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm_core import Cycle, Word, as_word, format_word
from .shuffles import cyclic_shuffles_at, linear_shuffles
from .stats import distribution, evaluator, is_cyclic


class DistributionMismatch(ValueError):
    """Source and target collections have different statistic distributions."""


def _kind(x) -> str:
    return "cycle" if isinstance(x, Cycle) else "word"


def _render(x) -> str:
    return str(x) if isinstance(x, Cycle) else format_word(x)


@dataclass(frozen=True)
class BijectionWitness:
    pairs: tuple[tuple, ...]
    source_kind: str
    target_kind: str

    def __post_init__(self):
        sources = [a for a, _ in self.pairs]
        targets = [b for _, b in self.pairs]
        if len(set(sources)) != len(sources):
            raise ValueError("witness sources are not distinct")
        if len(set(targets)) != len(targets):
            raise ValueError("witness targets are not distinct")

    def __len__(self) -> int:
        return len(self.pairs)

    def __call__(self, x):
        return self.mapping[x]

    @property
    def mapping(self) -> dict:
        return dict(self.pairs)

    @property
    def sources(self) -> set:
        return {a for a, _ in self.pairs}

    @property
    def targets(self) -> set:
        return {b for _, b in self.pairs}

    def preserves(self, name: str) -> bool:
        f = evaluator(name)
        return all(f(a) == f(b) for a, b in self.pairs)

    def to_dict(self) -> dict:
        return {
            "source_kind": self.source_kind,
            "target_kind": self.target_kind,
            "pairs": [[_render(a), _render(b)] for a, b in self.pairs],
        }


def split(c: Cycle, i: int) -> Word:
    """The rotation of ``c`` that starts with the entry ``i``."""
    w = c.word
    try:
        k = w.index(i)
    except ValueError:
        raise ValueError(f"{i} is not an entry of {c}") from None
    return w[k:] + w[:k]


def max_removal(c: Cycle) -> Word:
    """Split at the maximum, then drop it."""
    return split(c, max(c.word))[1:]


def max_removal_inv(w: Sequence[int], top: int) -> Cycle:
    w = as_word(w)
    if w and top <= max(w):
        raise ValueError(f"top={top} is not larger than every entry of {w}")
    return Cycle((top,) + w)


def cyclically_adjacent(c: Cycle, a: int, b: int) -> bool:
    w = c.word
    n = len(w)
    k = w.index(a)
    return w[(k + 1) % n] == b or w[k - 1] == b


def swap_map(t: Cycle, i: int) -> Cycle:
    """Exchange ``i-1`` and ``i`` in ``t`` unless they are cyclically adjacent."""
    if i not in t or i - 1 not in t:
        raise ValueError(f"{t} must contain both {i - 1} and {i}")
    if cyclically_adjacent(t, i - 1, i):
        return t
    swap = {i - 1: i, i: i - 1}
    return Cycle(swap.get(x, x) for x in t.word)


def _sort_key(x):
    return x.word if isinstance(x, Cycle) else x


def build_theta(src: Iterable, dst: Iterable, name: str) -> BijectionWitness:
    """A ``name``-preserving bijection ``src -> dst``.

    Elements are matched in sorted order inside each group of equal
    statistic value.  Raises :class:`DistributionMismatch` when no such
    bijection exists.
    """
    src = sorted(src, key=_sort_key)
    dst = sorted(dst, key=_sort_key)
    d_src, d_dst = distribution(name, src), distribution(name, dst)
    if d_src != d_dst:
        raise DistributionMismatch(
            f"{name} distributions differ: {dict(d_src)} vs {dict(d_dst)}"
        )
    f = evaluator(name)
    buckets: dict = defaultdict(list)
    for y in dst:
        buckets[f(y)].append(y)
    for v in buckets:
        buckets[v].reverse()
    pairs = tuple((x, buckets[f(x)].pop()) for x in src)
    kind_s = _kind(src[0]) if src else "word"
    kind_t = _kind(dst[0]) if dst else kind_s
    return BijectionWitness(pairs, kind_s, kind_t)


def theta_prime(
    p: Cycle, i: int, p2: Cycle, j: int, s: Cycle, name: str
) -> BijectionWitness:
    """Lift a linear ``name``-preserving bijection to ``[p] sh_i [s] -> [p2] sh_j [s]``.

    The map is ``M^-1 . theta . M`` where ``M`` is maximum removal and
    ``theta`` pairs ``S_i[p] sh M[s]`` with ``S_j[p2] sh M[s]``.
    """
    if is_cyclic(name):
        raise ValueError(f"theta_prime needs a linear statistic, got {name}")
    if len(p) != len(p2):
        raise ValueError("p and p2 must have equal length")
    top = len(p) + len(s)
    s_rest = max_removal(s)
    theta = build_theta(
        linear_shuffles(split(p, i), s_rest),
        linear_shuffles(split(p2, j), s_rest),
        name,
    )
    pairs = []
    for t in sorted(cyclic_shuffles_at(p, i, s)):
        pairs.append((t, max_removal_inv(theta(max_removal(t)), top)))
    witness = BijectionWitness(tuple(pairs), "cycle", "cycle")
    expected = cyclic_shuffles_at(p2, j, s)
    if witness.targets != expected:
        raise RuntimeError("lifted map does not land on the expected shuffle cell")
    return witness


def lifting_bijection(p: Cycle, p2: Cycle, name: str) -> dict[int, int] | None:
    """A bijection ``f`` on entries with ``name(S_i p) == name(S_f(i) p2)``, or None."""
    if sorted(p.word) != sorted(p2.word):
        raise ValueError("p and p2 must share an alphabet")
    f = evaluator(name)
    buckets: dict = defaultdict(list)
    for j in sorted(p2.word, reverse=True):
        buckets[f(split(p2, j))].append(j)
    out = {}
    for i in sorted(p.word):
        bucket = buckets.get(f(split(p, i)))
        if not bucket:
            return None
        out[i] = bucket.pop()
    return out

