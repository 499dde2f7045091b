"""Linear and cyclic permutations over arbitrary alphabets of positive integers.

A linear permutation (a *word*) is a plain tuple of distinct positive
integers.  A cyclic permutation is a :class:`Cycle`, stored as the rotation
that starts with its smallest entry.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]


def as_word(entries: Iterable[int]) -> Word:
    """Validate ``entries`` and return them as a word (tuple)."""
    w = tuple(entries)
    for x in w:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"permutation entries must be integers, got {x!r}")
        if x < 1:
            raise ValueError(f"permutation entries must be positive, got {x}")
    if len(set(w)) != len(w):
        seen = set()
        for x in w:
            if x in seen:
                raise ValueError(f"duplicate entry {x} in {w}")
            seen.add(x)
    return w


def rotations(w: Sequence[int]) -> list[Word]:
    """All rotations of ``w``, starting with ``w`` itself and rotating left."""
    w = tuple(w)
    if not w:
        return [()]
    return [w[k:] + w[:k] for k in range(len(w))]


class Cycle:
    """A cyclic permutation, i.e. a word up to rotation.

    Any rotation may be passed to the constructor; the stored ``word`` is the
    rotation beginning with the minimum entry, so equality and hashing are
    those of the canonical tuple.
    """

    __slots__ = ("word",)

    def __init__(self, entries: Iterable[int]):
        w = as_word(entries)
        if not w:
            raise ValueError("a cyclic permutation must be nonempty")
        k = w.index(min(w))
        object.__setattr__(self, "word", w[k:] + w[:k])

    @classmethod
    def _unchecked(cls, w: Word) -> Cycle:
        # hot-path constructor for words already known to be valid
        c = object.__new__(cls)
        k = w.index(min(w))
        object.__setattr__(c, "word", w[k:] + w[:k])
        return c

    def __setattr__(self, name, value):
        raise AttributeError("Cycle is immutable")

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __contains__(self, x) -> bool:
        return x in self.word

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.word == other.word

    def __lt__(self, other: Cycle) -> bool:
        return self.word < other.word

    def __le__(self, other: Cycle) -> bool:
        return self.word <= other.word

    def __hash__(self) -> int:
        return hash(("Cycle", self.word))

    def __repr__(self) -> str:
        return f"Cycle({list(self.word)})"

    def __str__(self) -> str:
        return "[" + format_word(self.word) + "]"

    def __reduce__(self):
        return (Cycle, (self.word,))

    @property
    def alphabet(self) -> frozenset[int]:
        return frozenset(self.word)

    def rotations(self) -> list[Word]:
        return rotations(self.word)


def canonical_cycle(w: Sequence[int]) -> Cycle:
    """The cycle of ``w``; two words give equal cycles iff they are rotations."""
    return Cycle(w)


def format_word(w: Sequence[int]) -> str:
    """One-line notation: concatenated digits when every entry is < 10."""
    if all(x < 10 for x in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def standardize(w: Sequence[int], target: Iterable[int] | None = None) -> Word:
    """Relabel ``w`` order-preservingly onto ``target`` (default ``[n]``).

    >>> standardize((4, 7, 6, 2), {1, 3, 8, 9})
    (3, 9, 8, 1)
    """
    w = tuple(w)
    labels = sorted(target) if target is not None else list(range(1, len(w) + 1))
    if len(set(labels)) != len(w):
        raise ValueError(
            f"target alphabet has {len(set(labels))} elements, word has {len(w)}"
        )
    relabel = dict(zip(sorted(w), labels))
    return tuple(relabel[x] for x in w)


def standardize_cycle(c: Cycle, target: Iterable[int] | None = None) -> Cycle:
    return Cycle(standardize(c.word, target))


def shift_mod(s: Iterable[int], n: int, m: int) -> frozenset[int]:
    """``{a + n (mod m) : a in s}`` with representatives chosen in ``[m]``."""
    s = frozenset(s)
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    bad = [a for a in s if not 1 <= a <= m]
    if bad:
        raise ValueError(f"elements {sorted(bad)} lie outside [1, {m}]")
    return frozenset((a + n - 1) % m + 1 for a in s)


def restrict(w: Sequence[int], alphabet: Iterable[int]) -> Word:
    """Subsequence of ``w`` made of the entries in ``alphabet``."""
    keep = frozenset(alphabet)
    return tuple(x for x in w if x in keep)


def interval(m: int, offset: int = 0) -> tuple[int, ...]:
    """``[m] + offset``, i.e. ``(offset+1, ..., offset+m)``."""
    return tuple(range(offset + 1, offset + m + 1))


def all_cycles(alphabet: Iterable[int]) -> Iterator[Cycle]:
    """Every cycle on ``alphabet``, in lexicographic order of canonical words."""
    letters = sorted(alphabet)
    if not letters:
        return
    head, rest = letters[0], letters[1:]
    for tail in permutations(rest):
        yield Cycle((head,) + tail)


def all_words(alphabet: Iterable[int]) -> Iterator[Word]:
    """Every word on ``alphabet`` in lexicographic order."""
    yield from permutations(sorted(alphabet))
