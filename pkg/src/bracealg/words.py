"""Brace words, the degree/breadth/inverse-lex ordering, and enumeration.

A normal word ``<u_n,...,u_1;x>`` is a planar rooted tree whose every node is
labelled by a letter.  Children are stored in display order ``(u_n, ..., u_1)``,
so ``children[-1]`` is ``u_1``, the first argument consulted by the ordering.

Letters are plain strings.  They are ordered naturally (``x1 < x2 < x10``,
``a < b``) except that the marker letter ``y`` sits above every other letter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Iterator, Sequence, Union

MARK = "y"

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_CHUNK = re.compile(r"(\d+)")


@lru_cache(maxsize=None)
def letter_key(name: str) -> tuple:
    """Sort key of a letter: marker last, then natural order, then raw name."""
    if not _IDENT.match(name):
        raise ValueError(f"invalid letter name {name!r}")
    parts = tuple(int(p) if p.isdigit() else p for p in _CHUNK.split(name) if p)
    return (name == MARK, parts, name)


class NormalWord:
    """Immutable normal brace word with its ordering key precomputed.

    The key is ``(degree, breadth, letter_key(head), key(u_1), ..., key(u_n))``,
    so Python tuple comparison is exactly the word order.  Two keys of equal
    degree and breadth have equal length, which keeps the comparison purely
    lexicographic.
    """

    __slots__ = ("head", "children", "degree", "key", "_hash")

    def __init__(self, head: str, children: Iterable["NormalWord"] = ()):
        children = tuple(children)
        for c in children:
            if not isinstance(c, NormalWord):
                raise TypeError(f"child {c!r} is not a NormalWord")
        self.head = head
        self.children = children
        self.degree = 1 + sum(c.degree for c in children)
        self.key = (
            self.degree,
            len(children) + 1,
            letter_key(head),
            *(c.key for c in reversed(children)),
        )
        self._hash = hash(self.key)

    @property
    def breadth(self) -> int:
        return len(self.children) + 1

    @property
    def is_letter(self) -> bool:
        return not self.children

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalWord):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __lt__(self, other: "NormalWord") -> bool:
        return self.key < other.key

    def __le__(self, other: "NormalWord") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "NormalWord") -> bool:
        return self.key > other.key

    def __ge__(self, other: "NormalWord") -> bool:
        return self.key >= other.key

    def __str__(self) -> str:
        if not self.children:
            return self.head
        return "<" + ",".join(map(str, self.children)) + ";" + self.head + ">"

    def __repr__(self) -> str:
        return f"NormalWord({str(self)!r})"

    def letters(self) -> frozenset[str]:
        return _letters(self)

    def count(self, letter: str) -> int:
        """Number of occurrences of ``letter``."""
        return (self.head == letter) + sum(c.count(letter) for c in self.children)


@lru_cache(maxsize=1 << 16)
def _letters(w: NormalWord) -> frozenset[str]:
    out = {w.head}
    for c in w.children:
        out |= _letters(c)
    return frozenset(out)


def letter(name: str) -> NormalWord:
    return NormalWord(name)


@dataclass(frozen=True)
class Brace:
    """A general brace word ``<args; target>`` whose target may be any word."""

    args: tuple["GeneralWord", ...]
    target: "GeneralWord"

    def __post_init__(self):
        if not self.args:
            raise ValueError("a brace needs at least one argument")

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.args)) + ";" + str(self.target) + ">"


GeneralWord = Union[str, NormalWord, Brace]


def degree(w: GeneralWord) -> int:
    """Number of letter occurrences in ``w``."""
    if isinstance(w, NormalWord):
        return w.degree
    if isinstance(w, str):
        return 1
    return sum(degree(a) for a in w.args) + degree(w.target)


def breadth(w: NormalWord) -> int:
    return w.breadth


def compare(u: NormalWord, v: NormalWord) -> str:
    """Return ``"LT"``, ``"EQ"`` or ``"GT"``."""
    if u.key == v.key:
        return "EQ"
    return "LT" if u.key < v.key else "GT"


def as_normal(w: GeneralWord) -> NormalWord | None:
    """The same word as a NormalWord if every target is a letter, else None."""
    if isinstance(w, NormalWord):
        return w
    if isinstance(w, str):
        return NormalWord(w)
    if not isinstance(w.target, (str, NormalWord)):
        return None
    t = as_normal(w.target)
    if t is None or not t.is_letter:
        # <a;<b;c>> is not normal, even though <b;c> is
        return None
    kids = [as_normal(a) for a in w.args]
    if any(k is None for k in kids):
        return None
    return NormalWord(t.head, kids)


# -- enumeration -----------------------------------------------------------


def alphabet(letters: int | Sequence[str]) -> tuple[str, ...]:
    """``3 -> ("x1", "x2", "x3")``; an explicit sequence is sorted and checked."""
    if isinstance(letters, int):
        if letters < 1:
            raise ValueError("alphabet needs at least one letter")
        return tuple(f"x{i}" for i in range(1, letters + 1))
    out = tuple(sorted(set(letters), key=letter_key))
    if not out:
        raise ValueError("alphabet needs at least one letter")
    return out


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``n`` (``()`` for 0)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


def _mark_splits(marks: int, sizes: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not sizes:
        if marks == 0:
            yield ()
        return
    for k in range(min(marks, sizes[0]) + 1):
        for rest in _mark_splits(marks - k, sizes[1:]):
            yield (k, *rest)


@lru_cache(maxsize=None)
def _words(letters: tuple[str, ...], deg: int, marks: int, mark: str) -> tuple[NormalWord, ...]:
    if marks > deg:
        return ()
    heads = [(x, marks) for x in letters]
    if marks:
        heads.append((mark, marks - 1))
    out = []
    for head, rest in heads:
        for sizes in compositions(deg - 1):
            for split in _mark_splits(rest, sizes):
                pools = [_words(letters, d, k, mark) for d, k in zip(sizes, split)]
                for kids in product(*pools):
                    out.append(NormalWord(head, kids))
    return tuple(out)


def enumerate_normal(letters: int | Sequence[str], deg: int) -> list[NormalWord]:
    """All normal words of exactly degree ``deg``, ascending."""
    if deg < 1:
        raise ValueError("degree must be at least 1")
    return sorted(_words(alphabet(letters), deg, 0, MARK))


def enumerate_marked(
    letters: int | Sequence[str], deg: int, marked: int = 1, mark: str = MARK
) -> list[NormalWord]:
    """Normal words over ``letters`` plus ``mark`` with exactly ``marked`` marks, ascending."""
    if deg < 1:
        raise ValueError("degree must be at least 1")
    base = alphabet(letters)
    if mark in base:
        raise ValueError(f"marker {mark!r} clashes with a base letter")
    return sorted(_words(base, deg, marked, mark))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
